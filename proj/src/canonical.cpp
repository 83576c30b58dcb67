#include "pairfree/canonical.hpp"

#include <array>
#include <cstdint>

#include "pairfree/errors.hpp"

namespace pairfree {

namespace {

constexpr uint16_t kUnset = 0xFFFF;

// Branch-and-bound minimization of the packed adjacency string over all
// vertex relabelings.  The encoding emits, for each label position k, the
// adjacency bits of position k towards positions 0..k-1 (earlier positions
// more significant), so placing a prefix of positions fixes a contiguous
// prefix of the string.
//
// best[] holds the row values of the smallest prefix achieved so far, with
// kUnset acting as +infinity for levels not yet reached on a minimal path.
// A candidate row r at level k is skipped iff r > best[k]; a row r < best[k]
// claims the level and resets all deeper levels.  On every surviving path
// the current rows equal best[0..k], which keeps the pruning exact.
struct Canonicalizer {
    int n = 0;
    std::array<uint16_t, detail::kCanonicalKeyMaxN> adj{};
    std::array<int, detail::kCanonicalKeyMaxN> perm{};
    std::array<bool, detail::kCanonicalKeyMaxN> used{};
    std::array<uint16_t, detail::kCanonicalKeyMaxN> best{};

    void run() {
        best.fill(kUnset);
        descend(0);
    }

    void descend(int k) {
        if (k == n) return;
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            uint16_t r = 0;
            for (int i = 0; i < k; ++i)
                if (adj[v] & (uint16_t(1) << perm[i])) r |= uint16_t(1) << (k - 1 - i);
            if (r > best[k]) continue;
            if (r < best[k]) {
                best[k] = r;
                for (int j = k + 1; j < n; ++j) best[j] = kUnset;
            }
            perm[k] = v;
            used[v] = true;
            descend(k + 1);
            used[v] = false;
        }
    }
};

} // namespace

namespace detail {

CanonicalForm canonical_key(const Graph& g) {
    int n = g.vertex_count();
    if (n > kCanonicalKeyMaxN)
        throw SizeError("canonical key supports at most " + std::to_string(kCanonicalKeyMaxN) +
                        " vertices, got " + std::to_string(n));
    Canonicalizer c;
    c.n = n;
    for (int v = 0; v < n; ++v) {
        uint16_t m = 0;
        for (int u = g.neighbors(v).first(); u >= 0; u = g.neighbors(v).next(u))
            m |= uint16_t(1) << u;
        c.adj[v] = m;
    }
    c.run();
    CanonicalForm out;
    out.push_back((char)n);
    int acc = 0, nbits = 0;
    for (int k = 1; k < n; ++k)
        for (int i = k - 1; i >= 0; --i) {
            acc = (acc << 1) | ((c.best[k] >> i) & 1);
            if (++nbits == 8) {
                out.push_back((char)acc);
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits) out.push_back((char)(acc << (8 - nbits)));
    return out;
}

} // namespace detail

CanonicalForm canonical_form(const Graph& g) {
    int n = g.vertex_count();
    if (n > kCanonicalMaxN)
        throw SizeError("canonical_form supports at most " + std::to_string(kCanonicalMaxN) +
                        " vertices, got " + std::to_string(n));
    return detail::canonical_key(g);
}

} // namespace pairfree
