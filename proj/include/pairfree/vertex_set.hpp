#ifndef PAIRFREE_VERTEX_SET_HPP
#define PAIRFREE_VERTEX_SET_HPP

#include <cstdint>
#include <cassert>
#include <functional>
#include <vector>

namespace pairfree {

// Set of vertices 0..n-1 stored as a packed bit row.  Doubles as an
// adjacency row, so intersection/difference are single word ops.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : n_(universe), words_((universe + 63) / 64, 0) {}

    static VertexSet single(int universe, int v) {
        VertexSet s(universe);
        s.set(v);
        return s;
    }
    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int v = 0; v < universe; ++v) s.set(v);
        return s;
    }

    int universe() const { return n_; }

    bool test(int v) const {
        assert(v >= 0 && v < n_);
        return (words_[v >> 6] >> (v & 63)) & 1u;
    }
    void set(int v) {
        assert(v >= 0 && v < n_);
        words_[v >> 6] |= uint64_t(1) << (v & 63);
    }
    void reset(int v) {
        assert(v >= 0 && v < n_);
        words_[v >> 6] &= ~(uint64_t(1) << (v & 63));
    }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += __builtin_popcountll(w);
        return c;
    }
    bool empty() const {
        for (uint64_t w : words_)
            if (w) return false;
        return true;
    }

    // First member, or -1 if empty.
    int first() const { return next(-1); }

    // Smallest member strictly greater than v, or -1.
    int next(int v) const {
        int start = v + 1;
        if (start >= n_) return -1;
        int wi = start >> 6;
        uint64_t w = words_[wi] & (~uint64_t(0) << (start & 63));
        while (true) {
            if (w) return (wi << 6) + __builtin_ctzll(w);
            if (++wi >= (int)words_.size()) return -1;
            w = words_[wi];
        }
    }

    bool intersects(const VertexSet& o) const {
        assert(n_ == o.n_);
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    bool contains(const VertexSet& o) const {
        assert(n_ == o.n_);
        for (size_t i = 0; i < words_.size(); ++i)
            if (o.words_[i] & ~words_[i]) return false;
        return true;
    }

    VertexSet& operator&=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    // Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool operator==(const VertexSet& o) const { return n_ == o.n_ && words_ == o.words_; }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
        return out;
    }

    size_t hash() const {
        size_t h = std::hash<int>()(n_);
        for (uint64_t w : words_) h = h * 1000003u ^ std::hash<uint64_t>()(w);
        return h;
    }

private:
    int n_ = 0;
    std::vector<uint64_t> words_;
};

struct VertexSetHash {
    size_t operator()(const VertexSet& s) const { return s.hash(); }
};

} // namespace pairfree

#endif
