#ifndef PAIRFREE_ERRORS_HPP
#define PAIRFREE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pairfree {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A caller violated a documented precondition or contract.
struct ContractError : Error {
    explicit ContractError(const std::string& msg) : Error(msg) {}
};

// Malformed textual input (graph expressions, edge-list files).
struct ParseError : Error {
    // pos is a 0-based offset into the offending text, -1 if unknown.
    ParseError(const std::string& msg, long pos = -1)
        : Error(pos >= 0 ? msg + " (at position " + std::to_string(pos) + ")" : msg),
          position(pos) {}
    long position;
};

// Input exceeds a documented size bound.
struct SizeError : Error {
    explicit SizeError(const std::string& msg) : Error(msg) {}
};

// No implemented method applies to the input.
struct UnsupportedError : Error {
    explicit UnsupportedError(const std::string& msg) : Error(msg) {}
};

// An internal invariant failed; indicates a bug, not a usage error.
struct InternalError : Error {
    explicit InternalError(const std::string& msg) : Error(msg) {}
};

} // namespace pairfree

#endif
