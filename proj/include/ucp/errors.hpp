#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ucp {

// Exact polynomial division failed; carries the degree of the nonzero remainder.
class DivisibilityError : public std::runtime_error {
public:
    DivisibilityError(std::string msg, long remainder_degree)
        : std::runtime_error(std::move(msg)), remainder_degree_(remainder_degree) {}
    long remainder_degree() const { return remainder_degree_; }

private:
    long remainder_degree_;
};

// Syntax error in the polynomial text grammar; carries the byte offset.
class PolyParseError : public std::runtime_error {
public:
    PolyParseError(std::string msg, std::size_t offset)
        : std::runtime_error(std::move(msg)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// An identity check found a counterexample; the witness is in the message.
class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A configured resource limit (e.g. the scan memory budget) would be exceeded.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace ucp
