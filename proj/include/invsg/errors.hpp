#pragma once

#include <stdexcept>
#include <string>

namespace invsg {

/// Malformed or out-of-contract input (bad table, not a topology, not a
/// character, ...). The CLI maps this to exit status 2.
class InvalidInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A size or budget envelope was exceeded (carrier too large for an
/// exhaustive check, ideal too wide to enumerate). Exit status 3.
class LimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class GroundMismatch : public InvalidInput {
public:
    GroundMismatch(int lhs, int rhs)
        : InvalidInput("ground sets differ: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

class NotIdempotent : public InvalidInput {
public:
    explicit NotIdempotent(std::string const& what)
        : InvalidInput("not idempotent: " + what) {}
};

} // namespace invsg
