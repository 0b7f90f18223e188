#pragma once

#include <stdexcept>
#include <string>

namespace gotz {

/// Base of every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed monomial text or JSON input.
class parse_error : public error {
public:
    using error::error;
};

/// A precondition on the arguments was violated (mismatched ambient counts,
/// unequal degrees, non-divisibility, missing predecessor, ...).
class domain_error : public error {
public:
    using error::error;
};

/// A configured enumeration or walk limit was hit.
class cap_exceeded : public error {
public:
    using error::error;
};

/// A walk violated one of its invariants: the truncated cost passed the
/// target, or the origin ran out of predecessors.
class walk_error : public error {
public:
    using error::error;
};

} // namespace gotz

namespace gotz {

/// Two independent routes to the same quantity disagreed. Always a bug.
class consistency_error : public error {
public:
    using error::error;
};

} // namespace gotz
