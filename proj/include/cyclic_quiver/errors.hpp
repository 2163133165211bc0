#pragma once

#include <stdexcept>
#include <string>

namespace cyclic_quiver {

// Caller handed in something malformed: wrong basis tag, bad shape, index out of range.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A documented precondition of an operation does not hold for the input.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Request exceeds what the exhaustive oracles are allowed to attempt.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A Laurent polynomial handed to the K-type decomposition is not a genuine character.
class NotACharacterError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

[[noreturn]] inline void internal_failure(const std::string& what)
{
    throw std::logic_error("internal invariant violated: " + what);
}

} // namespace detail

} // namespace cyclic_quiver
