#pragma once

#include <stdexcept>
#include <string>

namespace facering {

/// Raised when an input violates an operation's precondition.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when two routes that must agree do not (always an implementation bug).
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace facering
