#pragma once

#include <stdexcept>
#include <string>

namespace supersat {

/// Violated precondition or malformed input.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Instance exceeds the configured search budget or size cap.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Requested construction cannot exist at these parameters.
class InfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Internal consistency check failed; indicates a bug, never user error.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace supersat
