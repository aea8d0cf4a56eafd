#pragma once

#include <stdexcept>
#include <string>

namespace ihg {

// Invalid arguments: bad dimensions, out-of-range indices, malformed input.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A Pochhammer/Gamma denominator vanished (resonant or excluded parameter).
class PoleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A principal-branch power was requested where it is undefined or discontinuous.
class BranchError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace ihg
