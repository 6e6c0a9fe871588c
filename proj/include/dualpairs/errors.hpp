#pragma once

#include <stdexcept>
#include <string>

namespace dualpairs {

// Operand shapes are incompatible with the operation.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A mathematical precondition does not hold: a momentum mismatch, a
// rank-deficient point, an element outside its group or algebra.
class PreconditionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Malformed external input (files, JSON, CLI arguments).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace dualpairs
