#pragma once

#include <stdexcept>
#include <string>

namespace deformata {

// Malformed or inconsistent input (bad exponent, zero denominator, mismatched algebras, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An operation was called outside its documented domain (e.g. a non-regular Ore denominator).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace deformata
