#pragma once

#include <stdexcept>
#include <string>

namespace ratcensus {

// Malformed or out-of-contract input (bad fraction, bad vector, bad index).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Mathematically undefined request, e.g. an average over an empty population.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An internal invariant failed. Always a bug, never a user error.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ratcensus
