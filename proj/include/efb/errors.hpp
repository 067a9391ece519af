#pragma once

#include <stdexcept>

namespace efb {

// Mismatched or out-of-range dimension parameter m.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised for singular elements; also the membership test for the group of
// invertible elements.
class NotInvertibleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class InvalidAutomorphismError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An input violates an operation's documented precondition (element not in
// the expected spinor space, not grade 1, not a stabilizer, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace efb
