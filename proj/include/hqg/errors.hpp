#pragma once

#include <stdexcept>
#include <string>

namespace hqg {

/// Factor lists or arities that do not line up.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Arithmetic on scalars from different fields, division by zero, bad literals.
class FieldError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotALoop : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotIPLoop : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InputNotAGroup : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class CharTwo : public std::domain_error {
 public:
  CharTwo() : std::domain_error("the Taft algebra H4 requires characteristic != 2") {}
};

/// Malformed structure, map, or loop file.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hqg
