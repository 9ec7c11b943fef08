#pragma once

#include <stdexcept>
#include <string>

namespace lpl {

/// Malformed input: bad rational literal, bad JSON, wrong vector length.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A request the mathematics does not allow, e.g. building an extension of a
/// submanifold whose rank is not constant.
class Refusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lpl
