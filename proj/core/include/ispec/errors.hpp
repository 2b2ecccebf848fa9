#pragma once

#include <stdexcept>

namespace ispec {

/// Parameters that do not describe a simple I-graph (or a violated precondition on them).
class InvalidParams : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IndexOutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Two routes that must agree did not. Always a bug or a false theorem, never bad input.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ispec
