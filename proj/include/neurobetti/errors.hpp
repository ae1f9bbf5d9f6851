#pragma once

#include <stdexcept>
#include <string>

namespace neurobetti {

/// Malformed input or a violated precondition. The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two independent computations that must agree did not. The CLI maps this to exit code 3.
class MismatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace neurobetti
