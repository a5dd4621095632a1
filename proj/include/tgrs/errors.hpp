// Error taxonomy shared by the whole library.
//
// validation_error  -> caller supplied bad input (CLI exit code 1)
// guard_error       -> a computation exceeds its enumeration guard (exit code 2)
// internal_error    -> an internal consistency check failed, i.e. a bug (exit code 3)
#pragma once

#include <stdexcept>

namespace tgrs {

class validation_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class guard_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace tgrs
