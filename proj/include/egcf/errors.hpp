#pragma once

#include <stdexcept>

namespace egcf {

// A comparison could not be decided at the available precision.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A depth or subdivision budget ran out before the target was met.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace egcf
