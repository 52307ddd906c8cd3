#pragma once

#include <stdexcept>
#include <string>

namespace tlpal {

/// A certified decision could not be made at the current working precision.
/// Callers retry with more digits.
class PrecisionExhausted : public std::runtime_error {
 public:
  explicit PrecisionExhausted(const std::string& what)
      : std::runtime_error("precision exhausted: " + what) {}
};

/// A required object (typically a convergent) is not available.
class NotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tlpal
