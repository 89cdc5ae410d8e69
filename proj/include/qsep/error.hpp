#pragma once

#include <stdexcept>
#include <string>

namespace qsep {

/// Raised when an input violates a numerical precondition.
///
/// `check()` names the violated condition (e.g. "hermiticity", "trace",
/// "psd") and `magnitude()` carries the offending value, so callers can
/// report how far outside tolerance the input was.
class Error : public std::runtime_error {
 public:
  Error(std::string check, double magnitude, const std::string& detail)
      : std::runtime_error(check + ": " + detail),
        check_(std::move(check)),
        magnitude_(magnitude) {}

  const std::string& check() const noexcept { return check_; }
  double magnitude() const noexcept { return magnitude_; }

 private:
  std::string check_;
  double magnitude_;
};

}  // namespace qsep
