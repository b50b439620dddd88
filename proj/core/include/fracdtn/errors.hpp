#pragma once

#include <stdexcept>
#include <string>

namespace fracdtn {

// Operator rejected: numerical range escapes every admissible sector or the
// form fails its positivity check.
class CertificationError : public std::runtime_error {
 public:
  explicit CertificationError(const std::string& what) : std::runtime_error(what) {}
};

// A quadrature, extrapolation, or iterative limit failed to reach its target
// accuracy. The message carries the observed error sequence.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fracdtn
