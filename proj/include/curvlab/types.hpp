#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace curvlab {

using cplx = std::complex<double>;

inline constexpr const char* kVersion = "1.0.0";

/// Rejected input: bad files, invalid parameters, violated preconditions.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A solver or iteration failed to converge.
struct numeric_error : std::runtime_error {
  explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace curvlab
