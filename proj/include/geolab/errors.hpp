#pragma once

#include <stdexcept>
#include <string>

namespace geolab {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Vector length does not match the space dimension.
struct dimension_error : error {
  using error::error;
};

/// Bad space parameters or malformed spec string; message names the offending token.
struct parse_error : error {
  using error::error;
};

/// Objective or norm input is NaN/Inf, or a computation left its domain.
struct numeric_error : error {
  using error::error;
};

/// Root bracketing exceeded its expansion limit (degenerate input).
struct bracket_error : error {
  using error::error;
};

}  // namespace geolab
