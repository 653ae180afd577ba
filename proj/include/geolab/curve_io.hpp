#pragma once

// CSV emission for constant curves: header row, 12 significant digits,
// LF line endings, rows sorted by t within each method block.

#include <charconv>
#include <cstdio>
#include <fstream>
#include <span>
#include <string>

#include "geolab/constants.hpp"
#include "geolab/errors.hpp"

namespace geolab {

/// 12-significant-digit decimal, round-trips through parsing at that precision.
inline std::string fmt12(double v) {
  char buf[32];
  const int n = std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::string(buf, static_cast<std::size_t>(n > 0 ? n : 0));
}

inline const char* to_string(CziMethod m) {
  return m == CziMethod::direct ? "direct" : "identity";
}

/// RFC-4180 quoting for fields that embed commas (space specs do).
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline std::string curve_csv(const std::string& space, const std::string& constant,
                             std::span<const CurvePoint> points) {
  std::string out = "space,constant,method,t,value,lower_bound,upper_bound\n";
  const std::string space_field = csv_field(space);
  for (const CurvePoint& pt : points) {
    out += space_field;
    out += ',';
    out += constant;
    out += ',';
    out += to_string(pt.method);
    out += ',';
    out += fmt12(pt.t);
    out += ',';
    out += fmt12(pt.value);
    out += ',';
    out += fmt12(pt.lower_bound);
    out += ',';
    out += fmt12(pt.upper_bound);
    out += '\n';
  }
  return out;
}

struct io_error : error {
  using error::error;
};

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw io_error("cannot open '" + path + "' for writing");
  f << content;
  if (!f) throw io_error("write failed for '" + path + "'");
}

}  // namespace geolab
