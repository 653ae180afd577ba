#pragma once

// Space-spec grammar shared by the CLI and config files:
//   lp:dim=<n>,p=<real|inf>
//   lplq:p=<real>,q=<real>
//   poly:(x1,y1);(x2,y2);...
//   gridsup:n=<n>
//   euclidean:dim=<n>
// Family names are ASCII case-insensitive; format() emits the canonical
// lowercase form and round-trips through parse().

#include <array>
#include <cctype>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "geolab/errors.hpp"
#include "geolab/space.hpp"

namespace geolab {

namespace detail {

inline std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

inline double parse_real(std::string_view tok, std::string_view what) {
  if (ascii_lower(tok) == "inf") return kInfiniteP;
  double v = 0.0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last)
    throw parse_error(std::string(what) + ": not a number: '" + std::string(tok) + "'");
  return v;
}

inline int parse_int(std::string_view tok, std::string_view what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw parse_error(std::string(what) + ": not an integer: '" + std::string(tok) + "'");
  return v;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t next = s.find(sep, pos);
    if (next == std::string_view::npos) {
      parts.push_back(s.substr(pos));
      break;
    }
    parts.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
  return parts;
}

// key=value fields separated by commas, keys required in the given order.
inline std::vector<double> parse_fields(std::string_view body,
                                        std::initializer_list<std::string_view> keys) {
  const auto parts = split(body, ',');
  if (parts.size() != keys.size())
    throw parse_error("expected " + std::to_string(keys.size()) + " parameter(s) in '" +
                      std::string(body) + "'");
  std::vector<double> vals;
  std::size_t i = 0;
  for (std::string_view key : keys) {
    const auto kv = split(parts[i], '=');
    if (kv.size() != 2 || ascii_lower(kv[0]) != key)
      throw parse_error("missing parameter '" + std::string(key) + "' in '" +
                        std::string(body) + "'");
    vals.push_back(parse_real(kv[1], key));
    ++i;
  }
  return vals;
}

inline std::string format_real(double v) {
  if (v == kInfiniteP) return "inf";
  std::array<char, 32> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

}  // namespace detail

inline SpaceSpec parse_space_spec(std::string_view s) {
  if (s.empty()) throw parse_error("empty space spec");
  const std::size_t colon = s.find(':');
  if (colon == std::string_view::npos)
    throw parse_error("space spec missing ':' separator: '" + std::string(s) + "'");
  const std::string family = detail::ascii_lower(s.substr(0, colon));
  const std::string_view body = s.substr(colon + 1);
  if (family == "lp") {
    const auto v = detail::parse_fields(body, {"dim", "p"});
    const double d = v[0];
    if (d != static_cast<int>(d)) throw parse_error("lp: dim must be an integer");
    return make_lp(static_cast<int>(d), v[1]);
  }
  if (family == "lplq") {
    const auto v = detail::parse_fields(body, {"p", "q"});
    return make_lplq(v[0], v[1]);
  }
  if (family == "gridsup") {
    const auto v = detail::parse_fields(body, {"n"});
    if (v[0] != static_cast<int>(v[0])) throw parse_error("gridsup: n must be an integer");
    return make_gridsup(static_cast<int>(v[0]));
  }
  if (family == "euclidean") {
    const auto v = detail::parse_fields(body, {"dim"});
    if (v[0] != static_cast<int>(v[0])) throw parse_error("euclidean: dim must be an integer");
    return make_euclidean(static_cast<int>(v[0]));
  }
  if (family == "poly") {
    std::vector<std::array<double, 2>> vertices;
    for (std::string_view part : detail::split(body, ';')) {
      if (part.size() < 5 || part.front() != '(' || part.back() != ')')
        throw parse_error("poly: vertex must look like (x,y), got '" + std::string(part) + "'");
      const auto xy = detail::split(part.substr(1, part.size() - 2), ',');
      if (xy.size() != 2)
        throw parse_error("poly: vertex must have two coordinates: '" + std::string(part) + "'");
      vertices.push_back({detail::parse_real(xy[0], "poly vertex x"),
                          detail::parse_real(xy[1], "poly vertex y")});
    }
    return make_polyhedral(std::move(vertices));
  }
  throw parse_error("unknown space family '" + family + "'");
}

inline std::string format_space_spec(const SpaceSpec& s) {
  using detail::format_real;
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Lp>)
          return "lp:dim=" + std::to_string(v.dim) + ",p=" + format_real(v.p);
        if constexpr (std::is_same_v<T, LpLq>)
          return "lplq:p=" + format_real(v.p) + ",q=" + format_real(v.q);
        if constexpr (std::is_same_v<T, GridSup>) return "gridsup:n=" + std::to_string(v.n);
        if constexpr (std::is_same_v<T, Euclidean>)
          return "euclidean:dim=" + std::to_string(v.dim);
        if constexpr (std::is_same_v<T, Polyhedral>) {
          std::string out = "poly:";
          for (std::size_t i = 0; i < v.vertices.size(); ++i) {
            if (i) out += ';';
            out += '(' + format_real(v.vertices[i][0]) + ',' +
                   format_real(v.vertices[i][1]) + ')';
          }
          return out;
        }
      },
      s);
}

}  // namespace geolab
