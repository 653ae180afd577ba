#pragma once

// Catalog of concrete finite-dimensional normed spaces and their norms.
//
// Families:
//   Lp         R^n with the p-norm, 1 <= p <= inf (p = inf is the max norm)
//   LpLq       R^2 with the p-norm on the quadrants x1*x2 >= 0 and the
//              q-norm elsewhere (a norm exactly when q <= p)
//   Polyhedral R^2 gauged by an origin-symmetric convex polygon
//   GridSup    R^n with the max norm (grid-sampled sup norm)
//   Euclidean  R^n with the 2-norm, tagged as the inner-product reference

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "geolab/errors.hpp"

namespace geolab {

using Vector = std::vector<double>;

inline constexpr double kInfiniteP = std::numeric_limits<double>::infinity();

struct Lp {
  int dim = 2;
  double p = 2.0;  // in [1, inf]
  bool operator==(const Lp&) const = default;
};

struct LpLq {
  double p = 2.0;
  double q = 1.0;  // 1 <= q <= p < inf, dimension fixed at 2
  bool operator==(const LpLq&) const = default;
};

struct Polyhedral {
  // Vertices in counterclockwise order, origin-symmetric, origin strictly
  // inside.  `angles` is derived at construction; build via make_polyhedral.
  std::vector<std::array<double, 2>> vertices;
  std::vector<double> angles;
  bool operator==(const Polyhedral& o) const { return vertices == o.vertices; }
};

struct GridSup {
  int n = 2;
  bool operator==(const GridSup&) const = default;
};

struct Euclidean {
  int dim = 2;
  bool operator==(const Euclidean&) const = default;
};

using SpaceSpec = std::variant<Lp, LpLq, Polyhedral, GridSup, Euclidean>;

inline int dim(const SpaceSpec& s) {
  return std::visit(
      [](const auto& v) -> int {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Lp>) return v.dim;
        if constexpr (std::is_same_v<T, LpLq>) return 2;
        if constexpr (std::is_same_v<T, Polyhedral>) return 2;
        if constexpr (std::is_same_v<T, GridSup>) return v.n;
        if constexpr (std::is_same_v<T, Euclidean>) return v.dim;
      },
      s);
}

inline bool is_hilbert(const SpaceSpec& s) {
  return std::holds_alternative<Euclidean>(s);
}

inline SpaceSpec make_lp(int dim, double p) {
  if (dim < 2) throw parse_error("lp: dim must be >= 2, got " + std::to_string(dim));
  if (!(p >= 1.0)) throw parse_error("lp: p must be >= 1, got " + std::to_string(p));
  return Lp{dim, p};
}

inline SpaceSpec make_lplq(double p, double q) {
  if (!(q >= 1.0)) throw parse_error("lplq: q must be >= 1, got " + std::to_string(q));
  if (!(q <= p)) throw parse_error("lplq: q exceeds p (q=" + std::to_string(q) +
                                   ", p=" + std::to_string(p) + ")");
  if (!std::isfinite(p)) throw parse_error("lplq: p must be finite");
  return LpLq{p, q};
}

inline SpaceSpec make_gridsup(int n) {
  if (n < 2) throw parse_error("gridsup: n must be >= 2, got " + std::to_string(n));
  return GridSup{n};
}

inline SpaceSpec make_euclidean(int dim) {
  if (dim < 2) throw parse_error("euclidean: dim must be >= 2, got " + std::to_string(dim));
  return Euclidean{dim};
}

namespace detail {
inline double cross2(double ax, double ay, double bx, double by) {
  return ax * by - ay * bx;
}
}  // namespace detail

inline SpaceSpec make_polyhedral(std::vector<std::array<double, 2>> vertices) {
  const std::size_t n = vertices.size();
  if (n < 4) throw parse_error("poly: needs at least 4 vertices, got " + std::to_string(n));
  if (n % 2 != 0) throw parse_error("poly: vertex count must be even for symmetry");
  for (const auto& v : vertices)
    if (!std::isfinite(v[0]) || !std::isfinite(v[1]))
      throw parse_error("poly: non-finite vertex coordinate");
  // Origin symmetry: every vertex has its negation in the list.
  for (const auto& v : vertices) {
    bool found = false;
    for (const auto& w : vertices)
      if (std::abs(w[0] + v[0]) <= 1e-12 && std::abs(w[1] + v[1]) <= 1e-12) {
        found = true;
        break;
      }
    if (!found)
      throw parse_error("poly: asymmetric polygon, missing -(" + std::to_string(v[0]) +
                        "," + std::to_string(v[1]) + ")");
  }
  // Counterclockwise convex, origin strictly inside.
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = vertices[i];
    const auto& b = vertices[(i + 1) % n];
    const auto& c = vertices[(i + 2) % n];
    if (detail::cross2(a[0], a[1], b[0], b[1]) <= 0.0)
      throw parse_error("poly: origin not strictly inside or vertices not counterclockwise");
    if (detail::cross2(b[0] - a[0], b[1] - a[1], c[0] - b[0], c[1] - b[1]) <= 0.0)
      throw parse_error("poly: vertices do not form a strictly convex counterclockwise polygon");
  }
  // Rotate so vertex angles are ascending; binary search in norm() relies on it.
  std::vector<double> ang(n);
  std::size_t lo = 0;
  for (std::size_t i = 0; i < n; ++i) {
    ang[i] = std::atan2(vertices[i][1], vertices[i][0]);
    if (ang[i] < ang[lo]) lo = i;
  }
  std::rotate(vertices.begin(), vertices.begin() + static_cast<std::ptrdiff_t>(lo),
              vertices.end());
  std::rotate(ang.begin(), ang.begin() + static_cast<std::ptrdiff_t>(lo), ang.end());
  Polyhedral poly;
  poly.vertices = std::move(vertices);
  poly.angles = std::move(ang);
  return poly;
}

namespace detail {

inline void check_vector(const SpaceSpec& s, std::span<const double> v) {
  if (static_cast<int>(v.size()) != dim(s))
    throw dimension_error("vector length " + std::to_string(v.size()) +
                          " does not match space dimension " + std::to_string(dim(s)));
  for (double x : v)
    if (!std::isfinite(x)) throw numeric_error("non-finite vector coordinate");
}

inline double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

// p-norm with the scale factored out; |x|^p goes through exp(p*log|x|) with
// the zero case short-circuited so fractional p never sees log(0).
inline double lp_norm(std::span<const double> v, double p) {
  if (p == kInfiniteP) return max_abs(v);
  if (p == 1.0) {
    double s = 0.0;
    for (double x : v) s += std::abs(x);
    return s;
  }
  if (p == 2.0) {
    const double m = max_abs(v);
    if (m == 0.0) return 0.0;
    double s = 0.0;
    for (double x : v) {
      const double a = x / m;
      s += a * a;
    }
    return m * std::sqrt(s);
  }
  const double m = max_abs(v);
  if (m == 0.0) return 0.0;
  double s = 0.0;
  for (double x : v) {
    const double a = std::abs(x) / m;
    if (a > 0.0) s += std::exp(p * std::log(a));
  }
  return m * std::exp(std::log(s) / p);
}

// Minkowski functional of the polygon: locate the boundary edge crossed by
// the ray through v (binary search on vertex angles), then one 2x2 solve.
inline double poly_gauge(const Polyhedral& poly, double x, double y) {
  if (x == 0.0 && y == 0.0) return 0.0;
  const auto& vs = poly.vertices;
  const auto& ang = poly.angles;
  const std::size_t n = vs.size();
  const double a = std::atan2(y, x);
  // First vertex angle strictly greater than a; the edge starts one before.
  std::size_t hi = std::upper_bound(ang.begin(), ang.end(), a) - ang.begin();
  const std::size_t i = (hi == 0 || hi == n) ? n - 1 : hi - 1;
  const auto& A = vs[i];
  const auto& B = vs[(i + 1) % n];
  const double wx = B[0] - A[0], wy = B[1] - A[1];
  const double denom = cross2(x, y, wx, wy);
  const double s = cross2(A[0], A[1], wx, wy) / denom;  // ray hits edge at s*(x,y)
  return 1.0 / s;
}

}  // namespace detail

/// Norm of v in the given space.  Nonnegative, zero only at the origin.
inline double norm(const SpaceSpec& s, std::span<const double> v) {
  detail::check_vector(s, v);
  return std::visit(
      [&](const auto& sp) -> double {
        using T = std::decay_t<decltype(sp)>;
        if constexpr (std::is_same_v<T, Lp>) return detail::lp_norm(v, sp.p);
        if constexpr (std::is_same_v<T, LpLq>)
          return detail::lp_norm(v, v[0] * v[1] >= 0.0 ? sp.p : sp.q);
        if constexpr (std::is_same_v<T, Polyhedral>)
          return detail::poly_gauge(sp, v[0], v[1]);
        if constexpr (std::is_same_v<T, GridSup>) return detail::max_abs(v);
        if constexpr (std::is_same_v<T, Euclidean>) return detail::lp_norm(v, 2.0);
      },
      s);
}

inline double norm(const SpaceSpec& s, const Vector& v) {
  return norm(s, std::span<const double>(v));
}

/// v / norm(v).  Throws on the zero vector.
inline Vector normalize(const SpaceSpec& s, std::span<const double> v) {
  const double nv = norm(s, v);
  if (nv == 0.0) throw numeric_error("cannot normalize the zero vector");
  Vector out(v.begin(), v.end());
  for (double& x : out) x /= nv;
  return out;
}

inline Vector normalize(const SpaceSpec& s, const Vector& v) {
  return normalize(s, std::span<const double>(v));
}

namespace detail {

// Hyperspherical direction from n-1 angles: the leading angles sweep [0,pi],
// the last sweeps a full turn.  For n = 2 this is (cos t, sin t).
inline void direction_from_angles(std::span<const double> angles, std::span<double> out) {
  const std::size_t n = out.size();
  double sinprod = 1.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    out[i] = sinprod * std::cos(angles[i]);
    sinprod *= std::sin(angles[i]);
  }
  out[n - 1] = sinprod;
}

}  // namespace detail

/// Unit vector of the space in the direction given by n-1 spherical angles.
inline Vector unit_vector(const SpaceSpec& s, std::span<const double> angles) {
  const int n = dim(s);
  if (static_cast<int>(angles.size()) != n - 1)
    throw dimension_error("expected " + std::to_string(n - 1) + " angles, got " +
                          std::to_string(angles.size()));
  Vector d(static_cast<std::size_t>(n));
  detail::direction_from_angles(angles, d);
  return normalize(s, d);
}

inline Vector unit_vector(const SpaceSpec& s, std::initializer_list<double> angles) {
  return unit_vector(s, std::span<const double>(angles.begin(), angles.size()));
}

inline std::string family_name(const SpaceSpec& s) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Lp>) return "lp";
        if constexpr (std::is_same_v<T, LpLq>) return "lplq";
        if constexpr (std::is_same_v<T, Polyhedral>) return "poly";
        if constexpr (std::is_same_v<T, GridSup>) return "gridsup";
        if constexpr (std::is_same_v<T, Euclidean>) return "euclidean";
      },
      s);
}

}  // namespace geolab
