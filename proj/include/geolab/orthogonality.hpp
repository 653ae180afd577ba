#pragma once

// Isosceles and Pythagorean orthogonality: residuals, certified pairs, and
// the unit-pair parameterization  x1 = u1 + u2, x2 = u1 - u2  (with u1, u2
// unit) that reaches every isosceles pair up to joint scaling.

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "geolab/errors.hpp"
#include "geolab/space.hpp"

namespace geolab {

/// Relative tolerance certifying a pair as isosceles-orthogonal.
inline constexpr double kIsoTol = 1e-9;

namespace detail {

inline Vector add_scaled(std::span<const double> x, double c, std::span<const double> y) {
  Vector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + c * y[i];
  return out;
}

}  // namespace detail

/// | ||x+y|| - ||x-y|| |, zero exactly when x is isosceles-orthogonal to y.
inline double iso_residual(const SpaceSpec& s, std::span<const double> x,
                           std::span<const double> y) {
  if (x.size() != y.size())
    throw dimension_error("iso_residual: mismatched vector lengths");
  return std::abs(norm(s, detail::add_scaled(x, 1.0, y)) -
                  norm(s, detail::add_scaled(x, -1.0, y)));
}

/// | ||x-y||^2 - ||x||^2 - ||y||^2 |, zero when x is Pythagorean-orthogonal to y.
inline double pyth_residual(const SpaceSpec& s, std::span<const double> x,
                            std::span<const double> y) {
  if (x.size() != y.size())
    throw dimension_error("pyth_residual: mismatched vector lengths");
  const double d = norm(s, detail::add_scaled(x, -1.0, y));
  const double nx = norm(s, x);
  const double ny = norm(s, y);
  return std::abs(d * d - nx * nx - ny * ny);
}

struct IsoPair {
  Vector x1;
  Vector x2;
  double residual = 0.0;  // | ||x1+x2|| - ||x1-x2|| |
  double scale = 0.0;     // max(||x1||, ||x2||, ||x1+x2||)
};

/// Certify (x1, x2) as isosceles-orthogonal within tol * scale.
inline IsoPair make_iso_pair(const SpaceSpec& s, Vector x1, Vector x2,
                             double tol = kIsoTol) {
  IsoPair pr;
  pr.residual = iso_residual(s, x1, x2);
  pr.scale = std::max({norm(s, x1), norm(s, x2),
                       norm(s, detail::add_scaled(x1, 1.0, x2))});
  if (pr.scale == 0.0) throw numeric_error("iso pair: both vectors are zero");
  if (pr.residual > tol * pr.scale)
    throw numeric_error("iso pair: residual " + std::to_string(pr.residual) +
                        " exceeds tolerance at scale " + std::to_string(pr.scale));
  pr.x1 = std::move(x1);
  pr.x2 = std::move(x2);
  return pr;
}

/// Isosceles pair from two unit vectors: (u1+u2, u1-u2).  Equal norms of the
/// halves make the pair orthogonal by construction; residual <= 2e-9 * scale.
inline IsoPair iso_from_unit_pair(const SpaceSpec& s, std::span<const double> u1,
                                  std::span<const double> u2) {
  const double n1 = norm(s, u1);
  const double n2 = norm(s, u2);
  if (std::abs(n1 - 1.0) > 1e-9 || std::abs(n2 - 1.0) > 1e-9)
    throw numeric_error("iso_from_unit_pair: inputs must be unit vectors (norms " +
                        std::to_string(n1) + ", " + std::to_string(n2) + ")");
  return make_iso_pair(s, detail::add_scaled(u1, 1.0, u2), detail::add_scaled(u1, -1.0, u2),
                       2e-9);
}

/// Solve for alpha with  x  isosceles-orthogonal to  alpha*x + y,  by
/// expanding a bracket of g(a) = ||x+(ax+y)|| - ||x-(ax+y)|| and bisecting.
/// g is nondecreasing in a with limits -2||x|| and +2||x||, so a sign change
/// always exists for non-degenerate input.
inline double iso_complete(const SpaceSpec& s, std::span<const double> x,
                           std::span<const double> y) {
  if (x.size() != y.size()) throw dimension_error("iso_complete: mismatched lengths");
  double xx = 0.0, xy = 0.0, yy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    xx += x[i] * x[i];
    xy += x[i] * y[i];
    yy += y[i] * y[i];
  }
  if (xx == 0.0) throw numeric_error("iso_complete: x must be nonzero");
  // Parallel y gives a collinear pair for every alpha; reject it.
  if (yy - xy * xy / xx <= 1e-18 * yy)
    throw numeric_error("iso_complete: y is parallel to x");
  const auto g = [&](double a) {
    Vector w = detail::add_scaled(y, a, x);  // w = a*x + y
    return norm(s, detail::add_scaled(x, 1.0, w)) - norm(s, detail::add_scaled(x, -1.0, w));
  };
  double lo = -1.0, hi = 1.0;
  double glo = g(lo), ghi = g(hi);
  while (glo > 0.0 || ghi < 0.0) {
    lo *= 2.0;
    hi *= 2.0;
    if (hi > 1e6)
      throw bracket_error("iso_complete: no sign change within |alpha| <= 1e6");
    glo = g(lo);
    ghi = g(hi);
  }
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (g(mid) < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

/// Unit isosceles partner of a unit vector in a normed plane, found by a
/// sign-change bisection of  t -> ||x+u(t)|| - ||x-u(t)||  over a half turn
/// (the function negates under a half-turn shift of t).
inline Vector unit_iso_partner(const SpaceSpec& s, std::span<const double> x) {
  if (dim(s) != 2) throw dimension_error("unit_iso_partner: requires a 2-dimensional space");
  if (std::abs(norm(s, x) - 1.0) > 1e-9)
    throw numeric_error("unit_iso_partner: x must be a unit vector");
  const double base = std::atan2(x[1], x[0]);
  const auto f = [&](double t) {
    const Vector u = unit_vector(s, {t});
    return norm(s, detail::add_scaled(x, 1.0, u)) - norm(s, detail::add_scaled(x, -1.0, u));
  };
  // f(base) = 2||x|| > 0 and f(base+pi) = -f(base) < 0: a guaranteed bracket.
  double lo = base, hi = base + std::acos(-1.0);
  while (hi - lo > 1e-13) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return unit_vector(s, {0.5 * (lo + hi)});
}

/// Classical inequalities for isosceles pairs under scaling of one side:
/// with |a| >= 1 the + and - combinations are pinched between ||x1+a*x2||
/// and |a| times themselves; with |a| <= 1 the pinch reverses.
inline bool lemma3_check(const SpaceSpec& s, const IsoPair& pair, double alpha,
                         double slack = 1e-9) {
  const double tol = slack * std::max(pair.scale, std::abs(alpha) * pair.scale);
  const double plus = norm(s, detail::add_scaled(pair.x1, 1.0, pair.x2));
  const double minus = norm(s, detail::add_scaled(pair.x1, -1.0, pair.x2));
  const double mixed = norm(s, detail::add_scaled(pair.x1, alpha, pair.x2));
  const double a = std::abs(alpha);
  if (a >= 1.0)
    return mixed <= a * plus + tol && mixed <= a * minus + tol &&
           plus <= mixed + tol && minus <= mixed + tol;
  return mixed <= plus + tol && mixed <= minus + tol &&
         a * plus <= mixed + tol && a * minus <= mixed + tol;
}

}  // namespace geolab
