#pragma once

// Estimators for the geometric constants of a normed space.  Every supremum
// is a maximize() call over an explicit angle parameterization of unit
// vectors; values are certified lower bounds of the true suprema.
//
// The isosceles-orthogonality constant czi(t) is estimated over the onto
// parameterization x1 = u1 + u2, x2 = u1 - u2 with u1, u2 unit: the ratio
//
//    ||t*x1 + (1-t)*x2|| * ||(1-t)*x1 + t*x2|| / ||x1 + x2||^2
//
// is invariant under joint scaling of the pair, and on the parameterization
// reduces to ||u1 - s*u2|| * ||u1 + s*u2|| / 4 with s = 1 - 2t, so the
// constrained 4-parameter problem becomes an unconstrained search over two
// unit directions.  The isosceles constraint itself guarantees
// ||x1 + x2|| >= max(||x1||, ||x2||) > 0, so the denominator needs no guard.
//
// Spaces of dimension above 3 are searched on their leading 3-coordinate
// section (2-coordinate for the three-parameter estimators), which keeps the
// parameter count within the optimizer's budget and keeps every estimate a
// certified lower bound.

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "geolab/errors.hpp"
#include "geolab/optimize.hpp"
#include "geolab/orthogonality.hpp"
#include "geolab/space.hpp"

namespace geolab {

inline constexpr double kPi = 3.14159265358979323846;

enum class CziMethod { direct, identity };
enum class ZbaganuMethod { direct, profile_corrected, profile_paper };
enum class JamesMethod { minform, isoform };
enum class NjVariant { classic, modified, iso };

namespace detail {

// Unit sphere of the space restricted to its leading coordinate section.
struct UnitSection {
  const SpaceSpec* space;
  int full_dim;
  int k;

  explicit UnitSection(const SpaceSpec& s, int cap = 3)
      : space(&s), full_dim(dim(s)), k(std::min(dim(s), cap)) {}

  int n_angles() const { return k - 1; }

  void append_boxes(std::vector<Interval>& out) const {
    for (int i = 0; i + 1 < k; ++i) {
      if (i + 2 == k)
        out.push_back({0.0, 2.0 * kPi, true});
      else
        out.push_back({0.0, kPi, false});
    }
  }

  void unit(std::span<const double> angles, Vector& out) const {
    out.assign(static_cast<std::size_t>(full_dim), 0.0);
    direction_from_angles(angles, std::span<double>(out).first(static_cast<std::size_t>(k)));
    const double nv = norm(*space, out);
    for (double& c : out) c /= nv;
  }
};

inline std::vector<Interval> pair_boxes(const UnitSection& sec) {
  std::vector<Interval> box;
  sec.append_boxes(box);
  sec.append_boxes(box);
  return box;
}

// Objective over two unit vectors; combine(u1, u2) -> value.
template <typename Combine>
Estimate maximize_unit_pair(const SpaceSpec& space, Combine&& combine,
                            const OptConfig& cfg, int cap = 3) {
  const UnitSection sec(space, cap);
  const auto box = pair_boxes(sec);
  const int a = sec.n_angles();
  Vector u1, u2;
  auto obj = [&, sec, a](std::span<const double> p) {
    sec.unit(p.first(static_cast<std::size_t>(a)), u1);
    sec.unit(p.subspan(static_cast<std::size_t>(a)), u2);
    return combine(u1, u2);
  };
  return maximize(obj, box, cfg);
}

inline double combo_norm(const SpaceSpec& s, const Vector& u, double c, const Vector& v,
                         Vector& buf) {
  buf.resize(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) buf[i] = u[i] + c * v[i];
  return norm(s, buf);
}

inline Estimate exact_estimate(double value, std::size_t n_params) {
  Estimate e;
  e.value = value;
  e.argmax.assign(n_params, 0.0);
  e.evaluations = 1;
  e.status = OptStatus::converged;
  e.refinement_steps = 0;
  return e;
}

}  // namespace detail

/// Z profile: sup of ||u1 + t*u2|| * ||u1 - t*u2|| / 2 over unit pairs,
/// for t in [0, 1].  Z(0) is 1/2 identically, returned exactly.
inline Estimate z_profile(const SpaceSpec& space, double t, const OptConfig& cfg = {}) {
  if (!(t >= 0.0 && t <= 1.0)) throw numeric_error("z_profile: t must lie in [0, 1]");
  const detail::UnitSection sec(space, 3);
  if (t == 0.0) return detail::exact_estimate(0.5, 2 * sec.n_angles());
  Vector buf;
  return detail::maximize_unit_pair(
      space,
      [&](const Vector& u1, const Vector& u2) {
        return detail::combo_norm(space, u1, t, u2, buf) *
               detail::combo_norm(space, u1, -t, u2, buf) / 2.0;
      },
      cfg);
}

/// Isosceles-orthogonality constant czi(t), t in [0, 1/2].
/// direct:   optimize the pair ratio over the unit-pair parameterization.
/// identity: z_profile(1 - 2t) / 2.
inline Estimate czi(const SpaceSpec& space, double t, CziMethod method = CziMethod::direct,
                    const OptConfig& cfg = {}) {
  if (!(t >= 0.0 && t <= 0.5)) throw numeric_error("czi: t must lie in [0, 1/2]");
  const double s = 1.0 - 2.0 * t;
  if (method == CziMethod::identity) {
    Estimate e = z_profile(space, s, cfg);
    e.value *= 0.5;
    return e;
  }
  Vector buf;
  return detail::maximize_unit_pair(
      space,
      [&](const Vector& u1, const Vector& u2) {
        return detail::combo_norm(space, u1, -s, u2, buf) *
               detail::combo_norm(space, u1, s, u2, buf) / 4.0;
      },
      cfg);
}

/// Independent sampling oracle for czi: n isosceles pairs built by
/// iso_complete on seeded random input, evaluated through the raw ratio.
/// Never exceeds the direct estimate beyond optimizer tolerance.
inline std::optional<double> czi_raw_sample(const SpaceSpec& space, double t, int n,
                                            std::uint64_t seed) {
  if (dim(space) != 2) throw dimension_error("czi_raw_sample: requires dimension 2");
  if (!(t >= 0.0 && t <= 0.5)) throw numeric_error("czi_raw_sample: t must lie in [0, 1/2]");
  if (n <= 0) return std::nullopt;
  std::mt19937_64 rng(seed);
  const auto draw = [&](Vector& v) {
    for (;;) {
      for (double& c : v) c = 2.0 * detail::unit_uniform(rng) - 1.0;
      if (v[0] * v[0] + v[1] * v[1] >= 0.09) return;
    }
  };
  Vector x(2), y(2), buf;
  double best = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    draw(x);
    do {
      draw(y);
    } while (std::abs(x[0] * y[1] - x[1] * y[0]) <
             1e-3 * std::hypot(x[0], x[1]) * std::hypot(y[0], y[1]));
    const double alpha = iso_complete(space, x, y);
    const Vector x2 = detail::add_scaled(y, alpha, x);
    Vector x1 = x;
    const double denom = detail::combo_norm(space, x1, 1.0, x2, buf);
    Vector tx(2);
    for (int j = 0; j < 2; ++j) tx[j] = t * x1[j] + (1.0 - t) * x2[j];
    const double n1 = norm(space, tx);
    for (int j = 0; j < 2; ++j) tx[j] = (1.0 - t) * x1[j] + t * x2[j];
    const double n2 = norm(space, tx);
    best = std::max(best, n1 * n2 / (denom * denom));
  }
  return best;
}

namespace detail {

inline OptConfig profile_outer_cfg(const OptConfig& cfg) {
  OptConfig o = cfg;
  o.grid_resolution = std::min(cfg.grid_resolution, 48);
  o.top_cells = std::min(cfg.top_cells, 6);
  o.extra_starts = std::min(cfg.extra_starts, 4);
  o.step_tol = std::max(cfg.step_tol, 1e-8);
  o.max_evals = std::min<long long>(cfg.max_evals, 2000);
  return o;
}

inline OptConfig profile_inner_cfg(const OptConfig& cfg) {
  OptConfig i = cfg;
  i.grid_resolution = std::min(cfg.grid_resolution, 64);
  i.top_cells = std::min(cfg.top_cells, 8);
  i.extra_starts = std::min(cfg.extra_starts, 4);
  i.max_evals = std::min<long long>(cfg.max_evals, 200'000);
  return i;
}

}  // namespace detail

/// Zbaganu constant.
/// direct:            sup of ||u1+s*u2||*||u1-s*u2|| / (1+s^2) over unit pairs
///                    and s in [0,1] (joint scaling plus swap symmetry).
/// profile_corrected: sup of 4*czi((1-eta)/2) / (1+eta^2) over eta in [0,1].
/// profile_paper:     the same with factor 2 instead of 4; kept for the
///                    claim harness, disagrees with direct by that factor.
inline Estimate zbaganu(const SpaceSpec& space, ZbaganuMethod method = ZbaganuMethod::direct,
                        const OptConfig& cfg = {}) {
  if (method == ZbaganuMethod::direct) {
    const detail::UnitSection sec(space, 2);
    std::vector<Interval> box = detail::pair_boxes(sec);
    box.push_back({0.0, 1.0, false});
    const int a = sec.n_angles();
    Vector u1, u2, buf;
    auto obj = [&, sec, a](std::span<const double> p) {
      sec.unit(p.first(static_cast<std::size_t>(a)), u1);
      sec.unit(p.subspan(static_cast<std::size_t>(a), static_cast<std::size_t>(a)), u2);
      const double s = p.back();
      return detail::combo_norm(space, u1, s, u2, buf) *
             detail::combo_norm(space, u1, -s, u2, buf) / (1.0 + s * s);
    };
    return maximize(obj, box, cfg);
  }
  const double factor = method == ZbaganuMethod::profile_corrected ? 4.0 : 2.0;
  const OptConfig inner = detail::profile_inner_cfg(cfg);
  const std::vector<Interval> box{{0.0, 1.0, false}};
  auto obj = [&](std::span<const double> p) {
    const double eta = p[0];
    return factor * czi(space, (1.0 - eta) / 2.0, CziMethod::direct, inner).value /
           (1.0 + eta * eta);
  };
  return maximize(obj, box, detail::profile_outer_cfg(cfg));
}

/// James constant.
/// minform: sup of min(||u1+u2||, ||u1-u2||) over unit pairs (any dimension).
/// isoform: sup of ||x + partner(x)|| over unit x (normed planes only).
inline Estimate james(const SpaceSpec& space, JamesMethod method = JamesMethod::minform,
                      const OptConfig& cfg = {}) {
  if (method == JamesMethod::minform) {
    Vector buf;
    return detail::maximize_unit_pair(
        space,
        [&](const Vector& u1, const Vector& u2) {
          return std::min(detail::combo_norm(space, u1, 1.0, u2, buf),
                          detail::combo_norm(space, u1, -1.0, u2, buf));
        },
        cfg);
  }
  if (dim(space) != 2) throw dimension_error("james isoform: requires dimension 2");
  const std::vector<Interval> box{{0.0, 2.0 * kPi, true}};
  Vector buf;
  auto obj = [&](std::span<const double> p) {
    const Vector x = unit_vector(space, p.first(1));
    const Vector y = unit_iso_partner(space, x);
    return detail::combo_norm(space, x, 1.0, y, buf);
  };
  return maximize(obj, box, cfg);
}

/// von Neumann-Jordan constant.
/// classic:  scale-reduced three-parameter form over (u1, u2, s).
/// modified: unit pairs only.
/// iso:      the isosceles-constrained variant via the pair parameterization,
///           4 / (||u1+u2||^2 + ||u1-u2||^2).
inline Estimate nj_constant(const SpaceSpec& space, NjVariant variant = NjVariant::classic,
                            const OptConfig& cfg = {}) {
  Vector buf;
  switch (variant) {
    case NjVariant::classic: {
      const detail::UnitSection sec(space, 2);
      std::vector<Interval> box = detail::pair_boxes(sec);
      box.push_back({0.0, 1.0, false});
      const int a = sec.n_angles();
      Vector u1, u2;
      auto obj = [&, sec, a](std::span<const double> p) {
        sec.unit(p.first(static_cast<std::size_t>(a)), u1);
        sec.unit(p.subspan(static_cast<std::size_t>(a), static_cast<std::size_t>(a)), u2);
        const double s = p.back();
        const double np = detail::combo_norm(space, u1, s, u2, buf);
        const double nm = detail::combo_norm(space, u1, -s, u2, buf);
        return (np * np + nm * nm) / (2.0 * (1.0 + s * s));
      };
      return maximize(obj, box, cfg);
    }
    case NjVariant::modified:
      return detail::maximize_unit_pair(
          space,
          [&](const Vector& u1, const Vector& u2) {
            const double np = detail::combo_norm(space, u1, 1.0, u2, buf);
            const double nm = detail::combo_norm(space, u1, -1.0, u2, buf);
            return (np * np + nm * nm) / 4.0;
          },
          cfg);
    case NjVariant::iso:
      return detail::maximize_unit_pair(
          space,
          [&](const Vector& u1, const Vector& u2) {
            const double np = detail::combo_norm(space, u1, 1.0, u2, buf);
            const double nm = detail::combo_norm(space, u1, -1.0, u2, buf);
            return 4.0 / (np * np + nm * nm);
          },
          cfg);
  }
  throw numeric_error("nj_constant: unknown variant");
}

/// sup of (||x1|| + ||x2||) / ||x1 + x2|| over isosceles pairs; on the pair
/// parameterization this is (||u1+u2|| + ||u1-u2||) / 2, at most 2.
inline Estimate h_tilde(const SpaceSpec& space, const OptConfig& cfg = {}) {
  Vector buf;
  return detail::maximize_unit_pair(
      space,
      [&](const Vector& u1, const Vector& u2) {
        return (detail::combo_norm(space, u1, 1.0, u2, buf) +
                detail::combo_norm(space, u1, -1.0, u2, buf)) /
               2.0;
      },
      cfg);
}

/// Modulus of convexity at eps in [0, 2] for normed planes: partner angles
/// with ||u1 - u2|| = eps are found by bisection on both half-turn branches,
/// and 1 - ||u1 + u2||/2 is minimized over the base angle.
inline Estimate modulus_convexity(const SpaceSpec& space, double eps,
                                  const OptConfig& cfg = {}) {
  if (dim(space) != 2) throw dimension_error("modulus_convexity: requires dimension 2");
  if (!(eps >= 0.0 && eps <= 2.0))
    throw numeric_error("modulus_convexity: eps must lie in [0, 2]");
  if (eps == 0.0) return detail::exact_estimate(0.0, 1);
  Vector buf;
  const auto partner_sum = [&](double theta, double side) {
    const Vector u1 = unit_vector(space, {theta});
    double lo = theta, hi = theta + side * kPi;  // h(lo) = -eps, h(hi) = 2 - eps
    for (int it = 0; it < 60; ++it) {
      const double mid = 0.5 * (lo + hi);
      const Vector u2 = unit_vector(space, {mid});
      if (detail::combo_norm(space, u1, -1.0, u2, buf) - eps < 0.0)
        lo = mid;
      else
        hi = mid;
    }
    const Vector u2 = unit_vector(space, {0.5 * (lo + hi)});
    return detail::combo_norm(space, u1, 1.0, u2, buf);
  };
  const std::vector<Interval> box{{0.0, 2.0 * kPi, true}};
  auto obj = [&](std::span<const double> p) {
    return std::max(partner_sum(p[0], +1.0), partner_sum(p[0], -1.0));
  };
  Estimate e = maximize(obj, box, cfg);
  e.value = std::max(0.0, 1.0 - e.value / 2.0);  // ||u1+u2|| = 2 + ulp noise at eps ~ 0
  return e;
}

/// Modulus of smoothness rho(t) = sup (||u1+t*u2|| + ||u1-t*u2||)/2 - 1,
/// zero exactly at t = 0 and never above t.
inline Estimate modulus_smoothness(const SpaceSpec& space, double t,
                                   const OptConfig& cfg = {}) {
  if (!(t >= 0.0)) throw numeric_error("modulus_smoothness: t must be nonnegative");
  const detail::UnitSection sec(space, 3);
  if (t == 0.0) return detail::exact_estimate(0.0, 2 * sec.n_angles());
  Vector buf;
  return detail::maximize_unit_pair(
      space,
      [&](const Vector& u1, const Vector& u2) {
        return (detail::combo_norm(space, u1, t, u2, buf) +
                detail::combo_norm(space, u1, -t, u2, buf)) /
                   2.0 -
               1.0;
      },
      cfg);
}

struct SlopePoint {
  double t = 0.0;
  double slope_z = 0.0;    // (z_profile(t) - 1/2) / t
  double slope_czi = 0.0;  // (2*czi((1-t)/2) - 1/2) / t, equal by the identity
};

/// Small-t slope of the Z profile in both of its equivalent forms; the two
/// must agree within 1e-6 (they differ only by the substitution s = 1 - 2t).
inline std::vector<SlopePoint> smoothness_slope(const SpaceSpec& space,
                                                std::span<const double> ts,
                                                const OptConfig& cfg = {}) {
  std::vector<SlopePoint> out;
  for (double t : ts) {
    if (!(t > 0.0 && t <= 0.1))
      throw numeric_error("smoothness_slope: each t must lie in (0, 0.1]");
    SlopePoint sp;
    sp.t = t;
    sp.slope_z = (z_profile(space, t, cfg).value - 0.5) / t;
    sp.slope_czi = (2.0 * czi(space, (1.0 - t) / 2.0, CziMethod::direct, cfg).value - 0.5) / t;
    if (std::abs(sp.slope_z - sp.slope_czi) > 1e-6)
      throw numeric_error("smoothness_slope: the two slope forms disagree at t = " +
                          std::to_string(t));
    out.push_back(sp);
  }
  return out;
}

struct NonsquareReport {
  bool flag = false;                  // czi curve touches its upper bound
  std::optional<double> t_witness;    // first grid t where it touches
  double james_value = 0.0;           // corroborating James constant
};

/// Flags spaces whose czi curve attains (1-t)^2 somewhere on [0, 0.4]; such
/// spaces fail uniform non-squareness, so the James constant must sit at 2.
inline NonsquareReport nonsquare_diagnostic(const SpaceSpec& space, const OptConfig& cfg = {},
                                            double tol = 1e-3) {
  NonsquareReport rep;
  for (int k = 0; k <= 8; ++k) {
    const double t = 0.05 * k;
    const double v = czi(space, t, CziMethod::direct, cfg).value;
    if (v >= (1.0 - t) * (1.0 - t) - tol) {
      rep.flag = true;
      rep.t_witness = t;
      break;
    }
  }
  rep.james_value = james(space, JamesMethod::minform, cfg).value;
  return rep;
}

/// Max over n seeded isosceles pairs of the Pythagorean residual normalized
/// by scale^2; vanishes exactly in inner-product planes.
inline double orthogonality_gap(const SpaceSpec& space, int n, std::uint64_t seed) {
  if (dim(space) != 2) throw dimension_error("orthogonality_gap: requires dimension 2");
  if (n <= 0) return 0.0;
  std::mt19937_64 rng(seed);
  Vector x(2), y(2);
  const auto draw = [&](Vector& v) {
    for (;;) {
      for (double& c : v) c = 2.0 * detail::unit_uniform(rng) - 1.0;
      if (v[0] * v[0] + v[1] * v[1] >= 0.09) return;
    }
  };
  double gap = 0.0;
  for (int i = 0; i < n; ++i) {
    draw(x);
    do {
      draw(y);
    } while (std::abs(x[0] * y[1] - x[1] * y[0]) <
             1e-3 * std::hypot(x[0], x[1]) * std::hypot(y[0], y[1]));
    const double alpha = iso_complete(space, x, y);
    const IsoPair pair = make_iso_pair(space, x, detail::add_scaled(y, alpha, x));
    gap = std::max(gap, pyth_residual(space, pair.x1, pair.x2) / (pair.scale * pair.scale));
  }
  return gap;
}

struct ExampleBounds {
  std::optional<double> lp_bound;    // closed-form floor for lp planes
  std::optional<double> lplq_bound;  // closed-form floor for lp-lq planes
};

/// Closed-form lower bounds for czi on the lp and lp-lq families; empty for
/// other families rather than an error.
inline ExampleBounds example_bounds(const SpaceSpec& space, double t) {
  if (!(t >= 0.0 && t <= 0.5)) throw numeric_error("example_bounds: t must lie in [0, 1/2]");
  ExampleBounds out;
  if (const auto* lp = std::get_if<Lp>(&space); lp && std::isfinite(lp->p)) {
    const double p = lp->p;
    out.lp_bound = std::pow(2.0, -2.0 / p) *
                   std::pow(std::pow(1.0 - t, p) + std::pow(t, p), 2.0 / p);
  }
  if (const auto* pq = std::get_if<LpLq>(&space)) {
    const double p = pq->p;
    const double r = std::pow(2.0, 1.0 / p - 1.0 / pq->q);
    const double a = 1.0 + r - 2.0 * r * t;
    const double b = 1.0 - r + 2.0 * r * t;
    out.lplq_bound = std::pow(2.0, -2.0 / p - 2.0) *
                     std::pow(std::pow(a, p) + std::pow(b, p), 2.0 / p);
  }
  return out;
}

struct CurvePoint {
  double t = 0.0;
  double value = 0.0;
  double lower_bound = 0.0;
  double upper_bound = 0.0;
  CziMethod method = CziMethod::direct;
};

inline std::vector<CurvePoint> czi_curve(const SpaceSpec& space, int grid,
                                         CziMethod method = CziMethod::direct,
                                         const OptConfig& cfg = {}) {
  if (grid < 2) throw numeric_error("czi_curve: grid must be >= 2");
  std::vector<CurvePoint> out;
  for (int k = 0; k < grid; ++k) {
    const double t = 0.5 * k / (grid - 1);
    out.push_back({t, czi(space, t, method, cfg).value, t - t * t, (1.0 - t) * (1.0 - t),
                   method});
  }
  return out;
}

inline std::vector<CurvePoint> z_curve(const SpaceSpec& space, int grid,
                                       const OptConfig& cfg = {}) {
  if (grid < 2) throw numeric_error("z_curve: grid must be >= 2");
  std::vector<CurvePoint> out;
  for (int k = 0; k < grid; ++k) {
    const double t = 1.0 * k / (grid - 1);
    out.push_back({t, z_profile(space, t, cfg).value, (1.0 - t * t) / 2.0,
                   (1.0 + t) * (1.0 + t) / 2.0, CziMethod::direct});
  }
  return out;
}

inline std::vector<CurvePoint> rho_curve(const SpaceSpec& space, int grid,
                                         const OptConfig& cfg = {}) {
  if (grid < 2) throw numeric_error("rho_curve: grid must be >= 2");
  std::vector<CurvePoint> out;
  for (int k = 0; k < grid; ++k) {
    const double t = 1.0 * k / (grid - 1);
    out.push_back({t, modulus_smoothness(space, t, cfg).value, 0.0, t, CziMethod::direct});
  }
  return out;
}

inline std::vector<CurvePoint> delta_curve(const SpaceSpec& space, int grid,
                                           const OptConfig& cfg = {}) {
  if (grid < 2) throw numeric_error("delta_curve: grid must be >= 2");
  std::vector<CurvePoint> out;
  for (int k = 0; k < grid; ++k) {
    const double eps = 2.0 * k / (grid - 1);
    out.push_back({eps, modulus_convexity(space, eps, cfg).value, 0.0, 1.0,
                   CziMethod::direct});
  }
  return out;
}

}  // namespace geolab
