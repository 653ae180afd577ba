#pragma once

// Deterministic derivative-free global maximization over low-dimensional
// boxes.  Phase 1 evaluates a uniform grid exhaustively (per-dimension
// resolution shrinks so the grid fits half the evaluation budget; grids nest
// under doubling, so raising the resolution never loses a sampled point).
// Phase 2 runs compass search from the best grid cells plus seeded random
// starts: axis-aligned probes, first improvement accepted, steps halved when
// a full sweep fails, until the step drops below step_tol.
//
// Objectives over non-smooth norms are the normal case here, so nothing
// assumes derivatives.  Ties break toward the lexicographically smallest
// parameter point, which makes the result independent of evaluation order.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "geolab/errors.hpp"

namespace geolab {

struct Interval {
  double lo = 0.0;
  double hi = 1.0;
  bool periodic = false;  // angles wrap instead of clamping
};

struct OptConfig {
  int grid_resolution = 256;   // phase-1 points per dimension (before budget clamp)
  int top_cells = 16;          // grid points promoted to compass starts
  double step_tol = 1e-10;     // compass termination step
  long long max_evals = 5'000'000;
  std::uint64_t seed = 0;
  int extra_starts = 8;        // additional seeded random starts
};

enum class OptStatus { converged, budget_exhausted };

inline const char* to_string(OptStatus s) {
  return s == OptStatus::converged ? "converged" : "budget_exhausted";
}

struct Estimate {
  double value = -std::numeric_limits<double>::infinity();
  std::vector<double> argmax;
  long long evaluations = 0;
  OptStatus status = OptStatus::converged;
  long long refinement_steps = 0;
};

namespace detail {

inline void validate(const OptConfig& cfg) {
  if (cfg.grid_resolution <= 0 || cfg.top_cells <= 0 || cfg.max_evals <= 0 ||
      cfg.extra_starts < 0)
    throw numeric_error("optimizer config fields must be positive");
  if (!(cfg.step_tol > 0.0 && cfg.step_tol < 1.0))
    throw numeric_error("optimizer step_tol must lie in (0, 1)");
}

inline bool lex_less(const std::vector<double>& a, const std::vector<double>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// uniform double in [0, 1) from a seeded engine, bit-stable across platforms
inline double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct Candidate {
  double value;
  std::vector<double> point;
};

inline void keep_top(std::vector<Candidate>& top, std::size_t k, double v,
                     const std::vector<double>& p) {
  const auto better = [](const Candidate& a, const Candidate& b) {
    if (a.value != b.value) return a.value > b.value;
    return lex_less(a.point, b.point);
  };
  if (top.size() == k && !better(Candidate{v, p}, top.back())) return;
  Candidate c{v, p};
  const auto it = std::lower_bound(top.begin(), top.end(), c, better);
  top.insert(it, std::move(c));
  if (top.size() > k) top.pop_back();
}

}  // namespace detail

template <typename F>
Estimate maximize(F&& objective, std::span<const Interval> box, const OptConfig& cfg) {
  detail::validate(cfg);
  const std::size_t d = box.size();
  if (d == 0 || d > 4)
    throw dimension_error("maximize: box dimension must be between 1 and 4");
  for (const Interval& iv : box)
    if (!(iv.lo < iv.hi)) throw numeric_error("maximize: empty interval in box");

  long long evals = 0;
  bool budget_hit = false;
  const auto eval = [&](const std::vector<double>& x) {
    const double v = objective(std::span<const double>(x));
    ++evals;
    if (!std::isfinite(v)) {
      std::string at = "(";
      for (std::size_t i = 0; i < x.size(); ++i)
        at += (i ? "," : "") + std::to_string(x[i]);
      throw numeric_error("objective returned a non-finite value at " + at + ")");
    }
    return v;
  };

  // --- phase 1: exhaustive grid ------------------------------------------
  // The grid locates basins; compass does the precision work.  Cap the grid
  // share of the budget so high-dimensional boxes stay tractable, but let a
  // raised grid_resolution push the cap back up.
  int m = cfg.grid_resolution;
  const long long requested =
      std::max<long long>(250'000, static_cast<long long>(cfg.grid_resolution) *
                                       cfg.grid_resolution);
  const long long grid_budget =
      std::max<long long>(16, std::min(cfg.max_evals / 2, requested));
  const auto grid_count = [&](int res) {
    long long total = 1;
    for (const Interval& iv : box) {
      total *= res + (iv.periodic ? 0 : 1);
      if (total > grid_budget) return total;
    }
    return total;
  };
  while (m > 4 && grid_count(m) > grid_budget) --m;

  std::vector<int> counts(d);
  std::vector<double> spacing(d);
  for (std::size_t i = 0; i < d; ++i) {
    counts[i] = m + (box[i].periodic ? 0 : 1);
    spacing[i] = (box[i].hi - box[i].lo) / m;
  }

  std::vector<detail::Candidate> top;
  std::vector<int> idx(d, 0);
  std::vector<double> x(d);
  for (;;) {
    if (evals >= cfg.max_evals) {
      budget_hit = true;
      break;
    }
    for (std::size_t i = 0; i < d; ++i) x[i] = box[i].lo + spacing[i] * idx[i];
    detail::keep_top(top, static_cast<std::size_t>(cfg.top_cells), eval(x), x);
    std::size_t i = 0;
    while (i < d && ++idx[i] == counts[i]) idx[i++] = 0;
    if (i == d) break;
  }

  // --- phase 2: compass refinement ---------------------------------------
  std::vector<detail::Candidate> starts = top;
  std::mt19937_64 rng(cfg.seed);
  for (int k = 0; k < cfg.extra_starts; ++k) {
    std::vector<double> p(d);
    for (std::size_t i = 0; i < d; ++i)
      p[i] = box[i].lo + (box[i].hi - box[i].lo) * detail::unit_uniform(rng);
    if (evals >= cfg.max_evals) {
      budget_hit = true;
      break;
    }
    starts.push_back({eval(p), p});
  }

  long long rounds = 0;
  detail::Candidate best = top.front();
  for (const auto& start : starts) {
    std::vector<double> cur = start.point;
    double fcur = start.value;
    std::vector<double> step = spacing;
    while (*std::max_element(step.begin(), step.end()) >= cfg.step_tol) {
      if (evals >= cfg.max_evals) {
        budget_hit = true;
        break;
      }
      ++rounds;
      bool improved = false;
      for (std::size_t i = 0; i < d && !improved; ++i) {
        for (double sign : {+1.0, -1.0}) {
          std::vector<double> probe = cur;
          probe[i] += sign * step[i];
          if (box[i].periodic) {
            const double span = box[i].hi - box[i].lo;
            double r = std::fmod(probe[i] - box[i].lo, span);
            if (r < 0.0) r += span;
            probe[i] = box[i].lo + r;
          } else {
            probe[i] = std::clamp(probe[i], box[i].lo, box[i].hi);
            if (probe[i] == cur[i]) continue;
          }
          if (evals >= cfg.max_evals) {
            budget_hit = true;
            break;
          }
          const double fp = eval(probe);
          if (fp > fcur) {
            cur = std::move(probe);
            fcur = fp;
            improved = true;
            break;
          }
        }
      }
      if (budget_hit) break;
      if (!improved)
        for (double& s : step) s *= 0.5;
    }
    if (fcur > best.value ||
        (fcur == best.value && detail::lex_less(cur, best.point)))
      best = {fcur, cur};
    if (budget_hit) break;
  }

  Estimate est;
  est.value = best.value;
  est.argmax = best.point;
  est.evaluations = evals;
  est.status = budget_hit ? OptStatus::budget_exhausted : OptStatus::converged;
  est.refinement_steps = rounds;
  return est;
}

}  // namespace geolab
