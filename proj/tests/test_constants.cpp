#include <doctest.h>

#include <cmath>

#include "geolab/constants.hpp"
#include "test_util.hpp"

using namespace geolab;

namespace {
constexpr double pi = 3.14159265358979323846;
const SpaceSpec euc = make_euclidean(2);
const SpaceSpec l1 = make_lp(2, 1.0);

// Inner-product oracle for czi: isosceles pairs are the orthogonal pairs, so
// the ratio depends only on the magnitude split psi of the two legs.
double hilbert_czi_oracle(double t, int grid) {
  double best = 0.0;
  for (int k = 0; k < grid; ++k) {
    const double psi = 0.5 * pi * k / (grid - 1);
    const double c = std::cos(psi), s = std::sin(psi);
    const double f =
        std::sqrt((t * t * c * c + (1 - t) * (1 - t) * s * s) *
                  ((1 - t) * (1 - t) * c * c + t * t * s * s));
    best = std::max(best, f);
  }
  return best;
}
}  // namespace

TEST_CASE("z profile values") {
  CHECK(z_profile(l1, 0.0).value == 0.5);  // exact by contract
  CHECK(z_profile(euc, 0.6).value == doctest::Approx(0.68).epsilon(1e-6));
  CHECK(z_profile(l1, 1.0).value == doctest::Approx(2.0).epsilon(1e-6));
  CHECK_THROWS_AS(z_profile(l1, 1.5), numeric_error);
  // per-t envelope
  for (double t : {0.2, 0.7}) {
    const double z = z_profile(euc, t).value;
    CHECK(z >= (1 - t * t) / 2 - 1e-6);
    CHECK(z <= (1 + t) * (1 + t) / 2 + 1e-6);
  }
}

TEST_CASE("czi values and the exhaustive oracles") {
  CHECK(czi(l1, 0.5).value == doctest::Approx(0.25).epsilon(1e-9));
  CHECK(czi(l1, 0.25).value == doctest::Approx(0.5625).epsilon(1e-6));
  for (double t : {0.0, 0.3}) {
    const double oracle = hilbert_czi_oracle(t, 1'000'000);
    const double formula = (t * t + (1 - t) * (1 - t)) / 2.0;
    REQUIRE(std::abs(oracle - formula) <= 1e-9);
    CHECK(czi(euc, t).value == doctest::Approx(formula).epsilon(1e-4));
  }
  CHECK(czi(euc, 0.25, CziMethod::identity).value ==
        doctest::Approx(czi(euc, 0.25, CziMethod::direct).value).epsilon(1e-5));
  CHECK_THROWS_AS(czi(l1, 0.75), numeric_error);
}

TEST_CASE("czi sampling oracle stays below the direct estimate") {
  CHECK(!czi_raw_sample(l1, 0.0, 0, 7).has_value());
  const double l1_sample = *czi_raw_sample(l1, 0.0, 10'000, 7);
  CHECK(l1_sample > 0.9);
  CHECK(l1_sample <= 1.0 + 1e-9);
  CHECK(*czi_raw_sample(euc, 0.5, 10'000, 7) == doctest::Approx(0.25).epsilon(1e-6));
  for (const SpaceSpec& s : {l1, euc, make_lplq(2.0, 1.0)}) {
    for (double t : {0.0, 0.2, 0.4}) {
      const double direct = czi(s, t).value;
      const double sampled = *czi_raw_sample(s, t, 2000, 11);
      REQUIRE(sampled <= direct + 1e-6);
    }
  }
}

TEST_CASE("zbaganu constant: direct witnesses and profile cross-check") {
  CHECK(zbaganu(euc, ZbaganuMethod::direct).value == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(zbaganu(l1, ZbaganuMethod::direct).value == doctest::Approx(2.0).epsilon(1e-4));
  CHECK(zbaganu(l1, ZbaganuMethod::profile_corrected).value ==
        doctest::Approx(2.0).epsilon(1e-4));
  // the uncorrected profile reproduces the claimed value 1, half the direct
  CHECK(zbaganu(l1, ZbaganuMethod::profile_paper).value ==
        doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("james constant in both forms") {
  CHECK(james(euc, JamesMethod::minform).value ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-4));
  CHECK(james(euc, JamesMethod::isoform).value ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-4));
  CHECK(james(l1, JamesMethod::minform).value == doctest::Approx(2.0).epsilon(1e-4));
  CHECK(james(make_gridsup(2), JamesMethod::minform).value ==
        doctest::Approx(2.0).epsilon(1e-4));
  for (const SpaceSpec& s : testutil::planar_catalog())
    REQUIRE(std::abs(james(s, JamesMethod::minform).value -
                     james(s, JamesMethod::isoform).value) <= 1e-5);
  CHECK_THROWS_AS(james(make_gridsup(4), JamesMethod::isoform), dimension_error);
}

TEST_CASE("von Neumann-Jordan variants") {
  CHECK(nj_constant(euc, NjVariant::classic).value == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(nj_constant(l1, NjVariant::classic).value == doctest::Approx(2.0).epsilon(1e-4));
  CHECK(nj_constant(euc, NjVariant::iso).value == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(nj_constant(euc, NjVariant::modified).value == doctest::Approx(1.0).epsilon(1e-5));
  for (const SpaceSpec& s : testutil::planar_catalog()) {
    const double v = nj_constant(s, NjVariant::classic).value;
    REQUIRE(v >= 1.0 - 1e-6);
    REQUIRE(v <= 2.0 + 1e-6);
  }
}

TEST_CASE("h_tilde values") {
  CHECK(h_tilde(euc).value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-5));
  CHECK(h_tilde(l1).value == doctest::Approx(2.0).epsilon(1e-5));
  for (const SpaceSpec& s : testutil::planar_catalog()) {
    const double v = h_tilde(s).value;
    REQUIRE(v >= 1.0 - 1e-9);
    REQUIRE(v <= 2.0 + 1e-9);
  }
}

TEST_CASE("modulus of convexity") {
  CHECK(modulus_convexity(euc, 2.0).value == doctest::Approx(1.0).epsilon(1e-6));
  const double expected = 1.0 - std::sqrt(3.0) / 2.0;  // 1 - sqrt(1 - eps^2/4) at eps = 1
  CHECK(modulus_convexity(euc, 1.0).value == doctest::Approx(expected).epsilon(1e-6));
  CHECK(modulus_convexity(l1, 1.0).value == doctest::Approx(0.0).epsilon(1e-8));
  CHECK(modulus_convexity(euc, 0.0).value == 0.0);
  CHECK_THROWS_AS(modulus_convexity(euc, 2.5), numeric_error);
  CHECK_THROWS_AS(modulus_convexity(make_gridsup(4), 1.0), dimension_error);
}

TEST_CASE("modulus of smoothness") {
  CHECK(modulus_smoothness(l1, 0.0).value == 0.0);
  CHECK(modulus_smoothness(euc, 1.0).value ==
        doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-6));
  CHECK(modulus_smoothness(l1, 0.5).value == doctest::Approx(0.5).epsilon(1e-6));
  for (double t : {0.25, 0.5, 1.0})
    REQUIRE(modulus_smoothness(euc, t).value <= t + 1e-9);
  CHECK_THROWS_AS(modulus_smoothness(euc, -0.1), numeric_error);
}

TEST_CASE("smoothness slopes") {
  const double ts[] = {0.01};
  const auto se = smoothness_slope(euc, ts);
  CHECK(se[0].slope_z == doctest::Approx(0.005).epsilon(1e-4));
  CHECK(std::abs(se[0].slope_z - se[0].slope_czi) <= 1e-6);
  const auto s1 = smoothness_slope(l1, ts);
  CHECK(s1[0].slope_z == doctest::Approx(1.005).epsilon(1e-4));
  for (const SpaceSpec& s : testutil::planar_catalog()) {
    const double t5[] = {0.05};
    REQUIRE(smoothness_slope(s, t5)[0].slope_z >= 0.0);
  }
  const double bad[] = {0.5};
  CHECK_THROWS_AS(smoothness_slope(euc, bad), numeric_error);
}

TEST_CASE("non-squareness diagnostic") {
  const auto d1 = nonsquare_diagnostic(l1);
  CHECK(d1.flag);
  CHECK(d1.james_value == doctest::Approx(2.0).epsilon(1e-4));
  CHECK(d1.t_witness.has_value());
  const auto de = nonsquare_diagnostic(euc);
  CHECK(!de.flag);
  CHECK(de.james_value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-4));
  const auto ds = nonsquare_diagnostic(make_gridsup(2));
  CHECK(ds.flag);
  CHECK(ds.james_value == doctest::Approx(2.0).epsilon(1e-4));
}

TEST_CASE("orthogonality gap statistic") {
  CHECK(orthogonality_gap(euc, 0, 0) == 0.0);
  CHECK(orthogonality_gap(euc, 1000, 0) <= 1e-8);
  CHECK(orthogonality_gap(l1, 1000, 0) >= 0.5);
}

TEST_CASE("closed-form floors for the lp and lp-lq families") {
  CHECK(*example_bounds(make_lp(2, 2.0), 0.0).lp_bound == doctest::Approx(0.5));
  CHECK(*example_bounds(l1, 0.0).lp_bound == doctest::Approx(0.25));
  CHECK(*example_bounds(make_lplq(2.0, 2.0), 0.0).lplq_bound == doctest::Approx(0.5));
  CHECK(!example_bounds(euc, 0.1).lp_bound.has_value());
  CHECK(!example_bounds(l1, 0.1).lplq_bound.has_value());
  CHECK(!example_bounds(make_lp(2, kInfiniteP), 0.1).lp_bound.has_value());
  // floor property against the estimator on a couple of t values
  for (const SpaceSpec& s : {make_lp(2, 1.5), make_lplq(2.0, 1.0)}) {
    for (double t : {0.0, 0.25, 0.5}) {
      const auto b = example_bounds(s, t);
      const double floor = b.lp_bound ? *b.lp_bound : *b.lplq_bound;
      REQUIRE(czi(s, t).value >= floor - 1e-6);
    }
  }
}

TEST_CASE("z profile stays inside its per-t envelope on every space") {
  for (const SpaceSpec& s : testutil::planar_catalog()) {
    for (const auto& pt : z_curve(s, 11)) {
      REQUIRE(pt.value >= (1 - pt.t * pt.t) / 2 - 1e-6);
      REQUIRE(pt.value <= (1 + pt.t) * (1 + pt.t) / 2 + 1e-6);
      REQUIRE(pt.value >= 0.5 - 1e-6);
      REQUIRE(pt.value <= 2.0 + 1e-6);
    }
  }
}

TEST_CASE("curve builders match the closed forms") {
  const auto c1 = czi_curve(l1, 11, CziMethod::direct);
  for (const auto& pt : c1) {
    REQUIRE(pt.value == doctest::Approx((1 - pt.t) * (1 - pt.t)).epsilon(1e-6));
    REQUIRE(pt.lower_bound == doctest::Approx(pt.t - pt.t * pt.t));
    REQUIRE(pt.upper_bound == doctest::Approx((1 - pt.t) * (1 - pt.t)));
  }
  const auto ze = z_curve(euc, 11);
  for (const auto& pt : ze)
    REQUIRE(pt.value == doctest::Approx((1 + pt.t * pt.t) / 2.0).epsilon(1e-6));
  // strictly increasing parameter column
  for (std::size_t k = 0; k + 1 < c1.size(); ++k) REQUIRE(c1[k].t < c1[k + 1].t);
}
