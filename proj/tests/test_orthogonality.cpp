#include <doctest.h>

#include <cmath>
#include <random>

#include "geolab/orthogonality.hpp"
#include "test_util.hpp"

using namespace geolab;

namespace {
const SpaceSpec euc = make_euclidean(2);
const SpaceSpec l1 = make_lp(2, 1.0);
}  // namespace

TEST_CASE("residual examples") {
  CHECK(iso_residual(euc, Vector{1, 0}, Vector{0, 1}) == doctest::Approx(0.0));
  CHECK(iso_residual(l1, Vector{1, 1}, Vector{1, -1}) == doctest::Approx(0.0));
  CHECK(iso_residual(l1, Vector{0.3, -0.7}, Vector{0, 0}) == doctest::Approx(0.0));

  CHECK(pyth_residual(euc, Vector{1, 0}, Vector{0, 1}) == doctest::Approx(0.0));
  CHECK(pyth_residual(l1, Vector{1, 1}, Vector{1, -1}) == doctest::Approx(4.0));
  CHECK(pyth_residual(l1, Vector{0.3, -0.7}, Vector{0, 0}) == doctest::Approx(0.0));

  CHECK_THROWS_AS(iso_residual(euc, Vector{1, 0}, Vector{1, 0, 0}), dimension_error);
}

TEST_CASE("iso_from_unit_pair examples") {
  const IsoPair degenerate = iso_from_unit_pair(l1, Vector{1, 0}, Vector{1, 0});
  CHECK(degenerate.x1 == Vector{2, 0});
  CHECK(degenerate.x2 == Vector{0, 0});

  const IsoPair e = iso_from_unit_pair(euc, Vector{1, 0}, Vector{0, 1});
  CHECK(e.x1 == Vector{1, 1});
  CHECK(e.x2 == Vector{1, -1});
  CHECK(e.residual <= 2e-9 * e.scale);

  const IsoPair p = iso_from_unit_pair(l1, Vector{1, 0}, Vector{0, 1});
  CHECK(p.x1 == Vector{1, 1});
  CHECK(p.x2 == Vector{1, -1});
  CHECK(p.residual == doctest::Approx(0.0));

  CHECK_THROWS_AS(iso_from_unit_pair(l1, Vector{1, 1}, Vector{0, 1}), numeric_error);
}

TEST_CASE("parameterization soundness: unit pairs certify on every space") {
  auto spaces = testutil::planar_catalog();
  spaces.push_back(make_gridsup(4));
  for (const SpaceSpec& s : spaces) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 10'000; ++i) {
      std::vector<double> a1(static_cast<std::size_t>(dim(s) - 1));
      std::vector<double> a2(a1.size());
      for (auto& a : a1) a = testutil::uniform(rng, 0.0, 2 * std::acos(-1.0));
      for (auto& a : a2) a = testutil::uniform(rng, 0.0, 2 * std::acos(-1.0));
      const IsoPair pr =
          iso_from_unit_pair(s, unit_vector(s, a1), unit_vector(s, a2));
      REQUIRE(pr.residual <= 2e-9 * pr.scale);
    }
  }
}

TEST_CASE("iso_complete examples and degenerate input") {
  CHECK(iso_complete(euc, Vector{1, 0}, Vector{0, 1}) == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(iso_complete(l1, Vector{1, 0}, Vector{0, 1}) == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(iso_complete(l1, Vector{1, 0}, Vector{1, 2}) == doctest::Approx(-1.0).epsilon(1e-10));
  CHECK_THROWS_AS(iso_complete(l1, Vector{0, 0}, Vector{1, 2}), numeric_error);
  CHECK_THROWS_AS(iso_complete(l1, Vector{1, 1}, Vector{2, 2}), numeric_error);
}

TEST_CASE("parameterization completeness: iso_complete pairs reconstruct") {
  for (const SpaceSpec& s : testutil::planar_catalog()) {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 1000; ++i) {
      Vector x = testutil::random_vector(rng, 2);
      Vector y = testutil::random_vector(rng, 2);
      if (std::hypot(x[0], x[1]) < 0.3) x[0] += 1.0;
      if (std::abs(x[0] * y[1] - x[1] * y[0]) < 1e-2) y[1] += 1.0;
      const double alpha = iso_complete(s, x, y);
      const Vector x2{alpha * x[0] + y[0], alpha * x[1] + y[1]};
      const IsoPair pair = make_iso_pair(s, x, x2, 1e-8);
      // halves have equal norms; normalized they rebuild the pair up to scale
      const Vector h1{(x[0] + x2[0]) / 2, (x[1] + x2[1]) / 2};
      const Vector h2{(x[0] - x2[0]) / 2, (x[1] - x2[1]) / 2};
      const double r1 = norm(s, h1);
      const double r2 = norm(s, h2);
      REQUIRE(std::abs(r1 - r2) <= 1e-8 * std::max(r1, r2));
      const Vector u1 = normalize(s, h1);
      const Vector u2 = normalize(s, h2);
      const double lambda = r1;
      for (int k = 0; k < 2; ++k) {
        REQUIRE(lambda * (u1[k] + u2[k]) ==
                doctest::Approx(x[k]).epsilon(1e-7).scale(pair.scale));
        REQUIRE(lambda * (u1[k] - u2[k]) ==
                doctest::Approx(x2[k]).epsilon(1e-7).scale(pair.scale));
      }
    }
  }
}

TEST_CASE("joint scale invariance of the residual") {
  std::mt19937_64 rng(23);
  for (const SpaceSpec& s : testutil::planar_catalog()) {
    for (int i = 0; i < 300; ++i) {
      const Vector x = testutil::random_vector(rng, 2);
      const Vector y = testutil::random_vector(rng, 2);
      const double base = iso_residual(s, x, y);
      for (double lambda : {1e-3, 1.0, 1e3}) {
        Vector lx = x, ly = y;
        for (double& c : lx) c *= lambda;
        for (double& c : ly) c *= lambda;
        REQUIRE(iso_residual(s, lx, ly) ==
                doctest::Approx(lambda * base).epsilon(1e-12).scale(lambda));
      }
    }
  }
}

TEST_CASE("unit_iso_partner examples") {
  const Vector ye = unit_iso_partner(euc, Vector{1, 0});
  CHECK(std::abs(ye[0]) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(std::abs(ye[1]) == doctest::Approx(1.0));

  const Vector y1 = unit_iso_partner(l1, Vector{1, 0});
  CHECK(std::abs(y1[0]) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(std::abs(y1[1]) == doctest::Approx(1.0));

  const SpaceSpec sup2 = make_gridsup(2);
  const Vector ys = unit_iso_partner(sup2, Vector{1, 1});
  CHECK(std::abs(ys[0]) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(std::abs(ys[1]) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(ys[0] * ys[1] < 0.0);  // the (1,-1) direction up to sign
  CHECK(iso_residual(sup2, Vector{1, 1}, ys) <= 1e-9);

  // partner residual is certified on every planar space
  for (const SpaceSpec& s : testutil::planar_catalog()) {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 100; ++i) {
      const Vector x = unit_vector(s, {testutil::uniform(rng, 0.0, 6.28)});
      const Vector y = unit_iso_partner(s, x);
      REQUIRE(iso_residual(s, x, y) <= kIsoTol * 2.0);
    }
  }
}

TEST_CASE("scaling inequalities for isosceles pairs") {
  const IsoPair pe = make_iso_pair(euc, Vector{1, 1}, Vector{1, -1});
  CHECK(lemma3_check(euc, pe, 0.0));
  const IsoPair p1 = make_iso_pair(l1, Vector{1, 1}, Vector{1, -1});
  CHECK(lemma3_check(l1, p1, 0.5));
  CHECK(lemma3_check(l1, p1, 2.0));

  auto spaces = testutil::planar_catalog();
  spaces.push_back(make_gridsup(4));
  for (const SpaceSpec& s : spaces) {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 1000; ++i) {
      std::vector<double> a1(static_cast<std::size_t>(dim(s) - 1));
      std::vector<double> a2(a1.size());
      for (auto& a : a1) a = testutil::uniform(rng, 0.0, 2 * std::acos(-1.0));
      for (auto& a : a2) a = testutil::uniform(rng, 0.0, 2 * std::acos(-1.0));
      const IsoPair pr = iso_from_unit_pair(s, unit_vector(s, a1), unit_vector(s, a2));
      for (double alpha : {-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0})
        REQUIRE(lemma3_check(s, pr, alpha));
    }
  }
}

TEST_CASE("norms of the halves never exceed the sum norm") {
  // consequence of the scaling inequalities at alpha = 0: the denominator of
  // the orthogonality ratio dominates both sides of the pair
  for (const SpaceSpec& s : testutil::planar_catalog()) {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 500; ++i) {
      const Vector u1 = unit_vector(s, {testutil::uniform(rng, 0.0, 6.28)});
      const Vector u2 = unit_vector(s, {testutil::uniform(rng, 0.0, 6.28)});
      const IsoPair pr = iso_from_unit_pair(s, u1, u2);
      const Vector sum{pr.x1[0] + pr.x2[0], pr.x1[1] + pr.x2[1]};
      const double ns = norm(s, sum);
      REQUIRE(norm(s, pr.x1) <= ns + 1e-9);
      REQUIRE(norm(s, pr.x2) <= ns + 1e-9);
    }
  }
}
