#include <doctest.h>

#include <set>

#include "geolab/verify.hpp"

using namespace geolab;

TEST_CASE("registry ids are unique and complete") {
  const auto& reg = claim_registry();
  std::set<std::string> ids;
  for (const Claim& c : reg) REQUIRE(ids.insert(c.id).second);
  for (const char* id : {"T1", "T2", "T3", "T4", "P1", "P2", "P3", "P4", "P5", "P6",
                         "L1", "L2", "L3", "EX1", "EX2", "EX4", "EX5", "EX6"})
    REQUIRE(ids.count(id) == 1);
  CHECK(ids.size() == 18);
}

TEST_CASE("default catalog parses to nine spaces") {
  const auto cat = default_catalog();
  CHECK(cat.size() == 9);
  int hilbert = 0;
  for (const auto& s : cat) hilbert += is_hilbert(s);
  CHECK(hilbert == 1);
}

TEST_CASE("EX1 passes on the l1 plane") {
  const auto reports = run_claims({parse_space_spec("lp:dim=2,p=1")}, {"EX1"});
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].claim_id == "EX1");
  CHECK(reports[0].verdict == Verdict::pass);
  CHECK(reports[0].measured[0].second <= 1e-6);
}

TEST_CASE("P1 documents the mismatch on the inner-product plane") {
  const auto reports = run_claims({parse_space_spec("euclidean:dim=2")}, {"P1"});
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].verdict == Verdict::mismatch_documented);
  double dev_claimed = -1.0, dev_measured_form = -1.0;
  for (const auto& [k, v] : reports[0].measured) {
    if (k == "max_dev_vs_claimed") dev_claimed = v;
    if (k == "max_dev_vs_measured_form") dev_measured_form = v;
  }
  CHECK(dev_claimed > 0.4);           // claimed curve is off by ~1/2 at t = 0
  CHECK(dev_measured_form <= 1e-4);   // measured curve follows (t^2+(1-t)^2)/2
}

TEST_CASE("claim applicability filters the space list") {
  const auto spaces = std::vector<SpaceSpec>{parse_space_spec("euclidean:dim=2"),
                                             parse_space_spec("lp:dim=2,p=1")};
  const auto reports = run_claims(spaces, {"EX1", "P1", "L1"});
  // EX1 only on l1, P1 only on euclidean, L1 on both
  int ex1 = 0, p1 = 0, l1c = 0;
  for (const auto& r : reports) {
    ex1 += r.claim_id == "EX1";
    p1 += r.claim_id == "P1";
    l1c += r.claim_id == "L1";
  }
  CHECK(ex1 == 1);
  CHECK(p1 == 1);
  CHECK(l1c == 2);
  // sorted by (claim_id, space)
  for (std::size_t i = 0; i + 1 < reports.size(); ++i)
    REQUIRE((reports[i].claim_id < reports[i + 1].claim_id ||
             (reports[i].claim_id == reports[i + 1].claim_id &&
              reports[i].space < reports[i + 1].space)));
}

TEST_CASE("unknown claim ids are rejected") {
  CHECK_THROWS_AS(run_claims(default_catalog(), {"BOGUS"}), parse_error);
  CHECK_THROWS_AS(run_claims({}, {}), numeric_error);
}

TEST_CASE("reduced asserted set passes and serializes deterministically") {
  const std::vector<SpaceSpec> spaces{parse_space_spec("euclidean:dim=2"),
                                      parse_space_spec("lp:dim=2,p=1")};
  const std::vector<std::string> ids{"T1", "P2", "P3", "L1", "L2", "EX1", "P1"};
  const auto a = run_claims(spaces, ids);
  const auto b = run_claims(spaces, ids);
  CHECK(all_asserted_pass(a));
  const std::string ja = reports_to_json(a).dump(2);
  const std::string jb = reports_to_json(b).dump(2);
  CHECK(ja == jb);
  // timings are excluded unless requested
  CHECK(ja.find("runtime_ms") == std::string::npos);
  CHECK(reports_to_json(a, true).dump(2).find("runtime_ms") != std::string::npos);
}
