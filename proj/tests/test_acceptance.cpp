#include <catch2/catch_amalgamated.hpp>
#include <orbispec/acceptance.hpp>

#include <iostream>

using namespace orbispec;

namespace {

CriterionResult report(CriterionResult r) {
  std::cout << format_result_line(r) << std::endl;
  return r;
}

}  // namespace

TEST_CASE("criterion 1: krawtchouk tables") {
  CriterionResult r = report(check_krawtchouk_tables());
  CHECK(r.seconds < 1.0);
  REQUIRE(r.pass);
}

TEST_CASE("criterion 2: mirror-pair isospectrality") {
  CriterionResult r = report(check_pair_isospectrality(default_catalog()));
  CHECK(r.seconds < 120.0);
  REQUIRE(r.pass);
}

TEST_CASE("criterion 3: reflection strata census") {
  CriterionResult r = report(check_strata_census(default_catalog()));
  CHECK(r.seconds < 10.0);
  REQUIRE(r.pass);
}

TEST_CASE("criterion 4: planar variant family") {
  CriterionResult r = report(check_planar_variants(default_catalog()));
  CHECK(r.seconds < 60.0);
  REQUIRE(r.pass);
}

TEST_CASE("criterion 5: heat invariants") {
  CriterionResult r = report(check_heat_invariants(default_catalog()));
  CHECK(r.seconds < 10.0);
  REQUIRE(r.pass);
}

TEST_CASE("criterion 6: spectrum engine properties") {
  CriterionResult r = report(check_spectrum_properties(default_catalog()));
  REQUIRE(r.pass);
}

TEST_CASE("criterion 7: heat trace numerics") {
  CriterionResult r = report(check_heat_trace_numerics(default_catalog()));
  CHECK(r.seconds < 30.0);
  // The truncated trace differs from the two-term prediction by 4e^{-1/(4t)}
  // plus higher order on the unit square torus; at t = 0.05 that is 2.7e-2,
  // above the demanded 1e-3.  The bound is kept strict rather than widened,
  // so this records the measured values and fails.
  REQUIRE(r.pass);
}

TEST_CASE("a corrupted catalog fails the suite with the criterion named") {
  CatalogFn corrupted = [](const std::string& name) {
    return catalog(name == "M(4,2)" ? "O(4,1)" : name);
  };
  CriterionResult r = check_pair_isospectrality(corrupted);
  REQUIRE_FALSE(r.pass);
  CHECK(r.index == 2);
  CHECK(r.name == "mirror-pair isospectrality");
  CHECK_FALSE(r.detail.empty());
}
