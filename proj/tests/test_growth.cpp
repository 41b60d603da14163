// growth-lab: the alpha root with its certified bracket, and growth
// signatures of wreath products over the Grigorchuk orbit.
#include <catch2/catch_amalgamated.hpp>

#include "mg/growthlab.hpp"

using namespace mg;

TEST_CASE("alpha root: certified bracketing bisection") {
  REQUIRE(alpha_residual(0.5) < 0);
  REQUIRE(alpha_residual(1.0) > 0);

  AlphaRoot r = solve_alpha(1e-6);
  REQUIRE(std::abs(r.alpha - 0.7674) <= 1e-4);
  REQUIRE(r.hi - r.lo <= 1e-6);
  REQUIRE(alpha_residual(r.lo) < 0);
  REQUIRE(alpha_residual(r.hi) > 0);

  // refinement nests the bracket
  AlphaRoot coarse = solve_alpha(1e-3), fine = solve_alpha(1e-9);
  REQUIRE(coarse.lo <= fine.lo);
  REQUIRE(fine.hi <= coarse.hi);
  REQUIRE(std::abs(coarse.alpha - fine.alpha) <= 1e-3);

  REQUIRE_THROWS_AS(solve_alpha(0.0), std::invalid_argument);
}

TEST_CASE("growth signature: free lamp against its abelianization") {
  auto rows = nueg_signature("F2", {1, 2});
  REQUIRE(rows.size() == 2);
  for (auto& r : rows) {
    REQUIRE(r.agree);
    REQUIRE(r.nu_witness == r.nu_std);  // count equality from ball equality
    REQUIRE(r.rate_witness == r.rate_std);
  }
  REQUIRE(rows[1].nu_witness > rows[0].nu_witness);
}

TEST_CASE("growth signature: torsion and already-abelian lamps") {
  auto rows = nueg_signature("Z/2", {2});
  REQUIRE(rows[0].agree);
  REQUIRE(rows[0].nu_witness == rows[0].nu_std);

  auto same = nueg_signature("Z/2 x Z/4", {2});
  REQUIRE(same[0].agree);
  REQUIRE(same[0].nu_witness == same[0].nu_std);

  REQUIRE_THROWS_AS(nueg_signature("F2", {0}), std::invalid_argument);
}

TEST_CASE("growth signature CSV") {
  auto rows = nueg_signature("Z/2", {1});
  std::string csv = nueg_csv(rows);
  REQUIRE(csv.rfind("R,nu_witness,nu_std,rate_witness,rate_std,agree\n", 0) == 0);
  REQUIRE(csv.find("1," + istr(rows[0].nu_witness) + ",") != std::string::npos);
  REQUIRE(csv.find(",true\n") != std::string::npos);
}
