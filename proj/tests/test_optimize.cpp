#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "monosum/density.hpp"
#include "monosum/optimize.hpp"
#include "oracles.hpp"

using namespace monosum;

TEST_CASE("critical_root reproduces the closed form for r=2") {
  RootResult res = critical_root(2);
  // Quadratic b^2 - 4b + 1: roots 2 +- sqrt 3.
  CHECK(fabsl(res.b0 - (2.0L + sqrtl(3.0L))) < 1e-15L);
  CHECK(fabsl(res.low_root - (2.0L - sqrtl(3.0L))) < 1e-12L);
  CHECK(res.residual <= 1e-15L);
  CHECK_THROWS_AS(critical_root(1), std::invalid_argument);
}

TEST_CASE("critical_root agrees with an independent bisection oracle") {
  for (int r = 2; r <= 10; ++r) {
    long double oracle = oracles::bisect_critical_root(r, 1.0L, 2.0L * r, 1e-9L);
    RootResult res = critical_root(r);
    CHECK(fabsl(res.b0 - oracle) < 1e-9L);
    CHECK(res.residual <= 1e-15L);
  }
}

TEST_CASE("Descartes sign pattern certification") {
  for (int r = 2; r <= 10; ++r) {
    CHECK(critical_poly(r, 0.0L) == r - 1.0L);      // p(0) > 0
    CHECK(critical_poly(r, 1.0L) == -static_cast<long double>(r));  // p(1) = -r
    CHECK(critical_poly(r, 2.0L * r) > 0.0L);
    RootResult res = critical_root(r);
    CHECK(res.low_root > 0.0L);
    CHECK(res.low_root < 1.0L);
    CHECK(res.b0 > 1.0L);
  }
}

TEST_CASE("minimize_delta agrees with the root path") {
  for (int r = 2; r <= 10; ++r) {
    MinResult m = minimize_delta(r, 1e-12L);
    RootResult root = critical_root(r);
    CHECK(fabsl(m.b_star - root.b0) < 1e-11L);
    // Derivative sign flip around the minimum.
    long double h = 1e-4L;
    CHECK(delta_formula(r, m.b_star - h) > m.delta_star);
    CHECK(delta_formula(r, m.b_star + h) > m.delta_star);
  }
  MinResult m2 = minimize_delta(2, 1e-12L);
  CHECK(fabsl(m2.b_star - 3.7320508075688772935L) < 1e-11L);
  CHECK(fabsl(m2.delta_star - 0.93301270189221932L) < 1e-12L);
  // Optimality witness: the Erdos choice b=4 is strictly worse.
  CHECK(delta_formula(2, 4.0L) > m2.delta_star);
}

TEST_CASE("c_upper_table identities") {
  auto rows = c_upper_table(10);
  REQUIRE(rows.size() == 9);
  CHECK(rows[0].r == 2);
  CHECK(fabsl(rows[0].c_upper - 0.9330127019L) < 1e-9L);
  CHECK(fabsl(rows[1].c_upper - 0.8526L) < 1e-3L);
  for (const auto& row : rows) {
    CHECK(row.identity_gap <= 1e-12L);
    CHECK(row.c_upper > 0.5L);
    CHECK(row.c_upper < 1.0L);
    // (1 - b0^-r)^-1 = 1 + 1/(2 r b0 - r) at the root.
    long double lhs = 1.0L / (1.0L - powl(row.b0, static_cast<long double>(-row.r)));
    long double rhs = 1.0L + 1.0L / (2.0L * row.r * row.b0 - row.r);
    CHECK(fabsl(lhs - rhs) < 1e-12L);
  }
  // Observed monotonicity of the table.
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].c_upper < rows[i - 1].c_upper);
}

TEST_CASE("f2_inf") {
  F2Result f = f2_inf();
  CHECK(fabsl(f.z_star - 0.26794919243112270648L) < 1e-12L);
  CHECK(fabsl(f.f2 - 0.93301270189221932338L) < 1e-12L);
  // Boundary behaviour of the objective.
  auto fn = [](long double z) { return (1.0L - z / 2.0L) / (1.0L - z * z); };
  CHECK(fn(0.0L) == 1.0L);
  CHECK(fn(0.999L) > 100.0L);
  // f2 equals the r=2 upper bound.
  auto rows = c_upper_table(2);
  CHECK(fabsl(f.f2 - rows[0].c_upper) < 1e-12L);
}
