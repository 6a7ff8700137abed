#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "monosum/density.hpp"
#include "monosum/optimize.hpp"

using namespace monosum;

namespace {

// Separated sequence: growth H_{k+1} > 2(H_k - 1) enforced at every step.
std::vector<long long> random_separated(std::mt19937_64& gen, int blocks) {
  std::vector<long long> h{1};
  h.push_back(2 + static_cast<long long>(gen() % 4));
  while (static_cast<int>(h.size()) < blocks + 1)
    h.push_back(2 * (h.back() - 1) + 1 + static_cast<long long>(gen() % (h.back() + 1)));
  return h;
}

}  // namespace

TEST_CASE("log_density of explicit sets") {
  std::vector<long long> full;
  for (long long v = 1; v <= 1000000; ++v) full.push_back(v);
  IntSet A(std::move(full));
  long double got = log_density(A, 1000000);

  // Independent compensated harmonic sum.
  long double h = 0.0L, c = 0.0L;
  for (long long v = 1000000; v >= 1; --v) {
    long double y = 1.0L / v - c;
    long double t = h + y;
    c = (t - h) - y;
    h = t;
  }
  long double expect = h / logl(1000000.0L);
  CHECK(fabsl(got - expect) < 1e-15L);
  CHECK(got == doctest::Approx(1.0418).epsilon(1e-3));

  CHECK(log_density(IntSet{}, 1000) == 0.0L);
  CHECK_THROWS_AS(log_density(IntSet{5}, 1), std::invalid_argument);
}

TEST_CASE("reciprocal sums over e^n windows approach 1") {
  for (int n = 3; n <= 14; ++n) {
    long long lo = static_cast<long long>(ceill(expl(static_cast<long double>(n))));
    long long hi = static_cast<long long>(ceill(expl(static_cast<long double>(n + 1)))) - 1;
    long double s = reciprocal_interval_sum(lo, hi);
    CHECK(fabsl(s - 1.0L) <= 10.0L * expl(static_cast<long double>(-n)));
  }
}

TEST_CASE("interval log_density uses the digamma branch consistently") {
  // Range above the direct-summation cutoff.
  long long lo = 5, hi = 15'000'000;
  long double via_lib = reciprocal_interval_sum(lo, hi);
  long double direct = 0.0L, c = 0.0L;
  for (long long v = hi; v >= lo; --v) {
    long double y = 1.0L / v - c;
    long double t = direct + y;
    c = (t - direct) - y;
    direct = t;
  }
  CHECK(fabsl(via_lib - direct) < 1e-14L * direct);

  IntervalList iv{{1, 100}};
  CHECK(log_density(iv, 100) == doctest::Approx(static_cast<double>(
                                     reciprocal_interval_sum(1, 100) / logl(100.0L))));
}

TEST_CASE("delta_formula examples") {
  CHECK(delta_formula_exact(2, Rational(4)) == Rational(14, 15));
  CHECK(fabsl(delta_formula(2, 4.0L) - 14.0L / 15.0L) < 1e-18L);
  CHECK(fabsl(delta_formula(2, 2.0L + sqrtl(3.0L)) - kF2) < 1e-18L);
  // b^-r vanishes: limit 1 - 1/(2b).
  CHECK(fabsl(delta_formula(50, 4.0L) - (1.0L - 1.0L / 8.0L)) < 1e-12L);
  CHECK_THROWS_AS(delta_formula(2, 1.0L), std::invalid_argument);
  CHECK_THROWS_AS(delta_formula(2, 0.5L), std::invalid_argument);
}

TEST_CASE("loglog_cover_density equals delta_formula") {
  CHECK(fabsl(loglog_cover_density(2, 4.0L) - 14.0L / 15.0L) < 1e-12L);
  CHECK(fabsl(loglog_cover_density(2, 2.0L + sqrtl(3.0L)) - kF2) < 1e-12L);
  CHECK(loglog_cover_density(2, 2.0L) == 1.0L);
  CHECK(loglog_cover_density(2, 1.5L) == 1.0L);

  for (int r = 2; r <= 8; ++r) {
    for (long double b = 1.5L; b <= 10.0L; b += 0.25L) {
      if (powl(b, static_cast<long double>(r - 1)) <= 2.0L) continue;
      CHECK(fabsl(loglog_cover_density(r, b) - delta_formula(r, b)) < 1e-12L);
    }
  }
}

TEST_CASE("abar_direct from the displayed formula") {
  BlockColoring c({1, 2, 5, 17, 65});
  CHECK(abar_direct(c, 3) == Rational(15, 16));
  CHECK(abar_direct(c, 1) == Rational(1));
  CHECK_THROWS_AS(abar_direct(c, 0), std::invalid_argument);

  // Cross-check n=3 against the direct phi-set count in [1, 32].
  PhiSet s = phi_set(c, 3 % 2, 32);
  CHECK(Rational(static_cast<long>(s.intervals.count_up_to(32)), 32) == Rational(30, 32));
}

TEST_CASE("abar_recurrence examples") {
  auto states = abar_recurrence({Rational(1, 4), Rational(1, 4)}, Rational(1), Rational(0));
  REQUIRE(states.size() == 3);
  CHECK(states[1].abar == Rational(7, 8));
  CHECK(states[1].bbar == Rational(1, 4));
  CHECK(states[2].abar == Rational(15, 16));

  CHECK_THROWS_AS(abar_recurrence({Rational(3, 4)}, Rational(1), Rational(0)),
                  std::domain_error);

  auto zero = abar_recurrence(std::vector<Rational>(5, Rational(0)), Rational(1), Rational(0));
  for (std::size_t i = 1; i < zero.size(); ++i) {
    CHECK(zero[i].abar == Rational(1));
    CHECK(zero[i].bbar == Rational(0));
  }
}

TEST_CASE("constant-z recurrence contracts to the fixed point at rate z^2") {
  Rational z(1, 4);
  Rational limit = (Rational(1) - z / 2) / (Rational(1) - z * z);
  CHECK(limit == Rational(14, 15));
  auto states = abar_recurrence(std::vector<Rational>(40, z), Rational(1), Rational(0));
  for (std::size_t i = 2; i < states.size(); ++i) {
    Rational gap = abs(states[i].abar - limit);
    Rational prev = abs(states[i - 2].abar - limit);
    CHECK(gap <= z * z * prev);
  }
  CHECK(abs(states.back().abar - limit) < Rational(1, 1000000000));
}

TEST_CASE("natural_density_profile") {
  DensityProfile p = natural_density_profile(IntervalList{{1, 10}}, {20});
  CHECK(p.samples[0].value == Rational(1, 2));

  BlockColoring c({1, 2, 5, 17, 65});
  PhiSet s = phi_set(c, 1, 32);
  DensityProfile q = natural_density_profile(s.intervals, {32});
  CHECK(q.samples[0].value == Rational(15, 16));

  DensityProfile e = natural_density_profile(IntervalList{}, {7});
  CHECK(e.samples[0].value == Rational(0));
}

TEST_CASE("three density routes agree exactly on random separated colorings") {
  std::mt19937_64 gen(160809);
  for (int trial = 0; trial < 50; ++trial) {
    int blocks = 3 + static_cast<int>(gen() % 9);  // up to 12 blocks
    BlockColoring c(random_separated(gen, blocks));
    REQUIRE(c.separated());
    auto states = abar_recurrence(c);
    const auto& h = c.breakpoints();
    for (std::size_t n = 1; n < h.size(); ++n) {
      Rational direct = abar_direct(c, n);
      long long t = 2 * (h[n] - 1);
      PhiSet s = phi_set(c, static_cast<int>(n % 2), t);
      Rational counted(static_cast<long>(s.intervals.count_up_to(t)), static_cast<long>(t));
      counted.canonicalize();
      CHECK(direct == counted);
      CHECK(direct == states[n - 1].abar);
      // bbar_n bounds the opposite color's density in the same window.
      if (n >= 2) {
        PhiSet opp = phi_set(c, static_cast<int>((n - 1) % 2), t);
        Rational opp_density(static_cast<long>(opp.intervals.count_up_to(t)),
                             static_cast<long>(t));
        opp_density.canonicalize();
        CHECK(states[n - 1].bbar <= opp_density);
      }
    }
  }
}
