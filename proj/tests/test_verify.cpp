#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "monosum/verify.hpp"
#include "oracles.hpp"

using namespace monosum;

TEST_CASE("prime_filter examples") {
  // Primes <= 4 are {2, 3}.
  CHECK(prime_filter(10, 27, 2) == IntSet{11, 13, 17, 19, 23, 25});
  // Every x >= 2 has a prime factor <= x, so r^2 >= hi empties the range.
  CHECK(prime_filter(10, 27, 6) == IntSet{});
  // r=1: no primes <= 1, full range survives.
  IntSet all = prime_filter(5, 9, 1);
  CHECK(all == IntSet{5, 6, 7, 8, 9});
  CHECK_THROWS_AS(prime_filter(1, 5, 2), std::invalid_argument);
}

TEST_CASE("prime_filter leaves no small prime factors") {
  for (int r : {2, 3, 5}) {
    IntSet X = prime_filter(100, 400, r);
    for (long long x : X.elements())
      for (long long p = 2; p <= static_cast<long long>(r) * r; ++p)
        if (x % p == 0) {
          bool p_is_prime = true;
          for (long long q = 2; q * q <= p; ++q)
            if (p % q == 0) p_is_prime = false;
          CHECK_FALSE(p_is_prime);
        }
  }
}

TEST_CASE("window boundaries") {
  CHECK(window_end(1) == 3);    // e ~ 2.718
  CHECK(window_end(10) == 28);  // 10e ~ 27.18
  CHECK(window_end(100) == 272);
}

TEST_CASE("partition window determinism") {
  PartitionWindow a = PartitionWindow::random(50, 2, 42);
  PartitionWindow b = PartitionWindow::random(50, 2, 42);
  CHECK(a.assignment == b.assignment);
  PartitionWindow c = PartitionWindow::random(50, 2, 43);
  CHECK(a.assignment != c.assignment);
  CHECK(a.window.front() == 50);
  CHECK(a.window.back() == window_end(50) - 1);
  // Every element has exactly one color.
  CHECK(a.color_class(0).size() + a.color_class(1).size() == a.window.size());
}

TEST_CASE("lemma21_witness finds a covering color") {
  // N=30, alternating parity assignment, target [120, 400].
  PartitionWindow p;
  p.N = 30;
  p.r = 2;
  for (long long x = 30; x < window_end(30); ++x) {
    p.window.push_back(x);
    p.assignment.push_back(static_cast<int>(x % 2));
  }
  WitnessReport rep = lemma21_witness(p, 120, 400);
  REQUIRE(rep.witness_color.has_value());
  // Re-validate the witness with an independent full-range computation.
  IntSet cls = p.color_class(*rep.witness_color);
  SumSet S = subset_sums(cls, 400);
  for (long long s = 120; s <= 400; ++s) CHECK(S.test(s));

  // Single-color partition covers from some small c on.
  PartitionWindow solo;
  solo.N = 30;
  solo.r = 2;
  for (long long x = 30; x < window_end(30); ++x) {
    solo.window.push_back(x);
    solo.assignment.push_back(0);
  }
  WitnessReport rep2 = lemma21_witness(solo, 120, 400);
  CHECK(rep2.witness_color == 0);
  CHECK(rep2.per_color[0].smallest_c.has_value());
  CHECK(rep2.per_color[1].total == 0);
  CHECK_FALSE(rep2.per_color[1].smallest_c.has_value());

  CHECK_THROWS_AS(lemma21_witness(solo, 0, 100000000), std::invalid_argument);
}

TEST_CASE("witness consistency against enumeration on a tiny window") {
  // Window small enough for the 2^n oracle.
  PartitionWindow p;
  p.N = 8;
  p.r = 2;
  for (long long x = 8; x < window_end(8); ++x) {  // [8, 22): 14 elements
    p.window.push_back(x);
    p.assignment.push_back(static_cast<int>((x / 2) % 2));
  }
  long long hi = 60;
  WitnessReport rep = lemma21_witness(p, 30, hi);
  for (const auto& cov : rep.per_color) {
    IntSet cls = p.color_class(cov.color);
    auto oracle = oracles::enumerate_subset_sums(cls, hi);
    long long last_missing = -1;
    for (long long s = 1; s <= hi; ++s)
      if (!oracle.count(s)) last_missing = s;
    CHECK(cov.last_missing == last_missing);
  }
}

TEST_CASE("worst_partition_search determinism and strategies") {
  WorstPartitionResult a = worst_partition_search(40, 2, 20, 7, SearchStrategy::kRandom);
  WorstPartitionResult b = worst_partition_search(40, 2, 20, 7, SearchStrategy::kRandom);
  CHECK(a.c_values == b.c_values);
  CHECK(a.worst_c == b.worst_c);
  CHECK(a.c_values.size() + a.uncovered_trials == 20);

  WorstPartitionResult empty = worst_partition_search(40, 2, 0, 7, SearchStrategy::kRandom);
  CHECK(empty.c_values.empty());

  // Exhaustive at tiny N subsamples to <= 22 elements and enumerates.
  WorstPartitionResult ex = worst_partition_search(20, 2, 0, 11, SearchStrategy::kExhaustive);
  CHECK(ex.c_values.size() + ex.uncovered_trials == (1ull << 22));
  CHECK(ex.worst_c > 0);

  WorstPartitionResult greedy =
      worst_partition_search(40, 2, 30, 7, SearchStrategy::kGreedyAdversarial);
  WorstPartitionResult greedy2 =
      worst_partition_search(40, 2, 30, 7, SearchStrategy::kGreedyAdversarial);
  CHECK(greedy.c_values == greedy2.c_values);
  CHECK(greedy.c_values.size() + greedy.uncovered_trials == 30);
  // Hill climbing never ends below its own starting point.
  if (!greedy.c_values.empty()) CHECK(greedy.worst_c >= greedy.c_values.front());
}

TEST_CASE("parse_strategy") {
  CHECK(parse_strategy("random") == SearchStrategy::kRandom);
  CHECK(parse_strategy("exhaustive") == SearchStrategy::kExhaustive);
  CHECK(parse_strategy("greedy-adversarial") == SearchStrategy::kGreedyAdversarial);
  CHECK_THROWS_AS(parse_strategy("annealing"), std::invalid_argument);
}

TEST_CASE("thm22_check on a full interval") {
  std::vector<long long> xs;
  for (long long v = 50; v <= 100; ++v) xs.push_back(v);
  Thm22Report rep = thm22_check(IntSet(xs), 100, 20);
  CHECK(rep.reached_n);
  bool has_d1 = false;
  for (const auto& t : rep.trials)
    if (t.d == 1) {
      has_d1 = true;
      CHECK(t.longest.length() >= 100);
    }
  CHECK(has_d1);
}

TEST_CASE("thm22_check prefers the divisor reduction for even sets") {
  std::vector<long long> evens;
  for (long long v = 2; v <= 100; v += 2) evens.push_back(v);
  Thm22Report rep = thm22_check(IntSet(evens), 100, 10);
  long long len_d1 = 0, len_d2 = 0;
  for (const auto& t : rep.trials) {
    if (t.d == 1) len_d1 = t.longest.length();
    if (t.d == 2) len_d2 = t.longest.length();
  }
  // All d=1 sums are even: no two consecutive integers.
  CHECK(len_d1 == 1);
  CHECK(len_d2 > len_d1);
  CHECK(rep.best_d == 2);

  // Sparse set with k=1: only singleton runs unless consecutive elements.
  Thm22Report sparse = thm22_check(IntSet{3, 10, 40}, 100, 1);
  for (const auto& t : sparse.trials)
    if (t.d == 1) CHECK(t.longest.length() == 1);
}
