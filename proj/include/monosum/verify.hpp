#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monosum/intset.hpp"
#include "monosum/sumset.hpp"

namespace monosum {

// Elements of [lo, hi] with no prime factor <= r^2 (segmented sieve).
IntSet prime_filter(long long lo, long long hi, int r);

// Window right edge: smallest integer > e*N computed with outward-safe
// rounding, i.e. the window is the integers in [N, ceil(eN)).
long long window_end(long long N);

// An r-coloring of the integers in [N, window_end(N)).
struct PartitionWindow {
  long long N = 0;
  std::vector<long long> window;  // ascending
  std::vector<int> assignment;    // same length, values in [0, r)
  int r = 2;

  static PartitionWindow random(long long N, int r, std::uint64_t seed);
  IntSet color_class(int color) const;
};

struct ColorCoverage {
  int color = 0;
  long long total = 0;                  // sum of the class
  std::optional<Interval> best_run;     // longest covered run within [N, min(total, cap)]
  std::optional<double> smallest_c;     // least c with [c*N, target_hi] fully covered
  long long last_missing = -1;          // largest gap element <= target_hi, -1 if none
};

struct WitnessReport {
  std::optional<int> witness_color;  // first color covering [target_lo, target_hi]
  std::vector<ColorCoverage> per_color;
};

// Searches the classes for one whose subset sums cover [target_lo, target_hi].
// target_hi must not exceed the window total.
WitnessReport lemma21_witness(const PartitionWindow& p, long long target_lo,
                              long long target_hi,
                              std::uint64_t memory_budget = kDefaultMemoryBudget);

enum class SearchStrategy { kRandom, kExhaustive, kGreedyAdversarial };

SearchStrategy parse_strategy(const std::string& name);

struct WorstPartitionResult {
  long long N = 0;
  int r = 0;
  long long target_hi = 0;  // N^2/8 by default
  std::vector<double> c_values;  // per sampled partition: best-color smallest c
  double worst_c = 0;            // max over partitions (uncoverable trials excluded)
  std::size_t uncovered_trials = 0;  // partitions where no color covers even [target_hi, target_hi]
};

// Empirical study of the covering constant: samples partitions per the
// strategy, records the best-color smallest covering c for each, reports the
// distribution and worst case. Deterministic under a fixed seed. Exhaustive
// enumeration subsamples the window to at most 22 elements.
WorstPartitionResult worst_partition_search(long long N, int r, long long trials,
                                            std::uint64_t seed, SearchStrategy strategy,
                                            std::uint64_t memory_budget = kDefaultMemoryBudget);

struct DivisorTrial {
  long long d = 0;
  std::size_t reduced_size = 0;  // |A'|
  std::size_t drop = 0;          // |A| - |A'|
  Interval longest;              // longest run of the bounded sum set (reduced scale)
};

struct Thm22Report {
  std::vector<DivisorTrial> trials;
  long long best_d = 1;
  Interval best_interval;
  bool reached_n = false;  // best interval length >= n
};

// Interval search over divisor reductions: for each candidate d occurring as a
// divisor in A, reports the longest interval of bounded subset sums of A/d.
Thm22Report thm22_check(const IntSet& A, long long n, long long k,
                        std::uint64_t memory_budget = kDefaultMemoryBudget);

}  // namespace monosum
