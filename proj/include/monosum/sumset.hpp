#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "monosum/intset.hpp"

namespace monosum {

// Default bit-table budget, overridable per call. ~2 GiB.
inline constexpr std::uint64_t kDefaultMemoryBudget = 2ull << 30;

struct MemoryBudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Reachability table of subset sums on [0, cap] (cap inclusive).
// truncated() reports whether sums beyond cap exist but are untracked.
class SumSet {
 public:
  SumSet() : cap_(-1) {}
  explicit SumSet(long long cap);

  long long cap() const { return cap_; }
  bool truncated() const { return truncated_; }
  void set_truncated(bool t) { truncated_ = t; }

  bool test(long long s) const {
    if (s < 0 || s > cap_) return false;
    return (words_[static_cast<std::size_t>(s >> 6)] >> (s & 63)) & 1;
  }
  void set(long long s) { words_[static_cast<std::size_t>(s >> 6)] |= 1ull << (s & 63); }
  std::uint64_t word(std::size_t w) const { return words_[w]; }

  // In-place `bits |= bits << a` restricted to [0, cap].
  void shift_or(long long a);
  void or_shifted_from(const SumSet& src, long long a);
  void or_with(const SumSet& other);

  std::vector<long long> members() const;
  long long count() const;

  bool operator==(const SumSet& o) const {
    return cap_ == o.cap_ && truncated_ == o.truncated_ && words_ == o.words_;
  }

 private:
  long long cap_;
  bool truncated_ = false;
  std::vector<std::uint64_t> words_;
};

// All sums of distinct elements of A that do not exceed M. 0 is always present.
SumSet subset_sums(const IntSet& A, long long M,
                   std::uint64_t memory_budget = kDefaultMemoryBudget);

// Sums of at most k distinct elements of A, up to M. k >= |A| matches subset_sums.
SumSet bounded_subset_sums(const IntSet& A, long long k, long long M,
                           std::uint64_t memory_budget = kDefaultMemoryBudget);

// Maximal runs of consecutive members of S within [lo, hi].
// Throws std::out_of_range if [lo, hi] is not within [0, cap].
IntervalList maximal_intervals(const SumSet& S, long long lo, long long hi);

// True iff every integer in [lo, hi] is a member. Same range checking.
bool contains_interval(const SumSet& S, long long lo, long long hi);

// Largest non-member in [lo, hi], or -1 when the whole range is covered.
long long find_last_missing(const SumSet& S, long long lo, long long hi);

// Longest maximal run within [lo, hi]; nullopt when S has no member there.
std::optional<Interval> longest_interval(const SumSet& S, long long lo, long long hi);

struct GrahamResult {
  bool ok = false;
  long long extended_y = 0;   // y' with coverage [x, x+y') when ok
  std::size_t violation_index = 0;  // 1-based first i with a_i > y + sum_{j<i} a_j
};

// Interval-extension step: given Sigma(A) covering [x, x+y) and fresh elements
// a_1..a_s, coverage grows to [x, x+y+sum a_i) provided each a_i <= y + sum_{j<i} a_j.
// The order is taken as given; no reordering search.
GrahamResult graham_extend(long long x, long long y, const std::vector<long long>& additions);

// {x/d : x in A, d | x}.
IntSet divisor_reduce(const IntSet& A, long long d);

}  // namespace monosum
