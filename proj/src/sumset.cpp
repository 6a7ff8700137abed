#include "monosum/sumset.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace monosum {

namespace {

std::size_t words_for(long long cap) { return static_cast<std::size_t>(cap / 64 + 1); }

void check_range(const SumSet& S, long long lo, long long hi) {
  if (lo < 0 || lo > hi || hi > S.cap())
    throw std::out_of_range("range [" + std::to_string(lo) + "," + std::to_string(hi) +
                            "] outside sum set cap " + std::to_string(S.cap()));
}

}  // namespace

SumSet::SumSet(long long cap) : cap_(cap) {
  if (cap < 0) throw std::invalid_argument("SumSet: cap must be >= 0");
  words_.assign(words_for(cap), 0);
}

void SumSet::shift_or(long long a) {
  if (a <= 0 || a > cap_) return;
  const std::size_t q = static_cast<std::size_t>(a >> 6);
  const unsigned s = static_cast<unsigned>(a & 63);
  const std::size_t n = words_.size();
  // Descending writes read only not-yet-updated lower words.
  if (s == 0) {
    for (std::size_t w = n; w-- > q;) words_[w] |= words_[w - q];
  } else {
    for (std::size_t w = n; w-- > q;) {
      std::uint64_t v = words_[w - q] << s;
      if (w - q > 0) v |= words_[w - q - 1] >> (64 - s);
      words_[w] |= v;
    }
  }
  // Bits above cap within the top word are harmless but kept clean.
  const unsigned top = static_cast<unsigned>(cap_ & 63);
  if (top != 63) words_.back() &= (2ull << top) - 1;
}

void SumSet::or_shifted_from(const SumSet& src, long long a) {
  if (a < 0 || a > cap_) return;
  const std::size_t q = static_cast<std::size_t>(a >> 6);
  const unsigned s = static_cast<unsigned>(a & 63);
  const std::size_t n = words_.size();
  for (std::size_t w = q; w < n; ++w) {
    std::uint64_t v = src.words_[w - q] << s;
    if (s != 0 && w - q > 0) v |= src.words_[w - q - 1] >> (64 - s);
    words_[w] |= v;
  }
  const unsigned top = static_cast<unsigned>(cap_ & 63);
  if (top != 63) words_.back() &= (2ull << top) - 1;
}

void SumSet::or_with(const SumSet& other) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
}

std::vector<long long> SumSet::members() const {
  std::vector<long long> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits) {
      unsigned b = static_cast<unsigned>(std::countr_zero(bits));
      out.push_back(static_cast<long long>(w * 64 + b));
      bits &= bits - 1;
    }
  }
  return out;
}

long long SumSet::count() const {
  long long n = 0;
  for (std::uint64_t w : words_) n += std::popcount(w);
  return n;
}

SumSet subset_sums(const IntSet& A, long long M, std::uint64_t memory_budget) {
  if (M < 0) throw std::invalid_argument("subset_sums: M must be >= 0");
  if (static_cast<std::uint64_t>(M / 8 + 8) > memory_budget)
    throw MemoryBudgetError("subset_sums: bit table for M=" + std::to_string(M) +
                            " exceeds memory budget");
  SumSet S(M);
  S.set(0);
  long long running = 0;
  bool over = false;
  for (long long a : A.elements()) {
    if (!over) {
      running += a;
      if (running > M) over = true;
    }
    if (a <= M) S.shift_or(a);
  }
  S.set_truncated(over);
  return S;
}

SumSet bounded_subset_sums(const IntSet& A, long long k, long long M,
                           std::uint64_t memory_budget) {
  if (k < 0) throw std::invalid_argument("bounded_subset_sums: k must be >= 0");
  if (M < 0) throw std::invalid_argument("bounded_subset_sums: M must be >= 0");
  if (k >= static_cast<long long>(A.size())) return subset_sums(A, M, memory_budget);

  const std::uint64_t layer_bytes = static_cast<std::uint64_t>(M / 8 + 8);
  if (layer_bytes * static_cast<std::uint64_t>(k + 1) > memory_budget)
    throw MemoryBudgetError("bounded_subset_sums: " + std::to_string(k + 1) +
                            " layers at M=" + std::to_string(M) + " exceed memory budget");

  // layer[l] holds sums of exactly l distinct elements; layers updated in
  // decreasing order so each element is used at most once.
  std::vector<SumSet> layer(static_cast<std::size_t>(k + 1), SumSet(M));
  layer[0].set(0);
  for (long long a : A.elements()) {
    if (a > M) continue;
    for (long long l = k; l >= 1; --l)
      layer[static_cast<std::size_t>(l)].or_shifted_from(layer[static_cast<std::size_t>(l - 1)], a);
  }
  SumSet S(M);
  for (const auto& L : layer) S.or_with(L);

  // Sums of <= k elements beyond M exist iff the k largest elements overflow.
  long long top = 0;
  const auto& e = A.elements();
  for (std::size_t i = e.size(), taken = 0; i-- > 0 && taken < static_cast<std::size_t>(k);
       ++taken)
    top += e[i];
  S.set_truncated(top > M);
  return S;
}

IntervalList maximal_intervals(const SumSet& S, long long lo, long long hi) {
  check_range(S, lo, hi);
  std::vector<Interval> runs;
  long long run_start = -1;
  for (long long s = lo; s <= hi; ++s) {
    if (S.test(s)) {
      if (run_start < 0) run_start = s;
    } else if (run_start >= 0) {
      runs.push_back({run_start, s - 1});
      run_start = -1;
    }
  }
  if (run_start >= 0) runs.push_back({run_start, hi});
  return IntervalList::from_unmerged(std::move(runs));
}

bool contains_interval(const SumSet& S, long long lo, long long hi) {
  check_range(S, lo, hi);
  return find_last_missing(S, lo, hi) < 0;
}

long long find_last_missing(const SumSet& S, long long lo, long long hi) {
  check_range(S, lo, hi);
  long long w_lo = lo >> 6, w_hi = hi >> 6;
  for (long long w = w_hi; w >= w_lo; --w) {
    std::uint64_t mask = ~0ull;
    if (w == w_hi && (hi & 63) != 63) mask &= (2ull << (hi & 63)) - 1;
    if (w == w_lo) mask &= ~((1ull << (lo & 63)) - 1);
    std::uint64_t missing = ~S.word(static_cast<std::size_t>(w)) & mask;
    if (missing) return w * 64 + (63 - std::countl_zero(missing));
  }
  return -1;
}

std::optional<Interval> longest_interval(const SumSet& S, long long lo, long long hi) {
  IntervalList runs = maximal_intervals(S, lo, hi);
  if (runs.empty()) return std::nullopt;
  const Interval* best = &runs.intervals()[0];
  for (const auto& iv : runs.intervals())
    if (iv.length() > best->length()) best = &iv;
  return *best;
}

GrahamResult graham_extend(long long x, long long y, const std::vector<long long>& additions) {
  (void)x;  // coverage stays anchored at x; only the length grows
  if (y < 1) throw std::invalid_argument("graham_extend: y must be >= 1");
  for (std::size_t i = 0; i < additions.size(); ++i) {
    if (additions[i] < 1) throw std::invalid_argument("graham_extend: additions must be positive");
    for (std::size_t j = 0; j < i; ++j)
      if (additions[j] == additions[i])
        throw std::invalid_argument("graham_extend: additions must be distinct");
  }
  long long cur = y;
  for (std::size_t i = 0; i < additions.size(); ++i) {
    if (additions[i] > cur) return {false, 0, i + 1};
    cur += additions[i];
  }
  return {true, cur, 0};
}

IntSet divisor_reduce(const IntSet& A, long long d) {
  if (d < 1) throw std::invalid_argument("divisor_reduce: d must be >= 1");
  std::vector<long long> out;
  for (long long a : A.elements())
    if (a % d == 0) out.push_back(a / d);
  return IntSet(std::move(out));
}

}  // namespace monosum
