#include "monosum/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace monosum {

namespace {

std::vector<long long> primes_up_to(long long n) {
  std::vector<long long> primes;
  if (n < 2) return primes;
  std::vector<bool> comp(static_cast<std::size_t>(n + 1), false);
  for (long long p = 2; p <= n; ++p) {
    if (comp[static_cast<std::size_t>(p)]) continue;
    primes.push_back(p);
    for (long long q = p * p; q <= n; q += p) comp[static_cast<std::size_t>(q)] = true;
  }
  return primes;
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t t) {
  return seed + t * 0x9e3779b97f4a7c15ull;
}

// Best-color smallest covering constant for one assignment; nullopt when no
// color covers even the target right endpoint.
std::optional<double> best_color_c(const PartitionWindow& p, long long target_hi,
                                   std::uint64_t memory_budget) {
  std::optional<double> best;
  for (int i = 0; i < p.r; ++i) {
    IntSet cls = p.color_class(i);
    if (cls.total() < target_hi) continue;
    SumSet S = subset_sums(cls, target_hi, memory_budget);
    long long lm = find_last_missing(S, 1, target_hi);
    if (lm >= target_hi) continue;  // right endpoint itself missing
    double c = static_cast<double>(lm + 1) / static_cast<double>(p.N);
    if (!best || c < *best) best = c;
  }
  return best;
}

}  // namespace

IntSet prime_filter(long long lo, long long hi, int r) {
  if (lo < 2 || lo > hi) throw std::invalid_argument("prime_filter: need 2 <= lo <= hi");
  if (r < 1) throw std::invalid_argument("prime_filter: r must be >= 1");
  const long long bound = static_cast<long long>(r) * r;
  std::vector<bool> bad(static_cast<std::size_t>(hi - lo + 1), false);
  for (long long p : primes_up_to(bound)) {
    long long first = ((lo + p - 1) / p) * p;
    for (long long q = first; q <= hi; q += p) bad[static_cast<std::size_t>(q - lo)] = true;
  }
  std::vector<long long> out;
  for (long long x = lo; x <= hi; ++x)
    if (!bad[static_cast<std::size_t>(x - lo)]) out.push_back(x);
  return IntSet(std::move(out));
}

long long window_end(long long N) {
  if (N < 1) throw std::invalid_argument("window_end: N must be >= 1");
  // ceil(eN); e is irrational so eN is never an integer and the 64-bit
  // mantissa decides the ceiling exactly at desk scale.
  long double p = expl(1.0L) * static_cast<long double>(N);
  return static_cast<long long>(floorl(p)) + 1;
}

PartitionWindow PartitionWindow::random(long long N, int r, std::uint64_t seed) {
  if (r < 1) throw std::invalid_argument("PartitionWindow: r must be >= 1");
  PartitionWindow p;
  p.N = N;
  p.r = r;
  std::mt19937_64 gen(seed);
  for (long long x = N; x < window_end(N); ++x) {
    p.window.push_back(x);
    p.assignment.push_back(static_cast<int>(gen() % static_cast<std::uint64_t>(r)));
  }
  return p;
}

IntSet PartitionWindow::color_class(int color) const {
  std::vector<long long> xs;
  for (std::size_t i = 0; i < window.size(); ++i)
    if (assignment[i] == color) xs.push_back(window[i]);
  return IntSet(std::move(xs));
}

WitnessReport lemma21_witness(const PartitionWindow& p, long long target_lo, long long target_hi,
                              std::uint64_t memory_budget) {
  if (target_lo < 0 || target_lo > target_hi)
    throw std::invalid_argument("lemma21_witness: bad target range");
  long long window_total = 0;
  for (long long x : p.window) window_total += x;
  if (target_hi > window_total)
    throw std::invalid_argument("lemma21_witness: target beyond the window total sum");

  WitnessReport rep;
  for (int i = 0; i < p.r; ++i) {
    IntSet cls = p.color_class(i);
    ColorCoverage cov;
    cov.color = i;
    cov.total = cls.total();
    SumSet S = subset_sums(cls, target_hi, memory_budget);
    long long span_hi = std::min(cov.total, target_hi);
    if (p.N <= span_hi) cov.best_run = longest_interval(S, p.N, span_hi);
    cov.last_missing = find_last_missing(S, 1, target_hi);
    if (cov.last_missing < target_hi)
      cov.smallest_c = static_cast<double>(cov.last_missing + 1) / static_cast<double>(p.N);
    if (!rep.witness_color && target_hi <= S.cap() &&
        find_last_missing(S, target_lo, target_hi) < 0)
      rep.witness_color = i;
    rep.per_color.push_back(cov);
  }
  return rep;
}

SearchStrategy parse_strategy(const std::string& name) {
  if (name == "random") return SearchStrategy::kRandom;
  if (name == "exhaustive") return SearchStrategy::kExhaustive;
  if (name == "greedy-adversarial") return SearchStrategy::kGreedyAdversarial;
  throw std::invalid_argument("unknown strategy: " + name);
}

WorstPartitionResult worst_partition_search(long long N, int r, long long trials,
                                            std::uint64_t seed, SearchStrategy strategy,
                                            std::uint64_t memory_budget) {
  if (N < 4) throw std::invalid_argument("worst_partition_search: N too small");
  if (r < 2) throw std::invalid_argument("worst_partition_search: r must be >= 2");
  WorstPartitionResult res;
  res.N = N;
  res.r = r;
  res.target_hi = N * N / 8;

  auto record = [&](const std::optional<double>& c) {
    if (c) {
      res.c_values.push_back(*c);
      res.worst_c = std::max(res.worst_c, *c);
    } else {
      ++res.uncovered_trials;
    }
  };

  switch (strategy) {
    case SearchStrategy::kRandom: {
      for (long long t = 0; t < trials; ++t) {
        PartitionWindow p = PartitionWindow::random(N, r, trial_seed(seed, t));
        record(best_color_c(p, res.target_hi, memory_budget));
      }
      break;
    }
    case SearchStrategy::kExhaustive: {
      PartitionWindow base = PartitionWindow::random(N, r, seed);
      if (base.window.size() > 22) {
        // Deterministic subsample so the assignment space stays enumerable.
        std::mt19937_64 gen(seed ^ 0xa5a5a5a5a5a5a5a5ull);
        std::shuffle(base.window.begin(), base.window.end(), gen);
        base.window.resize(22);
        std::sort(base.window.begin(), base.window.end());
        base.assignment.assign(22, 0);
      }
      const std::size_t m = base.window.size();
      unsigned long long combos = 1;
      for (std::size_t i = 0; i < m; ++i) {
        combos *= static_cast<unsigned long long>(r);
        if (combos > (1ull << 22))
          throw std::invalid_argument("worst_partition_search: assignment space too large");
      }
      long long window_total = std::accumulate(base.window.begin(), base.window.end(), 0ll);
      if (res.target_hi > window_total)
        throw std::invalid_argument("worst_partition_search: target beyond window total");
      for (unsigned long long code = 0; code < combos; ++code) {
        unsigned long long c = code;
        for (std::size_t i = 0; i < m; ++i) {
          base.assignment[i] = static_cast<int>(c % r);
          c /= static_cast<unsigned long long>(r);
        }
        record(best_color_c(base, res.target_hi, memory_budget));
      }
      break;
    }
    case SearchStrategy::kGreedyAdversarial: {
      // Hill climbing on single-element recolorings, maximizing the
      // best-color covering constant.
      PartitionWindow cur = PartitionWindow::random(N, r, seed);
      std::optional<double> cur_c = best_color_c(cur, res.target_hi, memory_budget);
      record(cur_c);
      std::mt19937_64 gen(seed ^ 0x5bd1e9955bd1e995ull);
      for (long long t = 1; t < trials; ++t) {
        std::size_t idx = static_cast<std::size_t>(gen() % cur.window.size());
        int old_color = cur.assignment[idx];
        int new_color = static_cast<int>(gen() % static_cast<std::uint64_t>(r));
        if (new_color == old_color) new_color = (new_color + 1) % r;
        cur.assignment[idx] = new_color;
        std::optional<double> cand = best_color_c(cur, res.target_hi, memory_budget);
        // Uncovered counts as the worst possible outcome for the prover.
        bool improved = !cand || (cur_c && *cand > *cur_c);
        record(cand);
        if (improved)
          cur_c = cand;
        else
          cur.assignment[idx] = old_color;
      }
      break;
    }
  }
  return res;
}

Thm22Report thm22_check(const IntSet& A, long long n, long long k,
                        std::uint64_t memory_budget) {
  if (k < 0) throw std::invalid_argument("thm22_check: k must be >= 0");
  for (long long a : A.elements())
    if (a > n) throw std::invalid_argument("thm22_check: A must sit inside [1, n]");

  std::set<long long> divisors{1};
  for (long long a : A.elements())
    for (long long d = 1; d * d <= a; ++d)
      if (a % d == 0) {
        divisors.insert(d);
        divisors.insert(a / d);
      }

  Thm22Report rep;
  for (long long d : divisors) {
    IntSet reduced = divisor_reduce(A, d);
    DivisorTrial trial;
    trial.d = d;
    trial.reduced_size = reduced.size();
    trial.drop = A.size() - reduced.size();
    long long cap = 0;
    const auto& e = reduced.elements();
    for (std::size_t i = e.size(), taken = 0;
         i-- > 0 && taken < static_cast<std::size_t>(k); ++taken)
      cap += e[i];
    SumSet S = bounded_subset_sums(reduced, k, cap, memory_budget);
    trial.longest = longest_interval(S, 0, cap).value_or(Interval{0, 0});
    rep.trials.push_back(trial);
    if (rep.trials.size() == 1 || trial.longest.length() > rep.best_interval.length()) {
      rep.best_d = d;
      rep.best_interval = trial.longest;
    }
  }
  rep.reached_n = rep.best_interval.length() >= n;
  return rep;
}

}  // namespace monosum
