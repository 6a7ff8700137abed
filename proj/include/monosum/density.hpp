#pragma once

#include <vector>

#include "monosum/colorings.hpp"
#include "monosum/intset.hpp"
#include "monosum/rational.hpp"

namespace monosum {

// Sum of 1/a over the elements, exact. Balanced reduction keeps the bignum
// work near-linear in the output size.
Rational reciprocal_sum(const IntSet& A);

// Logarithmic density (1/ln x) * sum_{a in A, a <= x} 1/a. Exact rational
// summation for explicit sets; x >= 2 required.
long double log_density(const IntSet& A, long long x);

// Interval form. Uses direct compensated summation for short ranges and a
// digamma difference for long ones; accurate to ~1e-16 relative.
long double log_density(const IntervalList& A, long long x);

// Sum of 1/a over integers in [lo, hi], in long double.
long double reciprocal_interval_sum(long long lo, long long hi);

// delta_r(b) = (1 - 1/(2b)) * (1 - b^-r)^-1, b > 1.
long double delta_formula(int r, long double b);
// Same, exact in rationals (for rational b).
Rational delta_formula_exact(int r, const Rational& b);

// Asymptotic upper logarithmic density of the cover union_{j == i mod r}
// [b^j, 2 b^(j+1)] in log coordinates, evaluated as the gap series at cover
// right endpoints. Returns 1 when b^(r-1) <= 2 (no gaps). Analytically equal
// to delta_formula(r, b).
long double loglog_cover_density(int r, long double b);

// One-step state of the block-coloring density recurrence.
struct DensitySeqState {
  std::size_t n = 0;
  Rational abar;  // density of S(phi, n mod 2) in [2(H_n - 1)]
  Rational bbar;  // abar_{n-1} * z_n
  Rational z;
};

// abar_n straight from the displayed formula
//   [2 sum_{i == n mod 2, i <= n} (H_i - 1) - sum_{i != n mod 2, i <= n} (H_i - 1)] / (2(H_n - 1)),
// for the cyclic two-coloring. n >= 1.
Rational abar_direct(const BlockColoring& c, std::size_t n);

// Iterates (abar_n, bbar_n) = (bbar_{n-1} z_n + 1 - z_n/2, abar_{n-1} z_n)
// from the given seed; z values must lie in [0, 1/2]. Output index k holds
// state n = k+1, starting at the seed.
std::vector<DensitySeqState> abar_recurrence(const std::vector<Rational>& z,
                                             const Rational& abar_seed,
                                             const Rational& bbar_seed);

// Convenience: seed from abar_direct(c, 1), bbar_1 = 0, z from the coloring.
std::vector<DensitySeqState> abar_recurrence(const BlockColoring& c);

struct DensityProfile {
  struct Sample {
    long long x = 0;
    Rational value;
  };
  std::vector<Sample> samples;
};

// Exact |S intersect [1, t]| / t per t.
DensityProfile natural_density_profile(const IntervalList& S,
                                       const std::vector<long long>& t_values);

}  // namespace monosum
