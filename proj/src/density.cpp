#include "monosum/density.hpp"

#include <cfloat>
#include <cmath>
#include <stdexcept>

namespace monosum {

namespace {

// Digamma in long double via recurrence to x >= 64 plus the asymptotic series;
// good to ~1e-19 relative there.
long double digamma(long double x) {
  long double acc = 0.0L;
  while (x < 64.0L) {
    acc -= 1.0L / x;
    x += 1.0L;
  }
  const long double inv = 1.0L / x;
  const long double inv2 = inv * inv;
  // ln x - 1/(2x) - sum B_2n / (2n x^2n)
  long double series = inv2 * (1.0L / 12.0L -
                       inv2 * (1.0L / 120.0L -
                       inv2 * (1.0L / 252.0L -
                       inv2 * (1.0L / 240.0L -
                       inv2 * (1.0L / 132.0L)))));
  return acc + logl(x) - 0.5L * inv - series;
}

Rational reciprocal_sum_range(const std::vector<long long>& e, std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return Rational(1, static_cast<unsigned long>(e[lo]));
  std::size_t mid = lo + (hi - lo) / 2;
  return reciprocal_sum_range(e, lo, mid) + reciprocal_sum_range(e, mid, hi);
}

}  // namespace

Rational reciprocal_sum(const IntSet& A) {
  if (A.empty()) return Rational(0);
  return reciprocal_sum_range(A.elements(), 0, A.size());
}

long double log_density(const IntSet& A, long long x) {
  if (x < 2) throw std::invalid_argument("log_density: x must be >= 2");
  std::vector<long long> kept;
  for (long long a : A.elements()) {
    if (a > x) break;
    kept.push_back(a);
  }
  return to_long_double(reciprocal_sum(IntSet(std::move(kept)))) /
         logl(static_cast<long double>(x));
}

long double reciprocal_interval_sum(long long lo, long long hi) {
  if (lo < 1 || lo > hi) throw std::invalid_argument("reciprocal_interval_sum: need 1 <= lo <= hi");
  if (hi - lo < 10'000'000) {
    // Compensated summation, descending so small terms accumulate first.
    long double s = 0.0L, c = 0.0L;
    for (long long a = hi; a >= lo; --a) {
      long double y = 1.0L / static_cast<long double>(a) - c;
      long double t = s + y;
      c = (t - s) - y;
      s = t;
    }
    return s;
  }
  return digamma(static_cast<long double>(hi) + 1.0L) - digamma(static_cast<long double>(lo));
}

long double log_density(const IntervalList& A, long long x) {
  if (x < 2) throw std::invalid_argument("log_density: x must be >= 2");
  long double s = 0.0L;
  for (const auto& iv : A.intervals()) {
    long long lo = std::max(iv.lo, 1ll), hi = std::min(iv.hi, x);
    if (lo <= hi) s += reciprocal_interval_sum(lo, hi);
  }
  return s / logl(static_cast<long double>(x));
}

long double delta_formula(int r, long double b) {
  if (r < 2) throw std::invalid_argument("delta_formula: r must be >= 2");
  if (!(b > 1.0L)) throw std::invalid_argument("delta_formula: b must be > 1");
  return (1.0L - 1.0L / (2.0L * b)) / (1.0L - powl(b, static_cast<long double>(-r)));
}

Rational delta_formula_exact(int r, const Rational& b) {
  if (r < 2) throw std::invalid_argument("delta_formula_exact: r must be >= 2");
  if (b <= 1) throw std::invalid_argument("delta_formula_exact: b must be > 1");
  Rational one(1);
  return (one - one / (2 * b)) / (one - rational_pow(b, -r));
}

long double loglog_cover_density(int r, long double b) {
  if (r < 2) throw std::invalid_argument("loglog_cover_density: r must be >= 2");
  if (!(b > 1.0L)) throw std::invalid_argument("loglog_cover_density: b must be > 1");
  // Cover intervals [b^j, 2 b^{j+1}], j = i mod r, in log coordinates. They
  // overlap (no gaps, density 1) unless 2 < b^{r-1}.
  if (powl(b, static_cast<long double>(r - 1)) <= 2.0L) return 1.0L;
  // At a right endpoint T_m = 2 b^{m+1} the covered measure is the series
  // sum_k (2 b^{m+1-kr} - b^{m-kr}); the limsup over m is its limit.
  const long double q = powl(b, static_cast<long double>(-r));
  long double sum = 0.0L, term = 1.0L;
  while (term > LDBL_EPSILON * sum) {
    sum += term;
    term *= q;
  }
  return (1.0L - 1.0L / (2.0L * b)) * sum;
}

Rational abar_direct(const BlockColoring& c, std::size_t n) {
  if (c.num_colors() != 2 || c.has_explicit_colors())
    throw std::invalid_argument("abar_direct: defined for the cyclic two-coloring");
  const auto& h = c.breakpoints();
  if (n == 0) throw std::invalid_argument("abar_direct: n must be >= 1");
  if (n >= h.size()) throw std::out_of_range("abar_direct: n beyond represented breakpoints");
  Rational num(0);
  for (std::size_t i = 1; i <= n; ++i) {
    long long hm1 = h[i] - 1;
    if ((i % 2) == (n % 2))
      num += 2 * Rational(static_cast<long>(hm1));
    else
      num -= Rational(static_cast<long>(hm1));
  }
  Rational den = 2 * Rational(static_cast<long>(h[n] - 1));
  Rational out = num / den;
  out.canonicalize();
  return out;
}

std::vector<DensitySeqState> abar_recurrence(const std::vector<Rational>& z,
                                             const Rational& abar_seed,
                                             const Rational& bbar_seed) {
  for (const auto& zi : z)
    if (zi < 0 || zi > Rational(1, 2))
      throw std::domain_error("abar_recurrence: z values must lie in [0, 1/2]");
  std::vector<DensitySeqState> out;
  out.push_back({1, abar_seed, bbar_seed, Rational(0)});
  for (const auto& zn : z) {
    const auto& prev = out.back();
    DensitySeqState s;
    s.n = prev.n + 1;
    s.abar = prev.bbar * zn + 1 - zn / 2;
    s.bbar = prev.abar * zn;
    s.z = zn;
    s.abar.canonicalize();
    s.bbar.canonicalize();
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<DensitySeqState> abar_recurrence(const BlockColoring& c) {
  auto ratios = c.z_ratios();
  std::vector<Rational> z;
  for (std::size_t n = 2; n <= ratios.size(); ++n) {
    Rational q(static_cast<long>(ratios[n - 1].first), static_cast<long>(ratios[n - 1].second));
    q.canonicalize();
    z.push_back(q);
  }
  return abar_recurrence(z, abar_direct(c, 1), Rational(0));
}

DensityProfile natural_density_profile(const IntervalList& S,
                                       const std::vector<long long>& t_values) {
  DensityProfile p;
  for (long long t : t_values) {
    if (t < 1) throw std::invalid_argument("natural_density_profile: t must be >= 1");
    Rational v(static_cast<long>(S.count_up_to(t)), static_cast<long>(t));
    v.canonicalize();
    p.samples.push_back({t, v});
  }
  return p;
}

}  // namespace monosum
