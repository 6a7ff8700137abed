#include "monosum/optimize.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "monosum/density.hpp"

namespace monosum {

namespace {

// Golden-section minimization on [lo, hi].
long double golden_min(const std::function<long double(long double)>& f, long double lo,
                       long double hi, long double tol) {
  const long double invphi = 0.6180339887498948482045868343656381L;
  long double a = lo, b = hi;
  long double x1 = b - invphi * (b - a);
  long double x2 = a + invphi * (b - a);
  long double f1 = f(x1), f2v = f(x2);
  while (b - a > tol) {
    if (f1 < f2v) {
      b = x2;
      x2 = x1;
      f2v = f1;
      x1 = b - invphi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2v;
      x2 = a + invphi * (b - a);
      f2v = f(x2);
    }
  }
  return 0.5L * (a + b);
}

long double bisect_root(const std::function<long double(long double)>& f, long double lo,
                        long double hi) {
  long double flo = f(lo);
  for (int i = 0; i < 200 && hi - lo > 0; ++i) {
    long double mid = 0.5L * (lo + hi);
    if (mid == lo || mid == hi) break;
    long double fm = f(mid);
    if ((flo <= 0) == (fm <= 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5L * (lo + hi);
}

}  // namespace

long double critical_poly(int r, long double b) {
  return powl(b, static_cast<long double>(r)) - 2.0L * r * b + (r - 1.0L);
}

long double critical_poly_deriv(int r, long double b) {
  return r * powl(b, static_cast<long double>(r - 1)) - 2.0L * r;
}

RootResult critical_root(int r, long double tol) {
  if (r < 2) throw std::invalid_argument("critical_root: r must be >= 2");
  if (!(tol > 0)) throw std::invalid_argument("critical_root: tol must be > 0");
  auto p = [r](long double b) { return critical_poly(r, b); };

  // Guaranteed bracket: p(1) = -r < 0 and p(2r) > 0.
  long double lo = 1.0L, hi = 2.0L * r;
  long double b = bisect_root(p, lo, hi);
  // Newton polish from the bisection estimate.
  for (int i = 0; i < 8; ++i) {
    long double d = critical_poly_deriv(r, b);
    if (d == 0) break;
    long double nb = b - p(b) / d;
    if (nb <= lo || nb >= hi) break;
    b = nb;
  }

  RootResult res;
  res.r = r;
  res.b0 = b;
  res.residual = fabsl(p(b));
  // Descartes' rule allows at most two positive roots; the companion lies in
  // (0,1) since p(0) = r-1 > 0 and p(1) = -r < 0.
  res.low_root = bisect_root(p, 0.0L, 1.0L);
  if (res.residual > tol)
    throw std::runtime_error("critical_root: residual above tolerance");
  return res;
}

MinResult minimize_delta(int r, long double tol) {
  if (r < 2) throw std::invalid_argument("minimize_delta: r must be >= 2");
  auto f = [r](long double b) { return delta_formula(r, b); };
  // delta_r blows up at b -> 1+ and tends to 1 - 1/(2b) at infinity; scan for
  // a sign change of the slope to bracket the interior minimum.
  long double lo = 1.0L + 1e-9L, hi = 4.0L * r;
  const int scan = 4096;
  long double best_v = f(lo);
  int best_i = 0;
  for (int i = 1; i <= scan; ++i) {
    long double b = lo + (hi - lo) * i / scan;
    long double v = f(b);
    if (v < best_v) {
      best_v = v;
      best_i = i;
    }
  }
  long double bl = lo + (hi - lo) * (best_i > 0 ? best_i - 1 : 0) / scan;
  long double bh = lo + (hi - lo) * (best_i < scan ? best_i + 1 : scan) / scan;
  long double b_star = golden_min(f, bl, bh, tol);
  return {b_star, f(b_star)};
}

std::vector<BoundRow> c_upper_table(int r_max, long double tol) {
  if (r_max < 2) throw std::invalid_argument("c_upper_table: r_max must be >= 2");
  std::vector<BoundRow> rows;
  for (int r = 2; r <= r_max; ++r) {
    RootResult root = critical_root(r, tol);
    BoundRow row;
    row.r = r;
    row.b0 = root.b0;
    row.c_upper = (1.0L - 1.0L / (2.0L * root.b0)) * (1.0L + 1.0L / (2.0L * r * root.b0 - r));
    row.delta_min = delta_formula(r, root.b0);
    row.identity_gap = fabsl(row.c_upper - row.delta_min);
    rows.push_back(row);
  }
  return rows;
}

F2Result f2_inf() {
  auto f = [](long double z) { return (1.0L - z / 2.0L) / (1.0L - z * z); };
  // Stationary point of (1 - z/2)/(1 - z^2): -z^2 + 4z - 1 = 0, z = 2 - sqrt 3.
  const long double z_star = kF2ArgMin;
  const long double numeric = golden_min(f, 0.0L, 0.9L, 1e-12L);
  if (fabsl(numeric - z_star) > 1e-9L)
    throw std::runtime_error("f2_inf: numeric minimizer disagrees with stationary point");
  return {z_star, f(z_star)};
}

}  // namespace monosum
