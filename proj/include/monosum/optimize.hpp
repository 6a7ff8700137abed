#pragma once

#include <vector>

namespace monosum {

// f2 = inf_{z in [0,1)} (1 - z/2)/(1 - z^2) = (2 + sqrt 3)/4, attained at z = 2 - sqrt 3.
inline const long double kF2 = (2.0L + 1.7320508075688772935274463415058724L) / 4.0L;
inline const long double kF2ArgMin = 2.0L - 1.7320508075688772935274463415058724L;

struct RootResult {
  int r = 0;
  long double b0 = 0;        // unique root > 1 of b^r - 2rb + r - 1
  long double residual = 0;  // |p(b0)|
  long double low_root = 0;  // certified second root in (0, 1)
};

// Critical polynomial p(b) = b^r - 2rb + r - 1 and its derivative.
long double critical_poly(int r, long double b);
long double critical_poly_deriv(int r, long double b);

// Bracketed bisection on (1, 2r) followed by Newton polish; also locates the
// companion root in (0, 1). r >= 2.
RootResult critical_root(int r, long double tol = 1e-15L);

// Golden-section minimization of delta_r over a scanned bracket in (1, inf).
struct MinResult {
  long double b_star = 0;
  long double delta_star = 0;
};
MinResult minimize_delta(int r, long double tol = 1e-12L);

struct BoundRow {
  int r = 0;
  long double b0 = 0;
  long double c_upper = 0;    // (1 - 1/(2 b0)) (1 + 1/(2 r b0 - r))
  long double delta_min = 0;  // delta_r(b0)
  long double identity_gap = 0;  // |c_upper - delta_min|
};

std::vector<BoundRow> c_upper_table(int r_max, long double tol = 1e-15L);

// argmin and value of (1 - z/2)/(1 - z^2) on [0, 1); analytic stationary point
// cross-checked by golden section.
struct F2Result {
  long double z_star = 0;
  long double f2 = 0;
};
F2Result f2_inf();

}  // namespace monosum
