#pragma once

#include <complex>

namespace holoform {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Natural log of Gamma(x) for x > 0, Lanczos approximation (g = 7, 9 terms).
/// Relative accuracy of Gamma itself is about 1e-15 over the positive axis.
double log_gamma(double x);

/// Gamma(a) / Gamma(b) for a, b > 0.
///
/// When a - b is a small integer the ratio is a rising-factorial product and
/// is formed directly; otherwise exp(log_gamma(a) - log_gamma(b)). The product
/// path keeps integer-order transforms exact to rounding.
double gamma_ratio(double a, double b);

/// B(a1, b1) / B(a2, b2) via log-Gamma differences; all arguments > 0.
double beta_ratio(double a1, double b1, double a2, double b2);

/// Smallest integer >= x (the bracket [x] used by the fractional derivative).
int ceil_int(double x);

}  // namespace holoform
