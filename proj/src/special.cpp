#include "holoform/special.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace holoform {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeffs = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

double log_gamma_lanczos(double x) {
  // valid for x >= 0.5
  const double xm = x - 1.0;
  double sum = kLanczosCoeffs[0];
  for (std::size_t i = 1; i < kLanczosCoeffs.size(); ++i) {
    sum += kLanczosCoeffs[i] / (xm + static_cast<double>(i));
  }
  const double t = xm + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (xm + 0.5) * std::log(t) - t + std::log(sum);
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::domain_error("log_gamma: argument must be positive and finite");
  }
  if (x < 0.5) {
    // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
    return std::log(kPi / std::sin(kPi * x)) - log_gamma_lanczos(1.0 - x);
  }
  return log_gamma_lanczos(x);
}

double gamma_ratio(double a, double b) {
  const double d = a - b;
  const double k = std::round(d);
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  if (std::abs(k) <= 64.0 &&
      std::abs(d - k) <= 8.0 * std::numeric_limits<double>::epsilon() * scale) {
    if (!(a > 0.0) || !(b > 0.0)) {
      throw std::domain_error("gamma_ratio: arguments must be positive");
    }
    const int n = static_cast<int>(k);
    double prod = 1.0;
    if (n >= 0) {
      for (int i = 0; i < n; ++i) prod *= b + i;
      return prod;
    }
    for (int i = 0; i < -n; ++i) prod *= a + i;
    return 1.0 / prod;
  }
  return std::exp(log_gamma(a) - log_gamma(b));
}

double beta_ratio(double a1, double b1, double a2, double b2) {
  // B(a1,b1)/B(a2,b2) = G(a1)G(b1)G(a2+b2) / (G(a1+b1)G(a2)G(b2))
  return gamma_ratio(a1, a2) * gamma_ratio(b1, b2) * gamma_ratio(a2 + b2, a1 + b1);
}

int ceil_int(double x) {
  return static_cast<int>(std::ceil(x));
}

}  // namespace holoform
