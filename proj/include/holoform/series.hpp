#pragma once

#include <variant>
#include <vector>

#include "holoform/discgeom.hpp"
#include "holoform/special.hpp"

namespace holoform {

/// Truncated Taylor series a_0 + a_1 z + ... + a_N z^N.
class TruncSeries {
 public:
  TruncSeries() : coeffs_(1, cplx{0.0, 0.0}) {}
  explicit TruncSeries(std::vector<cplx> coeffs);
  static TruncSeries zero(int degree);
  static TruncSeries constant(cplx c, int degree = 0);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<cplx>& coeffs() const { return coeffs_; }
  /// a_k, zero beyond the truncation degree.
  cplx coeff(int k) const;
  bool is_zero() const;

  /// k-th ordinary derivative; degree drops by k (never below 0).
  TruncSeries derivative(int k = 1) const;
  /// Coefficients 0..N (zero padded if N exceeds the degree).
  TruncSeries truncated(int N) const;

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(cplx c, const TruncSeries& a);

 private:
  std::vector<cplx> coeffs_;
};

/// Cauchy product truncated to `degree`.
TruncSeries multiply(const TruncSeries& a, const TruncSeries& b, int degree);

/// Horner evaluation; |z| >= 1 is a domain error.
cplx eval(const TruncSeries& f, cplx z);

/// Repeated evaluation without domain checks. Sparse series (few nonzero
/// coefficients, e.g. lacunary) use incremental powers instead of Horner.
class SeriesEvaluator {
 public:
  explicit SeriesEvaluator(const TruncSeries& f);
  cplx operator()(cplx z) const;

 private:
  std::vector<cplx> dense_;
  std::vector<int> sparse_idx_;
  std::vector<cplx> sparse_val_;
  bool sparse_ = false;
};

/// f_r(z) = f(rz): coefficients a_k r^k.
TruncSeries dilate(const TruncSeries& f, double r);

/// Order t > 0 with kernel parameter b; m = ceil(t - 1).
struct FracParams {
  double t = 1.0;
  double b = 2.0;
  int m = 0;

  /// Validates t > 0, b > 1, b + t > 0.
  static FracParams make(double t, double b);
};

/// Coefficient form: output_j = a_{j+m+1} G(j+b+t) G(j+m+2) / (G(j+1) G(j+m+1+b)).
/// Output degree N - m - 1; the zero series when N <= m.
TruncSeries frac_deriv_coeff(const TruncSeries& f, const FracParams& fp);

/// Integral form (G(b+t)/G(b)) int (1-|w|^2)^{b-1} conj(w)^m f'(w) / (1 - conj(w) z)^{b+t} dA(w)
/// evaluated with Q.
cplx frac_deriv_integral_at(const TruncSeries& f, const FracParams& fp, cplx z,
                            const DiscQuadrature& Q);

/// Same, with f' precomputed at the nodes of Q.
cplx frac_deriv_integral_at(const std::vector<cplx>& fprime_at_nodes, const FracParams& fp,
                            cplx z, const DiscQuadrature& Q);

/// f' = g + s_m + h'.
struct Decomposition {
  TruncSeries g;
  TruncSeries s_m;
  TruncSeries h;
};

/// B(j+b+1, m) / B(j+1, m), equal to 1 when m = 0.
double decomposition_beta_ratio(int j, double b, int m);

Decomposition decomposition(const TruncSeries& f, const FracParams& fp);

/// Hadamard gap series: a = 2^{-k beta} at index ratio^k, k = 0..k_max.
struct GapSpec {
  double beta = 0.5;
  int ratio = 2;
  int k_max = 8;
};

/// (1 - z)^{-gamma}: a_n = G(n + gamma) / (G(gamma) n!).
struct PowerSingularSpec {
  double gamma = 1.0;
};

struct PolynomialSpec {
  std::vector<cplx> coeffs;
};

struct MonomialSpec {
  int n = 1;
};

using TestFunctionSpec = std::variant<GapSpec, PowerSingularSpec, PolynomialSpec, MonomialSpec>;

/// Coefficients through degree max(N, natural degree of polynomial/monomial);
/// gap and power-singular families are cut at degree N.
TruncSeries make_test_function(const TestFunctionSpec& spec, int N);

/// Default kernel parameter: the next half-integer strictly above
/// max(1, 2 + p + (s - 2)/p).
double default_b(double p, double s);

}  // namespace holoform
