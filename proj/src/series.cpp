#include "holoform/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace holoform {

TruncSeries::TruncSeries(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.assign(1, cplx{0.0, 0.0});
  for (const cplx& c : coeffs_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw std::invalid_argument("TruncSeries: coefficients must be finite");
    }
  }
}

TruncSeries TruncSeries::zero(int degree) {
  return TruncSeries(std::vector<cplx>(std::max(degree, 0) + 1, cplx{0.0, 0.0}));
}

TruncSeries TruncSeries::constant(cplx c, int degree) {
  std::vector<cplx> v(std::max(degree, 0) + 1, cplx{0.0, 0.0});
  v[0] = c;
  return TruncSeries(std::move(v));
}

cplx TruncSeries::coeff(int k) const {
  if (k < 0 || k > degree()) return {0.0, 0.0};
  return coeffs_[k];
}

bool TruncSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](cplx c) { return c == cplx{}; });
}

TruncSeries TruncSeries::derivative(int k) const {
  if (k < 0) throw std::invalid_argument("derivative: order must be >= 0");
  if (k == 0) return *this;
  const int n = degree();
  if (n < k) return TruncSeries::zero(0);
  std::vector<cplx> out(n - k + 1);
  for (int j = 0; j <= n - k; ++j) {
    double fall = 1.0;
    for (int i = 0; i < k; ++i) fall *= static_cast<double>(j + k - i);
    out[j] = coeffs_[j + k] * fall;
  }
  return TruncSeries(std::move(out));
}

TruncSeries TruncSeries::truncated(int N) const {
  std::vector<cplx> out(std::max(N, 0) + 1, cplx{0.0, 0.0});
  for (int k = 0; k <= std::min(N, degree()); ++k) out[k] = coeffs_[k];
  return TruncSeries(std::move(out));
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
  const int n = std::max(a.degree(), b.degree());
  std::vector<cplx> out(n + 1);
  for (int k = 0; k <= n; ++k) out[k] = a.coeff(k) + b.coeff(k);
  return TruncSeries(std::move(out));
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
  return a + cplx{-1.0, 0.0} * b;
}

TruncSeries operator*(cplx c, const TruncSeries& a) {
  std::vector<cplx> out = a.coeffs();
  for (auto& v : out) v *= c;
  return TruncSeries(std::move(out));
}

TruncSeries multiply(const TruncSeries& a, const TruncSeries& b, int degree) {
  std::vector<cplx> out(std::max(degree, 0) + 1, cplx{0.0, 0.0});
  for (int i = 0; i <= std::min(a.degree(), degree); ++i) {
    if (a.coeff(i) == cplx{}) continue;
    for (int j = 0; j <= std::min(b.degree(), degree - i); ++j) {
      out[i + j] += a.coeff(i) * b.coeff(j);
    }
  }
  return TruncSeries(std::move(out));
}

cplx eval(const TruncSeries& f, cplx z) {
  if (!(std::norm(z) < 1.0)) throw std::domain_error("eval: |z| must be < 1");
  const auto& c = f.coeffs();
  cplx acc{0.0, 0.0};
  for (int k = f.degree(); k >= 0; --k) acc = acc * z + c[k];
  return acc;
}

SeriesEvaluator::SeriesEvaluator(const TruncSeries& f) {
  const auto& c = f.coeffs();
  // Trailing coefficients whose total is below 1e-17 of sum |a_k| cannot move
  // the value by more than that for |z| < 1.
  double total = 0.0;
  for (const cplx& v : c) total += std::abs(v);
  int last = f.degree();
  double tail = 0.0;
  while (last > 0 && tail + std::abs(c[last]) <= 1e-17 * total) tail += std::abs(c[last--]);
  int nnz = 0;
  for (int k = 0; k <= last; ++k) nnz += (c[k] != cplx{});
  if (last >= 32 && nnz * 8 <= last) {
    sparse_ = true;
    for (int k = 0; k <= last; ++k) {
      if (c[k] != cplx{}) {
        sparse_idx_.push_back(k);
        sparse_val_.push_back(c[k]);
      }
    }
  } else {
    dense_.assign(c.begin(), c.begin() + last + 1);
  }
}

cplx SeriesEvaluator::operator()(cplx z) const {
  if (!sparse_) {
    cplx acc{0.0, 0.0};
    for (auto it = dense_.rbegin(); it != dense_.rend(); ++it) acc = acc * z + *it;
    return acc;
  }
  cplx acc{0.0, 0.0};
  cplx power{1.0, 0.0};
  int at = 0;
  for (std::size_t i = 0; i < sparse_idx_.size(); ++i) {
    int step = sparse_idx_[i] - at;
    cplx base = z;
    cplx mult{1.0, 0.0};
    while (step > 0) {
      if (step & 1) mult *= base;
      base *= base;
      step >>= 1;
    }
    power *= mult;
    at = sparse_idx_[i];
    acc += sparse_val_[i] * power;
  }
  return acc;
}

TruncSeries dilate(const TruncSeries& f, double r) {
  if (!(r > 0.0) || r > 1.0) throw std::domain_error("dilate: r must lie in (0, 1]");
  std::vector<cplx> out = f.coeffs();
  double rk = 1.0;
  for (auto& c : out) {
    c *= rk;
    rk *= r;
  }
  return TruncSeries(std::move(out));
}

FracParams FracParams::make(double t, double b) {
  if (!(t > 0.0) || !std::isfinite(t)) throw std::domain_error("FracParams: t must be positive");
  if (!(b > 1.0)) throw std::domain_error("FracParams: b must exceed 1");
  if (!(b + t > 0.0)) throw std::domain_error("FracParams: b + t must be positive");
  return FracParams{t, b, ceil_int(t - 1.0)};
}

TruncSeries frac_deriv_coeff(const TruncSeries& f, const FracParams& fp) {
  const int N = f.degree();
  const int m = fp.m;
  if (N <= m) return TruncSeries::zero(0);
  std::vector<cplx> out(N - m);
  for (int j = 0; j <= N - m - 1; ++j) {
    const cplx a = f.coeff(j + m + 1);
    if (a == cplx{}) continue;
    const double jd = j;
    const double factor =
        gamma_ratio(jd + fp.b + fp.t, jd + m + 1 + fp.b) * gamma_ratio(jd + m + 2, jd + 1);
    out[j] = a * factor;
  }
  return TruncSeries(std::move(out));
}

cplx frac_deriv_integral_at(const std::vector<cplx>& fprime_at_nodes, const FracParams& fp,
                            cplx z, const DiscQuadrature& Q) {
  if (!(std::norm(z) < 1.0)) throw std::domain_error("frac_deriv_integral_at: |z| must be < 1");
  if (fprime_at_nodes.size() != Q.size()) {
    throw std::invalid_argument("frac_deriv_integral_at: node count mismatch");
  }
  const double prefactor = gamma_ratio(fp.b + fp.t, fp.b);
  const double expo = fp.b + fp.t;
  cplx sum{0.0, 0.0};
  for (std::size_t i = 0; i < Q.size(); ++i) {
    const cplx w = Q.nodes[i];
    const cplx wbar = std::conj(w);
    const double radial = std::pow(1.0 - std::norm(w), fp.b - 1.0);
    // principal branch: Re(1 - conj(w) z) > 0 on D x D
    const cplx kernel = std::exp(-expo * std::log(1.0 - wbar * z));
    cplx wm{1.0, 0.0};
    for (int k = 0; k < fp.m; ++k) wm *= wbar;
    sum += Q.weights[i] * radial * kernel * wm * fprime_at_nodes[i];
  }
  return prefactor * sum;
}

cplx frac_deriv_integral_at(const TruncSeries& f, const FracParams& fp, cplx z,
                            const DiscQuadrature& Q) {
  SeriesEvaluator fprime(f.derivative());
  std::vector<cplx> vals(Q.size());
  for (std::size_t i = 0; i < Q.size(); ++i) vals[i] = fprime(Q.nodes[i]);
  return frac_deriv_integral_at(vals, fp, z, Q);
}

double decomposition_beta_ratio(int j, double b, int m) {
  if (m == 0) return 1.0;
  // B(j+b+1,m)/B(j+1,m) = G(j+b+1) G(j+1+m) / (G(j+b+1+m) G(j+1))
  const double jd = j;
  return gamma_ratio(jd + 1 + m, jd + 1) / gamma_ratio(jd + b + 1 + m, jd + b + 1);
}

Decomposition decomposition(const TruncSeries& f, const FracParams& fp) {
  const int N = f.degree();
  const int m = fp.m;
  Decomposition d;
  // s_m = sum_{j=1}^m j a_j z^{j-1}
  std::vector<cplx> sm(std::max(m, 1), cplx{0.0, 0.0});
  for (int j = 1; j <= m; ++j) sm[j - 1] = static_cast<double>(j) * f.coeff(j);
  d.s_m = TruncSeries(std::move(sm));

  const int top = N - m - 1;  // last j with a_{j+m+1} inside the truncation
  std::vector<cplx> g(std::max(N, 1), cplx{0.0, 0.0});
  std::vector<cplx> h(std::max(N, 0) + 1, cplx{0.0, 0.0});
  for (int j = 0; j <= top; ++j) {
    const cplx a = f.coeff(j + m + 1);
    const double ratio = decomposition_beta_ratio(j, fp.b, m);
    g[j + m] = ratio * static_cast<double>(j + m + 1) * a;
    h[j + m + 1] = (1.0 - ratio) * a;
  }
  d.g = TruncSeries(std::move(g));
  d.h = TruncSeries(std::move(h));
  return d;
}

TruncSeries make_test_function(const TestFunctionSpec& spec, int N) {
  if (N < 1) throw std::invalid_argument("make_test_function: N must be >= 1");
  return std::visit(
      [N](const auto& s) -> TruncSeries {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, GapSpec>) {
          if (s.ratio < 2 || s.k_max < 0) throw std::invalid_argument("gap: ratio >= 2, kmax >= 0");
          std::vector<cplx> c(N + 1, cplx{0.0, 0.0});
          long long idx = 1;
          for (int k = 0; k <= s.k_max && idx <= N; ++k) {
            c[idx] = std::exp2(-k * s.beta);
            idx *= s.ratio;
          }
          return TruncSeries(std::move(c));
        } else if constexpr (std::is_same_v<T, PowerSingularSpec>) {
          if (!(s.gamma > 0.0)) throw std::invalid_argument("powsing: gamma must be positive");
          std::vector<cplx> c(N + 1);
          double a = 1.0;
          c[0] = a;
          for (int n = 1; n <= N; ++n) {
            a *= (n - 1 + s.gamma) / n;
            c[n] = a;
          }
          return TruncSeries(std::move(c));
        } else if constexpr (std::is_same_v<T, PolynomialSpec>) {
          std::vector<cplx> c = s.coeffs;
          if (static_cast<int>(c.size()) < N + 1) c.resize(N + 1, cplx{0.0, 0.0});
          return TruncSeries(std::move(c));
        } else {
          if (s.n < 0) throw std::invalid_argument("mono: n must be >= 0");
          std::vector<cplx> c(std::max(N, s.n) + 1, cplx{0.0, 0.0});
          c[s.n] = 1.0;
          return TruncSeries(std::move(c));
        }
      },
      spec);
}

double default_b(double p, double s) {
  const double bound = std::max(1.0, 2.0 + p + (s - 2.0) / p);
  return (std::floor(2.0 * bound) + 1.0) / 2.0;
}

}  // namespace holoform
