#include "holoform/odesolve.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "holoform/gauss.hpp"
#include "holoform/rng.hpp"

namespace holoform {

namespace {

// m (m-1) ... (m-j+1)
double falling(int m, int j) {
  double v = 1.0;
  for (int i = 0; i < j; ++i) v *= static_cast<double>(m - i);
  return v;
}

double factorial(int k) {
  return falling(k, k);
}

double binomial(int n, int k) {
  return falling(n, k) / factorial(k);
}

struct Coarse {
  DiscQuadrature Q;
  SupSampleSet S;
};

Coarse coarser_rules(const SupSampleSet& S, const DiscQuadrature& Q) {
  return {disc_quadrature(std::max(1, Q.J - 1), std::max(8, Q.M / 2)),
          sup_samples(std::max(1, S.depth - 1), S.rotations)};
}

}  // namespace

void ODESystem::validate() const {
  if (n < 1) throw std::invalid_argument("ODESystem: order n must be >= 1");
  if (static_cast<int>(A.size()) != n) throw std::invalid_argument("ODESystem: need n coefficients A_0..A_{n-1}");
  if (static_cast<int>(init.size()) != n) throw std::invalid_argument("ODESystem: need n initial values");
}

ODESystem DilatedSystem::as_system(const std::vector<cplx>& init) const {
  ODESystem sys;
  sys.n = static_cast<int>(B.size());
  sys.A = B;
  sys.rhs = Bn;
  sys.init = init;
  double rk = 1.0;
  for (auto& v : sys.init) {
    v *= rk;
    rk *= r;
  }
  sys.validate();
  return sys;
}

TruncSeries solve_ode_series(const ODESystem& sys, int N) {
  sys.validate();
  const int n = sys.n;
  if (N < n) throw std::invalid_argument("solve_ode_series: N must be >= n");
  std::vector<cplx> c(N + 1, cplx{0.0, 0.0});
  for (int k = 0; k < n; ++k) c[k] = sys.init[k] / factorial(k);
  for (int k = 0; k + n <= N; ++k) {
    cplx acc = sys.rhs.coeff(k);
    for (int j = 0; j < n; ++j) {
      const TruncSeries& Aj = sys.A[j];
      const int top = std::min(k, Aj.degree());
      for (int i = 0; i <= top; ++i) {
        const cplx a = Aj.coeff(i);
        if (a == cplx{}) continue;
        const int idx = k - i + j;
        acc -= a * falling(idx, j) * c[idx];
      }
    }
    c[k + n] = acc / falling(k + n, n);
  }
  return TruncSeries(std::move(c));
}

TruncSeries equation_residual(const ODESystem& sys, const TruncSeries& f) {
  sys.validate();
  const int deg = std::max(0, f.degree() - sys.n);
  TruncSeries r = f.derivative(sys.n).truncated(deg);
  for (int j = 0; j < sys.n; ++j) r = r + multiply(sys.A[j], f.derivative(j), deg);
  return r - sys.rhs.truncated(deg);
}

double max_abs_coeff(const TruncSeries& f) {
  double m = 0.0;
  for (const cplx& c : f.coeffs()) m = std::max(m, std::abs(c));
  return m;
}

DilatedSystem dilate_system(const ODESystem& sys, double r) {
  sys.validate();
  if (!(r > 0.0) || r > 1.0) throw std::domain_error("dilate_system: r must lie in (0, 1]");
  DilatedSystem d;
  d.r = r;
  for (int j = 0; j < sys.n; ++j) {
    d.B.push_back(cplx{std::pow(r, sys.n - j), 0.0} * dilate(sys.A[j], r));
  }
  d.Bn = cplx{std::pow(r, sys.n), 0.0} * dilate(sys.rhs, r);
  return d;
}

cplx iterated_radial_integral(const std::function<cplx(cplx)>& g, cplx z, int d) {
  if (d < 0) throw std::invalid_argument("iterated_radial_integral: depth must be >= 0");
  if (d == 0) return g(z);
  const GaussRule& rule = gauss_legendre(64);
  cplx sum{0.0, 0.0};
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double u = 0.5 * (rule.nodes[i] + 1.0);
    sum += 0.5 * rule.weights[i] * std::pow(1.0 - u, d - 1) * g(z * u);
  }
  return std::pow(z, d) / factorial(d - 1) * sum;
}

namespace {

struct Triple {
  double c0, c1, c2;
};

Triple thm31_at(const ODESystem& sys, const SpaceParams& sp, const SupSampleSet& S,
                const DiscQuadrature& Q, MVariant variant) {
  const int n = sys.n;
  const double p = sp.p;
  Triple t{0.0, 0.0, 0.0};

  if (!sys.A[0].is_zero()) {
    SeriesEvaluator a0(sys.A[0]);
    std::vector<double> nu(Q.size());
    for (std::size_t i = 0; i < Q.size(); ++i) {
      const cplx z = Q.nodes[i];
      const double dz = 1.0 - std::norm(z);
      double v = Q.weights[i] * std::pow(std::abs(a0(z)), p) * std::pow(dz, n * p - 4.0);
      if (variant == MVariant::Proof) v *= sp.W(dz);
      nu[i] = v;
    }
    t.c0 = mobius_localized_sup(nu, Q, S, sp.W, 2.0, 2).value;
  }
  for (int j = 1; j < n; ++j) {
    if (!sys.A[j].is_zero()) t.c1 += hinf_alpha_norm(sys.A[j], n - j, Q, S);
  }
  if (!sys.rhs.is_zero()) {
    SeriesEvaluator an(sys.rhs);
    std::vector<double> nu(Q.size());
    for (std::size_t i = 0; i < Q.size(); ++i) {
      const cplx z = Q.nodes[i];
      const double dz = 1.0 - std::norm(z);
      double v = Q.weights[i] * std::pow(std::abs(an(z)), p) * std::pow(dz, n * p - 4.0 + sp.s);
      if (variant == MVariant::Statement) v *= sp.W(dz);
      nu[i] = v;
    }
    t.c2 = mobius_localized_sup(nu, Q, S, sp.W, 2.0, variant == MVariant::Proof ? 2 : 1).value;
  }
  return t;
}

Triple thm32_at(const ODESystem& sys, const SpaceParams& sp, const SupSampleSet& S,
                const DiscQuadrature& Q) {
  const int n = sys.n;
  const double p = sp.p;
  const double s = sp.s;
  const WeightFun& W = sp.W;
  Triple t{0.0, 0.0, 0.0};
  std::vector<double> outer(Q.size());
  for (std::size_t i = 0; i < Q.size(); ++i) {
    outer[i] = Q.weights[i] * std::pow(1.0 - std::norm(Q.nodes[i]), p - 4.0 + s);
  }

  if (!sys.A[0].is_zero()) {
    SeriesEvaluator a0(sys.A[0]);
    auto g = [&](cplx xi) {
      const double d = 1.0 - std::norm(xi);
      return cplx{std::pow(std::abs(a0(xi)), p) * W(d) / std::pow(d, s), 0.0};
    };
    std::vector<double> nu(Q.size());
    for (std::size_t i = 0; i < Q.size(); ++i) {
      nu[i] = outer[i] * std::abs(iterated_radial_integral(g, Q.nodes[i], n - 1));
    }
    t.c0 = mobius_localized_sup(nu, Q, S, W, 2.0, 2).value;
  }

  // inner sums sum_{k=1}^m A_{n-k}^{(m-k)}, m = 1..n-1
  std::vector<TruncSeries> inner;
  bool any = false;
  for (int m = 1; m < n; ++m) {
    TruncSeries acc = TruncSeries::zero(0);
    for (int k = 1; k <= m; ++k) acc = acc + sys.A[n - k].derivative(m - k);
    any = any || !acc.is_zero();
    inner.push_back(acc);
  }
  if (any) {
    std::vector<double> nu(Q.size(), 0.0);
    for (int m = 1; m < n; ++m) {
      const TruncSeries& sm = inner[m - 1];
      if (sm.is_zero()) continue;
      SeriesEvaluator ev(sm);
      auto g = [&](cplx xi) {
        const double d = 1.0 - std::norm(xi);
        return cplx{std::pow(std::abs(ev(xi)), p) * W(d) / std::pow(d, p + s), 0.0};
      };
      for (std::size_t i = 0; i < Q.size(); ++i) {
        nu[i] += outer[i] * std::abs(iterated_radial_integral(g, Q.nodes[i], m));
      }
    }
    t.c1 = mobius_localized_sup(nu, Q, S, W, 2.0, 2).value;
  }

  if (!sys.rhs.is_zero()) {
    SeriesEvaluator an(sys.rhs);
    auto g = [&](cplx xi) { return an(xi); };
    std::vector<double> nu(Q.size());
    for (std::size_t i = 0; i < Q.size(); ++i) {
      nu[i] = outer[i] * std::pow(std::abs(iterated_radial_integral(g, Q.nodes[i], n - 1)), p);
    }
    t.c2 = mobius_localized_sup(nu, Q, S, W, 2.0, 2).value;
  }
  return t;
}

ConstantsReport assemble(std::string theorem, const Triple& fine, const Triple& coarse, double threshold,
                         double finite_threshold, MVariant variant) {
  ConstantsReport rep;
  rep.theorem = std::move(theorem);
  rep.variant = variant;
  rep.threshold = threshold;
  const Refined r0 = refine(fine.c0, coarse.c0, finite_threshold);
  const Refined r1 = refine(fine.c1, coarse.c1, finite_threshold);
  const Refined r2 = refine(fine.c2, coarse.c2, finite_threshold);
  rep.c0 = r0.fine;
  rep.c1 = r1.fine;
  rep.c2 = r2.fine;
  rep.delta0 = r0.delta;
  rep.delta1 = r1.delta;
  rep.delta2 = r2.delta;
  rep.smallness_ok = rep.c0 < threshold && rep.c1 < threshold;
  rep.finiteness_ok = r0.finite && r1.finite && r2.finite;
  return rep;
}

}  // namespace

ConstantsReport theorem31_constants(const ODESystem& sys, const SpaceParams& sp, const SupSampleSet& S,
                                    const DiscQuadrature& Q, MVariant variant, double threshold,
                                    double finite_threshold) {
  sys.validate();
  const Coarse c = coarser_rules(S, Q);
  return assemble("3.1", thm31_at(sys, sp, S, Q, variant), thm31_at(sys, sp, c.S, c.Q, variant), threshold,
                  finite_threshold, variant);
}

ConstantsReport theorem32_constants(const ODESystem& sys, const SpaceParams& sp, const SupSampleSet& S,
                                    const DiscQuadrature& Q, double threshold, double finite_threshold) {
  sys.validate();
  const Coarse c = coarser_rules(S, Q);
  return assemble("3.2", thm32_at(sys, sp, S, Q), thm32_at(sys, sp, c.S, c.Q), threshold, finite_threshold,
                  MVariant::Proof);
}

bool verify_lemma33(const std::vector<double>& values, double m) {
  if (!(m > 0.0)) throw std::invalid_argument("verify_lemma33: m must be positive");
  double sum = 0.0;
  double sum_m = 0.0;
  for (double v : values) {
    if (!(v >= 0.0)) throw std::invalid_argument("verify_lemma33: values must be nonnegative");
    sum += v;
    sum_m += std::pow(v, m);
  }
  const double lhs = std::pow(sum, m);
  const double count = static_cast<double>(values.size());
  const double rhs = m <= 1.0 ? sum_m : std::pow(count, m - 1.0) * sum_m;
  return lhs <= rhs * (1.0 + 1e-12);
}

double lemma34_residual(const TruncSeries& f, const TruncSeries& h, int n) {
  if (n < 0) throw std::invalid_argument("lemma34_residual: n must be >= 0");
  const int deg = f.degree() + h.degree();
  const TruncSeries lhs = multiply(f.derivative(n), h, deg);
  TruncSeries rhs = TruncSeries::zero(deg);
  // the alternating sum cancels, so rounding scales with its largest term
  double scale = std::max(1.0, max_abs_coeff(lhs));
  for (int i = 0; i <= n; ++i) {
    const double sign = (i % 2 == 0) ? 1.0 : -1.0;
    const TruncSeries term = cplx{sign * binomial(n, i), 0.0} * multiply(f, h.derivative(i), deg).derivative(n - i);
    scale = std::max(scale, max_abs_coeff(term));
    rhs = rhs + term;
  }
  return max_abs_coeff(lhs - rhs) / scale;
}

std::vector<PointwiseCheck> verify_lemma35(const TruncSeries& f, int n, const SpaceParams& sp,
                                           const SupSampleSet& a_set, const DiscQuadrature& Q,
                                           double slack) {
  if (n < 1) throw std::invalid_argument("verify_lemma35: n must be >= 1");
  const TruncSeries dn = f.derivative(n);
  SeriesEvaluator ev(dn);
  const double p = sp.p;
  const double e = p * n - 4.0 + sp.s;
  std::vector<double> nu(Q.size());
  for (std::size_t i = 0; i < Q.size(); ++i) {
    const cplx z = Q.nodes[i];
    nu[i] = Q.weights[i] * std::pow(std::abs(ev(z)), p) * std::pow(1.0 - std::norm(z), e);
  }
  std::vector<PointwiseCheck> out;
  for (const cplx& a : a_set.points) {
    PointwiseCheck c;
    c.a = a;
    c.left = std::pow(std::abs(ev(a)), p) * std::pow(1.0 - std::norm(a), e + 2.0);
    for (std::size_t i = 0; i < Q.size(); ++i) {
      if (nu[i] == 0.0) continue;
      const double d = mobius_defect(a, Q.nodes[i]);
      c.right += nu[i] * d * d;
    }
    c.pass = c.left <= slack * c.right;
    out.push_back(c);
  }
  return out;
}

ComparabilityReport verify_lemma36(const TruncSeries& f, int n, const SpaceParams& sp,
                                   const SupSampleSet& S, const DiscQuadrature& Q, double slack,
                                   double finite_threshold) {
  if (n < 0) throw std::invalid_argument("verify_lemma36: n must be >= 0");
  const Coarse c = coarser_rules(S, Q);
  const TruncSeries dn = f.derivative(n);
  SeriesEvaluator ev(dn);
  const double p = sp.p;

  auto sup_ratio = [&](const SupSampleSet& SS, const DiscQuadrature& QQ, double norm) {
    if (dn.is_zero()) return 0.0;
    double best = 0.0;
    auto visit = [&](cplx z) {
      const double d = 1.0 - std::norm(z);
      const double growth = std::pow(sp.W(d) / std::pow(d, p * n + sp.s), 1.0 / p);
      best = std::max(best, std::abs(ev(z)) / (norm * growth));
    };
    for (const cplx& z : QQ.nodes) visit(z);
    for (const cplx& z : SS.points) visit(z);
    return best;
  };
  const Refined norm = refine(besov_morrey_norm(f, sp, S, Q), besov_morrey_norm(f, sp, c.S, c.Q),
                              finite_threshold);
  const Refined ratio =
      refine(sup_ratio(S, Q, norm.fine), sup_ratio(c.S, c.Q, norm.coarse), finite_threshold);

  ComparabilityReport rep;
  rep.label = "lemma36 n=" + std::to_string(n);
  rep.left = ratio.fine;
  rep.right = norm.fine;
  rep.ratio = ratio.fine;
  rep.slack = slack;
  rep.mode = CompareMode::OneSided;
  rep.left_delta = ratio.delta;
  rep.right_delta = norm.delta;
  rep.refinement_delta = std::max(ratio.delta, norm.delta);
  rep.left_finite = ratio.finite;
  rep.right_finite = norm.finite;
  if (dn.is_zero()) {
    rep.classification = "degenerate";
    rep.pass = true;
  } else if (norm.finite) {
    rep.classification = ratio.finite ? "finite" : "mixed";
    rep.pass = ratio.fine <= slack;
  } else {
    rep.classification = "diverging";
    rep.pass = true;
  }
  return rep;
}

MembershipReport membership_check(const TruncSeries& f, const SpaceParams& sp, const LabConfig& cfg) {
  MembershipReport rep;
  rep.box = evaluate_refined(
      f, [&](const TruncSeries& g, const Grids& gr) { return box_functional(g, sp, gr); }, cfg);
  rep.norm = evaluate_refined(
      f, [&](const TruncSeries& g, const Grids& gr) { return besov_morrey_norm(g, sp, gr.S, gr.Q); },
      cfg);
  rep.member = rep.box.finite && rep.norm.finite;
  return rep;
}

std::vector<TruncSeries> basis_solutions(const ODESystem& sys, int N, std::uint64_t seed) {
  sys.validate();
  std::vector<TruncSeries> out;
  for (int k = 0; k < sys.n; ++k) {
    ODESystem unit = sys;
    unit.init.assign(sys.n, cplx{0.0, 0.0});
    unit.init[k] = 1.0;
    out.push_back(solve_ode_series(unit, N));
  }
  std::mt19937_64 rng(seed);
  auto uniform = [&rng] { return 2.0 * unit_uniform(rng) - 1.0; };
  ODESystem mix = sys;
  for (auto& v : mix.init) v = cplx{uniform(), uniform()};
  out.push_back(solve_ode_series(mix, N));
  return out;
}

}  // namespace holoform
