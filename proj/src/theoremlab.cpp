#include "holoform/theoremlab.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace holoform {

namespace {

std::string fmt_num(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

TruncSeries cut(const TruncSeries& f, int N) {
  return f.degree() > N ? f.truncated(N) : f;
}

}  // namespace

Resolution Resolution::coarser() const {
  Resolution r = *this;
  r.N = std::max(1, N / 2);
  r.quad_J = std::max(1, quad_J - 1);
  r.quad_M = std::max(8, quad_M / 2);
  r.sup_J = std::max(1, sup_J - 1);
  r.arc_levels = std::max(1, arc_levels - 1);
  r.box_depth = std::max(0, box_depth - 1);
  return r;
}

Grids Grids::build(const Resolution& r) {
  Grids g;
  g.res = r;
  g.Q = disc_quadrature(r.quad_J, r.quad_M);
  g.S = sup_samples(r.sup_J, r.sup_rot);
  g.arcs = dyadic_arcs(r.arc_levels, r.arc_rot);
  g.box = BoxRule{r.box_depth, r.box_angles};
  return g;
}

Refined refine(double fine, double coarse, double threshold) {
  Refined r;
  r.fine = fine;
  r.coarse = coarse;
  if (fine == 0.0 && coarse == 0.0) {
    r.delta = 0.0;
  } else if (coarse == 0.0 || !std::isfinite(fine) || !std::isfinite(coarse)) {
    r.delta = std::numeric_limits<double>::infinity();
  } else {
    r.delta = std::abs(fine - coarse) / std::abs(coarse);
  }
  r.finite = r.delta < threshold;
  return r;
}

ComparabilityReport compare(std::string label, const Refined& left, const Refined& right, double slack,
                            CompareMode mode) {
  ComparabilityReport rep;
  rep.label = std::move(label);
  rep.left = left.fine;
  rep.right = right.fine;
  rep.slack = slack;
  rep.mode = mode;
  rep.left_delta = left.delta;
  rep.right_delta = right.delta;
  rep.refinement_delta = std::max(left.delta, right.delta);
  rep.left_finite = left.finite;
  rep.right_finite = right.finite;
  if (rep.right > 0.0) {
    rep.ratio = rep.left / rep.right;
  } else {
    rep.ratio = rep.left == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  }

  if (rep.left == 0.0 && rep.right == 0.0) {
    rep.classification = "degenerate";
    rep.pass = true;
  } else if (left.finite && right.finite) {
    rep.classification = "finite";
    rep.pass = mode == CompareMode::TwoSided ? (rep.ratio >= 1.0 / slack && rep.ratio <= slack)
                                             : rep.ratio <= slack;
  } else if (!left.finite && !right.finite) {
    rep.classification = "diverging";
    rep.pass = true;
  } else {
    rep.classification = "mixed";
    rep.pass = mode == CompareMode::OneSided && !right.finite;
  }
  return rep;
}

double thm21_t_bound(const SpaceParams& sp, bool relaxed) {
  if (relaxed && sp.p == 2.0) {
    return std::max({0.0, (1.0 - sp.s) / 2.0, (sp.sigma - sp.s) / 2.0});
  }
  return (2.0 - sp.s) / sp.p + sp.p / (sp.p - 1.0);
}

Refined evaluate_refined(const TruncSeries& f, const FunctionalFn& fn, const LabConfig& cfg) {
  const Grids fine = Grids::build(cfg.fine);
  const Grids coarse = Grids::build(cfg.fine.coarser());
  const double vf = fn(cut(f, fine.res.N), fine);
  const double vc = fn(cut(f, coarse.res.N), coarse);
  return refine(vf, vc, cfg.finite_threshold);
}

double thm21_functional(const TruncSeries& f, const SpaceParams& sp, const FracParams& fp,
                        const Grids& g) {
  return carleson_constant(frac_measure_density(f, fp, sp), sp.W, g.arcs, g.box).sup_value;
}

double morrey_functional(const TruncSeries& f, const SpaceParams& sp, const Grids& g) {
  return morrey_term(f, sp, g.S, g.Q).value;
}

double box_functional(const TruncSeries& f, const SpaceParams& sp, const Grids& g) {
  return box_seminorm(f, sp, g.arcs, g.box).sup_value;
}

double kernel_functional(const TruncSeries& f, const SpaceParams& sp, double q_exp, const Grids& g) {
  return kernel_carleson(besov_density(f, sp), sp.W, q_exp, g.S, g.Q).value;
}

double cor29_functional(const TruncSeries& f, int n, const SpaceParams& sp, const Grids& g,
                        bool literal) {
  if (n < 1) throw std::invalid_argument("cor29: n must be >= 1");
  const TruncSeries dn = f.derivative(n);
  if (dn.is_zero()) return 0.0;
  SeriesEvaluator ev(dn);
  const double e = n * sp.p - 4.0 + sp.s;
  const DiscQuadrature& Q = g.Q;
  std::vector<double> nu(Q.size());
  for (std::size_t i = 0; i < Q.size(); ++i) {
    const cplx z = Q.nodes[i];
    const double fz = std::pow(std::norm(ev(z)), 0.5 * sp.p);
    const double radial = literal ? 1.0 - std::pow(std::abs(z), e) : std::pow(1.0 - std::norm(z), e);
    nu[i] = Q.weights[i] * fz * radial;
  }
  return mobius_localized_sup(nu, Q, g.S, sp.W, literal ? 1.0 : 2.0, 2).value;
}

std::vector<ComparabilityReport> verify_thm21(const TruncSeries& f, const SpaceParams& sp,
                                              const std::vector<double>& t_list, double b,
                                              const LabConfig& cfg) {
  const double bound = thm21_t_bound(sp, cfg.relaxed_t);
  for (double t : t_list) {
    if (!(t > bound)) {
      throw std::range_error("verify_thm21: t = " + fmt_num(t) + " must exceed " + fmt_num(bound));
    }
  }
  const Refined right = evaluate_refined(
      f, [&](const TruncSeries& g, const Grids& gr) { return morrey_functional(g, sp, gr); }, cfg);
  std::vector<ComparabilityReport> out;
  for (double t : t_list) {
    const FracParams fp = FracParams::make(t, b);
    const Refined left = evaluate_refined(
        f, [&](const TruncSeries& g, const Grids& gr) { return thm21_functional(g, sp, fp, gr); }, cfg);
    out.push_back(compare("thm21 t=" + fmt_num(t), left, right, cfg.slack));
  }
  return out;
}

ComparabilityReport verify_cor23(const TruncSeries& f, const SpaceParams& sp1, double s2, double b,
                                 const LabConfig& cfg) {
  const double order = (s2 - sp1.s) / sp1.p;
  if (!(order > 0.0)) {
    throw std::domain_error("verify_cor23: unsupported order (s2 - s1)/p = " + fmt_num(order) +
                            "; the coefficient transform needs a positive order");
  }
  SpaceParams sp2 = sp1;
  sp2.s = s2;
  const FracParams fp = FracParams::make(order, b);
  const Refined left = evaluate_refined(
      f, [&](const TruncSeries& g, const Grids& gr) { return box_functional(g, sp1, gr); }, cfg);
  const Refined right = evaluate_refined(
      f,
      [&](const TruncSeries& g, const Grids& gr) {
        return box_functional(frac_deriv_coeff(g, fp), sp2, gr);
      },
      cfg);
  return compare("cor23 s1=" + fmt_num(sp1.s) + " s2=" + fmt_num(s2), left, right, cfg.slack);
}

ComparabilityReport verify_cor29(const TruncSeries& f, int n, const SpaceParams& sp,
                                 const LabConfig& cfg) {
  const Refined left = evaluate_refined(
      f,
      [&](const TruncSeries& g, const Grids& gr) {
        return cor29_functional(g, n, sp, gr, cfg.literal_cor29);
      },
      cfg);
  const Refined right = evaluate_refined(
      f, [&](const TruncSeries& g, const Grids& gr) { return box_functional(g, sp, gr); }, cfg);
  return compare(std::string("cor29 n=") + std::to_string(n) + (cfg.literal_cor29 ? " literal" : ""),
                 left, right, cfg.slack);
}

Lemma28Resolution Lemma28Resolution::coarser() const {
  Lemma28Resolution r = *this;
  r.inner_J = std::max(1, inner_J - 1);
  r.inner_M = std::max(8, inner_M / 2);
  r.box_depth = std::max(0, box_depth - 1);
  r.arc_levels = std::max(1, arc_levels - 1);
  return r;
}

std::vector<std::string> lemma28_warnings(const SpaceParams& sp, double alpha, double b) {
  std::vector<std::string> w = sp.warnings();
  if (!(alpha > (2.0 - sp.s) / sp.p + sp.p / (sp.p - 1.0))) w.push_back("alpha <= (2-s)/p + p/(p-1)");
  if (!(b > 2.0 + sp.p + (sp.s - 2.0) / sp.p)) w.push_back("b <= 2 + p + (s-2)/p");
  return w;
}

namespace {

struct PointHash {
  std::size_t operator()(const cplx& z) const {
    std::uint64_t a;
    std::uint64_t b;
    const double re = z.real();
    const double im = z.imag();
    std::memcpy(&a, &re, sizeof a);
    std::memcpy(&b, &im, sizeof b);
    return std::hash<std::uint64_t>{}(a ^ (b * 0x9e3779b97f4a7c15ULL));
  }
};

struct Lemma28Pair {
  double input;
  double output;
};

Lemma28Pair lemma28_constants(const std::function<cplx(cplx)>& profile, const SpaceParams& sp,
                              double alpha, double b, const Lemma28Resolution& res) {
  const DiscQuadrature inner = disc_quadrature(res.inner_J, res.inner_M);
  const std::vector<Arc> arcs = dyadic_arcs(res.arc_levels, res.arc_rot);
  const BoxRule rule{res.box_depth, res.box_angles};
  const double p = sp.p;
  const double ein = p - 2.0 + sp.s;
  const double eout = p * alpha - 2.0 + sp.s;

  const Density input{"lemma28 input", [&](cplx z) {
                        return std::pow(std::abs(profile(z)), p) * std::pow(1.0 - std::norm(z), ein);
                      }};
  // Dyadic boxes share nodes; Tf is memoized per node.
  std::unordered_map<cplx, double, PointHash> cache;
  const Density output{"lemma28 output", [&](cplx z) {
                         auto it = cache.find(z);
                         if (it != cache.end()) return it->second;
                         const cplx tf = T_operator_pullback_at(profile, alpha, b, z, inner);
                         const double v = std::pow(std::abs(tf), p) * std::pow(1.0 - std::norm(z), eout);
                         cache.emplace(z, v);
                         return v;
                       }};
  return {carleson_constant(input, sp.W, arcs, rule).sup_value,
          carleson_constant(output, sp.W, arcs, rule).sup_value};
}

}  // namespace

ComparabilityReport verify_lemma28(const std::function<cplx(cplx)>& profile, const std::string& name,
                                   const SpaceParams& sp, double alpha, double b, double slack,
                                   const Lemma28Resolution& res, double finite_threshold) {
  const Lemma28Pair fine = lemma28_constants(profile, sp, alpha, b, res);
  const Lemma28Pair coarse = lemma28_constants(profile, sp, alpha, b, res.coarser());
  return compare("lemma28 " + name, refine(fine.output, coarse.output, finite_threshold),
                 refine(fine.input, coarse.input, finite_threshold), slack, CompareMode::OneSided);
}

std::vector<ComparabilityReport> verify_lemma25(const WeightFun& W, double sigma,
                                                const std::vector<std::pair<double, double>>& pairs) {
  std::vector<ComparabilityReport> out;
  out.reserve(pairs.size());
  for (const auto& [t, r] : pairs) {
    const DoublingRatio d = doubling_ratio(W, t, r, sigma);
    ComparabilityReport rep;
    rep.label = "lemma25 t=" + fmt_num(t) + " r=" + fmt_num(r);
    rep.left = d.ratio;
    rep.right = d.bound;
    rep.ratio = d.ratio / d.bound;
    rep.slack = 1.0;
    rep.mode = CompareMode::OneSided;
    rep.classification = "finite";
    // relative rounding allowance for the t = r end
    rep.pass = d.ratio <= d.bound * (1.0 + 1e-12);
    out.push_back(rep);
  }
  return out;
}

ComparabilityReport verify_gap_norm(const GapSpec& spec, double p, double q_wt, const DiscQuadrature& Q,
                                    int N, double slack, double finite_threshold) {
  if (!(q_wt > -1.0)) throw std::domain_error("verify_gap_norm: q_wt must exceed -1");
  if (!(p > 1.0)) throw std::domain_error("verify_gap_norm: p must exceed 1");
  const TruncSeries f = make_test_function(spec, N);
  double left = 0.0;
  long long n = 1;
  for (int k = 0; k <= spec.k_max && n <= N; ++k) {
    left += std::pow(static_cast<double>(n), p - q_wt - 1.0) * std::pow(std::exp2(-k * spec.beta), p);
    n *= spec.ratio;
  }
  auto integral = [&](const DiscQuadrature& R) {
    SeriesEvaluator fp(f.derivative());
    double sum = 0.0;
    for (std::size_t i = 0; i < R.size(); ++i) {
      const cplx z = R.nodes[i];
      sum += R.weights[i] * std::pow(std::norm(fp(z)), 0.5 * p) * std::pow(1.0 - std::norm(z), q_wt);
    }
    return sum;
  };
  const double right_fine = integral(Q);
  const double right_coarse = integral(disc_quadrature(std::max(1, Q.J - 1), std::max(8, Q.M / 2)));
  std::ostringstream label;
  label << "gap beta=" << spec.beta << " p=" << p << " q=" << q_wt;
  // the coefficient sum is exact
  return compare(label.str(), refine(left, left, finite_threshold),
                 refine(right_fine, right_coarse, finite_threshold), slack);
}

std::pair<double, double> beta_ratio_estimate(int j, double b, int m) {
  return {1.0 - decomposition_beta_ratio(j, b, m), (b + 1.0) * m / (j + m + 1.0)};
}

double stirling_ratio(int n, double c) {
  return std::exp(log_gamma(n + c) - log_gamma(n + 1.0) - (c - 1.0) * std::log(static_cast<double>(n)));
}

double decomposition_residual(const TruncSeries& f, const FracParams& fp) {
  const Decomposition d = decomposition(f, fp);
  const TruncSeries r = f.derivative() - d.g - d.s_m - d.h.derivative();
  double worst = 0.0;
  for (const cplx& c : r.coeffs()) worst = std::max(worst, std::abs(c));
  return worst;
}

bool CoherenceResult::all_finite() const {
  return std::all_of(functionals.begin(), functionals.end(),
                     [](const auto& f) { return f.second.finite; });
}

bool CoherenceResult::all_diverging() const {
  return std::none_of(functionals.begin(), functionals.end(),
                      [](const auto& f) { return f.second.finite; });
}

bool CoherenceResult::pairs_pass() const {
  return std::all_of(pairs.begin(), pairs.end(), [](const auto& r) { return r.pass; });
}

CoherenceResult coherence_suite(const TruncSeries& f, const SpaceParams& sp, double t, double b, int n,
                                const LabConfig& cfg) {
  const FracParams fp = FracParams::make(t, b);
  const Grids fine = Grids::build(cfg.fine);
  const Grids coarse = Grids::build(cfg.fine.coarser());
  const TruncSeries ff = cut(f, fine.res.N);
  const TruncSeries fc = cut(f, coarse.res.N);
  auto run = [&](const FunctionalFn& fn) {
    return refine(fn(ff, fine), fn(fc, coarse), cfg.finite_threshold);
  };

  CoherenceResult out;
  out.functionals.emplace_back(
      "thm21", run([&](const TruncSeries& g, const Grids& gr) { return thm21_functional(g, sp, fp, gr); }));
  out.functionals.emplace_back("cor29", run([&](const TruncSeries& g, const Grids& gr) {
                                 return cor29_functional(g, n, sp, gr, cfg.literal_cor29);
                               }));
  out.functionals.emplace_back("lemma24", run([&](const TruncSeries& g, const Grids& gr) {
                                 return kernel_functional(g, sp, sp.sigma, gr);
                               }));
  out.functionals.emplace_back(
      "lemma26", run([&](const TruncSeries& g, const Grids& gr) { return box_functional(g, sp, gr); }));
  out.functionals.emplace_back(
      "morrey", run([&](const TruncSeries& g, const Grids& gr) { return morrey_functional(g, sp, gr); }));

  // pairs among the four characterizations, plus the box form against the norm
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      const auto& a = out.functionals[i];
      const auto& c = out.functionals[j];
      out.pairs.push_back(compare(a.first + "/" + c.first, a.second, c.second, cfg.slack));
    }
  }
  out.pairs.push_back(
      compare("lemma26/morrey", out.functionals[3].second, out.functionals[4].second, cfg.slack));
  return out;
}

}  // namespace holoform
