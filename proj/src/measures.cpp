#include "holoform/measures.hpp"

#include <cmath>
#include <memory>
#include <sstream>
#include <stdexcept>

namespace holoform {

std::vector<std::string> SpaceParams::warnings() const {
  std::vector<std::string> w;
  if (!(s > 0.0 && s < 1.0)) w.push_back("s outside (0, 1)");
  if (!(sigma > 0.0 && sigma < 2.0 * s)) w.push_back("sigma outside (0, 2s)");
  if (!(p > std::max(1.0, 1.0 + sigma - s))) w.push_back("p <= max(1, 1 + sigma - s)");
  return w;
}

Density Density::zero() {
  return Density{"zero", [](cplx) { return 0.0; }};
}

Density Density::constant(double c) {
  if (!(c >= 0.0)) throw std::invalid_argument("Density::constant: c must be nonnegative");
  std::ostringstream os;
  os << "const:" << c;
  return Density{os.str(), [c](cplx) { return c; }};
}

SupResult sup_over(const SupSampleSet& S, const std::function<double(cplx)>& F) {
  SupResult r;
  bool first = true;
  for (const cplx& a : S.points) {
    const double v = F(a);
    if (first || v > r.value) {
      r.value = v;
      r.argmax = a;
      first = false;
    }
  }
  return r;
}

SupResult mobius_localized_sup(const std::vector<double>& weighted_density, const DiscQuadrature& Q,
                               const SupSampleSet& S, const WeightFun& W, double a_power,
                               int defect_power) {
  if (weighted_density.size() != Q.size()) {
    throw std::invalid_argument("mobius_localized_sup: node count mismatch");
  }
  std::vector<std::size_t> live;
  for (std::size_t i = 0; i < Q.size(); ++i) {
    if (weighted_density[i] != 0.0) live.push_back(i);
  }
  return sup_over(S, [&](cplx a) {
    const double da = 1.0 - std::norm(a);
    double sum = 0.0;
    for (std::size_t i : live) {
      const double defect = mobius_defect(a, Q.nodes[i]);
      double dk = 1.0;
      for (int k = 0; k < defect_power; ++k) dk *= defect;
      sum += weighted_density[i] * dk;
    }
    return std::pow(da, a_power) / W(da) * sum;
  });
}

double besov_norm(const TruncSeries& f, const SpaceParams& sp, const DiscQuadrature& Q) {
  SeriesEvaluator fp(f.derivative());
  const double e = sp.p - 2.0 + sp.s;
  double sum = 0.0;
  for (std::size_t i = 0; i < Q.size(); ++i) {
    const cplx z = Q.nodes[i];
    const double d2 = std::norm(fp(z));
    if (d2 == 0.0) continue;
    sum += Q.weights[i] * std::pow(d2, 0.5 * sp.p) * std::pow(1.0 - std::norm(z), e);
  }
  return std::pow(std::pow(std::abs(f.coeff(0)), sp.p) + sum, 1.0 / sp.p);
}

SupResult morrey_term(const TruncSeries& f, const SpaceParams& sp, const SupSampleSet& S,
                      const DiscQuadrature& Q) {
  const TruncSeries df = f.derivative();
  if (df.is_zero()) {
    SupResult r;
    r.argmax = S.points.empty() ? cplx{} : S.points.front();
    return r;
  }
  SeriesEvaluator fp(df);
  const double e = sp.p - 2.0 + sp.s;
  std::vector<double> base(Q.size());
  for (std::size_t i = 0; i < Q.size(); ++i) {
    base[i] = Q.weights[i] * std::pow(1.0 - std::norm(Q.nodes[i]), e);
  }
  const double half_p = 0.5 * sp.p;
  return sup_over(S, [&](cplx a) {
    const double da = 1.0 - std::norm(a);
    const cplx ca = std::conj(a);
    double sum = 0.0;
    for (std::size_t i = 0; i < Q.size(); ++i) {
      const cplx z = Q.nodes[i];
      const cplx den = 1.0 - ca * z;
      const cplx w = (a - z) / den;
      const double dd = std::norm(den);
      // |f'(phi_a(z)) phi_a'(z)|^2 = |f'(w)|^2 (1-|a|^2)^2 / |1 - conj(a) z|^4
      const double g2 = std::norm(fp(w)) * da * da / (dd * dd);
      if (g2 == 0.0) continue;
      sum += base[i] * std::pow(g2, half_p);
    }
    return std::pow(da, sp.s) / sp.W(da) * sum;
  });
}

double besov_morrey_norm(const TruncSeries& f, const SpaceParams& sp, const SupSampleSet& S,
                         const DiscQuadrature& Q) {
  const double term = morrey_term(f, sp, S, Q).value;
  return std::pow(std::pow(std::abs(f.coeff(0)), sp.p) + term, 1.0 / sp.p);
}

CarlesonReport carleson_constant(const Density& d, const WeightFun& W, const std::vector<Arc>& arcs,
                                 const BoxRule& rule) {
  if (arcs.empty()) throw std::invalid_argument("carleson_constant: empty arc family");
  CarlesonReport rep;
  bool first = true;
  for (const Arc& arc : arcs) {
    const DiscQuadrature bq = box_quadrature(CarlesonBox{arc}, rule.depth, rule.angles);
    double mass = 0.0;
    for (std::size_t i = 0; i < bq.size(); ++i) mass += bq.weights[i] * d.eval(bq.nodes[i]);
    const double ratio = mass / W(arc.len);
    rep.per_arc.emplace_back(arc, ratio);
    if (first || ratio > rep.sup_value) {
      rep.sup_value = ratio;
      rep.argmax = arc;
      first = false;
    }
  }
  return rep;
}

Density besov_density(const TruncSeries& f, const SpaceParams& sp) {
  const TruncSeries df = f.derivative();
  if (df.is_zero()) return Density::zero();
  auto fp = std::make_shared<SeriesEvaluator>(df);
  const double p = sp.p;
  const double e = sp.p - 2.0 + sp.s;
  return Density{"besov", [fp, p, e](cplx z) {
                   const double d2 = std::norm((*fp)(z));
                   if (d2 == 0.0) return 0.0;
                   return std::pow(d2, 0.5 * p) * std::pow(1.0 - std::norm(z), e);
                 }};
}

CarlesonReport box_seminorm(const TruncSeries& f, const SpaceParams& sp, const std::vector<Arc>& arcs,
                            const BoxRule& rule) {
  return carleson_constant(besov_density(f, sp), sp.W, arcs, rule);
}

SupResult kernel_carleson(const std::vector<double>& d_at_nodes, const WeightFun& W, double q_exp,
                          const SupSampleSet& S, const DiscQuadrature& Q) {
  if (d_at_nodes.size() != Q.size()) throw std::invalid_argument("kernel_carleson: node count mismatch");
  std::vector<std::size_t> live;
  for (std::size_t i = 0; i < Q.size(); ++i) {
    if (d_at_nodes[i] != 0.0) live.push_back(i);
  }
  const double half_q = 0.5 * q_exp;
  return sup_over(S, [&](cplx a) {
    const double da = 1.0 - std::norm(a);
    const cplx ca = std::conj(a);
    double sum = 0.0;
    for (std::size_t i : live) {
      const double k2 = da * da / std::norm(1.0 - ca * Q.nodes[i]);
      sum += Q.weights[i] * d_at_nodes[i] * std::pow(k2, half_q);
    }
    return sum / W(da);
  });
}

SupResult kernel_carleson(const Density& d, const WeightFun& W, double q_exp, const SupSampleSet& S,
                          const DiscQuadrature& Q) {
  std::vector<double> vals(Q.size());
  for (std::size_t i = 0; i < Q.size(); ++i) vals[i] = d.eval(Q.nodes[i]);
  return kernel_carleson(vals, W, q_exp, S, Q);
}

Density frac_measure_density(const TruncSeries& f, const FracParams& fp, const SpaceParams& sp) {
  const TruncSeries ft = frac_deriv_coeff(f, fp);
  if (ft.is_zero()) return Density::zero();
  auto ev = std::make_shared<SeriesEvaluator>(ft);
  const double p = sp.p;
  const double e = sp.p * fp.t - 2.0 + sp.s;
  std::ostringstream os;
  os << "frac:t=" << fp.t << ",b=" << fp.b;
  return Density{os.str(), [ev, p, e](cplx z) {
                   const double d2 = std::norm((*ev)(z));
                   if (d2 == 0.0) return 0.0;
                   return std::pow(d2, 0.5 * p) * std::pow(1.0 - std::norm(z), e);
                 }};
}

double I_ct(double c, double t_exp, cplx z, const DiscQuadrature& Q) {
  if (!(t_exp > -1.0)) throw std::domain_error("I_ct: t must exceed -1");
  if (!(std::norm(z) < 1.0)) throw std::domain_error("I_ct: |z| must be < 1");
  const double half = 0.5 * (2.0 + t_exp + c);
  double sum = 0.0;
  for (std::size_t i = 0; i < Q.size(); ++i) {
    const cplx w = Q.nodes[i];
    sum += Q.weights[i] * std::pow(1.0 - std::norm(w), t_exp) /
           std::pow(std::norm(1.0 - z * std::conj(w)), half);
  }
  return sum;
}

cplx T_operator_at(const std::function<cplx(cplx)>& f, double alpha, double b, cplx z,
                   const DiscQuadrature& Q) {
  if (!(std::norm(z) < 1.0)) throw std::domain_error("T_operator_at: |z| must be < 1");
  const double half = 0.5 * (alpha + b);
  cplx sum{0.0, 0.0};
  for (std::size_t i = 0; i < Q.size(); ++i) {
    const cplx w = Q.nodes[i];
    const cplx fw = f(w);
    if (fw == cplx{}) continue;
    sum += Q.weights[i] * std::pow(1.0 - std::norm(w), b - 1.0) /
           std::pow(std::norm(1.0 - std::conj(w) * z), half) * fw;
  }
  return sum;
}

cplx T_operator_pullback_at(const std::function<cplx(cplx)>& f, double alpha, double b, cplx z,
                            const DiscQuadrature& Q) {
  if (!(std::norm(z) < 1.0)) throw std::domain_error("T_operator_pullback_at: |z| must be < 1");
  const double half = 0.5 * (alpha - b - 2.0);
  const cplx cz = std::conj(z);
  cplx sum{0.0, 0.0};
  for (std::size_t i = 0; i < Q.size(); ++i) {
    const cplx u = Q.nodes[i];
    const cplx den = 1.0 - cz * u;
    const cplx fw = f((z - u) / den);
    if (fw == cplx{}) continue;
    sum += Q.weights[i] * std::pow(1.0 - std::norm(u), b - 1.0) * std::pow(std::norm(den), half) * fw;
  }
  return std::pow(1.0 - std::norm(z), 1.0 - alpha) * sum;
}

double hinf_alpha_norm(const TruncSeries& f, double alpha, const DiscQuadrature& Q,
                       const SupSampleSet& S) {
  if (!(alpha > 0.0)) throw std::domain_error("hinf_alpha_norm: alpha must be positive");
  SeriesEvaluator ev(f);
  double best = 0.0;
  auto visit = [&](cplx z) {
    best = std::max(best, std::abs(ev(z)) * std::pow(1.0 - std::norm(z), alpha));
  };
  for (const cplx& z : Q.nodes) visit(z);
  for (const cplx& z : S.points) visit(z);
  return best;
}

SupResult qk_norm(const TruncSeries& f, const WeightFun& W, const SupSampleSet& S,
                  const DiscQuadrature& Q) {
  const TruncSeries df = f.derivative();
  SupResult r;
  if (df.is_zero()) {
    r.argmax = S.points.empty() ? cplx{} : S.points.front();
    return r;
  }
  SeriesEvaluator fp(df);
  std::vector<double> kg(Q.size());
  for (std::size_t i = 0; i < Q.size(); ++i) {
    kg[i] = Q.weights[i] * W(-0.5 * std::log(std::norm(Q.nodes[i])));
  }
  r = sup_over(S, [&](cplx a) {
    const double da = 1.0 - std::norm(a);
    const cplx ca = std::conj(a);
    double sum = 0.0;
    for (std::size_t i = 0; i < Q.size(); ++i) {
      const cplx w = Q.nodes[i];
      const cplx den = 1.0 - ca * w;
      const double dd = std::norm(den);
      sum += kg[i] * std::norm(fp((a - w) / den)) * da * da / (dd * dd);
    }
    return sum;
  });
  r.value = std::sqrt(r.value);
  return r;
}

}  // namespace holoform
