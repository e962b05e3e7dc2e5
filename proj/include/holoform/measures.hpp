#pragma once

#include <functional>
#include <string>
#include <vector>

#include "holoform/discgeom.hpp"
#include "holoform/series.hpp"
#include "holoform/weights.hpp"

namespace holoform {

struct SpaceParams {
  double p = 2.0;
  double s = 0.5;
  double sigma = 0.4;
  WeightFun W = WeightFun::power(0.3);

  /// Range violations (p > max(1, 1 + sigma - s), sigma in (0, 2s), s in (0, 1)).
  /// Reported, never thrown.
  std::vector<std::string> warnings() const;
};

/// Measure d(z) dA(z) given by a nonnegative density.
struct Density {
  std::string descriptor;
  std::function<double(cplx)> eval;

  static Density zero();
  static Density constant(double c);
};

struct CarlesonReport {
  std::vector<std::pair<Arc, double>> per_arc;
  double sup_value = 0.0;
  Arc argmax;
};

/// Resolution of the box rules used for Carleson sums.
struct BoxRule {
  int depth = 8;
  int angles = 512;
};

/// Maximum of F over the sample points, first maximizer kept.
struct SupResult {
  double value = 0.0;
  cplx argmax{0.0, 0.0};
};

SupResult sup_over(const SupSampleSet& S, const std::function<double(cplx)>& F);

/// sup_a (1-|a|^2)^{a_power} / K(1-|a|^2) * sum_i nu_i (1-|phi_a(z_i)|^2)^{defect_power},
/// with nu_i the quadrature-weighted density at the nodes z_i of Q.
SupResult mobius_localized_sup(const std::vector<double>& weighted_density, const DiscQuadrature& Q,
                               const SupSampleSet& S, const WeightFun& W, double a_power,
                               int defect_power);

/// (|f(0)|^p + int |f'|^p (1-|z|^2)^{p-2+s} dA)^{1/p}.
double besov_norm(const TruncSeries& f, const SpaceParams& sp, const DiscQuadrature& Q);

/// sup_a (1-|a|^2)^s / K(1-|a|^2) * int |f'(phi_a(z))|^p |phi_a'(z)|^p (1-|z|^2)^{p-2+s} dA(z),
/// the Moebius-localized term of the B_p^K(s) norm, without the p-th root.
SupResult morrey_term(const TruncSeries& f, const SpaceParams& sp, const SupSampleSet& S,
                      const DiscQuadrature& Q);

/// (|f(0)|^p + morrey_term)^{1/p}.
double besov_morrey_norm(const TruncSeries& f, const SpaceParams& sp, const SupSampleSet& S,
                         const DiscQuadrature& Q);

/// Per-arc (1/K(|I|)) int_{S(I)} d dA, sup and argmax.
CarlesonReport carleson_constant(const Density& d, const WeightFun& W, const std::vector<Arc>& arcs,
                                 const BoxRule& rule = {});

/// |f'|^p (1-|z|^2)^{p-2+s}.
Density besov_density(const TruncSeries& f, const SpaceParams& sp);

/// carleson_constant of besov_density.
CarlesonReport box_seminorm(const TruncSeries& f, const SpaceParams& sp, const std::vector<Arc>& arcs,
                            const BoxRule& rule = {});

/// sup_a (1/K(1-|a|^2)) int ((1-|a|^2)/|1-conj(a) z|)^q d dA over S.
SupResult kernel_carleson(const Density& d, const WeightFun& W, double q_exp, const SupSampleSet& S,
                          const DiscQuadrature& Q);

/// Same with the density already sampled at the nodes of Q.
SupResult kernel_carleson(const std::vector<double>& d_at_nodes, const WeightFun& W, double q_exp,
                          const SupSampleSet& S, const DiscQuadrature& Q);

/// |f^(t)|^p (1-|z|^2)^{pt-2+s}, f^(t) from frac_deriv_coeff.
Density frac_measure_density(const TruncSeries& f, const FracParams& fp, const SpaceParams& sp);

/// int (1-|w|^2)^t / |1 - z conj(w)|^{2+t+c} dA(w).
double I_ct(double c, double t_exp, cplx z, const DiscQuadrature& Q);

/// Tf(z) = int (1-|w|^2)^{b-1} / |1 - conj(w) z|^{alpha+b} f(w) dA(w), direct quadrature.
cplx T_operator_at(const std::function<cplx(cplx)>& f, double alpha, double b, cplx z,
                   const DiscQuadrature& Q);

/// Tf(z) after the substitution w = phi_z(u):
/// (1-|z|^2)^{1-alpha} int (1-|u|^2)^{b-1} |1 - conj(z) u|^{alpha-b-2} f(phi_z(u)) dA(u).
/// The integrand no longer concentrates near z, so one fixed rule serves every z.
cplx T_operator_pullback_at(const std::function<cplx(cplx)>& f, double alpha, double b, cplx z,
                            const DiscQuadrature& Q);

/// sup |f(z)| (1-|z|^2)^alpha over the nodes of Q and the points of S.
double hinf_alpha_norm(const TruncSeries& f, double alpha, const DiscQuadrature& Q,
                       const SupSampleSet& S);

/// (sup_a int |f'|^2 K(g(z, a)) dA(z))^{1/2}, integrated after z = phi_a(w):
/// int |f'(phi_a(w))|^2 |phi_a'(w)|^2 K(log 1/|w|) dA(w).
SupResult qk_norm(const TruncSeries& f, const WeightFun& W, const SupSampleSet& S,
                  const DiscQuadrature& Q);

}  // namespace holoform
