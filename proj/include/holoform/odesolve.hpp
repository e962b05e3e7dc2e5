#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "holoform/theoremlab.hpp"

namespace holoform {

/// f^(n) + A_{n-1} f^(n-1) + ... + A_0 f = A_n with f^(k)(0) = init[k].
struct ODESystem {
  int n = 1;
  std::vector<TruncSeries> A;  // A_0 .. A_{n-1}
  TruncSeries rhs;             // A_n
  std::vector<cplx> init;      // f(0), f'(0), ..., f^(n-1)(0)

  void validate() const;
};

/// B_j(z) = r^{n-j} A_j(rz), B_n(z) = r^n A_n(rz); f_r solves it with f_r^(k)(0) = r^k f^(k)(0).
struct DilatedSystem {
  double r = 1.0;
  std::vector<TruncSeries> B;
  TruncSeries Bn;

  ODESystem as_system(const std::vector<cplx>& init) const;
};

/// Coefficients c_0..c_N by matching powers; c_k = init_k / k! for k < n.
TruncSeries solve_ode_series(const ODESystem& sys, int N);

/// Coefficients of f^(n) + sum A_j f^(j) - A_n through degree deg(f) - n.
TruncSeries equation_residual(const ODESystem& sys, const TruncSeries& f);

double max_abs_coeff(const TruncSeries& f);

DilatedSystem dilate_system(const ODESystem& sys, double r);

/// d-fold iterated integral of g along [0, z], by the collapse
/// z^d int_0^1 (1-u)^{d-1}/(d-1)! g(zu) du with 64-point Gauss-Legendre.
/// d = 0 returns g(z).
cplx iterated_radial_integral(const std::function<cplx(cplx)>& g, cplx z, int d);

enum class MVariant { Proof, Statement };

struct ConstantsReport {
  std::string theorem;  // "3.1" or "3.2"
  double c0 = 0.0;      // M0 or N0
  double c1 = 0.0;      // M1 or N1
  double c2 = 0.0;      // M2 or N2
  double delta0 = 0.0;
  double delta1 = 0.0;
  double delta2 = 0.0;
  double threshold = 1e-2;
  bool smallness_ok = false;
  bool finiteness_ok = false;
  MVariant variant = MVariant::Proof;
};

/// M0, M1 = sum_{j=1}^{n-1} ||A_j||_{H^inf_{n-j}}, M2. Deltas against the rule
/// one step coarser (J-1, M/2, sup depth - 1).
ConstantsReport theorem31_constants(const ODESystem& sys, const SpaceParams& sp, const SupSampleSet& S,
                                    const DiscQuadrature& Q, MVariant variant = MVariant::Proof,
                                    double threshold = 1e-2, double finite_threshold = 0.25);

/// N0, N1 (unweighted inner sum), N2 with iterated integrals along [0, z].
ConstantsReport theorem32_constants(const ODESystem& sys, const SpaceParams& sp, const SupSampleSet& S,
                                    const DiscQuadrature& Q, double threshold = 1e-2,
                                    double finite_threshold = 0.25);

/// (sum a)^m <= sum a^m for m <= 1, (sum a)^m <= N^{m-1} sum a^m for m >= 1.
bool verify_lemma33(const std::vector<double>& values, double m);

/// max coefficient of f^(n) h - sum_i (-1)^i C(n,i) (f h^(i))^(n-i), relative to the
/// largest coefficient among f^(n) h and the terms of the sum.
double lemma34_residual(const TruncSeries& f, const TruncSeries& h, int n);

struct PointwiseCheck {
  cplx a;
  double left = 0.0;
  double right = 0.0;
  bool pass = false;
};

/// |f^(n)(a)|^p (1-|a|^2)^{pn-2+s} <= slack * int |f^(n)|^p (1-|z|^2)^{pn-4+s} (1-|phi_a|^2)^2 dA.
std::vector<PointwiseCheck> verify_lemma35(const TruncSeries& f, int n, const SpaceParams& sp,
                                           const SupSampleSet& a_set, const DiscQuadrature& Q,
                                           double slack = 8.0);

/// sup |f^(n)(z)| / (||f|| (K(1-|z|^2)/(1-|z|^2)^{pn+s})^{1/p}) over nodes and S.
/// left = that sup, right = 1; passes when the sup is <= slack or the norm is
/// not finite-flagged.
ComparabilityReport verify_lemma36(const TruncSeries& f, int n, const SpaceParams& sp,
                                   const SupSampleSet& S, const DiscQuadrature& Q, double slack = 100.0,
                                   double finite_threshold = 0.25);

struct MembershipReport {
  Refined box;     // Lemma 2.6 sup
  Refined norm;    // B_p^K(s) norm
  bool member = false;
};

MembershipReport membership_check(const TruncSeries& f, const SpaceParams& sp, const LabConfig& cfg);

/// The n unit initial vectors plus one seeded random combination.
std::vector<TruncSeries> basis_solutions(const ODESystem& sys, int N, std::uint64_t seed);

}  // namespace holoform
