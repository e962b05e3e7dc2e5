#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "holoform/measures.hpp"

namespace holoform {

/// Discretization level shared by all functionals of one evaluation.
struct Resolution {
  int N = 256;          // series truncation
  int quad_J = 8;       // disc_quadrature radial panels
  int quad_M = 512;     // disc_quadrature angles
  int sup_J = 6;        // sup_samples depth
  int sup_rot = 16;     // sup_samples rotations
  int arc_levels = 9;   // dyadic arcs, len >= 2^{-(levels-1)}
  int arc_rot = 8;      // dyadic arc centers per level
  int box_depth = 8;    // box_quadrature grading depth
  int box_angles = 512; // box_quadrature angular density

  /// One step down: N/2, J-1, M/2, sup depth -1, one arc level less, box depth -1.
  Resolution coarser() const;
};

struct Grids {
  Resolution res;
  DiscQuadrature Q;
  SupSampleSet S;
  std::vector<Arc> arcs;
  BoxRule box;

  static Grids build(const Resolution& r);
};

struct LabConfig {
  Resolution fine;
  double slack = 100.0;
  double finite_threshold = 0.25;
  bool relaxed_t = false;
  bool literal_cor29 = false;
};

/// A functional evaluated at the fine and the next coarser resolution.
struct Refined {
  double fine = 0.0;
  double coarse = 0.0;
  double delta = 0.0;  // |fine - coarse| / |coarse|
  bool finite = true;  // delta < finite threshold
};

Refined refine(double fine, double coarse, double threshold);

enum class CompareMode { TwoSided, OneSided };

struct ComparabilityReport {
  std::string label;
  double left = 0.0;
  double right = 0.0;
  double ratio = 0.0;
  double slack = 100.0;
  bool pass = false;
  double refinement_delta = 0.0;  // max of the two sides
  double left_delta = 0.0;
  double right_delta = 0.0;
  bool left_finite = true;
  bool right_finite = true;
  CompareMode mode = CompareMode::TwoSided;
  /// "finite", "diverging", "mixed" or "degenerate".
  std::string classification;
};

/// Pass rule: both finite -> ratio within [1/slack, slack] (two-sided) or
/// ratio <= slack (one-sided); both diverging -> pass; mixed -> fail, except a
/// diverging right side in one-sided mode, which is vacuous.
ComparabilityReport compare(std::string label, const Refined& left, const Refined& right,
                            double slack, CompareMode mode = CompareMode::TwoSided);

/// Lower end of the admissible t range: (2-s)/p + p/(p-1), or for p = 2 with
/// `relaxed` the bound max{0, (1-s)/2, (sigma-s)/2}.
double thm21_t_bound(const SpaceParams& sp, bool relaxed);

using FunctionalFn = std::function<double(const TruncSeries&, const Grids&)>;

/// Evaluates fn on f truncated to each resolution's N.
Refined evaluate_refined(const TruncSeries& f, const FunctionalFn& fn, const LabConfig& cfg);

// Membership functionals, each a sup that is finite exactly for f in B_p^K(s).

/// sup_I (1/K(|I|)) int_{S(I)} |f^(t)|^p (1-|z|^2)^{pt-2+s} dA.
double thm21_functional(const TruncSeries& f, const SpaceParams& sp, const FracParams& fp,
                        const Grids& g);
/// Morrey term of the B_p^K(s) norm (no p-th root).
double morrey_functional(const TruncSeries& f, const SpaceParams& sp, const Grids& g);
/// sup_I (1/K(|I|)) int_{S(I)} |f'|^p (1-|z|^2)^{p-2+s} dA.
double box_functional(const TruncSeries& f, const SpaceParams& sp, const Grids& g);
/// sup_a (1/K(1-|a|^2)) int ((1-|a|^2)/|1-conj(a)z|)^q |f'|^p (1-|z|^2)^{p-2+s} dA.
double kernel_functional(const TruncSeries& f, const SpaceParams& sp, double q_exp, const Grids& g);
/// I_n: sup_a (1-|a|^2)^2/K(1-|a|^2) int |f^(n)|^p (1-|z|^2)^{np-4+s} (1-|phi_a|^2)^2 dA.
/// `literal` uses (1-|a|^2)^1 and the factor (1 - |z|^{np-4+s}) instead.
double cor29_functional(const TruncSeries& f, int n, const SpaceParams& sp, const Grids& g,
                        bool literal = false);

std::vector<ComparabilityReport> verify_thm21(const TruncSeries& f, const SpaceParams& sp,
                                              const std::vector<double>& t_list, double b,
                                              const LabConfig& cfg);

ComparabilityReport verify_cor23(const TruncSeries& f, const SpaceParams& sp1, double s2, double b,
                                 const LabConfig& cfg);

ComparabilityReport verify_cor29(const TruncSeries& f, int n, const SpaceParams& sp,
                                 const LabConfig& cfg);

/// Resolution of the Lemma 2.8 check: Tf is computed by the pullback form on
/// an inner disc rule at every node of the output boxes.
struct Lemma28Resolution {
  int inner_J = 3;
  int inner_M = 32;
  int box_depth = 4;
  int box_angles = 128;
  int arc_levels = 6;
  int arc_rot = 8;

  Lemma28Resolution coarser() const;
};

/// Input |f|^p (1-|z|^2)^{p-2+s}, output |Tf|^p (1-|z|^2)^{p alpha-2+s}; one-sided,
/// left = output Carleson constant, right = input Carleson constant.
ComparabilityReport verify_lemma28(const std::function<cplx(cplx)>& profile, const std::string& name,
                                   const SpaceParams& sp, double alpha, double b, double slack,
                                   const Lemma28Resolution& res = {}, double finite_threshold = 0.25);

/// Warnings for the Lemma 2.8 ranges of alpha and b.
std::vector<std::string> lemma28_warnings(const SpaceParams& sp, double alpha, double b);

/// Per pair: left = K(r)/K(t), right = (r/t)^sigma, pass iff left <= right.
std::vector<ComparabilityReport> verify_lemma25(const WeightFun& W, double sigma,
                                                const std::vector<std::pair<double, double>>& pairs);

/// left = sum n_k^{p-q-1} |a_k|^p, right = int |f'|^p (1-|z|^2)^q dA over Q
/// (and the next coarser rule for the delta).
ComparabilityReport verify_gap_norm(const GapSpec& spec, double p, double q_wt, const DiscQuadrature& Q,
                                    int N = 256, double slack = 100.0, double finite_threshold = 0.25);

/// 1 - B(j+b+1, m)/B(j+1, m) and its bound (b+1) m / (j+m+1).
std::pair<double, double> beta_ratio_estimate(int j, double b, int m);

/// G(n+c) / (n! n^{c-1}).
double stirling_ratio(int n, double c);

/// max_k |coeff_k(f' - g - s_m - h')|.
double decomposition_residual(const TruncSeries& f, const FracParams& fp);

/// All membership functionals for one f and one parameter set, plus their
/// pairwise comparisons.
struct CoherenceResult {
  std::vector<std::pair<std::string, Refined>> functionals;
  std::vector<ComparabilityReport> pairs;
  bool all_finite() const;
  bool all_diverging() const;
  bool pairs_pass() const;
};

/// Functionals: thm21 (order t, kernel b), cor29 (order n), kernel (q = sigma),
/// box; the Morrey term is reported alongside as the reference.
CoherenceResult coherence_suite(const TruncSeries& f, const SpaceParams& sp, double t, double b, int n,
                                const LabConfig& cfg);

}  // namespace holoform
