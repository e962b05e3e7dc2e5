#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace holoform {

/// K(t) = t^q.
struct PowerKind {
  double q;
};

/// K(t) = t^q (log(e + 1/t))^beta, taken through its nondecreasing envelope
/// when the raw formula dips (e.g. q = 0.3, beta = 1 on roughly (0.08, 0.34)).
struct PowerLogKind {
  double q;
  double beta;
};

/// Knots (t, K(t)) with t strictly increasing and K nondecreasing, K > 0.
/// Log-log linear between knots, constant after the last knot, and continued
/// below the first knot along the first segment's power law.
struct TabulatedKind {
  std::vector<std::pair<double, double>> knots;
};

using WeightKind = std::variant<PowerKind, PowerLogKind, TabulatedKind>;

/// An admissible weight K : [0, inf) -> [0, inf).
///
/// Immutable; construction validates positivity and monotonicity on a sample
/// grid and throws std::invalid_argument otherwise.
class WeightFun {
 public:
  static WeightFun power(double q);
  static WeightFun power_log(double q, double beta);
  static WeightFun tabulated(std::vector<std::pair<double, double>> knots);

  /// K(t); K(0) = 0 for power-type kinds.
  double operator()(double t) const;

  const WeightKind& kind() const { return kind_; }
  bool is_power() const { return std::holds_alternative<PowerKind>(kind_); }
  std::string describe() const;

  /// Sample grid in (0, 1] used for the supremum defining phi_K.
  const std::vector<double>& phi_grid() const;

 private:
  explicit WeightFun(WeightKind kind);
  void validate() const;
  double raw_power_log(double t) const;

  WeightKind kind_;
  // Flat segment of the PowerLog envelope: K = plateau_level_ on [lo, hi].
  double plateau_lo_ = 0.0;
  double plateau_hi_ = 0.0;
  double plateau_level_ = 0.0;

  friend double eval_phi_K(const WeightFun& w, double x);
};

/// phi_K(x) = sup_{0<t<=1} K(tx)/K(t). Exact x^q for power weights; for the
/// other kinds the sup over 1e5 log-spaced t in [1e-12, 1], a lower bound.
double eval_phi_K(const WeightFun& w, double x);

/// Integrability of phi_K(x)/x on (0,1] and phi_K(x)/x^{1+sigma} on [1, inf).
struct ConditionReport {
  bool holds_11 = false;
  double value_11 = 0.0;  // +inf when divergent
  bool holds_12 = false;
  double value_12 = 0.0;  // +inf when divergent
  double sigma = 0.0;
  int panels_11 = 0;
  int panels_12 = 0;
};

ConditionReport check_conditions(const WeightFun& w, double sigma);

struct DoublingRatio {
  double ratio;  // K(r)/K(t)
  double bound;  // (r/t)^sigma
};

DoublingRatio doubling_ratio(const WeightFun& w, double t, double r, double sigma);

}  // namespace holoform
