#include "holoform/weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "holoform/gauss.hpp"

namespace holoform {

namespace {

constexpr double kE = 2.71828182845904523536;
constexpr int kPhiGridSize = 100000;
constexpr double kPhiGridMin = 1e-12;

double log_l(double t) {
  return std::log(std::log(kE + 1.0 / t));
}

// h(t) = (e t + 1) log(e + 1/t); d/dt log K = (q - beta / h(t)) / t.
double h_fn(double t) {
  return (kE * t + 1.0) * std::log(kE + 1.0 / t);
}

template <class F>
double bisect_log(F&& f, double lo, double hi) {
  // f(lo) and f(hi) have opposite signs; bisection in log t
  double a = std::log(lo);
  double b = std::log(hi);
  const bool neg_lo = f(lo) < 0.0;
  for (int i = 0; i < 200; ++i) {
    const double m = 0.5 * (a + b);
    if ((f(std::exp(m)) < 0.0) == neg_lo) {
      a = m;
    } else {
      b = m;
    }
  }
  return std::exp(0.5 * (a + b));
}

}  // namespace

WeightFun::WeightFun(WeightKind kind) : kind_(std::move(kind)) {}

WeightFun WeightFun::power(double q) {
  if (!(q > 0.0) || !std::isfinite(q)) {
    throw std::invalid_argument("power weight: q must be positive");
  }
  return WeightFun(PowerKind{q});
}

WeightFun WeightFun::power_log(double q, double beta) {
  if (!(q > 0.0) || !std::isfinite(q) || !std::isfinite(beta)) {
    throw std::invalid_argument("powerlog weight: q must be positive, beta finite");
  }
  WeightFun w(PowerLogKind{q, beta});
  if (beta > 0.0) {
    // e t L(t) = 1 at the minimum of h; t L(t) is increasing.
    const double t_min = bisect_log([](double t) { return kE * t * std::log(kE + 1.0 / t) - 1.0; },
                                    1e-12, 1e3);
    if (q * h_fn(t_min) < beta) {
      auto g = [q, beta](double t) { return q * h_fn(t) - beta; };
      const double t1 = bisect_log(g, 1e-300, t_min);
      const double t2 = bisect_log(g, t_min, 1e300);
      const double level = w.raw_power_log(t1);
      const double t3 = bisect_log([&w, level](double t) { return w.raw_power_log(t) - level; },
                                   t2, 1e300);
      w.plateau_lo_ = t1;
      w.plateau_hi_ = t3;
      w.plateau_level_ = level;
    }
  }
  w.validate();
  return w;
}

WeightFun WeightFun::tabulated(std::vector<std::pair<double, double>> knots) {
  if (knots.size() < 2) {
    throw std::invalid_argument("tabulated weight: need at least two knots");
  }
  for (std::size_t i = 0; i < knots.size(); ++i) {
    const auto [t, k] = knots[i];
    if (!(t > 0.0) || !(k > 0.0) || !std::isfinite(t) || !std::isfinite(k)) {
      throw std::invalid_argument("tabulated weight: knots must have t > 0 and K > 0");
    }
    if (i > 0 && !(t > knots[i - 1].first)) {
      throw std::invalid_argument("tabulated weight: t must be strictly increasing");
    }
    if (i > 0 && k < knots[i - 1].second) {
      throw std::invalid_argument("tabulated weight: K must be nondecreasing");
    }
  }
  WeightFun w(TabulatedKind{std::move(knots)});
  w.validate();
  return w;
}

double WeightFun::raw_power_log(double t) const {
  const auto& k = std::get<PowerLogKind>(kind_);
  if (t <= 0.0) return 0.0;
  return std::exp(k.q * std::log(t) + k.beta * log_l(t));
}

double WeightFun::operator()(double t) const {
  if (t <= 0.0) return 0.0;
  return std::visit(
      [&](const auto& k) -> double {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, PowerKind>) {
          return std::pow(t, k.q);
        } else if constexpr (std::is_same_v<T, PowerLogKind>) {
          if (t >= plateau_lo_ && t <= plateau_hi_ && plateau_hi_ > 0.0) return plateau_level_;
          return raw_power_log(t);
        } else {
          const auto& kn = k.knots;
          if (t >= kn.back().first) return kn.back().second;
          if (t < kn.front().first) {
            const double slope = std::log(kn[1].second / kn[0].second) /
                                 std::log(kn[1].first / kn[0].first);
            return kn[0].second * std::pow(t / kn[0].first, slope);
          }
          auto it = std::upper_bound(kn.begin(), kn.end(), t,
                                     [](double v, const auto& p) { return v < p.first; });
          const auto& hi = *it;
          const auto& lo = *(it - 1);
          const double u = std::log(t / lo.first) / std::log(hi.first / lo.first);
          return std::exp((1.0 - u) * std::log(lo.second) + u * std::log(hi.second));
        }
      },
      kind_);
}

void WeightFun::validate() const {
  double prev = 0.0;
  for (int i = 0; i <= 400; ++i) {
    const double t = std::pow(10.0, -12.0 + 18.0 * i / 400.0);
    const double v = (*this)(t);
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument("weight: K must be positive and finite for t > 0");
    }
    if (v < prev * (1.0 - 1e-12)) {
      throw std::invalid_argument("weight: K must be nondecreasing");
    }
    prev = v;
  }
}

std::string WeightFun::describe() const {
  std::ostringstream os;
  os.precision(12);
  std::visit(
      [&](const auto& k) {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, PowerKind>) {
          os << "power:q=" << k.q;
        } else if constexpr (std::is_same_v<T, PowerLogKind>) {
          os << "powerlog:q=" << k.q << ",beta=" << k.beta;
        } else {
          os << "table:" << k.knots.size() << " knots";
        }
      },
      kind_);
  return os.str();
}

const std::vector<double>& WeightFun::phi_grid() const {
  static const std::vector<double> grid = [] {
    std::vector<double> g(kPhiGridSize);
    const double lmin = std::log(kPhiGridMin);
    for (int i = 0; i < kPhiGridSize; ++i) {
      g[i] = std::exp(lmin * (1.0 - static_cast<double>(i) / (kPhiGridSize - 1)));
    }
    g.back() = 1.0;
    return g;
  }();
  return grid;
}

double eval_phi_K(const WeightFun& w, double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::domain_error("eval_phi_K: x must be positive");
  }
  if (const auto* p = std::get_if<PowerKind>(&w.kind())) {
    return std::pow(x, p->q);
  }
  const auto& grid = w.phi_grid();
  if (const auto* pl = std::get_if<PowerLogKind>(&w.kind())) {
    // log-ratio form, avoiding exp inside the loop
    const double lx = std::log(x);
    const bool has_plateau = w.plateau_hi_ > 0.0;
    const double log_level = has_plateau ? std::log(w.plateau_level_) : 0.0;
    auto log_k = [&](double t, double lt) {
      if (has_plateau && t >= w.plateau_lo_ && t <= w.plateau_hi_) return log_level;
      return pl->q * lt + pl->beta * log_l(t);
    };
    double best = -std::numeric_limits<double>::infinity();
    for (double t : grid) {
      const double lt = std::log(t);
      const double v = log_k(x * t, lt + lx) - log_k(t, lt);
      best = std::max(best, v);
    }
    return std::exp(best);
  }
  double best = 0.0;
  for (double t : grid) {
    best = std::max(best, w(x * t) / w(t));
  }
  return best;
}

namespace {

struct PanelSum {
  bool converged;
  double value;
};

// Strict rule: last five panel contributions each below 1e-10 of the total.
// Otherwise accept a stable geometric decay of the last five ratios and add
// the tail; ratio 1 (or growth) means divergence.
PanelSum panel_convergence(const std::vector<double>& c) {
  double total = 0.0;
  for (double v : c) total += v;
  const std::size_t n = c.size();
  bool strict = true;
  for (std::size_t i = n - 5; i < n; ++i) {
    if (!(c[i] < 1e-10 * total)) strict = false;
  }
  if (strict) return {true, total};

  double rmin = std::numeric_limits<double>::infinity();
  double rmax = -rmin;
  double rsum = 0.0;
  for (std::size_t i = n - 6; i + 1 < n; ++i) {
    if (!(c[i] > 0.0)) return {false, std::numeric_limits<double>::infinity()};
    const double r = c[i + 1] / c[i];
    rmin = std::min(rmin, r);
    rmax = std::max(rmax, r);
    rsum += r;
  }
  const double rho = rsum / 5.0;
  if (rmax - rmin < 1e-3 && rho <= 1.0 - 1e-3) {
    return {true, total + c.back() * rho / (1.0 - rho)};
  }
  return {false, std::numeric_limits<double>::infinity()};
}

}  // namespace

ConditionReport check_conditions(const WeightFun& w, double sigma) {
  if (!(sigma > 0.0)) throw std::domain_error("check_conditions: sigma must be positive");
  constexpr int kPanels = 41;
  constexpr int kOrder = 32;
  const GaussRule& rule = gauss_legendre(kOrder);

  auto panel = [&](double lo, double hi, auto&& integrand) {
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);
    double s = 0.0;
    for (int i = 0; i < kOrder; ++i) {
      s += rule.weights[i] * integrand(mid + half * rule.nodes[i]);
    }
    return s * half;
  };

  std::vector<double> c11;
  std::vector<double> c12;
  for (int j = 0; j < kPanels; ++j) {
    c11.push_back(panel(std::ldexp(1.0, -j - 1), std::ldexp(1.0, -j),
                        [&](double x) { return eval_phi_K(w, x) / x; }));
    c12.push_back(panel(std::ldexp(1.0, j), std::ldexp(1.0, j + 1), [&](double x) {
      return eval_phi_K(w, x) * std::exp(-(1.0 + sigma) * std::log(x));
    }));
  }
  const PanelSum r11 = panel_convergence(c11);
  const PanelSum r12 = panel_convergence(c12);
  ConditionReport rep;
  rep.holds_11 = r11.converged;
  rep.value_11 = r11.value;
  rep.holds_12 = r12.converged;
  rep.value_12 = r12.value;
  rep.sigma = sigma;
  rep.panels_11 = kPanels;
  rep.panels_12 = kPanels;
  return rep;
}

DoublingRatio doubling_ratio(const WeightFun& w, double t, double r, double sigma) {
  if (!(t > 0.0) || !(r > 0.0) || t > r) {
    throw std::domain_error("doubling_ratio: requires 0 < t <= r");
  }
  if (t == r) return {1.0, 1.0};
  return {w(r) / w(t), std::pow(r / t, sigma)};
}

}  // namespace holoform
