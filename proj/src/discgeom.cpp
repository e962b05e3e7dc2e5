#include "holoform/discgeom.hpp"

#include <cmath>
#include <stdexcept>

#include "holoform/gauss.hpp"

namespace holoform {

namespace {

constexpr int kRadialOrder = 16;
constexpr int kAngularOrder = 16;

double wrap_angle(double theta) {
  double t = std::fmod(theta, 2.0 * kPi);
  if (t < 0.0) t += 2.0 * kPi;
  if (t >= 2.0 * kPi) t = 0.0;
  return t;
}

// Radial Gauss nodes on [r0, 1) graded dyadically toward 1: panels
// [1-h 2^-i, 1-h 2^-i-1] for i < depth, closing panel [1-h 2^-depth, 1).
void radial_panels(double h, int depth, std::vector<double>& r, std::vector<double>& w) {
  for (int i = 0; i < depth; ++i) {
    append_gauss_panel(kRadialOrder, 1.0 - std::ldexp(h, -i), 1.0 - std::ldexp(h, -i - 1), r, w);
  }
  append_gauss_panel(kRadialOrder, 1.0 - std::ldexp(h, -depth), 1.0, r, w);
}

}  // namespace

Arc Arc::make(double theta0, double len) {
  if (!(len > 0.0) || len > 1.0) throw std::domain_error("Arc: len must lie in (0, 1]");
  return Arc{wrap_angle(theta0), len};
}

bool CarlesonBox::contains(cplx z) const {
  const double r = std::abs(z);
  if (r >= 1.0 || r < inner_radius()) return false;
  if (arc.len >= 1.0) return true;
  double d = std::abs(wrap_angle(std::arg(z)) - arc.theta0);
  d = std::min(d, 2.0 * kPi - d);
  return d <= kPi * arc.len;
}

cplx mobius(cplx a, cplx z) {
  if (!(std::norm(a) < 1.0)) throw std::domain_error("mobius: |a| must be < 1");
  const cplx den = 1.0 - std::conj(a) * z;
  if (den == cplx{0.0, 0.0}) throw std::domain_error("mobius: conj(a) z = 1");
  return (a - z) / den;
}

cplx mobius_derivative(cplx a, cplx z) {
  const cplx den = 1.0 - std::conj(a) * z;
  return -(1.0 - std::norm(a)) / (den * den);
}

double mobius_defect(cplx a, cplx z) {
  return (1.0 - std::norm(a)) * (1.0 - std::norm(z)) / std::norm(1.0 - std::conj(a) * z);
}

double green(cplx a, cplx z) {
  const double num = std::abs(1.0 - std::conj(a) * z);
  const double den = std::abs(a - z);
  if (den == 0.0) throw std::domain_error("green: z = a is the pole");
  return std::log(num / den);
}

DiscQuadrature disc_quadrature(int J, int M) {
  if (J < 1 || M < 8) throw std::invalid_argument("disc_quadrature: need J >= 1, M >= 8");
  std::vector<double> r;
  std::vector<double> wr;
  radial_panels(1.0, J, r, wr);
  DiscQuadrature q;
  q.J = J;
  q.M = M;
  q.nodes.reserve(r.size() * M);
  q.weights.reserve(r.size() * M);
  for (int k = 0; k < M; ++k) {
    const cplx e = std::polar(1.0, 2.0 * kPi * k / M);
    for (std::size_t i = 0; i < r.size(); ++i) {
      q.nodes.push_back(r[i] * e);
      q.weights.push_back(2.0 * r[i] * wr[i] / M);
    }
  }
  return q;
}

DiscQuadrature box_quadrature(const CarlesonBox& box, int depth, int angles) {
  if (depth < 0) throw std::invalid_argument("box_quadrature: depth must be >= 0");
  const double len = box.arc.len;
  std::vector<double> r;
  std::vector<double> wr;
  radial_panels(len, depth, r, wr);

  const int panels = std::max(1, static_cast<int>(std::ceil(angles * len / kAngularOrder)));
  std::vector<double> th;
  std::vector<double> wt;
  const double half_width = kPi * len;
  const double step = 2.0 * half_width / panels;
  for (int p = 0; p < panels; ++p) {
    const double lo = box.arc.theta0 - half_width + p * step;
    append_gauss_panel(kAngularOrder, lo, lo + step, th, wt);
  }

  DiscQuadrature q;
  q.J = depth;
  q.M = panels * kAngularOrder;
  q.nodes.reserve(r.size() * th.size());
  q.weights.reserve(r.size() * th.size());
  for (std::size_t k = 0; k < th.size(); ++k) {
    const cplx e = std::polar(1.0, th[k]);
    for (std::size_t i = 0; i < r.size(); ++i) {
      q.nodes.push_back(r[i] * e);
      // dA = r dr dtheta / pi
      q.weights.push_back(r[i] * wr[i] * wt[k] / kPi);
    }
  }
  return q;
}

SupSampleSet sup_samples(int J_a, int rotations) {
  if (J_a < 1 || rotations < 1) throw std::invalid_argument("sup_samples: need J_a, rotations >= 1");
  SupSampleSet s;
  s.depth = J_a;
  s.rotations = rotations;
  s.points.push_back(0.0);
  for (int j = 1; j <= J_a; ++j) {
    const double rad = 1.0 - std::ldexp(1.0, -j);
    for (int k = 0; k < rotations; ++k) {
      s.points.push_back(std::polar(rad, 2.0 * kPi * k / rotations));
    }
  }
  return s;
}

std::vector<Arc> dyadic_arcs(int levels, int rotations) {
  if (levels < 1 || rotations < 1) throw std::invalid_argument("dyadic_arcs: need levels, rotations >= 1");
  std::vector<Arc> arcs;
  for (int j = 0; j < levels; ++j) {
    for (int k = 0; k < rotations; ++k) {
      arcs.push_back(Arc::make(2.0 * kPi * k / rotations, std::ldexp(1.0, -j)));
    }
  }
  return arcs;
}

}  // namespace holoform
