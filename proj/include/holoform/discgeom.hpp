#pragma once

#include <complex>
#include <vector>

#include "holoform/special.hpp"

namespace holoform {

/// Boundary arc I with center angle theta0 and normalized length |I| = len.
struct Arc {
  double theta0 = 0.0;
  double len = 1.0;

  /// Reduces theta0 mod 2 pi and checks len in (0, 1].
  static Arc make(double theta0, double len);
};

/// S(I) = { r e^{it} : e^{it} in I, 1 - |I| <= r < 1 }.
struct CarlesonBox {
  Arc arc;

  double inner_radius() const { return 1.0 - arc.len; }
  bool contains(cplx z) const;
};

/// Quadrature for the normalized area measure (A(D) = 1).
struct DiscQuadrature {
  std::vector<cplx> nodes;
  std::vector<double> weights;
  int J = 0;  // radial panels
  int M = 0;  // angular count (nodes per full circle)

  std::size_t size() const { return nodes.size(); }

  template <class F>
  auto integrate(F&& f) const {
    using R = decltype(f(cplx{}));
    R sum{};
    for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(nodes[i]);
    return sum;
  }
};

/// Points a used to discretize sup over the disc.
struct SupSampleSet {
  std::vector<cplx> points;
  int depth = 0;
  int rotations = 0;
};

/// phi_a(z) = (a - z) / (1 - conj(a) z).
cplx mobius(cplx a, cplx z);

/// phi_a'(z) = -(1 - |a|^2) / (1 - conj(a) z)^2.
cplx mobius_derivative(cplx a, cplx z);

/// 1 - |phi_a(z)|^2 via (1 - |a|^2)(1 - |z|^2) / |1 - conj(a) z|^2.
double mobius_defect(cplx a, cplx z);

/// g(a, z) = log |(1 - conj(a) z) / (a - z)|.
double green(cplx a, cplx z);

/// Polar rule: dyadic radial panels [1-2^-j, 1-2^-j-1], j < J, plus the
/// closing panel [1-2^-J, 1), 16-point Gauss-Legendre in r with weight 2r dr,
/// and the M-point periodic trapezoid in theta.
DiscQuadrature disc_quadrature(int J, int M);

/// Rule supported on S(I), dyadically graded toward the boundary with
/// `depth` panels plus a closing panel. Angular direction: composite
/// 16-point Gauss-Legendre with about `angles` nodes per full circle.
DiscQuadrature box_quadrature(const CarlesonBox& box, int depth, int angles = 512);

/// a = (1 - 2^-j) e^{2 pi i k / rotations}, j = 0..J_a, plus a = 0.
SupSampleSet sup_samples(int J_a, int rotations);

/// Dyadic arc family: len = 2^-j, j = 0..levels-1, `rotations` centers per level.
std::vector<Arc> dyadic_arcs(int levels, int rotations);

}  // namespace holoform
