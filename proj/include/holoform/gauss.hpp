#pragma once

#include <vector>

namespace holoform {

/// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Cached n-point Gauss-Legendre rule (Newton iteration on P_n in long double).
const GaussRule& gauss_legendre(int n);

/// Maps the n-point rule to [lo, hi] and appends to the output vectors.
void append_gauss_panel(int n, double lo, double hi, std::vector<double>& x,
                        std::vector<double>& w);

}  // namespace holoform
