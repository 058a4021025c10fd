#pragma once

#include <span>
#include <vector>

namespace fibersense {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Returns the n-point rule; results are cached process-wide (thread safe).
const GaussLegendreRule& gauss_legendre(int n);

/// Nodes/weights mapped to [a, b].
void map_gauss_legendre(int n, double a, double b, std::vector<double>& x,
                        std::vector<double>& w);

}  // namespace fibersense
