#pragma once

#include <vector>

namespace kerrqc {

/// Largest Gauss-Hermite order the node generator accepts.
inline constexpr int kMaxHermiteOrder = 256;

/// Gauss-Hermite rule for the weight e^{-x^2} on the real line.
struct HermiteRule {
  std::vector<double> nodes;    // ascending
  std::vector<double> weights;  // sum to sqrt(pi)
};

/// Nodes from the symmetric tridiagonal Jacobi matrix, polished with Newton
/// steps on the orthonormal Hermite recurrence; weights from the same
/// recurrence. Throws QuadratureOrderError outside [1, kMaxHermiteOrder].
HermiteRule gauss_hermite(int order);

}  // namespace kerrqc
