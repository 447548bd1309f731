#include "kerrqc/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <string>

#include "kerrqc/errors.hpp"
#include "kerrqc/numeric.hpp"

namespace kerrqc {
namespace {

// Orthonormal Hermite functions psi_k(x) (without the e^{-x^2/2} factor):
// psi_0 = pi^{-1/4}, psi_{k+1} = sqrt(2/(k+1)) x psi_k - sqrt(k/(k+1)) psi_{k-1}.
// Returns psi_n and psi_{n-1}; also accumulates sum psi_k^2 for k < n.
struct HermiteEval {
  double pn;
  double pn1;
  double sum_sq;
};

HermiteEval hermite_eval(int n, double x) {
  double prev = 0.0;
  double cur = std::pow(kPi, -0.25);
  double sum_sq = 0.0;
  for (int k = 0; k < n; ++k) {
    sum_sq += cur * cur;
    const double next = std::sqrt(2.0 / (k + 1)) * x * cur - std::sqrt(double(k) / (k + 1)) * prev;
    prev = cur;
    cur = next;
  }
  return {cur, prev, sum_sq};
}

}  // namespace

HermiteRule gauss_hermite(int order) {
  if (order < 1 || order > kMaxHermiteOrder) {
    throw QuadratureOrderError("gauss_hermite: order " + std::to_string(order) +
                               " outside [1, " + std::to_string(kMaxHermiteOrder) + "]");
  }
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(order, order);
  for (int k = 1; k < order; ++k) {
    jacobi(k, k - 1) = jacobi(k - 1, k) = std::sqrt(0.5 * k);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi, Eigen::EigenvaluesOnly);

  HermiteRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  for (int i = 0; i < order; ++i) {
    double x = solver.eigenvalues()(i);
    for (int it = 0; it < 3; ++it) {
      const HermiteEval e = hermite_eval(order, x);
      // psi_n' = sqrt(2n) psi_{n-1} - x psi_n for the polynomial part.
      const double deriv = std::sqrt(2.0 * order) * e.pn1;
      if (deriv == 0.0) break;
      const double dx = e.pn / deriv;
      x -= dx;
      if (std::abs(dx) < 1e-16 * (1.0 + std::abs(x))) break;
    }
    const HermiteEval e = hermite_eval(order, x);
    rule.nodes[i] = x;
    rule.weights[i] = 1.0 / e.sum_sq;
  }
  // Enforce exact symmetry of the rule.
  for (int i = 0; i < order / 2; ++i) {
    const int j = order - 1 - i;
    const double x = 0.5 * (rule.nodes[j] - rule.nodes[i]);
    const double w = 0.5 * (rule.weights[i] + rule.weights[j]);
    rule.nodes[i] = -x;
    rule.nodes[j] = x;
    rule.weights[i] = rule.weights[j] = w;
  }
  if (order % 2 == 1) rule.nodes[order / 2] = 0.0;
  return rule;
}

}  // namespace kerrqc
