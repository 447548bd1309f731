#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <string_view>

#include "kerrqc/phasespace.hpp"

namespace kerrqc {

enum class PurityMethod { kQcSeries, kQcIntegral, kAsymptotic, kExactSeries, kFockOracle };

std::string_view to_string(PurityMethod m);

struct PurityResult {
  double value = 1.0;
  PurityMethod method = PurityMethod::kQcSeries;
  /// Largest |n| kept in the Bessel sums (0 where not applicable).
  std::int64_t window = 0;
  /// False when the caller asked for a formula outside its stated regime.
  bool in_validity = true;
  /// |Im| of the accumulated double series (exact double-series route only).
  double imag_residual = 0.0;
};

/// Summation window |n| <= N for scaled Bessel sums at argument z, from the
/// envelope n^2 < 66 z (tail below 1e-14) plus a fixed margin.
std::int64_t bessel_window(double z);

/// Quasiclassical purity as the Bessel-weighted series
/// sum_n s_n(2 I0a) / (1 + tau^2 n^2) exp(-4 I0b tau^2 n^2 / (1 + tau^2 n^2)),
/// with s_n the scaled Bessel values.
PurityResult purity_qc_series(const TwoModeCoherentInit& init, double tau);

/// Continuum limit of the series, integrated adaptively (Gauss-Kronrod).
/// Requires I0a >= 1e3.
PurityResult purity_qc_integral(const TwoModeCoherentInit& init, double tau);

/// 1 / sqrt(1 + 16 I0a I0b tau^2). in_validity reports I0b tau <= 1.
PurityResult purity_asymptotic(const TwoModeCoherentInit& init, double tau);

/// Exact reduced purity of the full quantum evolution,
/// sum_d s_d(2 I0a) exp(-4 I0b sin^2(d tau)). Periodic under tau -> tau + pi.
PurityResult purity_exact(const TwoModeCoherentInit& init, double tau);

/// The same quantity as the double series Re sum_{m,n} s_m(2 I0a) s_n(2 I0b) e^{2imn tau}.
/// O(N_a N_b) cost; meant for small intensities and cross-checks.
PurityResult purity_exact_double_series(const TwoModeCoherentInit& init, double tau);

struct QuadratureSpec {
  int order = 40;  // Gauss-Hermite nodes per real dimension
};

/// Quadrature covariance matrix over (x_a, p_a, x_b, p_b) with
/// x = (a + a^dag)/sqrt(2); a coherent state has gamma = I/2.
struct CovarianceMatrix {
  Eigen::Matrix4d m = Eigen::Matrix4d::Identity() * 0.5;
  Eigen::Vector4d mean = Eigen::Vector4d::Zero();

  Eigen::Matrix2d A() const { return m.block<2, 2>(0, 0); }
  Eigen::Matrix2d B() const { return m.block<2, 2>(2, 2); }
  Eigen::Matrix2d C() const { return m.block<2, 2>(0, 2); }

  /// Smallest eigenvalue of the Hermitian matrix gamma + (i/2) Omega.
  double physicality_margin() const;
  bool is_physical(double tol = 1e-8) const { return physicality_margin() >= -tol; }
};

/// Moments of the evolved Wigner function from Gauss-Hermite nodes of the
/// initial Gaussian carried forward along the trajectories. Throws
/// QuadratureOrderError for order < 20 or above the node capacity.
CovarianceMatrix covariance_matrix(const TwoModeCoherentInit& init, double tau,
                                   const QuadratureSpec& quad = {});

struct SymplecticSpectrum {
  double nu_plus = 0.5;
  double nu_minus = 0.5;
  double nu_tilde_minus = 0.5;  // smallest symplectic eigenvalue of the partial transpose
};

/// Throws DomainError if a discriminant is below -1e-8 or the matrix is not
/// positive definite (unphysical input).
SymplecticSpectrum symplectic_spectrum(const CovarianceMatrix& gamma);
SymplecticSpectrum symplectic_spectrum(const Eigen::Matrix4d& gamma);

enum class EntanglementVerdict { kEntangledGaussianCriterion, kInconclusive };

std::string_view to_string(EntanglementVerdict v);

/// Entangled iff nu_tilde_minus < 1/2 - 1e-9. Never reports separability:
/// the evolved state is not Gaussian.
EntanglementVerdict entanglement_witness(const SymplecticSpectrum& sp);

}  // namespace kerrqc
