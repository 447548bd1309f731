#pragma once

#include <array>

namespace kerrqc {

/// Readings of the dark-plane variance formula. All share the sin(2v) cross
/// term; they differ in the static bracket and the decaying sin^2 v term.
enum class DarkPlaneForm {
  /// I0 [1 + (I0/2) sin^2 v] - (I0^2 / 2) sin^2 v (...). Equals I0 at tau = 0
  /// and matches the exact Fock evolution.
  kConsistent,
  /// Bracket sin^2(v/2); coefficient 2 I0^2 without dephasing, I0^2 with.
  kPrinted,
  /// Bracket sin^2 v; coefficients as in kPrinted.
  kFullAngleBracket,
};

/// Circularly polarised input (<S> = (0, I0, 0) at tau = 0), optionally with
/// phase dephasing at rate gamma = gamma_over_chi * chi. gamma t = 2 (gamma/chi) tau.
struct StokesMoments {
  double I0 = 0.0;
  double tau = 0.0;
  double gamma_over_chi = 0.0;
  DarkPlaneForm form = DarkPlaneForm::kConsistent;

  std::array<double, 3> mean_S() const;
  double mean_N() const { return I0; }
  double var_perp(double theta) const;
};

/// (0, I0 / (1 + tau^2)^2 exp(-2 I0 tau^2 / (1 + tau^2) - gamma t / 4), 0).
std::array<double, 3> stokes_mean(double I0, double tau, double gamma_over_chi = 0.0);

/// Variance of S_perp(v) = S_z cos v - S_x sin v.
double stokes_var_perp(double I0, double theta, double tau, double gamma_over_chi = 0.0,
                       DarkPlaneForm form = DarkPlaneForm::kConsistent);

/// (1/2) arccot(I0 tau + gamma / (4 chi)) on the branch (0, pi/4].
double optimal_angle(double I0, double tau, double gamma_over_chi = 0.0);

/// Short-time closed form of the optimal amount,
/// 2 I0^2 tau [c - sqrt(1 + c^2)] with c = I0 tau + gamma / (4 chi).
double optimal_amount_closed_form(double I0, double tau, double gamma_over_chi = 0.0);

struct SqueezingReport {
  double theta_sq = 0.0;
  double var_sq = 0.0;
  double var_antisq = 0.0;
  double mean_Sy = 0.0;
  double mean_N = 0.0;
  bool squeezing_certified = false;
  /// var_sq - |<S_y>|.
  double optimal_amount = 0.0;
  double optimal_amount_closed_form = 0.0;
};

/// Requires tau = chi t / 2 (relative slack 1e-9); throws DomainError otherwise.
SqueezingReport squeezing_report(double I0, double tau, double gamma_over_chi, double chi, double t,
                                 DarkPlaneForm form = DarkPlaneForm::kConsistent);

}  // namespace kerrqc
