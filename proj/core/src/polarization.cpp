#include "kerrqc/polarization.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kerrqc/errors.hpp"
#include "kerrqc/numeric.hpp"

namespace kerrqc {
namespace {

void check_args(double I0, double tau, double gamma_over_chi) {
  if (!(I0 >= 0.0) || !std::isfinite(I0)) throw DomainError("I0 must be finite and >= 0");
  if (!(tau >= 0.0) || !std::isfinite(tau)) throw DomainError("tau must be finite and >= 0");
  if (!(gamma_over_chi >= 0.0)) throw DomainError("gamma/chi must be >= 0");
}

// gamma t expressed through tau = chi t / 2.
double gamma_t(double tau, double gamma_over_chi) { return 2.0 * gamma_over_chi * tau; }

}  // namespace

std::array<double, 3> stokes_mean(double I0, double tau, double gamma_over_chi) {
  check_args(I0, tau, gamma_over_chi);
  const double u = 1.0 + tau * tau;
  const double sy = I0 / (u * u) * std::exp(-2.0 * I0 * tau * tau / u - 0.25 * gamma_t(tau, gamma_over_chi));
  return {0.0, sy, 0.0};
}

double stokes_var_perp(double I0, double theta, double tau, double gamma_over_chi, DarkPlaneForm form) {
  check_args(I0, tau, gamma_over_chi);
  const double gt = gamma_t(tau, gamma_over_chi);
  const double s = std::sin(theta);
  const double s2 = s * s;

  double bracket = s2;
  double coeff = 0.5 * I0 * I0;
  if (form != DarkPlaneForm::kConsistent) {
    if (form == DarkPlaneForm::kPrinted) {
      const double h = std::sin(0.5 * theta);
      bracket = h * h;
    }
    coeff = gamma_over_chi > 0.0 ? I0 * I0 : 2.0 * I0 * I0;
  }
  const double v = 1.0 + 4.0 * tau * tau;
  const double u = 1.0 + tau * tau;
  const double decay = s2 * coeff / (v * v * v) * std::exp(-8.0 * I0 * tau * tau / v - gt);
  const double cross = std::sin(2.0 * theta) * 2.0 * I0 * tau / (u * u * u) * (1.0 + I0 / u) *
                       std::exp(-2.0 * I0 * tau * tau / u - 0.25 * gt);
  return I0 * (1.0 + 0.5 * I0 * bracket) - decay - cross;
}

std::array<double, 3> StokesMoments::mean_S() const { return stokes_mean(I0, tau, gamma_over_chi); }

double StokesMoments::var_perp(double theta) const {
  return stokes_var_perp(I0, theta, tau, gamma_over_chi, form);
}

double optimal_angle(double I0, double tau, double gamma_over_chi) {
  check_args(I0, tau, gamma_over_chi);
  return 0.5 * std::atan2(1.0, I0 * tau + 0.25 * gamma_over_chi);
}

double optimal_amount_closed_form(double I0, double tau, double gamma_over_chi) {
  check_args(I0, tau, gamma_over_chi);
  const double c = I0 * tau + 0.25 * gamma_over_chi;
  // c - sqrt(1 + c^2) = -1 / (c + sqrt(1 + c^2)), free of cancellation.
  return -2.0 * I0 * I0 * tau / (c + std::sqrt(1.0 + c * c));
}

SqueezingReport squeezing_report(double I0, double tau, double gamma_over_chi, double chi, double t,
                                 DarkPlaneForm form) {
  check_args(I0, tau, gamma_over_chi);
  if (!(chi > 0.0)) throw DomainError("squeezing_report: chi must be > 0");
  const double expected = 0.5 * chi * t;
  if (std::abs(expected - tau) > 1e-9 * std::max(1.0, std::abs(tau))) {
    throw DomainError("squeezing_report: tau (" + std::to_string(tau) + ") != chi t / 2 (" +
                      std::to_string(expected) + ")");
  }
  SqueezingReport r;
  r.theta_sq = optimal_angle(I0, tau, gamma_over_chi);
  r.var_sq = stokes_var_perp(I0, r.theta_sq, tau, gamma_over_chi, form);
  r.var_antisq = stokes_var_perp(I0, r.theta_sq + 0.5 * kPi, tau, gamma_over_chi, form);
  r.mean_Sy = stokes_mean(I0, tau, gamma_over_chi)[1];
  r.mean_N = I0;
  r.squeezing_certified = r.var_sq < r.mean_N && r.mean_N < r.var_antisq;
  r.optimal_amount = r.var_sq - std::abs(r.mean_Sy);
  r.optimal_amount_closed_form = optimal_amount_closed_form(I0, tau, gamma_over_chi);
  return r;
}

}  // namespace kerrqc
