#include "kerrqc/phasespace.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kerrqc/errors.hpp"
#include "kerrqc/numeric.hpp"
#include "kerrqc/specfun.hpp"

namespace kerrqc {
namespace {

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw DomainError(std::string(what) + " must be finite");
}

double safe_arg(std::complex<double> z) { return z == 0.0 ? 0.0 : std::arg(z); }

// Squared distance |sqrt(I) e^{i psi} - sqrt(I0) e^{i psi0}|^2.
double polar_distance_sq(double I, double psi, double I0, double psi0) {
  return I + I0 - 2.0 * std::sqrt(I * I0) * std::cos(psi - psi0);
}

}  // namespace

void TwoModeCoherentInit::validate() const {
  require_finite(I0a, "I0a");
  require_finite(I0b, "I0b");
  require_finite(phi0a, "phi0a");
  require_finite(phi0b, "phi0b");
  if (I0a < 0.0 || I0b < 0.0) throw DomainError("initial intensities must be >= 0");
}

std::complex<double> TwoModeCoherentInit::alpha0() const { return std::polar(std::sqrt(I0a), phi0a); }
std::complex<double> TwoModeCoherentInit::beta0() const { return std::polar(std::sqrt(I0b), phi0b); }

TwoModeCoherentInit TwoModeCoherentInit::circular(double I0) {
  return {0.5 * I0, 0.5 * I0, 0.5 * kPi, 0.0};
}

void KerrConfig::validate() const {
  if (!(chi > 0.0) || !std::isfinite(chi)) throw DomainError("chi must be finite and > 0");
  if (!(gamma_a >= 0.0) || !(gamma_b >= 0.0) || !std::isfinite(gamma_a) || !std::isfinite(gamma_b)) {
    throw DomainError("dephasing rates must be finite and >= 0");
  }
}

double dimensionless_time(double t_seconds, double chi) { return 0.5 * chi * t_seconds; }
double seconds_from_tau(double tau, double chi) { return 2.0 * tau / chi; }

double PoincareCartesian::intensity() const { return std::sqrt(sx * sx + sy * sy + sz * sz); }

Chart chart_of(const PhasePoint& p) { return static_cast<Chart>(p.index()); }

AmplitudePoint to_amplitude(const PhasePoint& p) {
  if (const auto* a = std::get_if<AmplitudePoint>(&p)) return *a;
  const ActionAnglePoint q = to_action_angle(p);
  return {std::polar(std::sqrt(q.Ia), q.phia), std::polar(std::sqrt(q.Ib), q.phib)};
}

ActionAnglePoint to_action_angle(const PhasePoint& p) {
  switch (chart_of(p)) {
    case Chart::kAmplitude: {
      const auto& a = std::get<AmplitudePoint>(p);
      return {std::norm(a.alpha), wrap_angle(safe_arg(a.alpha)), std::norm(a.beta),
              wrap_angle(safe_arg(a.beta))};
    }
    case Chart::kActionAngle: {
      auto q = std::get<ActionAnglePoint>(p);
      q.phia = wrap_angle(q.phia);
      q.phib = wrap_angle(q.phib);
      return q;
    }
    case Chart::kPoincareSpherical:
    case Chart::kPoincareCartesian: {
      const PoincareSpherical s = to_spherical(p);
      const double c = std::cos(0.5 * s.theta);
      const double sn = std::sin(0.5 * s.theta);
      return {s.intensity * c * c, wrap_angle(s.global_phase), s.intensity * sn * sn,
              wrap_angle(s.global_phase - s.phi)};
    }
  }
  throw DomainError("unknown chart");
}

PoincareSpherical to_spherical(const PhasePoint& p) {
  switch (chart_of(p)) {
    case Chart::kPoincareSpherical: {
      auto s = std::get<PoincareSpherical>(p);
      s.phi = wrap_angle(s.phi);
      s.global_phase = wrap_angle(s.global_phase);
      return s;
    }
    case Chart::kPoincareCartesian: {
      const auto& c = std::get<PoincareCartesian>(p);
      const double rho = std::hypot(c.sx, c.sy);
      const double theta = std::atan2(rho, c.sz);
      const double phi = rho == 0.0 ? 0.0 : std::atan2(c.sy, c.sx);
      return {c.intensity(), theta, wrap_angle(phi), wrap_angle(c.global_phase)};
    }
    default: {
      const ActionAnglePoint q = to_action_angle(p);
      const double theta = 2.0 * std::atan2(std::sqrt(q.Ib), std::sqrt(q.Ia));
      const bool pole = q.Ia == 0.0 || q.Ib == 0.0;
      return {q.Ia + q.Ib, theta, pole ? 0.0 : wrap_angle(q.phia - q.phib), q.phia};
    }
  }
}

PoincareCartesian to_cartesian(const PhasePoint& p) {
  if (const auto* c = std::get_if<PoincareCartesian>(&p)) return *c;
  const PoincareSpherical s = to_spherical(p);
  const double st = std::sin(s.theta);
  return {s.intensity * st * std::cos(s.phi), s.intensity * st * std::sin(s.phi),
          s.intensity * std::cos(s.theta), s.global_phase};
}

PhasePoint convert_chart(const PhasePoint& p, Chart target) {
  switch (target) {
    case Chart::kAmplitude: return to_amplitude(p);
    case Chart::kActionAngle: return to_action_angle(p);
    case Chart::kPoincareSpherical: return to_spherical(p);
    case Chart::kPoincareCartesian: return to_cartesian(p);
  }
  throw DomainError("unknown chart");
}

PoincareCartesian initial_stokes(const TwoModeCoherentInit& init) {
  return to_cartesian(ActionAnglePoint{init.I0a, init.phi0a, init.I0b, init.phi0b});
}

double wigner_initial(const TwoModeCoherentInit& init, const PhasePoint& p) {
  const AmplitudePoint a = to_amplitude(p);
  const double d = std::norm(a.alpha - init.alpha0()) + std::norm(a.beta - init.beta0());
  return 4.0 / (kPi * kPi) * std::exp(-2.0 * d);
}

ActionAnglePoint evolve_point(const ActionAnglePoint& p, double tau) {
  return {p.Ia, wrap_angle(p.phia + 2.0 * p.Ib * tau), p.Ib, wrap_angle(p.phib + 2.0 * p.Ia * tau)};
}

ActionAnglePoint transport_point(const ActionAnglePoint& p, double tau) { return evolve_point(p, -tau); }

double wigner_evolved(const TwoModeCoherentInit& init, const PhasePoint& p, double tau) {
  const ActionAnglePoint q = to_action_angle(p);
  const double psi_a = q.phia + 2.0 * q.Ib * tau;
  const double psi_b = q.phib + 2.0 * q.Ia * tau;
  const double d = polar_distance_sq(q.Ia, psi_a, init.I0a, init.phi0a) +
                   polar_distance_sq(q.Ib, psi_b, init.I0b, init.phi0b);
  return 4.0 / (kPi * kPi) * std::exp(-2.0 * d);
}

double sigma_general(const PoincareCartesian& s0, const PoincareCartesian& s, double tau) {
  const double c = std::cos(2.0 * s.sz * tau);
  const double sn = std::sin(2.0 * s.sz * tau);
  return 2.0 * (s.intensity() * s0.intensity() + s.sz * s0.sz + c * (s.sx * s0.sx + s.sy * s0.sy) +
                sn * (s.sy * s0.sx - s.sx * s0.sy));
}

double sigma_circular(double I0, const PoincareCartesian& s, double tau) {
  return 2.0 * I0 *
         (s.intensity() + s.sy * std::cos(2.0 * s.sz * tau) - s.sx * std::sin(2.0 * s.sz * tau));
}

double wigner_poincare(const TwoModeCoherentInit& init, const PoincareCartesian& s, double tau) {
  const double I = s.intensity();
  if (!std::isfinite(I) || !std::isfinite(tau)) throw DomainError("wigner_poincare: non-finite input");
  if (I == 0.0) throw DomainError("wigner_poincare: |S| must be > 0");
  const PoincareCartesian s0 = initial_stokes(init);
  const double I0 = init.total_intensity();

  // Rotate S back along its trajectory, then use
  // sigma = (I + I0)^2 - |S' - S0|^2 so the exponent 2 sqrt(sigma) - 2I - 2I0
  // is formed without cancellation.
  const double a = 2.0 * s.sz * tau;
  const double c = std::cos(a);
  const double sn = std::sin(a);
  const double rx = s.sx * c + s.sy * sn;
  const double ry = -s.sx * sn + s.sy * c;
  const double dx = rx - s0.sx;
  const double dy = ry - s0.sy;
  const double dz = s.sz - s0.sz;
  const double d2 = dx * dx + dy * dy + dz * dz;
  const double total = I + I0;
  double sigma = (total - std::sqrt(d2)) * (total + std::sqrt(d2));
  if (sigma < 0.0) {
    if (sigma < -1e-9 * std::max(1.0, total * total)) {
      throw DomainError("wigner_poincare: sigma < 0 (" + std::to_string(sigma) + ")");
    }
    sigma = 0.0;
  }
  const double root = std::sqrt(sigma);
  const double exponent = -2.0 * d2 / (root + total);
  return 8.0 / kPi * std::exp(exponent) * specfun::bessel_i_scaled(0, 2.0 * root);
}

double wigner_dephased(const TwoModeCoherentInit& init, const PoincareSpherical& s, double t,
                       const KerrConfig& cfg, DephasedWidthForm form) {
  cfg.validate();
  const double gamma = cfg.gamma();
  if (!(gamma > 0.0)) throw DomainError("wigner_dephased: gamma must be > 0 (use wigner_poincare)");
  if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("wigner_dephased: t must be >= 0");
  if (!(s.intensity > 0.0) || !std::isfinite(s.intensity)) {
    throw DomainError("wigner_dephased: intensity must be > 0");
  }
  const PoincareSpherical s0 = to_spherical(ActionAnglePoint{init.I0a, init.phi0a, init.I0b, init.phi0b});
  const double I = s.intensity;
  const double I0 = s0.intensity;
  if (I0 <= 0.0) throw DomainError("wigner_dephased: initial intensity must be > 0");
  auto near_pole = [](double th) { return th < kPoleExclusion || th > kPi - kPoleExclusion; };
  if (near_pole(s.theta) || near_pole(s0.theta)) {
    throw DomainError("wigner_dephased: polar angle within 1e-6 of a pole");
  }

  const double sin_prod = std::sin(s.theta) * std::sin(s0.theta);
  const double half_cos = std::cos(0.5 * (s.theta - s0.theta));
  const double geo = std::sqrt(I * I0);
  const double q = std::sin(0.25 * (s.theta - s0.theta));
  const double dr = std::sqrt(I) - std::sqrt(I0);
  // -2I - 2I0 + 4 sqrt(I I0) cos((th - th0)/2), rewritten as a sum of non-positive terms.
  const double exponent = -2.0 * dr * dr - 8.0 * geo * q * q;
  const double prefactor = 2.0 * std::exp(exponent) / (kPi * kPi * std::sqrt(I * I0 * sin_prod));

  const double scale = form == DephasedWidthForm::kSaddle ? geo : I * I0;
  const double width = 0.25 * gamma * t + half_cos / (2.0 * scale * sin_prod);
  const double arg = s.phi - s0.phi - cfg.chi * t * I * std::cos(s.theta);
  return prefactor * specfun::theta_kernel(wrap_angle(arg), width);
}

}  // namespace kerrqc
