#pragma once

#include <complex>
#include <variant>

namespace kerrqc {

/// Product coherent state |alpha0, beta0> with alpha0 = sqrt(I0a) e^{i phi0a}.
struct TwoModeCoherentInit {
  double I0a = 0.0;
  double I0b = 0.0;
  double phi0a = 0.0;
  double phi0b = 0.0;

  /// Throws DomainError for negative or non-finite entries.
  void validate() const;
  std::complex<double> alpha0() const;
  std::complex<double> beta0() const;
  double total_intensity() const { return I0a + I0b; }

  /// Equal intensities I0/2 per mode with <a> = i <b>; sits at S = (0, I0, 0)
  /// in the Poincare chart.
  static TwoModeCoherentInit circular(double I0);
};

struct KerrConfig {
  double chi = 1.0;
  double gamma_a = 0.0;
  double gamma_b = 0.0;

  double gamma() const { return gamma_a + gamma_b; }
  /// Throws DomainError unless chi > 0 and both rates are >= 0.
  void validate() const;
};

/// tau = chi t / 2.
double dimensionless_time(double t_seconds, double chi);
double seconds_from_tau(double tau, double chi);

// Charts of two-mode phase space.

struct AmplitudePoint {
  std::complex<double> alpha;
  std::complex<double> beta;
};

struct ActionAnglePoint {
  double Ia = 0.0;
  double phia = 0.0;
  double Ib = 0.0;
  double phib = 0.0;
};

/// Total intensity, polar angle in [0, pi], relative phase phi = phia - phib,
/// and the global phase phia that the Poincare Wigner function integrates out.
struct PoincareSpherical {
  double intensity = 0.0;
  double theta = 0.0;
  double phi = 0.0;
  double global_phase = 0.0;
};

/// Stokes vector S = I (sin th cos ph, sin th sin ph, cos th).
struct PoincareCartesian {
  double sx = 0.0;
  double sy = 0.0;
  double sz = 0.0;
  double global_phase = 0.0;

  double intensity() const;
};

enum class Chart { kAmplitude, kActionAngle, kPoincareSpherical, kPoincareCartesian };

using PhasePoint = std::variant<AmplitudePoint, ActionAnglePoint, PoincareSpherical, PoincareCartesian>;

Chart chart_of(const PhasePoint& p);

/// Exact conversion between charts. At the poles (theta = 0 or pi) the
/// relative phase is set to 0.
PhasePoint convert_chart(const PhasePoint& p, Chart target);

AmplitudePoint to_amplitude(const PhasePoint& p);
ActionAnglePoint to_action_angle(const PhasePoint& p);
PoincareSpherical to_spherical(const PhasePoint& p);
PoincareCartesian to_cartesian(const PhasePoint& p);

/// Stokes vector of the initial state's centre.
PoincareCartesian initial_stokes(const TwoModeCoherentInit& init);

/// (4/pi^2) exp(-2|alpha - alpha0|^2 - 2|beta - beta0|^2).
double wigner_initial(const TwoModeCoherentInit& init, const PhasePoint& p);

/// Backward trajectory map: the point at tau = 0 that is carried to p.
/// Returns (Ia, phia + 2 Ib tau, Ib, phib + 2 Ia tau) with wrapped phases.
ActionAnglePoint evolve_point(const ActionAnglePoint& p, double tau);

/// Forward trajectory map, the inverse of evolve_point.
ActionAnglePoint transport_point(const ActionAnglePoint& p, double tau);

/// Quasiclassical Wigner function at time tau, evaluated from the explicit
/// closed form |sqrt(I) e^{i psi} - sqrt(I0) e^{i phi0}|^2 = I + I0 - 2 sqrt(I I0) cos(psi - phi0).
double wigner_evolved(const TwoModeCoherentInit& init, const PhasePoint& p, double tau);

/// Wigner function on Poincare space (global phase integrated out),
/// (8/pi) exp(-2I - 2I0) I_0(2 sqrt(sigma)), evaluated in scaled form.
/// Throws DomainError if sigma < -1e-9 or |S| = 0.
double wigner_poincare(const TwoModeCoherentInit& init, const PoincareCartesian& s, double tau);

/// Bessel argument sigma in its general form
/// 2 [I I0 + Sz S0z + cos(2 Sz tau)(Sx S0x + Sy S0y) + sin(2 Sz tau)(Sy S0x - Sx S0y)].
double sigma_general(const PoincareCartesian& s0, const PoincareCartesian& s, double tau);

/// Reduced sigma for S0 = (0, I0, 0): 2 I0 [I + Sy cos(2 Sz tau) - Sx sin(2 Sz tau)].
double sigma_circular(double I0, const PoincareCartesian& s, double tau);

/// Width term of the dephased Theta kernel.
enum class DephasedWidthForm {
  /// Intrinsic width cos((th - th0)/2) / (2 sqrt(I I0) sin th sin th0) from
  /// the large-intensity saddle of the Poincare Wigner function.
  kSaddle,
  /// Same expression with sqrt(I I0) replaced by I I0 (undefined symbol read
  /// as the total intensity).
  kPrintedTotalIntensity,
};

/// Dephased Poincare Wigner function at physical time t (seconds), valid for
/// large intensities. Prefactor in log space times
/// theta_kernel(phi - phi0 - chi t I cos th, gamma t / 4 + intrinsic width).
/// Throws DomainError for gamma <= 0, t < 0, I <= 0, or theta / theta0
/// within 1e-6 of a pole.
double wigner_dephased(const TwoModeCoherentInit& init, const PoincareSpherical& s, double t,
                       const KerrConfig& cfg,
                       DephasedWidthForm form = DephasedWidthForm::kSaddle);

/// Minimum distance of theta from the poles accepted by wigner_dephased.
inline constexpr double kPoleExclusion = 1e-6;

}  // namespace kerrqc
