#pragma once

#include <Eigen/Core>
#include <complex>
#include <vector>

#include "kerrqc/phasespace.hpp"

namespace kerrqc::fock {

using cplx = std::complex<double>;

/// Truncated two-mode state; amplitude of |na, nb> stored at na * (cutoff + 1) + nb.
struct FockState {
  int cutoff = 0;
  std::vector<cplx> amplitudes;
  /// Probability mass of the untruncated state beyond the cutoff.
  double norm_leak = 0.0;

  int side() const { return cutoff + 1; }
  cplx at(int na, int nb) const { return amplitudes[static_cast<std::size_t>(na) * side() + nb]; }
  double norm_sq() const;
};

/// Largest per-mode Poisson tail probability tolerated by coherent_fock.
inline constexpr double kMaxNormLeak = 1e-10;

/// P(n > cutoff) for a Poisson distribution of mean lambda.
double poisson_tail(double lambda, int cutoff);

/// Smallest cutoff >= I + 12 sqrt(I) (for the larger mode intensity) whose
/// combined Poisson tail is below kMaxNormLeak.
int minimal_cutoff(const TwoModeCoherentInit& init);

/// Product coherent state in the number basis. Throws CutoffError when the
/// cutoff is below I + 12 sqrt(I) for either mode or the tail exceeds kMaxNormLeak.
FockState coherent_fock(const TwoModeCoherentInit& init, int cutoff);

/// Cross-Kerr evolution: |na, nb> picks up exp(-2 i tau na nb).
FockState evolve_fock(const FockState& s, double tau);

enum class Mode { kA, kB };

/// Reduced density matrix of one mode, (cutoff+1)^2 Hermitian.
Eigen::MatrixXcd reduced_density(const FockState& s, Mode mode);

/// Tr[rho^2] of the reduced state of the given mode.
double reduced_purity(const FockState& s, Mode mode);

/// Stokes operators S_x = a^dag b + b^dag a, S_y = i(a b^dag - a^dag b),
/// S_z = a^dag a - b^dag b, and N = a^dag a + b^dag b.
enum class StokesComponent { kX, kY, kZ, kN };

/// <b> = i <a>, equal intensities I0 / 2: <S_y> = +I0 under the operators above.
TwoModeCoherentInit circular_init(double I0);

struct FockExpectation {
  double value = 0.0;
  /// Occupancy on the cutoff boundary exceeds 1e-12; ladder actions there
  /// would differ from the untruncated operator.
  bool truncation_warning = false;
};

FockExpectation stokes_mean(const FockState& s, StokesComponent c);
FockExpectation stokes_var(const FockState& s, StokesComponent c);

/// Dark-plane operator S_perp(v) = S_z cos v - S_x sin v for light polarised along S_y.
FockExpectation dark_plane_mean(const FockState& s, double theta);
FockExpectation dark_plane_var(const FockState& s, double theta);

/// Dense matrix of a Stokes operator restricted to na, nb <= cutoff (same
/// index layout as FockState).
Eigen::MatrixXcd stokes_matrix(int cutoff, StokesComponent c);

/// Total probability on the states with na = cutoff or nb = cutoff.
double boundary_occupancy(const FockState& s);

}  // namespace kerrqc::fock
