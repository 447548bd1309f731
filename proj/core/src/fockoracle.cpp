#include "kerrqc/fockoracle.hpp"

#include <Eigen/Core>
#include <algorithm>
#include <cmath>
#include <string>

#include "kerrqc/errors.hpp"
#include "kerrqc/numeric.hpp"

namespace kerrqc::fock {
namespace {

constexpr double kBoundaryWarning = 1e-12;

// Amplitudes e^{-I/2} alpha^n / sqrt(n!) of one mode, n = 0..cutoff.
std::vector<cplx> mode_amplitudes(double I, double phase, int cutoff) {
  std::vector<cplx> out(static_cast<std::size_t>(cutoff) + 1);
  if (I == 0.0) {
    out[0] = 1.0;
    return out;
  }
  const double log_r = 0.5 * std::log(I);
  for (int n = 0; n <= cutoff; ++n) {
    const double log_mag = -0.5 * I + n * log_r - 0.5 * std::lgamma(n + 1.0);
    out[n] = std::polar(std::exp(log_mag), std::remainder(n * phase, kTwoPi));
  }
  return out;
}

// Extended grid of side cutoff + 2 holding S psi without truncation.
struct Extended {
  int side = 0;
  std::vector<cplx> v;
  cplx& at(int na, int nb) { return v[static_cast<std::size_t>(na) * side + nb]; }
};

// Adds coef * Op psi for the operator c into out.
void apply_add(const FockState& s, StokesComponent c, cplx coef, Extended& out) {
  const int n = s.side();
  for (int na = 0; na < n; ++na) {
    for (int nb = 0; nb < n; ++nb) {
      const cplx amp = s.at(na, nb);
      if (amp == 0.0) continue;
      const cplx w = coef * amp;
      switch (c) {
        case StokesComponent::kZ: out.at(na, nb) += w * double(na - nb); break;
        case StokesComponent::kN: out.at(na, nb) += w * double(na + nb); break;
        case StokesComponent::kX:
        case StokesComponent::kY: {
          // a^dag b |na, nb> = sqrt((na+1) nb) |na+1, nb-1>
          // b^dag a |na, nb> = sqrt(na (nb+1)) |na-1, nb+1>
          const cplx up_coef = c == StokesComponent::kX ? cplx(1.0) : cplx(0.0, -1.0);
          const cplx down_coef = c == StokesComponent::kX ? cplx(1.0) : cplx(0.0, 1.0);
          if (nb > 0) out.at(na + 1, nb - 1) += w * up_coef * std::sqrt(double(na + 1) * nb);
          if (na > 0) out.at(na - 1, nb + 1) += w * down_coef * std::sqrt(double(na) * (nb + 1));
          break;
        }
      }
    }
  }
}

struct Combination {
  StokesComponent c;
  double coef;
};

FockExpectation moments(const FockState& s, const std::vector<Combination>& ops, bool variance) {
  Extended e{s.side() + 1, std::vector<cplx>(static_cast<std::size_t>(s.side() + 1) * (s.side() + 1))};
  for (const auto& op : ops) apply_add(s, op.c, op.coef, e);
  CompensatedSum mean;
  CompensatedSum second;
  for (int na = 0; na < e.side; ++na) {
    for (int nb = 0; nb < e.side; ++nb) {
      const cplx sv = e.at(na, nb);
      second.add(std::norm(sv));
      if (na < s.side() && nb < s.side()) mean.add((std::conj(s.at(na, nb)) * sv).real());
    }
  }
  FockExpectation r;
  r.value = variance ? second.value() - mean.value() * mean.value() : mean.value();
  r.truncation_warning = boundary_occupancy(s) > kBoundaryWarning;
  return r;
}

}  // namespace

double FockState::norm_sq() const {
  CompensatedSum sum;
  for (const cplx& c : amplitudes) sum.add(std::norm(c));
  return sum.value();
}

double poisson_tail(double lambda, int cutoff) {
  if (lambda <= 0.0) return 0.0;
  // Sum p(n) for n > cutoff, starting from the log-space first term.
  double term = std::exp(-lambda + (cutoff + 1) * std::log(lambda) - std::lgamma(cutoff + 2.0));
  double sum = 0.0;
  for (int n = cutoff + 1; n < cutoff + 100000; ++n) {
    sum += term;
    if (n > lambda && term < 1e-18 * std::max(sum, 1e-300)) break;
    term *= lambda / (n + 1);
  }
  // Below the mean the tail is the complement of the head.
  if (cutoff < lambda) {
    double head = 0.0;
    double t = std::exp(-lambda);
    for (int n = 0; n <= cutoff; ++n) {
      head += t;
      t *= lambda / (n + 1);
    }
    return std::max(0.0, 1.0 - head);
  }
  return sum;
}

namespace {
double required_cutoff(double I) { return I + 12.0 * std::sqrt(I); }
double combined_leak(const TwoModeCoherentInit& init, int cutoff) {
  const double ta = poisson_tail(init.I0a, cutoff);
  const double tb = poisson_tail(init.I0b, cutoff);
  return ta + tb - ta * tb;
}
}  // namespace

int minimal_cutoff(const TwoModeCoherentInit& init) {
  init.validate();
  int cutoff = static_cast<int>(std::ceil(required_cutoff(std::max(init.I0a, init.I0b))));
  while (combined_leak(init, cutoff) >= kMaxNormLeak) ++cutoff;
  return cutoff;
}

FockState coherent_fock(const TwoModeCoherentInit& init, int cutoff) {
  init.validate();
  const double need = required_cutoff(std::max(init.I0a, init.I0b));
  if (cutoff < 0 || cutoff < need) {
    throw CutoffError("coherent_fock: cutoff " + std::to_string(cutoff) + " below I + 12 sqrt(I) = " +
                      std::to_string(need));
  }
  FockState s;
  s.cutoff = cutoff;
  s.norm_leak = combined_leak(init, cutoff);
  if (s.norm_leak >= kMaxNormLeak) {
    throw CutoffError("coherent_fock: Poisson tail beyond cutoff " + std::to_string(cutoff) + " is " +
                      std::to_string(s.norm_leak) + " >= 1e-10");
  }
  const auto a = mode_amplitudes(init.I0a, init.phi0a, cutoff);
  const auto b = mode_amplitudes(init.I0b, init.phi0b, cutoff);
  const int n = s.side();
  s.amplitudes.resize(static_cast<std::size_t>(n) * n);
  for (int na = 0; na < n; ++na) {
    for (int nb = 0; nb < n; ++nb) s.amplitudes[static_cast<std::size_t>(na) * n + nb] = a[na] * b[nb];
  }
  return s;
}

FockState evolve_fock(const FockState& s, double tau) {
  FockState out = s;
  // exp(-2 i tau na nb) depends on 2 tau only modulo 2 pi.
  const double r = std::remainder(2.0 * tau, kTwoPi);
  const int n = s.side();
  for (int na = 0; na < n; ++na) {
    for (int nb = 0; nb < n; ++nb) {
      const double phase = std::remainder(-r * double(na) * double(nb), kTwoPi);
      out.amplitudes[static_cast<std::size_t>(na) * n + nb] *= std::polar(1.0, phase);
    }
  }
  return out;
}

Eigen::MatrixXcd reduced_density(const FockState& s, Mode mode) {
  const int n = s.side();
  Eigen::Map<const Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> c(
      s.amplitudes.data(), n, n);
  if (mode == Mode::kA) return c * c.adjoint();
  return (c.adjoint() * c).transpose();
}

double reduced_purity(const FockState& s, Mode mode) {
  return reduced_density(s, mode).squaredNorm();
}

TwoModeCoherentInit circular_init(double I0) { return {0.5 * I0, 0.5 * I0, 0.0, 0.5 * kPi}; }

double boundary_occupancy(const FockState& s) {
  const int n = s.side();
  double sum = 0.0;
  for (int k = 0; k < n; ++k) {
    sum += std::norm(s.at(s.cutoff, k));
    if (k != s.cutoff) sum += std::norm(s.at(k, s.cutoff));
  }
  return sum;
}

FockExpectation stokes_mean(const FockState& s, StokesComponent c) { return moments(s, {{c, 1.0}}, false); }
FockExpectation stokes_var(const FockState& s, StokesComponent c) { return moments(s, {{c, 1.0}}, true); }

FockExpectation dark_plane_mean(const FockState& s, double theta) {
  return moments(s, {{StokesComponent::kZ, std::cos(theta)}, {StokesComponent::kX, -std::sin(theta)}}, false);
}

FockExpectation dark_plane_var(const FockState& s, double theta) {
  return moments(s, {{StokesComponent::kZ, std::cos(theta)}, {StokesComponent::kX, -std::sin(theta)}}, true);
}

Eigen::MatrixXcd stokes_matrix(int cutoff, StokesComponent c) {
  const int n = cutoff + 1;
  const int dim = n * n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  FockState basis;
  basis.cutoff = cutoff;
  basis.amplitudes.assign(static_cast<std::size_t>(dim), 0.0);
  for (int col = 0; col < dim; ++col) {
    basis.amplitudes[col] = 1.0;
    Extended e{n + 1, std::vector<cplx>(static_cast<std::size_t>(n + 1) * (n + 1))};
    apply_add(basis, c, 1.0, e);
    for (int na = 0; na < n; ++na) {
      for (int nb = 0; nb < n; ++nb) m(na * n + nb, col) = e.at(na, nb);
    }
    basis.amplitudes[col] = 0.0;
  }
  return m;
}

}  // namespace kerrqc::fock
