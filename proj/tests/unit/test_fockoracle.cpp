#include <cmath>

#include "doctest.h"
#include "kerrqc/correlations.hpp"
#include "kerrqc/errors.hpp"
#include "kerrqc/fockoracle.hpp"
#include "kerrqc/numeric.hpp"

using namespace kerrqc;
using namespace kerrqc::fock;

TEST_CASE("vacuum and poisson ratios") {
  const FockState vac = coherent_fock({0.0, 0.0, 0.0, 0.0}, 3);
  CHECK(std::abs(vac.at(0, 0) - cplx(1.0, 0.0)) < 1e-15);
  CHECK(vac.norm_sq() == doctest::Approx(1.0));

  const FockState one = coherent_fock({1.0, 0.0, 0.4, 0.0}, minimal_cutoff({1.0, 0.0, 0.0, 0.0}));
  CHECK(std::norm(one.at(1, 0)) / std::norm(one.at(0, 0)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::arg(one.at(1, 0) / one.at(0, 0)) == doctest::Approx(0.4));
}

TEST_CASE("truncation leak and the cutoff rule") {
  const FockState s = coherent_fock({25.0, 25.0, 0.0, 0.0}, 85);
  CHECK(s.norm_leak < 1e-10);
  CHECK(std::abs(s.norm_sq() + s.norm_leak - 1.0) < 1e-12);
  CHECK(poisson_tail(25.0, 85) < 1e-10);
  CHECK(poisson_tail(2.0, 0) == doctest::Approx(1.0 - std::exp(-2.0)));
  CHECK_THROWS_AS(coherent_fock({25.0, 1.0, 0.0, 0.0}, 84), CutoffError);
  CHECK(minimal_cutoff({25.0, 4.0, 0.0, 0.0}) >= 85);
  CHECK_NOTHROW(coherent_fock({25.0, 4.0, 0.0, 0.0}, minimal_cutoff({25.0, 4.0, 0.0, 0.0})));
}

TEST_CASE("evolution is unitary and revives at tau = pi") {
  const TwoModeCoherentInit init{4.0, 6.0, 0.3, 1.1};
  const FockState s0 = coherent_fock(init, minimal_cutoff(init));
  CHECK(evolve_fock(s0, 0.0).amplitudes == s0.amplitudes);
  FockState s = s0;
  for (double dt : {0.1, 0.37, 1.2, 2.9}) {
    s = evolve_fock(s, dt);
    CHECK(std::abs(s.norm_sq() - s0.norm_sq()) < 1e-13);
  }
  const FockState r = evolve_fock(s0, kPi);
  double worst = 0.0;
  for (std::size_t i = 0; i < r.amplitudes.size(); ++i) worst = std::max(worst, std::abs(r.amplitudes[i] - s0.amplitudes[i]));
  CHECK(worst < 1e-12);
  CHECK(reduced_purity(r, Mode::kA) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("photon number is conserved") {
  const TwoModeCoherentInit init = circular_init(20.0);
  const FockState s0 = coherent_fock(init, minimal_cutoff(init));
  const double n0 = stokes_mean(s0, StokesComponent::kN).value;
  CHECK(n0 == doctest::Approx(20.0).epsilon(1e-9));
  for (double tau : {0.01, 0.2, 1.0, 3.0}) {
    CHECK(std::abs(stokes_mean(evolve_fock(s0, tau), StokesComponent::kN).value - n0) < 1e-12 * n0);
  }
}

TEST_CASE("reduced purities of the two modes agree") {
  const TwoModeCoherentInit init{3.0, 5.0, 0.0, 0.0};
  const FockState s0 = coherent_fock(init, minimal_cutoff(init));
  CHECK(reduced_purity(s0, Mode::kA) == doctest::Approx(1.0).epsilon(1e-9));
  for (double tau : {0.05, 0.3}) {
    const FockState s = evolve_fock(s0, tau);
    CHECK(std::abs(reduced_purity(s, Mode::kA) - reduced_purity(s, Mode::kB)) < 1e-10);
    const Eigen::MatrixXcd rho = reduced_density(s, Mode::kA);
    CHECK((rho - rho.adjoint()).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(std::abs(rho.trace().real() - s.norm_sq()) < 1e-12);
  }
}

TEST_CASE("stokes moments of the circular state") {
  const double I0 = 16.0;
  const TwoModeCoherentInit init = circular_init(I0);
  const FockState s = coherent_fock(init, minimal_cutoff(init));
  CHECK(std::abs(stokes_mean(s, StokesComponent::kX).value) < 1e-10);
  CHECK(std::abs(stokes_mean(s, StokesComponent::kZ).value) < 1e-10);
  CHECK(std::abs(stokes_mean(s, StokesComponent::kY).value - I0) < 1e-9);
  CHECK(std::abs(stokes_var(s, StokesComponent::kZ).value - I0) < 1e-8);
  for (double theta : {0.0, 0.6, 1.9}) {
    CHECK(std::abs(dark_plane_mean(s, theta).value) < 1e-10);
    CHECK(std::abs(dark_plane_var(s, theta).value - I0) < 1e-8);
  }
  CHECK_FALSE(stokes_var(s, StokesComponent::kX).truncation_warning);
  CHECK(boundary_occupancy(s) < 1e-12);
}

TEST_CASE("stokes commutator on interior states") {
  const int cutoff = 8;
  const Eigen::MatrixXcd sx = stokes_matrix(cutoff, StokesComponent::kX);
  const Eigen::MatrixXcd sy = stokes_matrix(cutoff, StokesComponent::kY);
  const Eigen::MatrixXcd sz = stokes_matrix(cutoff, StokesComponent::kZ);
  const Eigen::MatrixXcd n = stokes_matrix(cutoff, StokesComponent::kN);
  const Eigen::MatrixXcd c = sx * sy - sy * sx - cplx(0.0, 2.0) * sz;
  const Eigen::MatrixXcd cn = n * sx - sx * n;
  const int side = cutoff + 1;
  double worst = 0.0;
  for (int na = 0; na + 1 < cutoff; ++na) {
    for (int nb = 0; nb + 1 < cutoff; ++nb) {
      const int col = na * side + nb;
      worst = std::max(worst, c.col(col).cwiseAbs().maxCoeff());
      worst = std::max(worst, cn.col(col).cwiseAbs().maxCoeff());
    }
  }
  CHECK(worst < 1e-10);
  CHECK((sy - sy.adjoint()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("truncation warning near the cutoff") {
  // A state with occupancy on the boundary, built by hand.
  FockState s;
  s.cutoff = 3;
  s.amplitudes.assign(16, cplx(0.0, 0.0));
  s.amplitudes[3 * 4 + 1] = 1.0;
  CHECK(boundary_occupancy(s) == doctest::Approx(1.0));
  CHECK(stokes_var(s, StokesComponent::kX).truncation_warning);
}
