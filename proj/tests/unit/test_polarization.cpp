#include <cmath>

#include "doctest.h"
#include "kerrqc/errors.hpp"
#include "kerrqc/fockoracle.hpp"
#include "kerrqc/numeric.hpp"
#include "kerrqc/polarization.hpp"

using namespace kerrqc;

namespace {

// Golden-section minimum of the dark-plane variance on (0, pi/2).
double minimise_angle(double I0, double tau, double g) {
  const double r = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = 1e-9, b = 0.5 * kPi;
  double c = b - r * (b - a), d = a + r * (b - a);
  for (int i = 0; i < 200; ++i) {
    if (stokes_var_perp(I0, c, tau, g) < stokes_var_perp(I0, d, tau, g)) {
      b = d;
    } else {
      a = c;
    }
    c = b - r * (b - a);
    d = a + r * (b - a);
  }
  return 0.5 * (a + b);
}

}  // namespace

TEST_CASE("dark-plane moments at tau = 0") {
  for (double theta : {0.0, 0.3, 1.0, 2.5}) {
    CHECK(stokes_var_perp(100.0, theta, 0.0) == doctest::Approx(100.0).epsilon(1e-14));
  }
  CHECK(stokes_mean(100.0, 0.0)[1] == 100.0);
  CHECK(optimal_angle(1e6, 0.0) == doctest::Approx(0.25 * kPi).epsilon(1e-15));
  CHECK(optimal_amount_closed_form(1e6, 0.0) == 0.0);
}

TEST_CASE("the printed variance forms miss the coherent level at tau = 0") {
  CHECK(std::abs(stokes_var_perp(100.0, 1.0, 0.0, 0.0, DarkPlaneForm::kPrinted) - 100.0) > 1.0);
  CHECK(std::abs(stokes_var_perp(100.0, 1.0, 0.0, 0.0, DarkPlaneForm::kFullAngleBracket) - 100.0) > 1.0);
}

TEST_CASE("mean polarisation decays at short times") {
  const double I0 = 1e4;
  const double tau = 1e-3;
  CHECK(stokes_mean(I0, tau)[1] ==
        doctest::Approx(I0 / std::pow(1 + tau * tau, 2) * std::exp(-2 * I0 * tau * tau / (1 + tau * tau))));
  CHECK(stokes_mean(I0, tau, 10.0)[1] < stokes_mean(I0, tau)[1]);
  CHECK(stokes_mean(I0, tau)[0] == 0.0);
}

TEST_CASE("dark-plane variance agrees with the fock evolution") {
  // The linearised moments miss O(1/I0) of the deviation from the coherent
  // level (N vs N - 1 type factors), so the tolerance scales with 1/I0.
  const double tau = 1e-3;
  for (double I0 : {25.0, 100.0}) {
    const auto init = fock::circular_init(I0);
    const auto s = fock::evolve_fock(fock::coherent_fock(init, fock::minimal_cutoff(init)), tau);
    CHECK(fock::stokes_mean(s, fock::StokesComponent::kY).value ==
          doctest::Approx(stokes_mean(I0, tau)[1]).epsilon(1e-4));
    for (double theta : {0.0, 0.4, 0.7854, 1.2, 2.0}) {
      const double exact = fock::dark_plane_var(s, theta).value;
      const double qc = stokes_var_perp(I0, theta, tau);
      CAPTURE(I0);
      CAPTURE(theta);
      CHECK(std::abs(qc - exact) <= 2.0 / I0 * std::abs(exact - I0) + 1e-9 * I0);
    }
    // The printed readings are off by O(I0^2 sin^2) at this point.
    CHECK(std::abs(stokes_var_perp(I0, 1.2, tau, 0.0, DarkPlaneForm::kPrinted) - fock::dark_plane_var(s, 1.2).value) >
          10.0);
  }
}

TEST_CASE("optimal angle agrees with a numerical minimiser") {
  for (double tau : {1e-7, 1e-6, 5e-6}) {
    for (double g : {0.0, 0.2, 5.0}) {
      CAPTURE(tau);
      CAPTURE(g);
      CHECK(std::abs(minimise_angle(1e6, tau, g) - optimal_angle(1e6, tau, g)) < 1e-4);
    }
  }
}

TEST_CASE("closed-form optimal amount") {
  const double I0 = 1e4;
  for (double tau : {1e-6, 1e-4, 1.0 / I0}) {
    const double c = I0 * tau;
    CHECK(optimal_amount_closed_form(I0, tau) == doctest::Approx(2 * I0 * I0 * tau * (c - std::sqrt(1 + c * c))));
  }
  const double at_one = optimal_amount_closed_form(I0, 1.0 / I0);
  CHECK(at_one == doctest::Approx(2.0 * I0 * (1.0 - std::sqrt(2.0))).epsilon(1e-14));
  // Short-time limit of the full variance minus mean.
  const double tau = 1e-7;
  const double full = stokes_var_perp(1e6, optimal_angle(1e6, tau), tau) - stokes_mean(1e6, tau)[1];
  CHECK(full == doctest::Approx(optimal_amount_closed_form(1e6, tau)).epsilon(1e-2));
}

TEST_CASE("dark-plane uncertainty product respects the bound") {
  for (double I0 : {100.0, 1e6}) {
    for (double tau : {0.0, 1e-6, 1e-4, 1e-2}) {
      for (int i = 0; i < 64; ++i) {
        const double theta = i * kPi / 64;
        const double prod = stokes_var_perp(I0, theta, tau) * stokes_var_perp(I0, theta + 0.5 * kPi, tau);
        const double sy = stokes_mean(I0, tau)[1];
        CHECK(prod >= sy * sy * (1 - 1e-9));
      }
    }
  }
}

TEST_CASE("variance is pi-periodic in the angle") {
  for (double theta : {0.1, 0.9, 2.0}) {
    CHECK(stokes_var_perp(1e4, theta + kPi, 1e-4, 0.3) == doctest::Approx(stokes_var_perp(1e4, theta, 1e-4, 0.3)));
  }
}

TEST_CASE("dephasing degrades squeezing") {
  const double I0 = 1e6;
  double prev_angle = optimal_angle(I0, 1e-6, 0.0);
  double prev_amount = squeezing_report(I0, 1e-6, 0.0, 1.0, 2e-6).optimal_amount;
  for (double g : {0.2, 1.0, 5.0, 20.0}) {
    const double a = optimal_angle(I0, 1e-6, g);
    const double amt = squeezing_report(I0, 1e-6, g, 1.0, 2e-6).optimal_amount;
    CHECK(a < prev_angle);
    CHECK(amt > prev_amount);
    prev_angle = a;
    prev_amount = amt;
  }
  const SqueezingReport r = squeezing_report(I0, 1e-6, 1e9, 1.0, 2e-6);
  CHECK_FALSE(r.squeezing_certified);
}

TEST_CASE("squeezing report") {
  const SqueezingReport r = squeezing_report(1e6, 1e-6, 0.0, 2.0, 1e-6);
  CHECK(r.squeezing_certified);
  CHECK(r.var_sq < r.mean_N);
  CHECK(r.var_antisq > r.mean_N);
  CHECK(r.theta_sq == doctest::Approx(0.5 * std::atan2(1.0, 1.0)));
  CHECK_THROWS_AS(squeezing_report(1e6, 1e-6, 0.0, 1.0, 1e-6), DomainError);
  CHECK_THROWS_AS(stokes_var_perp(-1.0, 0.0, 0.0), DomainError);
}
