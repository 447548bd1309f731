#include <cmath>
#include <vector>

#include "doctest.h"
#include "kerrqc/errors.hpp"
#include "kerrqc/numeric.hpp"
#include "kerrqc/specfun.hpp"

using namespace kerrqc;
using namespace kerrqc::specfun;

namespace {

// Extended-precision ascending series, 200 terms.
long double series_oracle(int n, long double z) {
  long double term = std::pow(z / 2, static_cast<long double>(n)) / std::tgamma(static_cast<long double>(n + 1));
  long double sum = term;
  for (int k = 1; k < 200; ++k) {
    term *= (z / 2) * (z / 2) / (static_cast<long double>(k) * (n + k));
    sum += term;
  }
  return sum * std::exp(-z);
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("scaled bessel trivial values") {
  CHECK(bessel_i_scaled(0, 0.0) == 1.0);
  CHECK(bessel_i_scaled(3, 0.0) == 0.0);
  CHECK(bessel_i_scaled(-3, 0.0) == 0.0);
}

TEST_CASE("scaled bessel matches extended-precision power series") {
  CHECK(rel(bessel_i_scaled(5, 2.0), static_cast<double>(series_oracle(5, 2.0L))) < 1e-12);
  for (int n : {0, 1, 2, 7, 20}) {
    for (double z : {0.1, 1.0, 5.0, 12.0, 25.0}) {
      CAPTURE(n);
      CAPTURE(z);
      CHECK(rel(bessel_i_scaled(n, z), static_cast<double>(series_oracle(n, z))) < 1e-10);
    }
  }
}

TEST_CASE("scaled bessel is symmetric in the order") {
  for (double z : {0.5, 29.0, 31.0, 500.0, 2e4, 2e6}) {
    for (int n : {1, 4, 37, 400}) CHECK(bessel_i_scaled(n, z) == bessel_i_scaled(-n, z));
  }
}

TEST_CASE("scaled bessel stays in (0, 1] and never overflows") {
  for (double z : {1e-3, 1.0, 50.0, 1e3, 1e5, 1e7}) {
    for (std::int64_t n : {0, 1, 10, 1000, 100000}) {
      const double v = bessel_i_scaled(n, z);
      CHECK(std::isfinite(v));
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
    }
  }
  CHECK(bessel_i_scaled(100'000'000, 5.0) == 0.0);
}

TEST_CASE("scaled bessel rejects bad arguments") {
  CHECK_THROWS_AS(bessel_i_scaled(0, -1.0), DomainError);
  CHECK_THROWS_AS(bessel_i_scaled(0, std::nan("")), DomainError);
  CHECK_THROWS_AS(bessel_i_scaled(0, INFINITY), DomainError);
  CHECK_THROWS_AS(bessel_i_scaled(100'000'001, 1.0), DomainError);
}

TEST_CASE("generating function normalisation") {
  for (double z : {1.0, 10.0, 1e3}) {
    const auto n_max = static_cast<std::int64_t>(std::ceil(std::sqrt(66.0 * z))) + 40;
    const std::vector<double> s = bessel_i_scaled_orders(n_max, z);
    CompensatedSum sum;
    for (std::int64_t n = n_max; n >= 1; --n) sum.add(2.0 * s[n]);
    sum.add(s[0]);
    CAPTURE(z);
    CHECK(std::abs(sum.value() - 1.0) < 1e-8);
  }
}

TEST_CASE("three-term recurrence in scaled form") {
  for (double z : {1.0, 10.0, 1e3, 1e6}) {
    for (int n = -100; n <= 100; ++n) {
      if (n == 0) continue;
      const double lhs = bessel_i_scaled(n - 1, z) - bessel_i_scaled(n + 1, z);
      const double rhs = 2.0 * n / z * bessel_i_scaled(n, z);
      if (bessel_i_scaled(n, z) < 1e-290) continue;
      CAPTURE(z);
      CAPTURE(n);
      CHECK(std::abs(lhs - rhs) <= 1e-8 * std::abs(bessel_i_scaled(n - 1, z)) + 1e-300);
    }
  }
}

TEST_CASE("batch and single evaluations agree") {
  for (double z : {3.0, 31.0, 900.0, 2e4}) {
    const auto s = bessel_i_scaled_orders(60, z);
    for (int n = 0; n <= 60; ++n) {
      const double single = bessel_i_scaled(n, z);
      if (single < 1e-250) continue;
      CHECK(rel(s[n], single) < 1e-10);
    }
  }
}

TEST_CASE("regime seams are continuous") {
  // Series below 30 vs recurrence above; recurrence below 1e4 vs uniform expansion above.
  for (int n : {0, 1, 5, 20}) {
    const double a = bessel_i_scaled(n, std::nextafter(30.0, 0.0));
    const double b = bessel_i_scaled(n, 30.0);
    CHECK(rel(a, b) < 1e-10);
    const double c = bessel_i_scaled(n, std::nextafter(1e4, 0.0));
    const double d = bessel_i_scaled(n, 1e4);
    CHECK(rel(c, d) < 1e-10);
  }
  // Order-driven switch inside the recurrence band.
  for (double z : {100.0, 5000.0}) {
    const double nu = std::sqrt(1e8 - z * z);
    const auto n = static_cast<std::int64_t>(std::floor(nu));
    const double lo = bessel_i_scaled(n, z);
    const double hi = bessel_i_scaled(n + 1, z);
    const double expected_ratio = bessel_i_scaled_orders(n + 1, z)[n + 1] / bessel_i_scaled_orders(n + 1, z)[n];
    if (lo > 1e-250) CHECK(rel(hi / lo, expected_ratio) < 1e-6);
  }
}

TEST_CASE("uniform expansion vs large-argument gaussian approximation") {
  CHECK(rel(bessel_i_scaled(1000, 2e6), bessel_i_gaussian_approx(1000, 2e6)) < 1e-3);
  const double z = 1e4;
  for (int n = -100; n <= 100; ++n) {
    CHECK(rel(bessel_i_gaussian_approx(n, z), bessel_i_scaled(n, z)) < 1e-2);
  }
}

TEST_CASE("gaussian approximation direct substitution and domain") {
  CHECK(bessel_i_gaussian_approx(0, 1e6) == doctest::Approx(1.0 / std::sqrt(kTwoPi * 1e6)).epsilon(1e-15));
  const double expected = std::exp(-2000.0 * 2000.0 / (2.0 * 2e6)) / std::sqrt(kTwoPi * 2e6);
  CHECK(bessel_i_gaussian_approx(2000, 2e6) == doctest::Approx(expected).epsilon(1e-14));
  CHECK_THROWS_AS(bessel_i_gaussian_approx(0, 999.0), DomainError);
}

TEST_CASE("theta kernel trivial values") {
  for (double phi : {-2.0, 0.0, 1.0, 3.0}) {
    CHECK(theta_kernel(phi, 50.0) == doctest::Approx(1.0 + 2.0 * std::exp(-50.0) * std::cos(phi)).epsilon(1e-15));
  }
  double direct = 1.0;
  for (int k = 1; k < 10; ++k) direct += 2.0 * std::exp(-double(k * k));
  CHECK(theta_kernel(0.0, 1.0) == doctest::Approx(direct).epsilon(1e-14));
  CHECK_THROWS_AS(theta_kernel(0.0, 0.0), DomainError);
  CHECK_THROWS_AS(theta_kernel(0.0, -1.0), DomainError);
}

TEST_CASE("theta kernel dual representation") {
  CHECK(std::abs(theta_kernel_series(0.3, 1e-3) - theta_kernel_images(0.3, 1e-3)) < 1e-12);
  for (double w : {0.05, 0.5, 1.0, 3.0}) {
    for (double phi : {-3.0, -1.0, 0.0, 0.7, 3.1}) {
      const double s = theta_kernel_series(phi, w);
      const double m = theta_kernel_images(phi, w);
      CHECK(std::abs(s - m) <= 1e-12 * std::max(1.0, std::abs(m)));
    }
  }
}

TEST_CASE("theta kernel periodicity and positivity") {
  for (double w : {1e-4, 1e-2, 0.9, 1.1, 10.0}) {
    for (double phi : {-3.0, -0.5, 0.0, 1.3, 2.9}) {
      const double v = theta_kernel(phi, w);
      CHECK(std::abs(theta_kernel(phi + kTwoPi, w) - v) <= 1e-12 * std::max(v, 1e-300));
      // Far tails of very narrow kernels underflow to zero.
      CHECK(v >= 0.0);
      if (std::abs(phi) < 1.0) CHECK(v > 0.0);
    }
  }
}

TEST_CASE("theta kernel zeroth Fourier coefficient") {
  for (double w : {1e-2, 0.3, 1.0, 5.0}) {
    const int n = 2048;
    const double h = kTwoPi / n;
    CompensatedSum sum;
    for (int i = 0; i < n; ++i) sum.add(theta_kernel(-kPi + i * h, w));
    CAPTURE(w);
    CHECK(std::abs(sum.value() * h / kTwoPi - 1.0) < 1e-10);
  }
}
