#include "kerrqc/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "kerrqc/errors.hpp"
#include "kerrqc/numeric.hpp"

namespace kerrqc::specfun {
namespace {

constexpr double kSeriesLimit = 30.0;
constexpr double kUniformLimit = 1e4;

void check_bessel_args(std::int64_t n, double z) {
  if (!std::isfinite(z) || z < 0.0) {
    throw DomainError("bessel_i_scaled: argument must be finite and >= 0, got " +
                      std::to_string(z));
  }
  if (n > kMaxBesselOrder || n < -kMaxBesselOrder) {
    throw DomainError("bessel_i_scaled: |order| exceeds 1e8: " + std::to_string(n));
  }
}

// Ascending power series sum_k (z/2)^{n+2k} / (k! (n+k)!), scaled by e^{-z}.
double series_scaled(std::int64_t n, double z) {
  const double nu = static_cast<double>(n);
  const double half = 0.5 * z;
  const double quarter_sq = half * half;
  double term = std::exp(nu * std::log(half) - std::lgamma(nu + 1.0) - z);
  if (term == 0.0) return 0.0;
  double sum = term;
  for (int k = 1; k < 1000; ++k) {
    term *= quarter_sq / (static_cast<double>(k) * (nu + k));
    sum += term;
    if (term < 1e-17 * sum && k > half) break;
  }
  return sum;
}

// Debye expansion written in r = sqrt(nu^2 + x^2) and p = nu / r, so that
// every correction U_k(p) / nu^k becomes Q_k(p^2) / r^k and stays finite at
// nu = 0. Truncation error is O(r^-5).
double uniform_scaled(double nu, double x) {
  const double r = std::hypot(nu, x);
  const double p2 = (nu / r) * (nu / r);
  const double t = 1.0 / r;

  const double q1 = (3.0 - 5.0 * p2) / 24.0;
  const double q2 = (81.0 + p2 * (-462.0 + p2 * 385.0)) / 1152.0;
  const double q3 =
      (30375.0 + p2 * (-369603.0 + p2 * (765765.0 - p2 * 425425.0))) / 414720.0;
  const double q4 =
      (4465125.0 +
       p2 * (-94121676.0 + p2 * (349922430.0 + p2 * (-446185740.0 + p2 * 185910725.0)))) /
      39813120.0;
  const double series = 1.0 + t * (q1 + t * (q2 + t * (q3 + t * q4)));

  // r - x + nu * ln(x / (nu + r)), arranged to avoid cancellation.
  const double r_minus_x = nu * nu / (r + x);
  const double exponent = r_minus_x - nu * std::log1p((nu + r_minus_x) / x);
  return std::exp(exponent) / std::sqrt(kTwoPi * r) * series;
}

// Miller backward recurrence for orders 0..max_order, normalised with
// e^z = I_0 + 2 sum_{k>=1} I_k. Returns the scaled values.
std::vector<double> miller_scaled(std::int64_t max_order, double z) {
  const auto margin = static_cast<std::int64_t>(std::ceil(std::sqrt(80.0 * z))) + 20;
  const std::int64_t start = max_order + margin;
  std::vector<double> out(static_cast<std::size_t>(max_order) + 1, 0.0);

  constexpr double kBig = 1e250;
  constexpr double kShrink = 1e-250;
  double above = 0.0;   // b_{k+1}
  double current = 1.0; // b_k
  double norm = 0.0;
  for (std::int64_t k = start; k >= 1; --k) {
    if (k <= max_order) out[static_cast<std::size_t>(k)] = current;
    norm += 2.0 * current;
    const double below = above + (2.0 * static_cast<double>(k) / z) * current;
    above = current;
    current = below;
    if (std::abs(current) > kBig) {
      current *= kShrink;
      above *= kShrink;
      norm *= kShrink;
      const auto lo = static_cast<std::size_t>(std::min(k, max_order + 1));
      for (std::size_t i = lo; i < out.size(); ++i) out[i] *= kShrink;
    }
  }
  out[0] = current;
  norm += current;
  for (double& v : out) v /= norm;
  return out;
}

}  // namespace

double bessel_i_scaled(std::int64_t n, double z) {
  check_bessel_args(n, z);
  const std::int64_t order = n < 0 ? -n : n;
  if (z == 0.0) return order == 0 ? 1.0 : 0.0;
  if (z < kSeriesLimit) return series_scaled(order, z);
  const double nu = static_cast<double>(order);
  if (z < kUniformLimit && std::hypot(nu, z) < kUniformLimit) {
    return miller_scaled(order, z)[static_cast<std::size_t>(order)];
  }
  return uniform_scaled(nu, z);
}

std::vector<double> bessel_i_scaled_orders(std::int64_t max_order, double z) {
  check_bessel_args(max_order, z);
  if (max_order < 0) throw DomainError("bessel_i_scaled_orders: max_order must be >= 0");
  std::vector<double> out(static_cast<std::size_t>(max_order) + 1, 0.0);
  if (z == 0.0) {
    out[0] = 1.0;
    return out;
  }
  if (z < kSeriesLimit) {
    for (std::int64_t k = 0; k <= max_order; ++k) {
      out[static_cast<std::size_t>(k)] = series_scaled(k, z);
    }
    return out;
  }
  if (z < kUniformLimit) return miller_scaled(max_order, z);
  for (std::int64_t k = 0; k <= max_order; ++k) {
    out[static_cast<std::size_t>(k)] = uniform_scaled(static_cast<double>(k), z);
  }
  return out;
}

double bessel_i_gaussian_approx(std::int64_t n, double z) {
  check_bessel_args(n, z);
  if (z < kGaussianApproxMinArgument) {
    throw DomainError("bessel_i_gaussian_approx: requires z >= 1e3, got " + std::to_string(z));
  }
  const double nu = static_cast<double>(n);
  return std::exp(-nu * nu / (2.0 * z)) / std::sqrt(kTwoPi * z);
}

double theta_kernel_series(double phi, double width) {
  if (!(width > 0.0) || !std::isfinite(width) || !std::isfinite(phi)) {
    throw DomainError("theta_kernel: width must be finite and > 0");
  }
  const double x = wrap_angle(phi);
  const auto terms = static_cast<int>(std::ceil(std::sqrt(33.0 / width)));
  CompensatedSum sum;
  sum.add(1.0);
  for (int k = 1; k <= terms; ++k) {
    const double kk = static_cast<double>(k);
    sum.add(2.0 * std::exp(-width * kk * kk) * std::cos(kk * x));
  }
  return sum.value();
}

double theta_kernel_images(double phi, double width) {
  if (!(width > 0.0) || !std::isfinite(width) || !std::isfinite(phi)) {
    throw DomainError("theta_kernel: width must be finite and > 0");
  }
  const double x = wrap_angle(phi);
  const int images = 1 + static_cast<int>(std::ceil(std::sqrt(160.0 * width) / kTwoPi));
  // Sum from the outermost images inwards so the dominant m = 0 term comes last.
  double sum = 0.0;
  for (int m = images; m >= 1; --m) {
    const double dp = x - kTwoPi * m;
    const double dm = x + kTwoPi * m;
    sum += std::exp(-dp * dp / (4.0 * width)) + std::exp(-dm * dm / (4.0 * width));
  }
  sum += std::exp(-x * x / (4.0 * width));
  return std::sqrt(kPi / width) * sum;
}

double theta_kernel(double phi, double width) {
  if (!(width > 0.0) || !std::isfinite(width)) {
    throw DomainError("theta_kernel: width must be > 0 (use the unitary path for gamma = 0)");
  }
  return width < kThetaImageSwitch ? theta_kernel_images(phi, width)
                                   : theta_kernel_series(phi, width);
}

}  // namespace kerrqc::specfun
