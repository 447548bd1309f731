#pragma once

#include <cstdint>
#include <vector>

namespace kerrqc::specfun {

/// Largest |n| accepted by the Bessel routines.
inline constexpr std::int64_t kMaxBesselOrder = 100'000'000;

/// Exponentially scaled modified Bessel function of the first kind,
/// e^{-z} I_n(z), for integer n and z >= 0.
///
/// Evaluation regimes: power series for z < 30, Miller backward recurrence
/// normalised by the generating function for 30 <= z < 1e4, Debye uniform
/// asymptotic expansion above (and wherever sqrt(n^2 + z^2) >= 1e4). The
/// result never overflows; it underflows to 0 for orders far outside the
/// Gaussian envelope n^2 ~ z.
///
/// Throws DomainError for z < 0, non-finite z, or |n| > kMaxBesselOrder.
double bessel_i_scaled(std::int64_t n, double z);

/// e^{-z} I_n(z) for n = 0..max_order in one pass. Symmetric in n, so
/// negative orders are read from the same table.
std::vector<double> bessel_i_scaled_orders(std::int64_t max_order, double z);

/// Large-argument Gaussian approximation of the scaled Bessel function,
/// (2 pi z)^{-1/2} exp(-n^2 / 2z). Only defined for z >= 1e3; callers opt in.
double bessel_i_gaussian_approx(std::int64_t n, double z);

/// Threshold below which bessel_i_gaussian_approx refuses to evaluate.
inline constexpr double kGaussianApproxMinArgument = 1e3;

/// Periodic phase-diffusion kernel sum_k exp(i k phi - width k^2).
///
/// Real, 2 pi periodic and strictly positive for width > 0. Uses the
/// wrapped-Gaussian image sum for width < kThetaImageSwitch (positive term
/// by term) and the cosine series above.
double theta_kernel(double phi, double width);

inline constexpr double kThetaImageSwitch = 1.0;

/// Cosine-series form, 1 + 2 sum_{k=1}^{K} exp(-width k^2) cos(k phi) with
/// K = ceil(sqrt(33 / width)).
double theta_kernel_series(double phi, double width);

/// Image-sum form, sqrt(pi / width) sum_m exp(-(phi - 2 pi m)^2 / (4 width)).
double theta_kernel_images(double phi, double width);

}  // namespace kerrqc::specfun
