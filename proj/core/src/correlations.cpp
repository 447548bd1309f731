#include "kerrqc/correlations.hpp"

#include <Eigen/Eigenvalues>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "kerrqc/errors.hpp"
#include "kerrqc/numeric.hpp"
#include "kerrqc/quadrature.hpp"
#include "kerrqc/specfun.hpp"

namespace kerrqc {
namespace {

void check_tau(double tau) {
  if (!(tau >= 0.0) || !std::isfinite(tau)) throw DomainError("tau must be finite and >= 0");
}

void check_result(double v, const char* where) {
  if (!std::isfinite(v)) throw OverflowGuardError(std::string(where) + ": non-finite accumulation");
}

constexpr double kQcIntegralMinIntensity = 1e3;

}  // namespace

std::string_view to_string(PurityMethod m) {
  switch (m) {
    case PurityMethod::kQcSeries: return "qc-series";
    case PurityMethod::kQcIntegral: return "qc-integral";
    case PurityMethod::kAsymptotic: return "asymptotic";
    case PurityMethod::kExactSeries: return "exact-series";
    case PurityMethod::kFockOracle: return "fock-oracle";
  }
  return "unknown";
}

std::string_view to_string(EntanglementVerdict v) {
  return v == EntanglementVerdict::kEntangledGaussianCriterion ? "entangled-by-gaussian-criterion"
                                                               : "inconclusive";
}

std::int64_t bessel_window(double z) {
  return static_cast<std::int64_t>(std::ceil(std::sqrt(66.0 * z))) + 40;
}

PurityResult purity_qc_series(const TwoModeCoherentInit& init, double tau) {
  init.validate();
  check_tau(tau);
  const double z = 2.0 * init.I0a;
  const std::int64_t window = bessel_window(z);
  // The state is still pure; skip the sum so the value is exactly 1.
  if (tau == 0.0) return {1.0, PurityMethod::kQcSeries, window, true, 0.0};
  const std::vector<double> s = specfun::bessel_i_scaled_orders(window, z);
  const double t2 = tau * tau;

  auto term = [&](std::int64_t n) {
    const double x = t2 * static_cast<double>(n) * static_cast<double>(n);
    const double inv = 1.0 / (1.0 + x);
    return s[static_cast<std::size_t>(n)] * inv * std::exp(-4.0 * init.I0b * x * inv);
  };
  // Smallest terms first; the n and -n terms are equal.
  CompensatedSum sum;
  for (std::int64_t n = window; n >= 1; --n) sum.add(2.0 * term(n));
  sum.add(term(0));
  const double value = sum.value();
  check_result(value, "purity_qc_series");
  return {value, PurityMethod::kQcSeries, window, true, 0.0};
}

PurityResult purity_qc_integral(const TwoModeCoherentInit& init, double tau) {
  init.validate();
  check_tau(tau);
  if (init.I0a < kQcIntegralMinIntensity) {
    throw DomainError("purity_qc_integral: requires I0a >= 1e3, got " + std::to_string(init.I0a));
  }
  if (tau == 0.0) return {1.0, PurityMethod::kQcIntegral, 0, true, 0.0};
  const double q = 4.0 * init.I0a * tau * tau;
  auto f = [&](double u) {
    const double x = q * u * u;
    const double inv = 1.0 / (1.0 + x);
    return std::exp(-u * u) * inv * std::exp(-4.0 * init.I0b * x * inv);
  };
  double err = 0.0;
  const double integral =
      boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, 10.0, 20, 1e-13, &err);
  const double value = 2.0 / std::sqrt(kPi) * integral;
  check_result(value, "purity_qc_integral");
  return {value, PurityMethod::kQcIntegral, 0, true, 0.0};
}

PurityResult purity_asymptotic(const TwoModeCoherentInit& init, double tau) {
  init.validate();
  check_tau(tau);
  const double value = 1.0 / std::sqrt(1.0 + 16.0 * init.I0a * init.I0b * tau * tau);
  return {value, PurityMethod::kAsymptotic, 0, init.I0b * tau <= 1.0, 0.0};
}

PurityResult purity_exact(const TwoModeCoherentInit& init, double tau) {
  init.validate();
  check_tau(tau);
  const double z = 2.0 * init.I0a;
  const std::int64_t window = bessel_window(z);
  if (tau == 0.0) return {1.0, PurityMethod::kExactSeries, window, true, 0.0};
  const std::vector<double> s = specfun::bessel_i_scaled_orders(window, z);
  const double t = std::remainder(tau, kPi);
  CompensatedSum sum;
  for (std::int64_t d = window; d >= 1; --d) {
    const double sn = std::sin(static_cast<double>(d) * t);
    sum.add(2.0 * s[static_cast<std::size_t>(d)] * std::exp(-4.0 * init.I0b * sn * sn));
  }
  sum.add(s[0]);
  const double value = sum.value();
  check_result(value, "purity_exact");
  return {value, PurityMethod::kExactSeries, window, true, 0.0};
}

PurityResult purity_exact_double_series(const TwoModeCoherentInit& init, double tau) {
  init.validate();
  check_tau(tau);
  const double za = 2.0 * init.I0a;
  const double zb = 2.0 * init.I0b;
  const std::int64_t na = bessel_window(za);
  const std::int64_t nb = bessel_window(zb);
  const std::vector<double> sa = specfun::bessel_i_scaled_orders(na, za);
  const std::vector<double> sb = specfun::bessel_i_scaled_orders(nb, zb);
  const double t = std::remainder(tau, kPi);
  CompensatedSum re;
  CompensatedSum im;
  for (std::int64_t m = -na; m <= na; ++m) {
    const double wm = sa[static_cast<std::size_t>(m < 0 ? -m : m)];
    for (std::int64_t n = -nb; n <= nb; ++n) {
      const double w = wm * sb[static_cast<std::size_t>(n < 0 ? -n : n)];
      const double phase = 2.0 * static_cast<double>(m) * static_cast<double>(n) * t;
      re.add(w * std::cos(phase));
      im.add(w * std::sin(phase));
    }
  }
  const double value = re.value();
  check_result(value, "purity_exact_double_series");
  return {value, PurityMethod::kExactSeries, std::max(na, nb), true, std::abs(im.value())};
}

double CovarianceMatrix::physicality_margin() const {
  Eigen::Matrix4cd h = m.cast<std::complex<double>>();
  const std::complex<double> half_i(0.0, 0.5);
  // Omega = diag(J, J), J = [[0, 1], [-1, 0]].
  for (int k = 0; k < 4; k += 2) {
    h(k, k + 1) += half_i;
    h(k + 1, k) -= half_i;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

CovarianceMatrix covariance_matrix(const TwoModeCoherentInit& init, double tau, const QuadratureSpec& quad) {
  init.validate();
  check_tau(tau);
  if (quad.order < 20 || quad.order > kMaxHermiteOrder) {
    throw QuadratureOrderError("covariance_matrix: quadrature order " + std::to_string(quad.order) +
                               " outside [20, " + std::to_string(kMaxHermiteOrder) + "]");
  }
  const HermiteRule rule = gauss_hermite(quad.order);
  const int q = quad.order;
  const double inv_sqrt_pi = 1.0 / std::sqrt(kPi);
  std::vector<double> u(q), w(q);
  for (int i = 0; i < q; ++i) {
    u[i] = rule.nodes[i] / std::sqrt(2.0);  // Re/Im offsets have variance 1/4
    w[i] = rule.weights[i] * inv_sqrt_pi;
  }
  const std::complex<double> a0 = init.alpha0();
  const std::complex<double> b0 = init.beta0();
  const double root2 = std::sqrt(2.0);

  // Visits every node with its transported quadrature vector. Two passes
  // (mean, then centred moments) keep the large displacement out of the
  // second moments.
  auto visit = [&](auto&& fn) {
    for (int i = 0; i < q; ++i) {
      for (int j = 0; j < q; ++j) {
        const std::complex<double> alpha = a0 + std::complex<double>(u[i], u[j]);
        const double wa = w[i] * w[j];
        const std::complex<double> rot_b = std::polar(1.0, -2.0 * std::norm(alpha) * tau);
        for (int k = 0; k < q; ++k) {
          for (int l = 0; l < q; ++l) {
            const std::complex<double> beta = b0 + std::complex<double>(u[k], u[l]);
            const std::complex<double> at = alpha * std::polar(1.0, -2.0 * std::norm(beta) * tau);
            const std::complex<double> bt = beta * rot_b;
            fn(wa * w[k] * w[l],
               Eigen::Vector4d(root2 * at.real(), root2 * at.imag(), root2 * bt.real(), root2 * bt.imag()));
          }
        }
      }
    }
  };
  std::array<CompensatedSum, 4> mean_sum;
  visit([&](double wt, const Eigen::Vector4d& x) {
    for (int r = 0; r < 4; ++r) mean_sum[r].add(wt * x(r));
  });
  CovarianceMatrix out;
  for (int r = 0; r < 4; ++r) out.mean(r) = mean_sum[r].value();

  std::array<CompensatedSum, 10> mom;
  visit([&](double wt, const Eigen::Vector4d& x) {
    const Eigen::Vector4d d = x - out.mean;
    int c = 0;
    for (int r = 0; r < 4; ++r) {
      for (int s = r; s < 4; ++s) mom[c++].add(wt * d(r) * d(s));
    }
  });
  int c = 0;
  for (int r = 0; r < 4; ++r) {
    for (int s = r; s < 4; ++s) {
      out.m(r, s) = out.m(s, r) = mom[c++].value();
    }
  }
  return out;
}

SymplecticSpectrum symplectic_spectrum(const Eigen::Matrix4d& g) {
  const Eigen::Matrix2d A = g.block<2, 2>(0, 0);
  const Eigen::Matrix2d B = g.block<2, 2>(2, 2);
  const Eigen::Matrix2d C = g.block<2, 2>(0, 2);
  const double det_g = g.determinant();
  const double base = A.determinant() + B.determinant();
  const double delta = base + 2.0 * C.determinant();
  const double delta_pt = base - 2.0 * C.determinant();

  // The discriminants only screen out unphysical input. Near degeneracy
  // (coherent states, tau = 0) sqrt(disc) turns rounding into sqrt(eps)
  // errors, so the values come from the Hermitian matrix i L Omega L with
  // L = gamma^{1/2}, whose eigenvalues are +-nu.
  for (double d : {delta, delta_pt}) {
    if (d * d - 4.0 * det_g < -1e-8) {
      throw DomainError("symplectic_spectrum: negative discriminant (unphysical matrix)");
    }
  }
  auto pair = [](const Eigen::Matrix4d& m, double& plus, double& minus) {
    const Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(m);
    if (es.eigenvalues()(0) <= 0.0) throw DomainError("symplectic_spectrum: matrix is not positive definite");
    const Eigen::Matrix4d L = es.operatorSqrt();
    Eigen::Matrix4d omega = Eigen::Matrix4d::Zero();
    omega(0, 1) = omega(2, 3) = 1.0;
    omega(1, 0) = omega(3, 2) = -1.0;
    const Eigen::Matrix4d k = L * omega * L;
    const Eigen::Matrix4cd h = std::complex<double>(0.0, 1.0) * (0.5 * (k - k.transpose())).cast<std::complex<double>>();
    const Eigen::Vector4d ev = Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd>(h, Eigen::EigenvaluesOnly).eigenvalues();
    minus = ev(2);
    plus = ev(3);
  };
  SymplecticSpectrum out;
  pair(g, out.nu_plus, out.nu_minus);
  Eigen::Matrix4d pt = g;
  pt.row(3) *= -1.0;
  pt.col(3) *= -1.0;
  double unused = 0.0;
  pair(pt, unused, out.nu_tilde_minus);
  return out;
}

SymplecticSpectrum symplectic_spectrum(const CovarianceMatrix& gamma) { return symplectic_spectrum(gamma.m); }

EntanglementVerdict entanglement_witness(const SymplecticSpectrum& sp) {
  return sp.nu_tilde_minus < 0.5 - 1e-9 ? EntanglementVerdict::kEntangledGaussianCriterion
                                          : EntanglementVerdict::kInconclusive;
}

}  // namespace kerrqc
