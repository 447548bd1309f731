#include "kerrqc/poincare_export.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <exception>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "kerrqc/errors.hpp"
#include "kerrqc/numeric.hpp"
#include "kerrqc/specfun.hpp"

namespace kerrqc {
namespace {

std::string fmt(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

Box default_box(const TwoModeCoherentInit& init, double units) {
  const PoincareCartesian s0 = initial_stokes(init);
  const double h = units * std::sqrt(2.0 * init.total_intensity());
  return {{s0.sx, s0.sy, s0.sz}, {h, h, h}};
}

double scenario_peak(const TwoModeCoherentInit& init) {
  return 8.0 / kPi * specfun::bessel_i_scaled(0, 4.0 * init.total_intensity());
}

ScalarGrid3D sample_grid(const TwoModeCoherentInit& init, double tau, const KerrConfig& cfg, const Box& box,
                         std::array<std::int64_t, 3> dims, unsigned threads, DephasedWidthForm form) {
  init.validate();
  cfg.validate();
  if (!(tau >= 0.0)) throw DomainError("sample_grid: tau must be >= 0");
  for (auto d : dims) {
    if (d < 2) throw DomainError("sample_grid: every dimension needs at least 2 nodes");
  }
  ScalarGrid3D grid;
  grid.dims = dims;
  for (int a = 0; a < 3; ++a) {
    grid.origin[a] = box.center[a] - box.half_width[a];
    grid.spacing[a] = 2.0 * box.half_width[a] / static_cast<double>(dims[a] - 1);
  }
  grid.values.assign(grid.size(), 0.0);
  const double peak = scenario_peak(init);
  const bool dephased = cfg.gamma() > 0.0;
  const double t = seconds_from_tau(tau, cfg.chi);

  auto eval = [&](std::int64_t i, std::int64_t j, std::int64_t k) {
    const Eigen::Vector3d p = grid.node(i, j, k);
    const PoincareCartesian s{p(0), p(1), p(2), 0.0};
    const double w = dephased ? wigner_dephased(init, to_spherical(s), t, cfg, form) : wigner_poincare(init, s, tau);
    return w / peak;
  };

  unsigned workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  workers = static_cast<unsigned>(std::min<std::int64_t>(workers, dims[0]));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(dims[0]));
  auto run_slabs = [&](unsigned w) {
    for (std::int64_t i = w; i < dims[0]; i += workers) {
      try {
        for (std::int64_t j = 0; j < dims[1]; ++j) {
          for (std::int64_t k = 0; k < dims[2]; ++k) {
            try {
              grid.values[grid.index(i, j, k)] = eval(i, j, k);
            } catch (const DomainError& e) {
              const Eigen::Vector3d p = grid.node(i, j, k);
              throw DomainError(std::string(e.what()) + " at node (" + std::to_string(i) + ", " +
                                std::to_string(j) + ", " + std::to_string(k) + ") S = (" + fmt(p(0)) + ", " +
                                fmt(p(1)) + ", " + fmt(p(2)) + ")");
            }
          }
        }
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
        return;
      }
    }
  };
  if (workers <= 1) {
    run_slabs(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run_slabs, w);
    for (auto& th : pool) th.join();
  }
  // Report the first failing slab in index order, whatever the thread count.
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  grid.metadata["I0a"] = fmt(init.I0a);
  grid.metadata["I0b"] = fmt(init.I0b);
  grid.metadata["phi0a"] = fmt(init.phi0a);
  grid.metadata["phi0b"] = fmt(init.phi0b);
  grid.metadata["chi"] = fmt(cfg.chi);
  grid.metadata["gamma"] = fmt(cfg.gamma());
  grid.metadata["tau"] = fmt(tau);
  grid.metadata["peak"] = fmt(peak);
  grid.metadata["normalization"] = "values divided by peak (initial-state maximum)";
  grid.metadata["model"] = dephased ? "dephased" : "unitary";
  if (dephased) {
    grid.metadata["dephased_width"] = form == DephasedWidthForm::kSaddle ? "saddle" : "printed-total-intensity";
  }
  return grid;
}

ShrinkMetric dephasing_shrink_metric(const ScalarGrid3D& unitary, const ScalarGrid3D& dephased, double level) {
  auto close = [](double a, double b) { return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)}); };
  for (int a = 0; a < 3; ++a) {
    if (unitary.dims[a] != dephased.dims[a] || !close(unitary.origin[a], dephased.origin[a]) ||
        !close(unitary.spacing[a], dephased.spacing[a])) {
      throw CongruenceError("dephasing_shrink_metric: grids are not sampled on the same nodes");
    }
  }
  const SolidMoments mu = solid_moments(extract_isosurface(unitary, level));
  const SolidMoments md = solid_moments(extract_isosurface(dephased, level));
  ShrinkMetric r;
  r.volume_unitary = mu.volume;
  r.volume_dephased = md.volume;
  r.volume_ratio = md.volume / mu.volume;
  const double c = std::clamp(std::abs(mu.major_axis().dot(md.major_axis())), 0.0, 1.0);
  r.axis_angle_deg = std::acos(c) * 180.0 / kPi;
  r.axis_ratio_unitary = mu.axis_ratio();
  r.axis_ratio_dephased = md.axis_ratio();
  return r;
}

}  // namespace kerrqc
