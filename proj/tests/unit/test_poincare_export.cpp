#include <cmath>
#include <string>

#include "doctest.h"
#include "kerrqc/errors.hpp"
#include "kerrqc/numeric.hpp"
#include "kerrqc/poincare_export.hpp"
#include "kerrqc/specfun.hpp"

using namespace kerrqc;

namespace {

const TwoModeCoherentInit kInit = TwoModeCoherentInit::circular(1e4);
const KerrConfig kUnitary{1.0, 0.0, 0.0};

}  // namespace

TEST_CASE("default box and peak") {
  const Box b = default_box(kInit);
  CHECK(b.center[1] == doctest::Approx(1e4));
  CHECK(b.half_width[0] == doctest::Approx(6.0 * std::sqrt(2e4)));
  CHECK(scenario_peak(kInit) == doctest::Approx(8.0 / kPi * specfun::bessel_i_scaled(0, 4e4)));
}

TEST_CASE("initial grid peaks at the centre and is spherical") {
  const ScalarGrid3D g = sample_grid(kInit, 0.0, kUnitary, default_box(kInit), {33, 33, 33}, 2);
  std::size_t arg = 0;
  for (std::size_t i = 0; i < g.values.size(); ++i) {
    if (g.values[i] > g.values[arg]) arg = i;
  }
  CHECK(arg == g.index(16, 16, 16));
  CHECK(g.values[arg] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(g.metadata.at("model") == "unitary");
  const SolidMoments m = solid_moments(extract_isosurface(g, 1e-4));
  CHECK(m.axis_ratio() < 1.1);
}

TEST_CASE("kerr evolution stretches the level set") {
  const double tau = 4.5e-5;  // I0 tau = 0.45
  const ScalarGrid3D g0 = sample_grid(kInit, 0.0, kUnitary, default_box(kInit), {33, 33, 33}, 2);
  const ScalarGrid3D g1 = sample_grid(kInit, tau, kUnitary, default_box(kInit), {33, 33, 33}, 2);
  const double r0 = solid_moments(extract_isosurface(g0, 1e-4)).axis_ratio();
  const double r1 = solid_moments(extract_isosurface(g1, 1e-4)).axis_ratio();
  CHECK(r1 > 1.5 * r0);
}

TEST_CASE("sampling does not depend on the thread count") {
  const KerrConfig cfg{1.0, 0.25, 0.25};
  const ScalarGrid3D a = sample_grid(kInit, 1e-5, cfg, default_box(kInit), {9, 11, 13}, 1);
  const ScalarGrid3D b = sample_grid(kInit, 1e-5, cfg, default_box(kInit), {9, 11, 13}, 4);
  CHECK(a.values == b.values);
  CHECK(a.metadata.at("model") == "dephased");
}

TEST_CASE("shrink metric of identical grids") {
  const ScalarGrid3D g = sample_grid(kInit, 2e-5, kUnitary, default_box(kInit), {25, 25, 25}, 2);
  const ShrinkMetric m = dephasing_shrink_metric(g, g, 1e-3);
  CHECK(m.volume_ratio == 1.0);
  CHECK(m.axis_angle_deg < 1e-6);
  ScalarGrid3D other = g;
  other.dims[2] = 24;
  CHECK_THROWS_AS(dephasing_shrink_metric(g, other, 1e-3), CongruenceError);
  other = g;
  other.spacing[0] *= 1.01;
  CHECK_THROWS_AS(dephasing_shrink_metric(g, other, 1e-3), CongruenceError);
}

TEST_CASE("domain errors name the failing node") {
  // Box through the S_z axis, where the dephased form has a pole.
  const Box polar{{0.0, 0.0, 1e4}, {10.0, 10.0, 10.0}};
  try {
    sample_grid(kInit, 1e-5, KerrConfig{1.0, 0.25, 0.25}, polar, {3, 3, 3}, 3);
    FAIL("expected a domain error");
  } catch (const DomainError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("node (1, 1, 0)") != std::string::npos);
  }
  CHECK_THROWS_AS(sample_grid(kInit, 0.0, kUnitary, default_box(kInit), {1, 4, 4}), DomainError);
}
