#pragma once

#include <array>
#include <cstdint>

#include "kerrqc/marching_cubes.hpp"
#include "kerrqc/phasespace.hpp"

namespace kerrqc {

/// Axis-aligned box in Stokes space.
struct Box {
  std::array<double, 3> center{0.0, 0.0, 0.0};
  std::array<double, 3> half_width{1.0, 1.0, 1.0};
};

/// Centred on the initial Stokes vector, half-width `units` shot-noise units
/// of sqrt(2 I0) per axis.
Box default_box(const TwoModeCoherentInit& init, double units = 6.0);

/// Peak of the Poincare Wigner function of the initial state,
/// (8/pi) e^{-4 I0} I_0(4 I0). Grids are stored as ratios to this value.
double scenario_peak(const TwoModeCoherentInit& init);

/// Samples the Poincare Wigner function on a regular grid covering the box.
/// gamma = 0 uses the unitary closed form; gamma > 0 the dephased one at
/// t = 2 tau / chi. Values are divided by scenario_peak. Node evaluation is
/// split over `threads` workers (0 = hardware concurrency) and the result is
/// independent of the thread count. Domain errors are rethrown with the node
/// index and coordinates. `form` only matters for gamma > 0.
ScalarGrid3D sample_grid(const TwoModeCoherentInit& init, double tau, const KerrConfig& cfg,
                         const Box& box, std::array<std::int64_t, 3> dims, unsigned threads = 0,
                         DephasedWidthForm form = DephasedWidthForm::kSaddle);

struct ShrinkMetric {
  double volume_unitary = 0.0;
  double volume_dephased = 0.0;
  double volume_ratio = 1.0;      // dephased / unitary
  double axis_angle_deg = 0.0;    // angle between the major principal axes
  double axis_ratio_unitary = 1.0;
  double axis_ratio_dephased = 1.0;
};

/// Compares the level sets of two grids sampled on the same nodes. Throws
/// CongruenceError when dims, origin or spacing differ.
ShrinkMetric dephasing_shrink_metric(const ScalarGrid3D& unitary, const ScalarGrid3D& dephased, double level);

}  // namespace kerrqc
