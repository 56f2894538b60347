#pragma once

#include <complex>
#include <cstddef>

#include "udw/motion/trajectory.hpp"

namespace udw::harvesting {

/// Default absolute tolerances on X / lambda^2.
inline constexpr double kTolerance1D = 1e-9;
inline constexpr double kTolerance2D = 1e-6;

struct XResult {
  /// X / lambda^2.
  std::complex<double> value{};
  double abs_error_estimate = 0.0;
  /// Light-cone roots handled, summed over every inner integral.
  std::size_t light_cone_roots_encountered = 0;
  std::size_t evaluations = 0;
};

/// Coaxial pair, general radii and angular velocities. Double integral: outer
/// in coordinate time u against its Gaussian, inner in the time lag s with the
/// light-cone pole split into principal value and delta parts.
XResult x_parallel(const motion::PairScenario& scenario, double tol = kTolerance2D);

/// Coaxial pair with equal angular velocities; radii may differ. One-dimensional.
XResult x_parallel_synchronous(const motion::PairScenario& scenario, double tol = kTolerance1D);

/// Coaxial pair with equal radii and omega_A = +-omega_B. The two time
/// orderings coincide, so one double integral is evaluated and doubled.
XResult x_parallel_equal(const motion::PairScenario& scenario, double tol = kTolerance2D);

/// Coaxial pair on identical orbits moving together. One-dimensional.
XResult x_parallel_comoving_equal(const motion::PairScenario& scenario,
                                  double tol = kTolerance1D);

/// Pair orbiting in perpendicular planes. Double integral as in x_parallel.
XResult x_perpendicular(const motion::PairScenario& scenario, double tol = kTolerance2D);

/// Two equal uniform accelerations with transverse separation. One-dimensional.
XResult x_uniform_pair(const motion::PairScenario& scenario, double tol = kTolerance1D);

}  // namespace udw::harvesting
