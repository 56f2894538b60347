#pragma once

#include <functional>

#include "udw/motion/trajectory.hpp"

namespace udw::harvesting {

/// Spatial separation of a detector pair as a function of coordinate times,
/// plus the scales needed to integrate over it.
struct SeparationModel {
  double gamma_a;
  double gamma_b;
  /// Upper bound on |x_A - x_B| over all times.
  double max_separation;
  /// Fastest angular frequency in coordinate time, at least 1.
  double frequency_scale;
  /// |x_A(t_a) - x_B(t_b)|^2.
  std::function<double(double t_a, double t_b)> squared_distance;
};

/// Separation model for a coaxial or perpendicular circular pair.
SeparationModel separation_model(const motion::PairScenario& scenario);

/// True when the two worldlines meet at some event, which makes X diverge.
/// Checks the t = 0 configuration exactly and samples one common period.
bool worldlines_intersect(const motion::PairScenario& scenario);

}  // namespace udw::harvesting
