#pragma once

#include <cstddef>

#include "udw/motion/trajectory.hpp"

namespace udw::response {

/// Default absolute tolerance on P / lambda^2.
inline constexpr double kDefaultTolerance = 1e-9;

struct ResponseResult {
  /// P / lambda^2.
  double value = 0.0;
  /// Quadrature error plus truncated tail, already scaled by the prefactor.
  double abs_error_estimate = 0.0;
  std::size_t evaluations = 0;
  /// The static-detector part included in `value`.
  double static_part = 0.0;
};

/// Parameters of the circular-motion integral.
struct ResponseInputs {
  motion::DetectorParams params;
  double alpha;
  double beta;
  double K_over_lambda2;
};

ResponseInputs response_inputs(const motion::CircularTrajectory& trajectory,
                               const motion::DetectorParams& params);

/// (1/4 pi) [exp(-Omega^2 sigma^2) - sqrt(pi) Omega sigma erfc(Omega sigma)].
double transition_probability_static(const motion::DetectorParams& params);

/// K int_0^inf cos(beta x) exp(-alpha x^2) (x^2 - sin^2 x) / (x^2 (x^2 - v^2 sin^2 x)) dx
/// plus the static part.
ResponseResult transition_probability_circular(const motion::CircularTrajectory& trajectory,
                                               const motion::DetectorParams& params,
                                               double tol = kDefaultTolerance);

/// (a sigma / 4 pi^{3/2}) int_0^inf (1/x^2 - 1/sinh^2 x) cos(2 x Omega / a)
/// exp(-x^2 / (a sigma)^2) dx plus the static part.
ResponseResult transition_probability_uniform(const motion::UniformTrajectory& trajectory,
                                              const motion::DetectorParams& params,
                                              double tol = kDefaultTolerance);

/// F = P / (lambda^2 sigma).
double response_function(double p_over_lambda2, const motion::DetectorParams& params);

/// (x^2 - sin^2 x) / (x^2 (x^2 - v^2 sin^2 x)), evaluated without cancellation.
double circular_kernel(double x, double v);

/// 1/x^2 - 1/sinh^2 x, evaluated without cancellation.
double uniform_kernel(double x);

}  // namespace udw::response
