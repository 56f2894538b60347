#pragma once

#include "udw/motion/trajectory.hpp"
#include "udw/response/transition.hpp"

namespace udw::response {

struct EdrInputs {
  double F_plus;
  double F_minus;
};

struct EdrResult {
  double temperature;
  ResponseResult plus;
  ResponseResult minus;
};

/// T = -Omega / log(F_plus / F_minus), defined for 0 < F_plus < F_minus.
double edr_temperature(double F_plus, double F_minus, double omega_gap);
double edr_temperature(const EdrInputs& inputs, double omega_gap);

/// EDR temperature from quadrature responses at +Omega and -Omega. Omega is
/// |params.omega_gap|. Refuses a temperature when F_plus is under ten times
/// its own error estimate.
EdrResult edr_circular(const motion::CircularTrajectory& trajectory,
                       const motion::DetectorParams& params, double tol = kDefaultTolerance);
EdrResult edr_uniform(const motion::UniformTrajectory& trajectory,
                      const motion::DetectorParams& params, double tol = kDefaultTolerance);

}  // namespace udw::response
