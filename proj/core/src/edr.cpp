#include "udw/response/edr.hpp"

#include <cmath>
#include <string>

#include "udw/errors.hpp"

namespace udw::response {

namespace {

template <class Compute>
EdrResult edr_from(Compute compute, const motion::DetectorParams& params) {
  params.validate();
  const double gap = std::abs(params.omega_gap);
  if (!(gap > 0.0)) throw InvalidArgument("EDR temperature needs a nonzero energy gap");
  motion::DetectorParams up = params;
  up.omega_gap = gap;
  motion::DetectorParams down = params;
  down.omega_gap = -gap;
  const ResponseResult plus = compute(up);
  const ResponseResult minus = compute(down);
  if (plus.value < 10.0 * plus.abs_error_estimate) {
    throw NonpositiveResponseError("excitation response " + std::to_string(plus.value) +
                                   " is within ten times its error estimate " +
                                   std::to_string(plus.abs_error_estimate));
  }
  const double f_plus = response_function(plus.value, params);
  const double f_minus = response_function(minus.value, params);
  return {edr_temperature(f_plus, f_minus, gap), plus, minus};
}

}  // namespace

double edr_temperature(double F_plus, double F_minus, double omega_gap) {
  if (!(omega_gap > 0.0)) throw InvalidArgument("edr_temperature: energy gap must be positive");
  if (!(F_minus > 0.0)) {
    throw NonpositiveResponseError("edr_temperature: de-excitation response must be positive");
  }
  if (!(F_plus > 0.0)) {
    throw NonpositiveResponseError("edr_temperature: excitation response " +
                                   std::to_string(F_plus) + " is not positive");
  }
  if (!(F_plus < F_minus)) {
    throw PopulationInversionError("edr_temperature: F_plus >= F_minus, no positive temperature");
  }
  return -omega_gap / std::log(F_plus / F_minus);
}

double edr_temperature(const EdrInputs& inputs, double omega_gap) {
  return edr_temperature(inputs.F_plus, inputs.F_minus, omega_gap);
}

EdrResult edr_circular(const motion::CircularTrajectory& trajectory,
                       const motion::DetectorParams& params, double tol) {
  return edr_from(
      [&](const motion::DetectorParams& p) {
        return transition_probability_circular(trajectory, p, tol);
      },
      params);
}

EdrResult edr_uniform(const motion::UniformTrajectory& trajectory,
                      const motion::DetectorParams& params, double tol) {
  return edr_from(
      [&](const motion::DetectorParams& p) {
        return transition_probability_uniform(trajectory, p, tol);
      },
      params);
}

}  // namespace udw::response
