#include "udw/harvesting/harvest.hpp"

#include <algorithm>
#include <cmath>

#include "udw/errors.hpp"
#include "udw/response/transition.hpp"

namespace udw::harvesting {

namespace {

bool nearly_equal(double x, double y) {
  return std::abs(x - y) <= 1e-12 * std::max({1.0, std::abs(x), std::abs(y)});
}

double effective_omega(const motion::CircularTrajectory& t) {
  return t.radius() == 0.0 ? 0.0 : t.omega();
}

response::ResponseResult probability(const motion::Trajectory& t,
                                     const motion::DetectorParams& params, double tol) {
  if (const auto* c = std::get_if<motion::CircularTrajectory>(&t)) {
    return response::transition_probability_circular(*c, params, tol);
  }
  return response::transition_probability_uniform(std::get<motion::UniformTrajectory>(t), params,
                                                   tol);
}

}  // namespace

std::string to_string(XReduction reduction) {
  switch (reduction) {
    case XReduction::kComovingEqual:
      return "comoving-equal";
    case XReduction::kEqualCounterRotating:
      return "equal-counter-rotating";
    case XReduction::kSynchronous:
      return "synchronous";
    case XReduction::kGeneralParallel:
      return "general-parallel";
    case XReduction::kPerpendicular:
      return "perpendicular";
    case XReduction::kUniformPair:
      return "uniform-pair";
  }
  return "unknown";
}

double concurrence(double p_a, double p_b, std::complex<double> x) {
  const double pa = std::max(p_a, 0.0);
  const double pb = std::max(p_b, 0.0);
  return 2.0 * std::max(0.0, std::abs(x) - std::sqrt(pa * pb));
}

XReduction choose_reduction(const motion::PairScenario& scenario) {
  scenario.validate();
  switch (scenario.geometry) {
    case motion::PairGeometry::kUniformPair:
      return XReduction::kUniformPair;
    case motion::PairGeometry::kPerpendicular:
      return XReduction::kPerpendicular;
    case motion::PairGeometry::kCoaxial:
      break;
  }
  const auto& a = scenario.circular_a();
  const auto& b = scenario.circular_b();
  const double wa = effective_omega(a);
  const double wb = effective_omega(b);
  const bool equal_radius = nearly_equal(a.radius(), b.radius());
  if (equal_radius && nearly_equal(wa, wb) && scenario.delta_d > 0.0) {
    return XReduction::kComovingEqual;
  }
  if (equal_radius && nearly_equal(wa, -wb)) return XReduction::kEqualCounterRotating;
  if (a.radius() == 0.0 || b.radius() == 0.0 || nearly_equal(wa, wb)) return XReduction::kSynchronous;
  return XReduction::kGeneralParallel;
}

HarvestResult harvest(const motion::PairScenario& scenario, const HarvestTolerances& tol) {
  HarvestResult out;
  out.reduction = choose_reduction(scenario);
  const auto pa = probability(scenario.detector_a, scenario.shared_params, tol.probability);
  const auto pb = probability(scenario.detector_b, scenario.shared_params, tol.probability);
  XResult x;
  switch (out.reduction) {
    case XReduction::kComovingEqual:
      x = x_parallel_comoving_equal(scenario, tol.x_one_dimensional);
      break;
    case XReduction::kEqualCounterRotating:
      x = x_parallel_equal(scenario, tol.x_two_dimensional);
      break;
    case XReduction::kSynchronous:
      x = x_parallel_synchronous(scenario, tol.x_one_dimensional);
      break;
    case XReduction::kGeneralParallel:
      x = x_parallel(scenario, tol.x_two_dimensional);
      break;
    case XReduction::kPerpendicular:
      x = x_perpendicular(scenario, tol.x_two_dimensional);
      break;
    case XReduction::kUniformPair:
      x = x_uniform_pair(scenario, tol.x_one_dimensional);
      break;
  }
  out.p_a = pa.value;
  out.p_b = pb.value;
  out.p_a_error = pa.abs_error_estimate;
  out.p_b_error = pb.abs_error_estimate;
  out.x = x.value;
  out.x_error = x.abs_error_estimate;
  out.concurrence = concurrence(out.p_a, out.p_b, out.x);
  return out;
}

}  // namespace udw::harvesting
