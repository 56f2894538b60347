#pragma once

#include <complex>
#include <string>

#include "udw/harvesting/correlation.hpp"
#include "udw/motion/trajectory.hpp"

namespace udw::harvesting {

/// Which evaluation of X a harvest used, cheapest first.
enum class XReduction {
  kComovingEqual,
  kEqualCounterRotating,
  kSynchronous,
  kGeneralParallel,
  kPerpendicular,
  kUniformPair,
};

std::string to_string(XReduction reduction);

struct HarvestTolerances {
  double probability = 1e-9;
  double x_one_dimensional = kTolerance1D;
  double x_two_dimensional = kTolerance2D;
};

struct HarvestResult {
  double p_a = 0.0;
  double p_b = 0.0;
  std::complex<double> x{};
  double concurrence = 0.0;
  double p_a_error = 0.0;
  double p_b_error = 0.0;
  double x_error = 0.0;
  XReduction reduction = XReduction::kGeneralParallel;
};

/// 2 max(0, |x| - sqrt(p_a p_b)), with slightly negative probabilities clamped to 0.
double concurrence(double p_a, double p_b, std::complex<double> x);

/// The reduction harvest() would pick for this scenario.
XReduction choose_reduction(const motion::PairScenario& scenario);

/// Transition probabilities, X and concurrence for a pair.
HarvestResult harvest(const motion::PairScenario& scenario, const HarvestTolerances& tol = {});

}  // namespace udw::harvesting
