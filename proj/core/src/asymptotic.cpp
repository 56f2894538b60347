#include "udw/response/asymptotic.hpp"

#include <cmath>
#include <numbers>

#include "udw/errors.hpp"
#include "udw/response/transition.hpp"

namespace udw::response {

namespace {

using std::numbers::pi;
const double kSqrt3 = std::sqrt(3.0);

double step_term(double omega_gap, double sigma) {
  return omega_gap < 0.0 ? -omega_gap * sigma / (2.0 * std::sqrt(pi)) : 0.0;
}

}  // namespace

double asymptotic_p_large_acceleration(const motion::CircularTrajectory& trajectory,
                                       const motion::DetectorParams& params) {
  params.validate();
  const double a = trajectory.acceleration();
  const double w = params.omega_gap;
  if (a == 0.0) return step_term(w, params.sigma);
  return a * params.sigma * std::exp(-2.0 * kSqrt3 * std::abs(w) / a) / (8.0 * std::sqrt(3.0 * pi)) +
         step_term(w, params.sigma);
}

double asymptotic_p_small_acceleration(const motion::CircularTrajectory& trajectory,
                                       const motion::DetectorParams& params) {
  const double as = trajectory.acceleration() * params.sigma;
  const double ws = params.omega_gap * params.sigma;
  return as * as * std::exp(-ws * ws) / (24.0 * pi) + transition_probability_static(params);
}

double asymptotic_p_small_speed(const motion::CircularTrajectory& trajectory,
                                const motion::DetectorParams& params) {
  const ResponseInputs in = response_inputs(trajectory, params);
  return in.K_over_lambda2 * pi / 3.0 + step_term(params.omega_gap, params.sigma);
}

double asymptotic_p_uniform(const motion::UniformTrajectory& trajectory,
                            const motion::DetectorParams& params) {
  params.validate();
  return trajectory.acceleration() * params.sigma / (4.0 * std::pow(pi, 1.5)) +
         step_term(params.omega_gap, params.sigma);
}

EdrRegime parse_edr_regime(const std::string& tag) {
  if (tag == "circular-high-speed") return EdrRegime::kCircularHighSpeed;
  if (tag == "circular-small-speed") return EdrRegime::kCircularSmallSpeed;
  if (tag == "uniform") return EdrRegime::kUniform;
  if (tag == "uniform-finite-duration") return EdrRegime::kUniformFiniteDuration;
  throw InvalidArgument("unknown EDR regime '" + tag + "'");
}

std::string to_string(EdrRegime regime) {
  switch (regime) {
    case EdrRegime::kCircularHighSpeed:
      return "circular-high-speed";
    case EdrRegime::kCircularSmallSpeed:
      return "circular-small-speed";
    case EdrRegime::kUniform:
      return "uniform";
    case EdrRegime::kUniformFiniteDuration:
      return "uniform-finite-duration";
  }
  throw InvalidArgument("unknown EDR regime");
}

double asymptotic_edr_limit(EdrRegime regime, double a, double v, double omega_gap) {
  switch (regime) {
    case EdrRegime::kCircularHighSpeed:
      return a / (2.0 * kSqrt3);
    case EdrRegime::kCircularSmallSpeed:
      return a * v * std::sqrt((1.0 - v) * (1.0 + v)) / 6.0;
    case EdrRegime::kUniform:
      return a / (2.0 * pi);
    case EdrRegime::kUniformFiniteDuration:
      return (a + pi * std::abs(omega_gap)) / (2.0 * pi);
  }
  throw InvalidArgument("unknown EDR regime");
}

double edr_from_large_acceleration(double a, double omega_gap) {
  const double w = std::abs(omega_gap);
  if (!(a > 0.0) || !(w > 0.0)) {
    throw InvalidArgument("edr_from_large_acceleration: need a > 0 and a nonzero gap");
  }
  const double base = a / (8.0 * std::sqrt(3.0 * pi));
  const double log_plus = std::log(base) - 2.0 * kSqrt3 * w / a;
  const double excess = w / (2.0 * std::sqrt(pi));
  // log P(-Omega) = log(base e^{-x} + excess); computed without forming e^{-x} alone.
  const double log_minus = std::log(excess) + std::log1p(std::exp(log_plus - std::log(excess)));
  return -w / (log_plus - log_minus);
}

}  // namespace udw::response
