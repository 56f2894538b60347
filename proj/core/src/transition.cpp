#include "udw/response/transition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "udw/errors.hpp"
#include "udw/numerics/quadrature.hpp"
#include "udw/numerics/special.hpp"

namespace udw::response {

namespace {

using std::numbers::pi;
const double kPi32 = std::pow(pi, 1.5);

// x - sin x.
double x_minus_sin(double x) {
  if (std::abs(x) < 0.5) {
    const double x2 = x * x;
    double term = x * x2 / 6.0;
    double sum = term;
    for (int k = 2; k < 10; ++k) {
      term *= -x2 / ((2.0 * k) * (2.0 * k + 1.0));
      sum += term;
    }
    return sum;
  }
  return x - std::sin(x);
}

}  // namespace

double circular_kernel(double x, double v) {
  x = std::abs(x);
  if (x == 0.0) return 1.0 / (3.0 * (1.0 - v) * (1.0 + v));
  const double s = std::sin(x);
  const double d1 = x_minus_sin(x);
  return d1 * (x + s) / (x * x * ((1.0 - v) * x + v * d1) * (x + v * s));
}

double uniform_kernel(double x) {
  x = std::abs(x);
  if (x < 0.1) {
    const double x2 = x * x;
    return 1.0 / 3.0 +
           x2 * (-1.0 / 15.0 + x2 * (2.0 / 189.0 + x2 * (-1.0 / 675.0 + x2 * (2.0 / 10395.0))));
  }
  if (x > 30.0) return 1.0 / (x * x) - 4.0 * std::exp(-2.0 * x);
  const double sh = std::sinh(x);
  return 1.0 / (x * x) - 1.0 / (sh * sh);
}

ResponseInputs response_inputs(const motion::CircularTrajectory& trajectory,
                               const motion::DetectorParams& params) {
  params.validate();
  if (trajectory.is_static()) return {params, std::numeric_limits<double>::infinity(), 0.0, 0.0};
  const double gamma = trajectory.gamma();
  const double w = std::abs(trajectory.omega());
  const double v = trajectory.speed();
  const double sigma = params.sigma;
  return {params, 1.0 / (sigma * sigma * w * w * gamma * gamma),
          2.0 * params.omega_gap / (gamma * w), v * v * gamma * w * sigma / (4.0 * kPi32)};
}

double transition_probability_static(const motion::DetectorParams& params) {
  params.validate();
  const double x = params.omega_gap * params.sigma;
  return (std::exp(-x * x) - std::sqrt(pi) * x * numerics::erfc(x)) / (4.0 * pi);
}

ResponseResult transition_probability_circular(const motion::CircularTrajectory& trajectory,
                                               const motion::DetectorParams& params, double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("tolerance must be positive");
  ResponseResult out;
  out.static_part = transition_probability_static(params);
  out.value = out.static_part;
  out.evaluations = 1;
  if (trajectory.is_static()) return out;

  const ResponseInputs in = response_inputs(trajectory, params);
  const double v = trajectory.speed();
  const double alpha = in.alpha;
  const double beta = in.beta;
  const double gamma = trajectory.gamma();

  auto f = [v, alpha, beta](double x) {
    return std::cos(beta * x) * std::exp(-alpha * x * x) * circular_kernel(x, v);
  };
  numerics::Envelope env = numerics::Envelope::gaussian(gamma * gamma / 3.0, alpha);
  env.also(numerics::Envelope::gaussian_power(4.0 / 3.0, 2.0, alpha, 2.0));
  numerics::QuadratureOptions options;
  options.max_panel_width = std::min(pi, pi / std::max(1.0, std::abs(beta))) / 4.0;

  const auto r = numerics::integrate_semi_infinite(
      numerics::Integrand<decltype(f)>{f, env, std::nullopt}, tol / in.K_over_lambda2, 0.0,
      options);
  out.value += in.K_over_lambda2 * r.value;
  out.abs_error_estimate = in.K_over_lambda2 * r.total_error();
  out.evaluations += r.evaluations;
  return out;
}

ResponseResult transition_probability_uniform(const motion::UniformTrajectory& trajectory,
                                              const motion::DetectorParams& params, double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("tolerance must be positive");
  ResponseResult out;
  out.static_part = transition_probability_static(params);
  out.value = out.static_part;
  out.evaluations = 1;

  const double a = trajectory.acceleration();
  const double sigma = params.sigma;
  const double prefactor = a * sigma / (4.0 * kPi32);
  const double k = 2.0 * params.omega_gap / a;
  const double rate = 1.0 / (a * a * sigma * sigma);

  auto f = [k, rate](double x) { return std::cos(k * x) * std::exp(-rate * x * x) * uniform_kernel(x); };
  numerics::Envelope env = numerics::Envelope::gaussian(1.0 / 3.0, rate);
  env.also(numerics::Envelope::gaussian_power(1.0, 2.0, rate, 1.0));
  numerics::QuadratureOptions options;
  if (k != 0.0) options.max_panel_width = 0.25 * (2.0 * pi / std::abs(k));

  const auto r = numerics::integrate_semi_infinite(
      numerics::Integrand<decltype(f)>{f, env, std::nullopt}, tol / prefactor, 0.0, options);
  out.value += prefactor * r.value;
  out.abs_error_estimate = prefactor * r.total_error();
  out.evaluations += r.evaluations;
  return out;
}

double response_function(double p_over_lambda2, const motion::DetectorParams& params) {
  params.validate();
  return p_over_lambda2 / params.sigma;
}

}  // namespace udw::response
