#include "udw/motion/wightman.hpp"

#include <cmath>
#include <numbers>

#include "udw/errors.hpp"

namespace udw::motion {

namespace {

constexpr double kPrefactor = 1.0 / (4.0 * std::numbers::pi * std::numbers::pi);

void check_eps(double eps) {
  if (!(eps >= 0.0) || !std::isfinite(eps)) throw InvalidArgument("eps must be non-negative");
}

}  // namespace

std::complex<double> wightman_circular(std::complex<double> dtau,
                                       const CircularTrajectory& trajectory, double eps) {
  check_eps(eps);
  const double gamma = trajectory.gamma();
  const std::complex<double> i(0.0, 1.0);
  const std::complex<double> t = gamma * dtau - i * eps;
  std::complex<double> denom = t * t;
  if (!trajectory.is_static()) {
    const double r = trajectory.radius();
    const std::complex<double> s = std::sin(0.5 * gamma * trajectory.omega() * dtau);
    denom -= 4.0 * r * r * s * s;
  }
  return -kPrefactor / denom;
}

std::complex<double> wightman_circular(double dtau, const CircularTrajectory& trajectory,
                                       double eps) {
  return wightman_circular(std::complex<double>(dtau, 0.0), trajectory, eps);
}

std::complex<double> wightman_uniform(std::complex<double> dtau, double a, double eps) {
  check_eps(eps);
  if (!(a > 0.0)) throw InvalidArgument("uniform acceleration must be positive");
  const std::complex<double> i(0.0, 1.0);
  const std::complex<double> half = 0.5 * a * dtau;
  // sinh(z)/z stays accurate for small a dtau where sinh(z)/a would lose digits.
  const std::complex<double> sinhc =
      std::abs(half) < 1e-4 ? 1.0 + half * half / 6.0 : std::sinh(half) / half;
  const std::complex<double> t = dtau * sinhc - i * eps;
  return -kPrefactor / (t * t);
}

std::complex<double> wightman_uniform(double dtau, double a, double eps) {
  return wightman_uniform(std::complex<double>(dtau, 0.0), a, eps);
}

}  // namespace udw::motion
