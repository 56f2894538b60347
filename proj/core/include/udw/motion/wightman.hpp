#pragma once

#include <complex>

#include "udw/motion/trajectory.hpp"

namespace udw::motion {

/// Massless scalar Wightman function along a circular orbit, regulated by eps on
/// the time difference:
///   -1/(4 pi^2) / [(gamma dtau - i eps)^2 - 4 R^2 sin^2(gamma omega dtau / 2)].
std::complex<double> wightman_circular(double dtau, const CircularTrajectory& trajectory,
                                       double eps);

/// Same expression with a complex proper-time difference.
std::complex<double> wightman_circular(std::complex<double> dtau,
                                       const CircularTrajectory& trajectory, double eps);

/// Wightman function along a uniformly accelerated worldline with the regulator
/// on the coordinate time difference between the symmetric events tau = +-dtau/2:
///   -1/(4 pi^2) / ((2/a) sinh(a dtau / 2) - i eps)^2.
/// As eps -> 0 this is -(a^2 / 16 pi^2) / sinh^2(a dtau / 2).
std::complex<double> wightman_uniform(double dtau, double a, double eps);

std::complex<double> wightman_uniform(std::complex<double> dtau, double a, double eps);

}  // namespace udw::motion
