#pragma once

#include <functional>
#include <vector>

namespace udw::numerics {

/// |h'| below this marks a root as tangential.
inline constexpr double kDerivativeFloor = 1e-8;

struct RealRoot {
  double location;
  double derivative;
};

struct RootScanOptions {
  /// Bisection stops once the bracket is below this; 0 refines to adjacent
  /// doubles, which principal-value windows centred on the root rely on.
  double bisection_tol = 0.0;
  double dedupe_tol = 1e-10;
  double derivative_floor = kDerivativeFloor;
  /// Also look for pairs of close roots hidden between two grid points of the
  /// same sign, by minimising |h| near interior local minima.
  bool probe_minima = true;
};

/// Real roots of h on [s_min, s_max], in increasing order.
///
/// Sign changes found on a uniform grid of spacing `scan_step` are refined by
/// bisection. Throws DegenerateRootError when a root has |h'| below the floor.
std::vector<RealRoot> find_real_roots(const std::function<double(double)>& h, double s_min,
                                      double s_max, double scan_step,
                                      const RootScanOptions& options = {});

/// Five-point central difference of h at s.
double central_derivative(const std::function<double(double)>& h, double s, double step);

}  // namespace udw::numerics
