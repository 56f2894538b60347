#pragma once

#include <complex>
#include <utility>
#include <vector>

namespace udw::numerics {

struct ExtrapolationResult {
  std::complex<double> value;
  double error_estimate;
};

/// Polynomial extrapolation of (eps, value) samples to eps = 0 by Neville's
/// scheme. Needs at least three samples with strictly decreasing eps. The error
/// estimate is the change between the last two orders.
ExtrapolationResult richardson_extrapolate(
    const std::vector<std::pair<double, std::complex<double>>>& samples);

/// Real-valued convenience overload.
ExtrapolationResult richardson_extrapolate(const std::vector<std::pair<double, double>>& samples);

}  // namespace udw::numerics
