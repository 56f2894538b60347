#include "udw/numerics/richardson.hpp"

#include <cmath>

#include "udw/errors.hpp"

namespace udw::numerics {

ExtrapolationResult richardson_extrapolate(
    const std::vector<std::pair<double, std::complex<double>>>& samples) {
  const std::size_t n = samples.size();
  if (n < 3) {
    throw InsufficientDataError("richardson_extrapolate: need at least 3 samples, got " +
                                std::to_string(n));
  }
  for (std::size_t i = 1; i < n; ++i) {
    if (!(samples[i].first < samples[i - 1].first)) {
      throw InvalidArgument("richardson_extrapolate: eps must be strictly decreasing");
    }
  }
  // Neville tableau evaluated at eps = 0; p[i] holds P_{i..i+m}(0).
  std::vector<std::complex<double>> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = samples[i].second;
  std::complex<double> previous_order = p[n - 1];
  for (std::size_t m = 1; m < n; ++m) {
    if (m == n - 1) previous_order = p[1];
    for (std::size_t i = 0; i + m < n; ++i) {
      const double xi = samples[i].first;
      const double xj = samples[i + m].first;
      p[i] = (xi * p[i + 1] - xj * p[i]) / (xi - xj);
    }
  }
  return {p[0], std::abs(p[0] - previous_order)};
}

ExtrapolationResult richardson_extrapolate(const std::vector<std::pair<double, double>>& samples) {
  std::vector<std::pair<double, std::complex<double>>> c;
  c.reserve(samples.size());
  for (const auto& [e, v] : samples) c.emplace_back(e, v);
  return richardson_extrapolate(c);
}

}  // namespace udw::numerics
