#include "udw/numerics/special.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace udw::numerics {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Positive-term series; valid and well conditioned for |x| < ~3.
double erf_series(double x) {
  const double ax = std::abs(x);
  const double x2 = x * x;
  double term = ax;
  double sum = ax;
  for (int n = 1; n < 200; ++n) {
    term *= 2.0 * x2 / (2.0 * n + 1.0);
    sum += term;
    if (term < kEps * 0.25 * sum) break;
  }
  return std::copysign(2.0 / std::sqrt(std::numbers::pi) * std::exp(-x2) * sum, x);
}

// erfc(x) = e^{-x^2}/sqrt(pi) / (x + (1/2)/(x + 1/(x + (3/2)/(x + ...)))), x >= 2.
double erfc_continued_fraction(double x) {
  constexpr double tiny = 1e-300;
  double f = x;
  double c = x;
  double d = 0.0;
  for (int n = 1; n < 5000; ++n) {
    const double an = 0.5 * n;
    d = x + an * d;
    if (std::abs(d) < tiny) d = tiny;
    c = x + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < 0.5 * kEps) break;
  }
  // Fold the prefactor into one exponential so the result rounds once even when subnormal.
  return std::exp(-x * x - std::log(f) - 0.5 * std::log(std::numbers::pi));
}

}  // namespace

double erfc(double x) {
  if (std::isnan(x)) return x;
  if (x < 0.0) return 2.0 - erfc(-x);
  if (x < 2.0) return 1.0 - erf_series(x);
  if (x > 27.3) return 0.0;
  return erfc_continued_fraction(x);
}

double erf(double x) {
  if (std::isnan(x)) return x;
  if (std::abs(x) < 2.0) return erf_series(x);
  return x > 0.0 ? 1.0 - erfc(x) : erfc(-x) - 1.0;
}

}  // namespace udw::numerics
