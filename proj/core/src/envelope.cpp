#include "udw/numerics/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "udw/errors.hpp"
#include "udw/numerics/special.hpp"

namespace udw::numerics {
namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

Envelope Envelope::gaussian(double amplitude, double rate, double valid_from) {
  if (!(amplitude >= 0.0) || !(rate > 0.0)) {
    throw InvalidArgument("Envelope::gaussian: amplitude must be >= 0 and rate > 0");
  }
  Envelope e;
  e.pieces_.push_back({amplitude, 0.0, rate, valid_from});
  return e;
}

Envelope Envelope::power_law(double amplitude, double power, double valid_from) {
  if (!(amplitude >= 0.0) || !(power > 0.0) || !(valid_from > 0.0)) {
    throw InvalidArgument("Envelope::power_law: need amplitude >= 0, power > 0, valid_from > 0");
  }
  Envelope e;
  e.pieces_.push_back({amplitude, power, 0.0, valid_from});
  return e;
}

Envelope Envelope::gaussian_power(double amplitude, double power, double rate, double valid_from) {
  if (!(amplitude >= 0.0) || !(power >= 0.0) || !(rate >= 0.0)) {
    throw InvalidArgument("Envelope::gaussian_power: negative parameter");
  }
  if (power > 0.0 && !(valid_from > 0.0)) {
    throw InvalidArgument("Envelope::gaussian_power: power-law factor needs valid_from > 0");
  }
  Envelope e;
  e.pieces_.push_back({amplitude, power, rate, valid_from});
  return e;
}

Envelope Envelope::sampled(std::function<double(double)> bound) {
  if (!bound) throw InvalidArgument("Envelope::sampled: empty bound function");
  Envelope e;
  e.sampled_.push_back(std::move(bound));
  return e;
}

Envelope& Envelope::also(const Envelope& other) {
  pieces_.insert(pieces_.end(), other.pieces_.begin(), other.pieces_.end());
  sampled_.insert(sampled_.end(), other.sampled_.begin(), other.sampled_.end());
  return *this;
}

double Envelope::operator()(double x) const {
  double best = kInf;
  for (const auto& p : pieces_) {
    if (x < p.valid_from) continue;
    double v = p.amplitude * std::exp(-p.rate * x * x);
    if (p.power > 0.0) v *= std::pow(x, -p.power);
    best = std::min(best, v);
  }
  for (const auto& s : sampled_) best = std::min(best, std::abs(s(x)));
  return best;
}

double Envelope::piece_tail(const Piece& p, double x) {
  if (x < p.valid_from) return kInf;
  if (p.amplitude == 0.0) return 0.0;
  double best = kInf;
  if (p.rate > 0.0) {
    const double root_c = std::sqrt(p.rate);
    // x^{-p} <= x^{-p} at the lower limit; the Gaussian part integrates exactly.
    double gauss_tail = std::sqrt(std::numbers::pi) / (2.0 * root_c) * erfc(root_c * x);
    if (p.power > 0.0) gauss_tail *= std::pow(x, -p.power);
    best = std::min(best, p.amplitude * gauss_tail);
  }
  if (p.power > 1.0) {
    const double power_tail =
        std::pow(x, 1.0 - p.power) / (p.power - 1.0) * std::exp(-p.rate * x * x);
    best = std::min(best, p.amplitude * power_tail);
  }
  return best;
}

double Envelope::sampled_tail(const std::function<double(double)>& bound, double x) {
  const double h = std::max(0.5, 0.25 * std::abs(x));
  const double e0 = std::abs(bound(x));
  if (e0 == 0.0) return 0.0;
  const double e1 = std::abs(bound(x + h));
  if (e1 == 0.0) return h * e0;
  const double e2 = std::abs(bound(x + 2.0 * h));
  const double r1 = e1 / e0;
  const double r2 = e2 / e1;
  // Geometric majorant: requires decay and a non-increasing sample ratio.
  if (!(r1 < 1.0) || r2 > r1 * (1.0 + 1e-12)) return kInf;
  return h * e0 / (1.0 - r1);
}

double Envelope::tail_bound(double x) const {
  double best = kInf;
  for (const auto& p : pieces_) best = std::min(best, piece_tail(p, x));
  for (const auto& s : sampled_) best = std::min(best, sampled_tail(s, x));
  return best;
}

double Envelope::valid_from() const {
  double v = kInf;
  for (const auto& p : pieces_) v = std::min(v, p.valid_from);
  if (!sampled_.empty()) v = -kInf;
  return v;
}

}  // namespace udw::numerics
