#pragma once

#include <functional>
#include <limits>
#include <vector>

namespace udw::numerics {

/// Monotone upper bound on |f(x)| for large x, together with a bound on its tail
/// integral. Analytic pieces have the form A x^{-p} e^{-c x^2} on [valid_from, inf);
/// Gaussians (p = 0) and power laws (c = 0) get exact tail integrals. A sampled
/// bound falls back to a geometric-decay estimate from three samples.
class Envelope {
 public:
  static Envelope gaussian(double amplitude, double rate,
                           double valid_from = -std::numeric_limits<double>::infinity());
  static Envelope power_law(double amplitude, double power, double valid_from);
  static Envelope gaussian_power(double amplitude, double power, double rate, double valid_from);
  static Envelope sampled(std::function<double(double)> bound);

  /// Adds another bound; queries use the tightest one that applies.
  Envelope& also(const Envelope& other);

  /// Pointwise bound at x, +inf when no piece covers x.
  double operator()(double x) const;

  /// Upper bound on the integral of the envelope over [x, inf); +inf when unknown.
  double tail_bound(double x) const;

  /// Smallest point from which at least one piece is valid.
  double valid_from() const;

 private:
  struct Piece {
    double amplitude;
    double power;
    double rate;
    double valid_from;
  };
  static double piece_tail(const Piece& p, double x);
  static double sampled_tail(const std::function<double(double)>& bound, double x);

  std::vector<Piece> pieces_;
  std::vector<std::function<double(double)>> sampled_;
};

}  // namespace udw::numerics
