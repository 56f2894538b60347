#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "udw/errors.hpp"
#include "udw/numerics/quadrature.hpp"
#include "udw/numerics/roots.hpp"

namespace udw::numerics {

/// Which side of the real axis the poles of 1/h are displaced to.
///
/// kMinusI0 is 1/(h - i0) = PV 1/h + i pi delta(h); kPlusI0 flips the sign of
/// the delta term.
enum class Prescription { kMinusI0, kPlusI0 };

struct PVDecomposition {
  std::vector<double> roots;
  std::vector<double> derivative_magnitudes;
  std::complex<double> principal_value{};
  std::complex<double> delta_contribution{};
  double abs_error_estimate = 0.0;
  std::size_t evaluations = 0;

  std::complex<double> total() const { return principal_value + delta_contribution; }
};

struct PrincipalValueOptions {
  double max_window = 0.1;
  QuadratureOptions quadrature{};
};

/// Integral of f/h over [a, b] with the simple zeros of h treated under the
/// given prescription.
///
/// Each root s_k is excised with a window of half-width
/// min(max_window, half the distance to the nearest root or domain edge); on
/// the window the odd parts cancel pairwise in f(s_k+t)/h(s_k+t) + f(s_k-t)/h(s_k-t).
template <class F>
PVDecomposition integrate_principal_value(const Integrand<F>& f,
                                          const std::function<double(double)>& h,
                                          const std::vector<RealRoot>& roots, double a, double b,
                                          double tol, Prescription prescription,
                                          const PrincipalValueOptions& options = {}) {
  if (!(a < b)) throw InvalidArgument("integrate_principal_value: need a < b");
  if (!(tol > 0.0)) throw InvalidArgument("integrate_principal_value: tolerance must be positive");

  const std::size_t k = roots.size();
  std::vector<double> windows(k);
  for (std::size_t i = 0; i < k; ++i) {
    const double s = roots[i].location;
    if (i > 0 && !(s > roots[i - 1].location)) {
      throw InvalidArgument("integrate_principal_value: roots must be strictly increasing");
    }
    if (!(std::abs(roots[i].derivative) > kDerivativeFloor)) {
      throw DegenerateRootError("integrate_principal_value: degenerate root at s = " +
                                    std::to_string(s),
                                s, roots[i].derivative);
    }
    double left = s - a;
    double right = b - s;
    if (i > 0) left = std::min(left, s - roots[i - 1].location);
    if (i + 1 < k) right = std::min(right, roots[i + 1].location - s);
    const double delta = std::min(options.max_window, 0.5 * std::min(left, right));
    if (!(delta > 1e-14 * std::max(1.0, std::abs(s)))) {
      throw WindowCollisionError("integrate_principal_value: no room for a window around s = " +
                                 std::to_string(s));
    }
    windows[i] = delta;
  }

  using V = integrand_value_t<F>;
  const double piece_tol = tol / static_cast<double>(2 * k + 1);
  PVDecomposition out;
  out.roots.reserve(k);
  out.derivative_magnitudes.reserve(k);

  auto ratio = [&](double s) -> V { return f.evaluate(s) / h(s); };
  auto add = [&](const QuadratureResult<V>& r) {
    out.principal_value += detail::as_complex(r.value);
    out.abs_error_estimate += r.abs_error_estimate;
    out.evaluations += r.evaluations;
  };

  double cursor = a;
  for (std::size_t i = 0; i < k; ++i) {
    const double s = roots[i].location;
    const double delta = windows[i];
    const double gap_end = s - delta;
    if (gap_end > cursor) {
      add(integrate_adaptive(Integrand<decltype(ratio)>{ratio, std::nullopt, f.oscillation_scale},
                             cursor, gap_end, piece_tol, options.quadrature));
    }
    auto paired = [&](double t) -> V {
      return f.evaluate(s + t) / h(s + t) + f.evaluate(s - t) / h(s - t);
    };
    add(integrate_adaptive(Integrand<decltype(paired)>{paired, std::nullopt, f.oscillation_scale},
                           0.0, delta, piece_tol, options.quadrature));
    cursor = s + delta;

    const double magnitude = std::abs(roots[i].derivative);
    out.roots.push_back(s);
    out.derivative_magnitudes.push_back(magnitude);
    const double sign = prescription == Prescription::kMinusI0 ? 1.0 : -1.0;
    out.delta_contribution += std::complex<double>(0.0, sign * std::numbers::pi) *
                              detail::as_complex(f.evaluate(s)) / magnitude;
    ++out.evaluations;
  }
  if (b > cursor) {
    add(integrate_adaptive(Integrand<decltype(ratio)>{ratio, std::nullopt, f.oscillation_scale},
                           cursor, b, piece_tol, options.quadrature));
  }
  return out;
}

/// Convenience overload for a bare callable.
template <class F>
  requires std::invocable<F&, double>
PVDecomposition integrate_principal_value(F f, const std::function<double(double)>& h,
                                          const std::vector<RealRoot>& roots, double a, double b,
                                          double tol, Prescription prescription,
                                          const PrincipalValueOptions& options = {}) {
  return integrate_principal_value(Integrand<F>{std::move(f)}, h, roots, a, b, tol, prescription,
                                   options);
}

}  // namespace udw::numerics
