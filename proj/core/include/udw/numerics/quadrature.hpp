#pragma once

// Adaptive Gauss-Kronrod quadrature over finite intervals, semi-infinite
// intervals with a decaying envelope, and Gaussian-weighted integrals over R.
// Integrands may return double or std::complex<double>.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <concepts>
#include <cstddef>
#include <limits>
#include <numbers>
#include <optional>
#include <queue>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "udw/errors.hpp"
#include "udw/numerics/envelope.hpp"
#include "udw/numerics/special.hpp"

namespace udw::numerics {

template <class V>
concept QuadratureValue = std::same_as<V, double> || std::same_as<V, std::complex<double>>;

template <QuadratureValue V>
struct QuadratureResult {
  V value{};
  double abs_error_estimate = 0.0;
  std::size_t evaluations = 0;
  /// Bound on the part of the domain that was discarded (semi-infinite and
  /// Gaussian-weighted integrals); zero for finite intervals.
  double truncation_bound = 0.0;
  bool converged = true;

  double total_error() const { return abs_error_estimate + truncation_bound; }
};

struct QuadratureOptions {
  /// Relative tolerance applied on top of the absolute one (0 disables it).
  double rel_tol = 0.0;
  /// Hard cap on panel width, in addition to any oscillation cap.
  double max_panel_width = std::numeric_limits<double>::infinity();
  /// Number of bisections allowed after the initial partition.
  std::size_t max_subdivisions = 100000;
  /// Hard cap on the initial partition size.
  std::size_t max_initial_panels = 2000000;
  /// When false, non-convergence is reported through QuadratureResult::converged.
  bool throw_on_failure = true;
};

/// An integrand with optional decay and oscillation metadata.
///
/// `envelope(x) >= |evaluate(x)|` wherever the envelope is valid. When set,
/// `oscillation_scale` is the shortest oscillation period present; panels are
/// kept no wider than a quarter of it.
template <class F>
struct Integrand {
  F evaluate;
  std::optional<Envelope> envelope{};
  std::optional<double> oscillation_scale{};
};

template <class F>
Integrand(F) -> Integrand<F>;
template <class F>
Integrand(F, std::optional<Envelope>) -> Integrand<F>;
template <class F>
Integrand(F, std::optional<Envelope>, std::optional<double>) -> Integrand<F>;

template <class F>
using integrand_value_t = std::invoke_result_t<F&, double>;

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss-Legendre rule.
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class V>
struct Panel {
  double a;
  double b;
  V integral;
  double error;
  double abs_integral;
};

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const std::complex<double>& v) { return std::abs(v); }

template <class V, class F>
Panel<V> kronrod15(F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const V fc = f(center);
  V kronrod = fc * kKronrodWeights[7];
  V gauss = fc * kGaussWeights[3];
  double abs_sum = magnitude(fc) * kKronrodWeights[7];
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kKronrodNodes[j];
    const V f1 = f(center - dx);
    const V f2 = f(center + dx);
    kronrod += (f1 + f2) * kKronrodWeights[j];
    abs_sum += (magnitude(f1) + magnitude(f2)) * kKronrodWeights[j];
    if (j % 2 == 1) gauss += (f1 + f2) * kGaussWeights[j / 2];
  }
  Panel<V> p{a, b, kronrod * half, magnitude((kronrod - gauss) * half), abs_sum * std::abs(half)};
  return p;
}

inline std::complex<double> as_complex(double v) { return {v, 0.0}; }
inline std::complex<double> as_complex(const std::complex<double>& v) { return v; }

}  // namespace detail

/// Adaptive quadrature of f over [a, b] to absolute tolerance `tol`.
///
/// Global adaptive bisection on 15-point Kronrod panels; each panel's error is
/// |K15 - G7| and the reported estimate is the sum over panels. The target is
/// max(tol, rel_tol*|I|, 50*eps*integral of |f|) so that cancellation limited
/// by round-off does not read as non-convergence.
template <class F, QuadratureValue V = integrand_value_t<F>>
QuadratureResult<V> integrate_adaptive(const Integrand<F>& integrand, double a, double b,
                                       double tol, const QuadratureOptions& options = {}) {
  if (!(a < b)) {
    if (a == b) return {V{}, 0.0, 1, 0.0, true};
    throw InvalidArgument("integrate_adaptive: need a < b");
  }
  if (!(tol > 0.0)) throw InvalidArgument("integrate_adaptive: tolerance must be positive");

  double cap = options.max_panel_width;
  if (integrand.oscillation_scale) {
    if (!(*integrand.oscillation_scale > 0.0)) {
      throw InvalidArgument("integrate_adaptive: oscillation_scale must be positive");
    }
    cap = std::min(cap, 0.25 * *integrand.oscillation_scale);
  }
  std::size_t initial = 1;
  if (std::isfinite(cap)) {
    const double n = std::ceil((b - a) / cap);
    if (n > static_cast<double>(options.max_initial_panels)) {
      throw InvalidArgument("integrate_adaptive: oscillation cap needs " + std::to_string(n) +
                            " panels, above the configured limit");
    }
    initial = std::max<std::size_t>(1, static_cast<std::size_t>(n));
  }

  auto f = [&integrand](double x) -> V { return integrand.evaluate(x); };
  std::vector<detail::Panel<V>> panels;
  panels.reserve(initial + 64);
  using Entry = std::pair<double, std::size_t>;
  std::priority_queue<Entry> queue;

  V total{};
  double total_error = 0.0;
  double total_abs = 0.0;
  const double width = (b - a) / static_cast<double>(initial);
  for (std::size_t i = 0; i < initial; ++i) {
    const double lo = a + width * static_cast<double>(i);
    const double hi = (i + 1 == initial) ? b : a + width * static_cast<double>(i + 1);
    panels.push_back(detail::kronrod15<V>(f, lo, hi));
    total += panels.back().integral;
    total_error += panels.back().error;
    total_abs += panels.back().abs_integral;
    queue.emplace(panels.back().error, i);
  }
  std::size_t evaluations = 15 * initial;

  auto target = [&] {
    return std::max({tol, options.rel_tol * detail::magnitude(total),
                     50.0 * std::numeric_limits<double>::epsilon() * total_abs});
  };

  std::size_t subdivisions = 0;
  bool exhausted = false;
  while (total_error > target() && !queue.empty()) {
    if (subdivisions >= options.max_subdivisions) {
      exhausted = true;
      break;
    }
    const auto [err, index] = queue.top();
    queue.pop();
    const auto parent = panels[index];
    const double mid = 0.5 * (parent.a + parent.b);
    if (!(mid > parent.a && mid < parent.b) ||
        (parent.b - parent.a) < 64.0 * std::numeric_limits<double>::epsilon() *
                                    std::max(std::abs(parent.a), std::abs(parent.b))) {
      // Panel is at machine resolution; its error stays in the total.
      continue;
    }
    auto left = detail::kronrod15<V>(f, parent.a, mid);
    auto right = detail::kronrod15<V>(f, mid, parent.b);
    evaluations += 30;
    ++subdivisions;
    total += left.integral + right.integral - parent.integral;
    total_error += left.error + right.error - parent.error;
    total_abs += left.abs_integral + right.abs_integral - parent.abs_integral;
    panels[index] = left;
    queue.emplace(left.error, index);
    panels.push_back(right);
    queue.emplace(right.error, panels.size() - 1);

    if (subdivisions % 4096 == 0) {
      // Re-sum to keep the running totals free of drift.
      total = V{};
      total_error = 0.0;
      total_abs = 0.0;
      for (const auto& p : panels) {
        total += p.integral;
        total_error += p.error;
        total_abs += p.abs_integral;
      }
    }
  }

  // Final sums in panel order so results are independent of queue history.
  std::sort(panels.begin(), panels.end(),
            [](const auto& l, const auto& r) { return l.a < r.a; });
  total = V{};
  total_error = 0.0;
  total_abs = 0.0;
  for (const auto& p : panels) {
    total += p.integral;
    total_error += p.error;
    total_abs += p.abs_integral;
  }

  QuadratureResult<V> result{total, total_error, evaluations, 0.0, total_error <= target()};
  if (!result.converged && options.throw_on_failure) {
    throw ConvergenceError(std::string("integrate_adaptive: tolerance not met") +
                               (exhausted ? " (subdivision limit)" : " (machine resolution)"),
                           detail::as_complex(total), total_error);
  }
  return result;
}

/// Convenience overload for a bare callable.
template <class F>
  requires std::invocable<F&, double>
auto integrate_adaptive(F f, double a, double b, double tol,
                        const QuadratureOptions& options = {}) {
  return integrate_adaptive(Integrand<F>{std::move(f)}, a, b, tol, options);
}

/// Integral of f over [lower, inf).
///
/// The domain is cut at the smallest X_max whose envelope tail bound is below
/// tol/10; the finite part goes to integrate_adaptive with the remaining budget.
template <class F, QuadratureValue V = integrand_value_t<F>>
QuadratureResult<V> integrate_semi_infinite(const Integrand<F>& integrand, double tol,
                                            double lower = 0.0,
                                            const QuadratureOptions& options = {}) {
  if (!(tol > 0.0)) throw InvalidArgument("integrate_semi_infinite: tolerance must be positive");
  if (!integrand.envelope) {
    throw UnboundedDomainError(
        "integrate_semi_infinite: no envelope supplied, cannot bound the tail");
  }
  const Envelope& env = *integrand.envelope;
  const double limit = 0.1 * tol;
  const double start = std::max(lower, env.valid_from());

  auto ok = [&](double x) { return env.tail_bound(x) < limit; };
  double hi;
  if (std::isfinite(start) && ok(start)) {
    hi = start;
  } else {
    double probe = std::max(1.0, std::abs(lower));
    double base = std::isfinite(start) ? start : lower;
    hi = base + probe;
    int doublings = 0;
    while (!ok(hi)) {
      probe *= 2.0;
      hi = base + probe;
      if (++doublings > 1100 || !std::isfinite(hi)) {
        throw UnboundedDomainError("integrate_semi_infinite: envelope tail never drops below " +
                                   std::to_string(limit));
      }
    }
    // Shrink toward the smallest admissible cut; tail bounds are non-increasing.
    double lo = doublings > 0 ? base + 0.5 * probe : base;
    for (int i = 0; i < 80 && hi - lo > 1e-9 * std::max(1.0, std::abs(hi)); ++i) {
      const double mid = 0.5 * (lo + hi);
      if (ok(mid)) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
  }
  const double x_max = std::max(hi, lower);
  const double truncation = env.tail_bound(x_max);

  QuadratureResult<V> result{};
  if (x_max > lower) {
    result = integrate_adaptive(integrand, lower, x_max, tol - truncation, options);
  } else {
    result.evaluations = 1;
  }
  result.truncation_bound = truncation;
  return result;
}

/// Integral over R of f(x) * exp(-(x - center)^2 / (2 width^2)).
///
/// The weight is unnormalised, so f = 1 gives sqrt(2 pi) * width. The domain is
/// cut at center +- 8 width; the recorded truncation bound uses `bound` when
/// given, otherwise the largest |f| met at quadrature nodes.
template <class F, QuadratureValue V = integrand_value_t<F>>
QuadratureResult<V> integrate_gaussian_weighted(F f, double center, double width, double tol,
                                                const QuadratureOptions& options = {},
                                                std::optional<double> bound = std::nullopt) {
  if (!(width > 0.0)) throw InvalidArgument("integrate_gaussian_weighted: width must be positive");
  double observed_max = 0.0;
  const double inv_two_var = 0.5 / (width * width);
  auto weighted = [&](double x) -> V {
    const V fx = f(x);
    observed_max = std::max(observed_max, detail::magnitude(fx));
    const double d = x - center;
    return fx * std::exp(-d * d * inv_two_var);
  };
  constexpr double kCut = 8.0;
  QuadratureOptions opt = options;
  opt.max_panel_width = std::min(opt.max_panel_width, 2.0 * width);
  const double tail_fraction = std::erfc(kCut / std::numbers::sqrt2);
  const double truncation_guess =
      (bound ? *bound : 1.0) * std::sqrt(2.0 * std::numbers::pi) * width * tail_fraction;
  const double budget = std::max(tol - truncation_guess, 0.5 * tol);
  auto result = integrate_adaptive(Integrand<decltype(weighted)>{weighted}, center - kCut * width,
                                   center + kCut * width, budget, opt);
  const double m = bound ? *bound : observed_max;
  result.truncation_bound = m * std::sqrt(2.0 * std::numbers::pi) * width * tail_fraction;
  return result;
}

}  // namespace udw::numerics
