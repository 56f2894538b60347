#include "udw/numerics/roots.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "udw/errors.hpp"

namespace udw::numerics {

namespace {

double bisect(const std::function<double(double)>& h, double lo, double hi, double hlo,
              double tol) {
  for (int i = 0; i < 2100 && hi - lo > tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double hm = h(mid);
    if (hm == 0.0) return mid;
    if (std::signbit(hm) == std::signbit(hlo)) {
      lo = mid;
      hlo = hm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Minimum of g on [lo, hi] by golden-section search.
double golden_min(const std::function<double(double)>& g, double lo, double hi, double tol) {
  constexpr double r = 0.6180339887498949;
  double x1 = hi - r * (hi - lo);
  double x2 = lo + r * (hi - lo);
  double g1 = g(x1);
  double g2 = g(x2);
  for (int i = 0; i < 200 && hi - lo > tol; ++i) {
    if (g1 < g2) {
      hi = x2;
      x2 = x1;
      g2 = g1;
      x1 = hi - r * (hi - lo);
      g1 = g(x1);
    } else {
      lo = x1;
      x1 = x2;
      g1 = g2;
      x2 = lo + r * (hi - lo);
      g2 = g(x2);
    }
  }
  return g1 < g2 ? x1 : x2;
}

}  // namespace

double central_derivative(const std::function<double(double)>& h, double s, double step) {
  const double f1 = h(s + step) - h(s - step);
  const double f2 = h(s + 2.0 * step) - h(s - 2.0 * step);
  return (8.0 * f1 - f2) / (12.0 * step);
}

std::vector<RealRoot> find_real_roots(const std::function<double(double)>& h, double s_min,
                                      double s_max, double scan_step,
                                      const RootScanOptions& options) {
  if (!(s_min < s_max)) throw InvalidArgument("find_real_roots: need s_min < s_max");
  if (!(scan_step > 0.0)) throw InvalidArgument("find_real_roots: scan_step must be positive");

  const auto n = static_cast<std::size_t>(std::ceil((s_max - s_min) / scan_step));
  const double step = (s_max - s_min) / static_cast<double>(n);
  std::vector<double> grid(n + 1);
  std::vector<double> values(n + 1);
  double scale = 0.0;
  for (std::size_t i = 0; i <= n; ++i) {
    grid[i] = i == n ? s_max : s_min + step * static_cast<double>(i);
    values[i] = h(grid[i]);
    if (!std::isfinite(values[i])) {
      throw DomainError("find_real_roots: h is not finite at s = " + std::to_string(grid[i]));
    }
    scale = std::max(scale, std::abs(values[i]));
  }

  std::vector<double> found;
  for (std::size_t i = 0; i <= n; ++i) {
    if (values[i] == 0.0) {
      found.push_back(grid[i]);
      continue;
    }
    if (i < n && values[i + 1] != 0.0 &&
        std::signbit(values[i]) != std::signbit(values[i + 1])) {
      found.push_back(bisect(h, grid[i], grid[i + 1], values[i], options.bisection_tol));
    }
  }

  if (options.probe_minima) {
    for (std::size_t i = 1; i < n; ++i) {
      const double hl = values[i - 1];
      const double hm = values[i];
      const double hr = values[i + 1];
      if (hl == 0.0 || hm == 0.0 || hr == 0.0) continue;
      if (std::signbit(hl) != std::signbit(hm) || std::signbit(hm) != std::signbit(hr)) continue;
      if (!(std::abs(hm) <= std::abs(hl) && std::abs(hm) <= std::abs(hr))) continue;
      const double sign = std::signbit(hm) ? -1.0 : 1.0;
      auto g = [&](double s) { return sign * h(s); };
      const double m = golden_min(g, grid[i - 1], grid[i + 1], 1e-13 * std::max(1.0, std::abs(grid[i])));
      const double gm = g(m);
      if (gm <= 0.0) {
        if (gm == 0.0 || std::abs(gm) <= 1e-14 * scale) {
          throw DegenerateRootError(
              "find_real_roots: tangential root near s = " + std::to_string(m), m, 0.0);
        }
        found.push_back(bisect(h, grid[i - 1], m, hl, options.bisection_tol));
        found.push_back(bisect(h, m, grid[i + 1], h(m), options.bisection_tol));
      } else if (gm <= 1e-14 * scale) {
        throw DegenerateRootError(
            "find_real_roots: tangential root near s = " + std::to_string(m), m, 0.0);
      }
    }
  }

  std::sort(found.begin(), found.end());
  std::vector<RealRoot> roots;
  const double d = std::max(1e-3 * step, 1e-7);
  for (double s : found) {
    if (!roots.empty() && s - roots.back().location <= options.dedupe_tol) continue;
    const double dh = central_derivative(h, s, d);
    if (!(std::abs(dh) > options.derivative_floor)) {
      throw DegenerateRootError("find_real_roots: |h'| = " + std::to_string(std::abs(dh)) +
                                    " at s = " + std::to_string(s) + " is below the floor",
                                s, dh);
    }
    roots.push_back({s, dh});
  }
  return roots;
}

}  // namespace udw::numerics
