#include "udw/harvesting/pair_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "udw/errors.hpp"

namespace udw::harvesting {

SeparationModel separation_model(const motion::PairScenario& scenario) {
  scenario.validate();
  if (scenario.geometry == motion::PairGeometry::kUniformPair) {
    throw InvalidArgument("separation_model: uniform pairs have no circular separation model");
  }
  const auto& a = scenario.circular_a();
  const auto& b = scenario.circular_b();
  const double ra = a.radius();
  const double rb = b.radius();
  const double wa = a.omega();
  const double wb = b.omega();
  const double dd = scenario.delta_d;

  SeparationModel m;
  m.gamma_a = a.gamma();
  m.gamma_b = b.gamma();
  m.max_separation = dd + ra + rb;
  m.frequency_scale = std::max({std::abs(wa), std::abs(wb), 1.0});
  if (scenario.geometry == motion::PairGeometry::kCoaxial) {
    const double c0 = dd * dd + ra * ra + rb * rb;
    const double c1 = 2.0 * ra * rb;
    m.squared_distance = [c0, c1, wa, wb](double ta, double tb) {
      return c0 - c1 * std::cos(wa * ta - wb * tb);
    };
  } else {
    const double c0 = ra * ra + rb * rb + dd * dd;
    m.squared_distance = [c0, ra, rb, dd, wa, wb](double ta, double tb) {
      const double ca = std::cos(wa * ta);
      const double cb = std::cos(wb * tb);
      return c0 - 2.0 * ra * rb * ca * cb - 2.0 * ra * dd * ca + 2.0 * rb * dd * cb;
    };
  }
  return m;
}

bool worldlines_intersect(const motion::PairScenario& scenario) {
  if (scenario.geometry == motion::PairGeometry::kUniformPair) return scenario.delta_d == 0.0;
  const SeparationModel m = separation_model(scenario);
  const double scale = std::max(1.0, m.max_separation * m.max_separation);
  if (m.squared_distance(0.0, 0.0) <= 1e-14 * scale) return true;
  // Equal-time separation sampled across the switching window.
  const double half_span = 12.0 * std::max(m.gamma_a, m.gamma_b);
  const double step = 2.0 * std::numbers::pi / m.frequency_scale / 64.0;
  const int n = static_cast<int>(std::ceil(2.0 * half_span / step));
  double best = m.squared_distance(0.0, 0.0);
  double best_t = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double t = -half_span + 2.0 * half_span * i / n;
    const double d = m.squared_distance(t, t);
    if (d < best) {
      best = d;
      best_t = t;
    }
  }
  // Refine the closest approach by golden-section search.
  double lo = best_t - step;
  double hi = best_t + step;
  constexpr double r = 0.6180339887498949;
  for (int i = 0; i < 100; ++i) {
    const double x1 = hi - r * (hi - lo);
    const double x2 = lo + r * (hi - lo);
    if (m.squared_distance(x1, x1) < m.squared_distance(x2, x2)) {
      hi = x2;
    } else {
      lo = x1;
    }
  }
  const double t = 0.5 * (lo + hi);
  best = std::min(best, m.squared_distance(t, t));
  return best <= 1e-14 * scale;
}

}  // namespace udw::harvesting
