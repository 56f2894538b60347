#include "udw/harvesting/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "udw/errors.hpp"
#include "udw/harvesting/pair_geometry.hpp"
#include "udw/numerics/principal_value.hpp"
#include "udw/numerics/quadrature.hpp"
#include "udw/numerics/roots.hpp"

namespace udw::harvesting {

namespace {

using motion::CircularTrajectory;
using motion::PairGeometry;
using motion::PairScenario;
using numerics::Prescription;
using std::numbers::pi;
using cd = std::complex<double>;

const double kPi32 = std::pow(pi, 1.5);
constexpr double kInnerCut = 8.5;

bool nearly_equal(double x, double y) {
  return std::abs(x - y) <= 1e-12 * std::max({1.0, std::abs(x), std::abs(y)});
}

// Angular velocity that matters for the separation; a detector at the centre
// does not see its own rotation.
double effective_omega(const CircularTrajectory& t) { return t.radius() == 0.0 ? 0.0 : t.omega(); }

// Same scenario with every quantity expressed in units of sigma.
PairScenario in_sigma_units(const PairScenario& s) {
  s.validate();
  const double sigma = s.shared_params.sigma;
  motion::DetectorParams p{s.shared_params.omega_gap * sigma, 1.0};
  if (sigma == 1.0) return s;
  const double dd = s.delta_d / sigma;
  if (s.geometry == PairGeometry::kUniformPair) {
    return PairScenario::uniform_pair(s.uniform_acceleration() * sigma, dd, p);
  }
  const auto scale = [sigma](const CircularTrajectory& t) {
    return CircularTrajectory(t.radius() / sigma, t.omega() * sigma);
  };
  if (s.geometry == PairGeometry::kCoaxial) {
    return PairScenario::coaxial(scale(s.circular_a()), scale(s.circular_b()), dd, p);
  }
  return PairScenario::perpendicular(scale(s.circular_a()), scale(s.circular_b()), dd, p);
}

void require_geometry(const PairScenario& s, PairGeometry g, const char* op) {
  if (s.geometry != g) {
    throw InvalidArgument(std::string(op) + ": needs a " + motion::to_string(g) +
                          " scenario, got " + motion::to_string(s.geometry));
  }
}

void reject_intersection(const PairScenario& s, const char* op) {
  if (worldlines_intersect(s)) {
    throw CoincidentDetectorError(std::string(op) +
                                  ": the detector worldlines meet, so X is not finite");
  }
}

// prefactor * int_0^inf g(s) / (h(s) - i0) ds with the root of h located by a scan.
template <class G>
XResult one_dimensional(cd prefactor, G g, const std::function<double(double)>& h,
                        std::vector<numerics::RealRoot> roots, double s_end, double tail,
                        std::optional<double> oscillation, double tol) {
  const double scale = std::abs(prefactor);
  XResult out;
  const auto pv = numerics::integrate_principal_value(
      numerics::Integrand<G>{g, std::nullopt, oscillation}, h, roots, 0.0, s_end,
      tol / (2.0 * scale), Prescription::kMinusI0);
  out.value = prefactor * pv.total();
  out.abs_error_estimate = scale * (pv.abs_error_estimate + tail);
  out.light_cone_roots_encountered = pv.roots.size();
  out.evaluations = pv.evaluations;
  return out;
}

double scan_step(double frequency) { return pi / (4.0 * std::max(frequency, 1.0)); }

// One time ordering of the double integral: the later detector's coordinate time
// is u, the earlier one's is u - s.
struct OrderedTerm {
  double gamma_late;
  double gamma_early;
  std::function<double(double t_early, double t_late)> squared_distance;
};

XResult two_dimensional(const std::vector<OrderedTerm>& terms, double multiplicity,
                        double gamma_a, double gamma_b, double gap, double max_separation,
                        double frequency, double tol) {
  const double c = multiplicity / (4.0 * pi * pi * gamma_a * gamma_b);
  const double share = 0.5 / static_cast<double>(terms.size());
  const double step = scan_step(frequency);
  XResult out;
  for (const auto& term : terms) {
    const double gl = term.gamma_late;
    const double ge = term.gamma_early;
    const double outer_tol = share * tol / c;
    const double inner_tol = share * tol / (c * std::sqrt(2.0 * pi) * gl);
    const double omega_early = gap / ge;
    std::optional<double> oscillation =
        2.0 * pi / std::max({frequency, std::abs(omega_early), 1e-300});
    double inner_error = 0.0;
    std::size_t roots_seen = 0;
    std::size_t inner_evaluations = 0;

    auto inner = [&](double u) -> cd {
      if (u + kInnerCut * ge < 0.0) return {0.0, 0.0};
      const double d0 = term.squared_distance(u, u);
      if (!(d0 > 1e-14 * std::max(1.0, max_separation * max_separation))) {
        throw CoincidentDetectorError("detectors coincide at coordinate time " +
                                      std::to_string(u));
      }
      const double s_end = std::max(std::max(u, 0.0) + kInnerCut * ge, max_separation + 1.0);
      std::function<double(double)> h = [&term, u](double s) {
        return term.squared_distance(u - s, u) - s * s;
      };
      auto roots = numerics::find_real_roots(h, 0.0, std::min(max_separation + step, s_end), step);
      auto g = [u, ge, omega_early](double s) -> cd {
        const double te = u - s;
        return std::exp(-te * te / (2.0 * ge * ge)) * cd(std::cos(omega_early * te),
                                                         -std::sin(omega_early * te));
      };
      const auto pv = numerics::integrate_principal_value(
          numerics::Integrand<decltype(g)>{g, std::nullopt, oscillation}, h, roots, 0.0, s_end,
          inner_tol, Prescription::kMinusI0);
      inner_error = std::max(inner_error, pv.abs_error_estimate);
      roots_seen += pv.roots.size();
      inner_evaluations += pv.evaluations;
      return pv.total();
    };
    const double omega_late = gap / gl;
    auto outer = [&](double u) -> cd {
      return cd(std::cos(omega_late * u), -std::sin(omega_late * u)) * inner(u);
    };
    const auto r = numerics::integrate_gaussian_weighted(outer, 0.0, gl, outer_tol);
    out.value += -c * r.value;
    out.abs_error_estimate +=
        c * (r.abs_error_estimate + r.truncation_bound + inner_error * std::sqrt(2.0 * pi) * gl);
    out.light_cone_roots_encountered += roots_seen;
    out.evaluations += r.evaluations + inner_evaluations;
  }
  return out;
}

// Both orderings for a circular pair.
std::vector<OrderedTerm> both_orderings(const SeparationModel& m) {
  auto d = m.squared_distance;
  return {OrderedTerm{m.gamma_b, m.gamma_a, [d](double te, double tl) { return d(te, tl); }},
          OrderedTerm{m.gamma_a, m.gamma_b, [d](double te, double tl) { return d(tl, te); }}};
}

}  // namespace

XResult x_parallel(const PairScenario& input, double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("x_parallel: tolerance must be positive");
  const PairScenario s = in_sigma_units(input);
  require_geometry(s, PairGeometry::kCoaxial, "x_parallel");
  reject_intersection(s, "x_parallel");
  const SeparationModel m = separation_model(s);
  return two_dimensional(both_orderings(m), 1.0, m.gamma_a, m.gamma_b, s.shared_params.omega_gap,
                         m.max_separation, m.frequency_scale, tol);
}

XResult x_perpendicular(const PairScenario& input, double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("x_perpendicular: tolerance must be positive");
  const PairScenario s = in_sigma_units(input);
  require_geometry(s, PairGeometry::kPerpendicular, "x_perpendicular");
  reject_intersection(s, "x_perpendicular");
  const SeparationModel m = separation_model(s);
  return two_dimensional(both_orderings(m), 1.0, m.gamma_a, m.gamma_b, s.shared_params.omega_gap,
                         m.max_separation, m.frequency_scale, tol);
}

XResult x_parallel_equal(const PairScenario& input, double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("x_parallel_equal: tolerance must be positive");
  const PairScenario s = in_sigma_units(input);
  require_geometry(s, PairGeometry::kCoaxial, "x_parallel_equal");
  const auto& a = s.circular_a();
  const auto& b = s.circular_b();
  const double wa = effective_omega(a);
  const double wb = effective_omega(b);
  if (!nearly_equal(a.radius(), b.radius()) || !nearly_equal(std::abs(wa), std::abs(wb))) {
    throw InvalidArgument("x_parallel_equal: needs equal radii and omega_A = +-omega_B");
  }
  reject_intersection(s, "x_parallel_equal");
  const double r = a.radius();
  const double dd2 = s.delta_d * s.delta_d;
  const double gamma = a.gamma();
  // 4 R^2 sin^2((u omega_A - u omega_B + s omega_B) / 2) with t_late = u, t_early = u - s.
  OrderedTerm term{gamma, gamma, [dd2, r, wa, wb](double te, double tl) {
                     const double phase = 0.5 * (tl * wa - te * wb);
                     const double sn = std::sin(phase);
                     return dd2 + 4.0 * r * r * sn * sn;
                   }};
  const SeparationModel m = separation_model(s);
  return two_dimensional({term}, 2.0, gamma, gamma, s.shared_params.omega_gap, m.max_separation,
                         m.frequency_scale, tol);
}

XResult x_parallel_synchronous(const PairScenario& input, double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("x_parallel_synchronous: tolerance must be positive");
  const PairScenario s = in_sigma_units(input);
  require_geometry(s, PairGeometry::kCoaxial, "x_parallel_synchronous");
  const auto& a = s.circular_a();
  const auto& b = s.circular_b();
  double wa = effective_omega(a);
  double wb = effective_omega(b);
  // A detector on the axis is synchronous with any partner.
  if (a.radius() == 0.0) wa = wb;
  if (b.radius() == 0.0) wb = wa;
  if (!nearly_equal(wa, wb)) {
    throw InvalidArgument("x_parallel_synchronous: needs omega_A = omega_B");
  }
  reject_intersection(s, "x_parallel_synchronous");
  const double ga = a.gamma();
  const double gb = b.gamma();
  const double sum = ga * ga + gb * gb;
  const double gap = s.shared_params.omega_gap;
  const double ra = a.radius();
  const double rb = b.radius();
  const double c0 = s.delta_d * s.delta_d + ra * ra + rb * rb;
  const double c1 = 2.0 * ra * rb;
  const double w = wa;
  const double k = gap * (ga - gb) / sum;

  const cd prefactor = -std::exp(-gap * gap * (ga + gb) * (ga + gb) / (2.0 * sum)) /
                       (kPi32 * std::sqrt(2.0 * sum));
  auto g = [k, sum](double x) { return std::cos(k * x) * std::exp(-x * x / (2.0 * sum)); };
  std::function<double(double)> h = [c0, c1, w](double x) {
    return c0 - c1 * std::cos(w * x) - x * x;
  };
  const double dmax = s.delta_d + ra + rb;
  const double s_end = std::max(std::sqrt(2.0 * sum * 40.0), dmax + 1.0);
  const double tail = std::sqrt(0.5 * pi * sum) * std::erfc(s_end / std::sqrt(2.0 * sum)) /
                      (s_end * s_end - dmax * dmax);
  const double step = scan_step(std::abs(w));
  auto roots = numerics::find_real_roots(h, 0.0, dmax + step, step);
  std::optional<double> oscillation;
  if (std::max(std::abs(w), std::abs(k)) > 0.0) {
    oscillation = 2.0 * pi / std::max(std::abs(w), std::abs(k));
  }
  return one_dimensional(prefactor, g, h, std::move(roots), s_end, tail, oscillation, tol);
}

XResult x_parallel_comoving_equal(const PairScenario& input, double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("x_parallel_comoving_equal: tolerance must be positive");
  const PairScenario s = in_sigma_units(input);
  require_geometry(s, PairGeometry::kCoaxial, "x_parallel_comoving_equal");
  const auto& a = s.circular_a();
  const auto& b = s.circular_b();
  const double wa = effective_omega(a);
  const double wb = effective_omega(b);
  if (!nearly_equal(a.radius(), b.radius()) || !nearly_equal(wa, wb)) {
    throw InvalidArgument("x_parallel_comoving_equal: needs equal radii and angular velocities");
  }
  if (s.delta_d == 0.0) {
    throw CoincidentDetectorError(
        "x_parallel_comoving_equal: delta_d = 0 puts both detectors on one worldline");
  }
  const double gamma = a.gamma();
  const double gap = s.shared_params.omega_gap;
  const double r = a.radius();
  const double dd2 = s.delta_d * s.delta_d;
  const double w = wa;

  const cd prefactor = -std::exp(-gap * gap) / (2.0 * kPi32 * gamma);
  auto g = [gamma](double x) { return std::exp(-x * x / (4.0 * gamma * gamma)); };
  std::function<double(double)> h = [dd2, r, w](double x) {
    const double sn = std::sin(0.5 * w * x);
    return dd2 + 4.0 * r * r * sn * sn - x * x;
  };
  const double dmax = s.delta_d + 2.0 * r;
  const double s_end = std::max(std::sqrt(4.0 * gamma * gamma * 40.0), dmax + 1.0);
  const double tail = gamma * std::sqrt(pi) * std::erfc(s_end / (2.0 * gamma)) /
                      (s_end * s_end - dmax * dmax);
  const double step = scan_step(std::abs(w));
  auto roots = numerics::find_real_roots(h, 0.0, dmax + step, step);
  std::optional<double> oscillation;
  if (w != 0.0) oscillation = 2.0 * pi / std::abs(w);
  return one_dimensional(prefactor, g, h, std::move(roots), s_end, tail, oscillation, tol);
}

XResult x_uniform_pair(const PairScenario& input, double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("x_uniform_pair: tolerance must be positive");
  const PairScenario s = in_sigma_units(input);
  require_geometry(s, PairGeometry::kUniformPair, "x_uniform_pair");
  if (s.delta_d == 0.0) {
    throw CoincidentDetectorError("x_uniform_pair: delta_d = 0 puts both detectors on one worldline");
  }
  const double a = s.uniform_acceleration();
  const double gap = s.shared_params.omega_gap;
  const double dd = s.delta_d;

  auto sinhc = [](double z) { return std::abs(z) < 1e-4 ? 1.0 + z * z / 6.0 : std::sinh(z) / z; };
  const cd prefactor = -std::exp(-gap * gap) / (2.0 * kPi32);
  auto g = [](double x) { return std::exp(-0.25 * x * x); };
  std::function<double(double)> h = [a, dd, sinhc](double x) {
    const double q = x * sinhc(0.5 * a * x);
    return dd * dd - q * q;
  };
  const double root = 2.0 * std::asinh(0.5 * a * dd) / a;
  const double slope = -2.0 * root * sinhc(a * root);
  const double s_end = std::max(std::sqrt(160.0), root + 1.0);
  const double tail = std::sqrt(pi) * std::erfc(0.5 * s_end) / (s_end * s_end - dd * dd);
  return one_dimensional(prefactor, g, h, {numerics::RealRoot{root, slope}}, s_end, tail,
                         std::nullopt, tol);
}

}  // namespace udw::harvesting
