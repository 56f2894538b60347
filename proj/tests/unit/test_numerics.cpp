#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "oracles/oracles.hpp"
#include "udw/errors.hpp"
#include "udw/numerics/envelope.hpp"
#include "udw/numerics/principal_value.hpp"
#include "udw/numerics/quadrature.hpp"
#include "udw/numerics/richardson.hpp"
#include "udw/numerics/roots.hpp"
#include "udw/numerics/special.hpp"

namespace {

using namespace udw;
using namespace udw::numerics;
using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

TEST(IntegrateAdaptive, SineOverHalfPeriod) {
  const auto r = integrate_adaptive([](double x) { return std::sin(x); }, 0.0, kPi, 1e-10);
  EXPECT_NEAR(r.value, 2.0, 1e-10);
  EXPECT_GE(r.abs_error_estimate, 0.0);
  EXPECT_GE(r.evaluations, 1u);
  EXPECT_TRUE(r.converged);
}

TEST(IntegrateAdaptive, ZeroIntegrandIsExactlyZero) {
  const auto r = integrate_adaptive([](double) { return 0.0; }, 0.0, 1.0, 1e-12);
  EXPECT_EQ(r.value, 0.0);
}

TEST(IntegrateAdaptive, OscillatoryGaussianMatchesFineSimpson) {
  auto f = [](double x) { return std::exp(-x * x) * std::cos(10.0 * x); };
  const auto r = integrate_adaptive(Integrand{f, std::nullopt, 2.0 * kPi / 10.0}, 0.0, 40.0, 1e-13);
  const double ref = oracle::simpson(f, 0.0, 40.0, 1000000);
  EXPECT_NEAR(r.value, ref, 1e-13);
  EXPECT_NEAR(r.value, std::sqrt(kPi) / 2.0 * std::exp(-25.0), 1e-13);
}

TEST(IntegrateAdaptive, PanelCapFromOscillationScale) {
  const auto r = integrate_adaptive(Integrand{[](double) { return 1.0; }, std::nullopt, 1.0}, 0.0,
                                    10.0, 1e-6);
  EXPECT_GE(r.evaluations, 40u * 15u);
  EXPECT_NEAR(r.value, 10.0, 1e-12);
}

TEST(IntegrateAdaptive, NonConvergenceCarriesBestEstimate) {
  QuadratureOptions opt;
  opt.max_subdivisions = 3;
  try {
    integrate_adaptive([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, 1e-14, opt);
    FAIL() << "expected ConvergenceError";
  } catch (const ConvergenceError& e) {
    EXPECT_NEAR(e.best_estimate().real(), 2.0, 0.5);
    EXPECT_GT(e.achieved_error(), 1e-14);
  }
  opt.throw_on_failure = false;
  const auto r = integrate_adaptive([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, 1e-14, opt);
  EXPECT_FALSE(r.converged);
}

TEST(IntegrateAdaptive, RejectsReversedInterval) {
  EXPECT_THROW(integrate_adaptive([](double x) { return x; }, 1.0, 0.0, 1e-9), InvalidArgument);
}

TEST(IntegrateAdaptive, Linearity) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  const double tol = 1e-10;
  for (int trial = 0; trial < 20; ++trial) {
    const double c1 = u(rng), c2 = u(rng), k1 = u(rng), k2 = u(rng), al = u(rng), be = u(rng);
    auto f = [=](double x) { return std::cos(k1 * x) * std::exp(-c1 * c1 * x * x); };
    auto g = [=](double x) { return std::sin(k2 * x + c2) / (1.0 + x * x); };
    auto h = [=](double x) { return al * f(x) + be * g(x); };
    const double If = integrate_adaptive(f, -3.0, 4.0, tol).value;
    const double Ig = integrate_adaptive(g, -3.0, 4.0, tol).value;
    const double Ih = integrate_adaptive(h, -3.0, 4.0, tol).value;
    EXPECT_NEAR(Ih, al * If + be * Ig, 2.0 * tol * (1.0 + std::abs(al) + std::abs(be)));
  }
}

TEST(IntegrateSemiInfinite, HalfGaussian) {
  auto f = [](double x) { return std::exp(-x * x); };
  const auto r = integrate_semi_infinite(Integrand{f, Envelope::gaussian(1.0, 1.0)}, 1e-9);
  EXPECT_NEAR(r.value, std::sqrt(kPi) / 2.0, 1e-9);
  EXPECT_LE(r.total_error(), 1e-9);
  EXPECT_GT(r.truncation_bound, 0.0);
  EXPECT_LT(r.truncation_bound, 1e-10);
}

TEST(IntegrateSemiInfinite, ZeroIntegrand) {
  auto f = [](double x) { return std::exp(-x) * 0.0; };
  const auto r = integrate_semi_infinite(Integrand{f, Envelope::power_law(1.0, 2.0, 1.0)}, 1e-9);
  EXPECT_EQ(r.value, 0.0);
}

TEST(IntegrateSemiInfinite, MissingEnvelope) {
  auto f = [](double x) { return std::exp(-x); };
  EXPECT_THROW(integrate_semi_infinite(Integrand{f}, 1e-9), UnboundedDomainError);
}

// Kernel of the circular response, written out without cancellation control.
long double naive_kernel(long double x, long double v) {
  if (x < 1e-3L) return 1.0L / (3.0L * (1.0L - v * v));
  const long double s = std::sin(x);
  return (x * x - s * s) / (x * x * (x * x - v * v * s * s));
}

TEST(IntegrateSemiInfinite, CircularKernelAgainstRichardsonSimpson) {
  auto f = [](double x) {
    return std::cos(0.2 * x) * std::exp(-0.01 * x * x) *
           static_cast<double>(naive_kernel(x, 0.5L));
  };
  const double q0 = 1.0 / (3.0 * 0.75);
  const Envelope env = Envelope::gaussian(q0, 0.01).also(Envelope::gaussian_power(4.0 / 3.0, 2.0, 0.01, 2.0));
  const auto r = integrate_semi_infinite(Integrand{f, env, kPi}, 1e-10);
  const double s1 = oracle::simpson(f, 0.0, 200.0, 200000);
  const double s2 = oracle::simpson(f, 0.0, 200.0, 400000);
  EXPECT_NEAR(r.value, (16.0 * s2 - s1) / 15.0, 1e-9);
}

TEST(IntegrateSemiInfinite, TruncationHonesty) {
  auto f = [](double x) { return std::cos(3.0 * x) * std::exp(-0.5 * x * x) / (1.0 + x); };
  const Envelope env = Envelope::gaussian(1.0, 0.5);
  const double tol = 1e-8;
  const auto r = integrate_semi_infinite(Integrand{f, env}, tol);
  double lo = 0.0, hi = 1.0;
  while (env.tail_bound(hi) >= tol / 10) hi *= 2.0;
  for (int i = 0; i < 100; ++i) {
    const double mid = 0.5 * (lo + hi);
    (env.tail_bound(mid) < tol / 10 ? hi : lo) = mid;
  }
  const double wide = oracle::adaptive_simpson<double>(f, 0.0, 2.0 * hi, 1e-13, 64);
  EXPECT_LT(std::abs(wide - r.value), r.truncation_bound + r.abs_error_estimate + 1e-12);
}

TEST(Envelope, TailBoundsAndPointwiseBound) {
  const Envelope g = Envelope::gaussian(2.0, 1.0);
  EXPECT_NEAR(g.tail_bound(0.0), std::sqrt(kPi), 1e-12);
  EXPECT_NEAR(g(1.0), 2.0 * std::exp(-1.0), 1e-15);
  const Envelope p = Envelope::power_law(1.0, 2.0, 1.0);
  EXPECT_NEAR(p.tail_bound(2.0), 0.5, 1e-14);
  EXPECT_TRUE(std::isinf(p(0.5)));
  EXPECT_EQ(p.valid_from(), 1.0);
}

TEST(FindRealRoots, Parabola) {
  const auto r = find_real_roots([](double s) { return 1.0 - s * s; }, 0.0, 3.0, 0.01);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_NEAR(r[0].location, 1.0, 1e-12);
  EXPECT_NEAR(r[0].derivative, -2.0, 1e-8);
}

TEST(FindRealRoots, StaticPairLightCone) {
  const auto r = find_real_roots([](double s) { return 0.01 - s * s; }, 0.0, 3.0, 0.05);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_NEAR(r[0].location, 0.1, 1e-12);
}

TEST(FindRealRoots, OrbitDenominatorAgainstFineScan) {
  auto h = [](double s) { return 0.01 + 4.0 * 0.25 * std::pow(std::sin(s / 2.0), 2) - s * s; };
  const auto r = find_real_roots(h, 0.0, 3.0, kPi / 4.0);
  const auto ref = oracle::scan_roots(h, 0.0, 3.0, 1e-6);
  ASSERT_EQ(r.size(), ref.size());
  for (std::size_t i = 0; i < r.size(); ++i) EXPECT_NEAR(r[i].location, ref[i], 1e-12);
}

TEST(FindRealRoots, TangentialRootIsDegenerate) {
  EXPECT_THROW(find_real_roots([](double s) { return (s - 1.0) * (s - 1.0); }, 0.0, 3.0, 0.1),
               DegenerateRootError);
  EXPECT_THROW(find_real_roots([](double s) { return (s - 1.0) * (s - 1.0) * (s - 1.0); }, 0.0,
                               3.0, 0.1),
               DegenerateRootError);
}

TEST(FindRealRoots, CloseRootPairBetweenGridPoints) {
  const auto r = find_real_roots([](double s) { return (s - 1.0) * (s - 1.02); }, 0.0, 3.0, 0.3);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_NEAR(r[0].location, 1.0, 1e-12);
  EXPECT_NEAR(r[1].location, 1.02, 1e-12);
}

TEST(FindRealRoots, Completeness) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    const double c = 0.05 + 2.0 * u(rng), b = 0.5 * u(rng), k = 1.0 + 4.0 * u(rng);
    auto h = [=](double s) { return c - s * s + b * std::sin(k * s); };
    const auto r = find_real_roots(h, 0.0, 3.0, kPi / (4.0 * k));
    const auto ref = oracle::scan_roots(h, 0.0, 3.0, 1e-6);
    EXPECT_EQ(r.size(), ref.size()) << "trial " << trial;
  }
}

TEST(PrincipalValue, OddPoleAtOrigin) {
  auto h = [](double x) { return x; };
  const auto roots = find_real_roots(h, -1.0, 1.0, 0.3);
  const auto r = integrate_principal_value([](double) { return 1.0; }, h, roots, -1.0, 1.0, 1e-12,
                                           Prescription::kMinusI0);
  EXPECT_NEAR(r.principal_value.real(), 0.0, 1e-12);
  EXPECT_NEAR(r.delta_contribution.imag(), kPi, 1e-12);
}

TEST(PrincipalValue, SymmetricIntervalAboutPole) {
  auto h = [](double x) { return x - 1.0; };
  const auto roots = find_real_roots(h, 0.0, 2.0, 0.3);
  const auto r = integrate_principal_value([](double) { return 1.0; }, h, roots, 0.0, 2.0, 1e-12,
                                           Prescription::kPlusI0);
  EXPECT_NEAR(r.principal_value.real(), 0.0, 1e-12);
  EXPECT_NEAR(r.delta_contribution.imag(), -kPi, 1e-12);
}

TEST(PrincipalValue, GaussianOverShiftedPole) {
  auto f = [](double x) { return std::exp(-x * x); };
  auto h = [](double x) { return x - 1.0; };
  const auto roots = find_real_roots(h, -8.0, 8.0, 0.1);
  const auto r = integrate_principal_value(f, h, roots, -8.0, 8.0, 1e-12, Prescription::kMinusI0);
  auto at = [&](double eps) {
    auto g = [&](double x) { return f(x) / cplx(x - 1.0, -eps); };
    return oracle::adaptive_simpson_pieces(
        g, {-8.0, 1.0 - 20 * eps, 1.0 - 4 * eps, 1.0, 1.0 + 4 * eps, 1.0 + 20 * eps, 8.0}, 1e-13);
  };
  const cplx ref = oracle::extrapolate(at, {0.04, 0.02, 0.01});
  const cplx lower = oracle::extrapolate(at, {0.02, 0.01});
  EXPECT_NEAR(r.principal_value.real(), ref.real(), 2.0 * std::abs(ref - lower));
  EXPECT_NEAR(r.principal_value.real(), -kPi * std::exp(-1.0) * oracle::erfi(1.0), 1e-11);
  EXPECT_NEAR(r.total().imag(), kPi * std::exp(-1.0), 1e-12);
}

TEST(PrincipalValue, WindowCollision) {
  auto h = [](double x) { return (x - 1.0) * (x - 1.0 - 1e-15); };
  const std::vector<RealRoot> roots{{1.0, -1e-3}, {1.0 + 1e-15, 1e-3}};
  EXPECT_THROW(integrate_principal_value([](double) { return 1.0; }, h, roots, 0.0, 2.0, 1e-9,
                                         Prescription::kMinusI0),
               WindowCollisionError);
}

TEST(PrincipalValue, DegenerateRootRejected) {
  const std::vector<RealRoot> roots{{1.0, 1e-12}};
  EXPECT_THROW(integrate_principal_value([](double) { return 1.0; },
                                         [](double x) { return x - 1.0; }, roots, 0.0, 2.0, 1e-9,
                                         Prescription::kMinusI0),
               DegenerateRootError);
}

TEST(PrincipalValue, MatchesFiniteEpsilonOnRandomInstances) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double tol = 1e-9;
  for (int trial = 0; trial < 20; ++trial) {
    const double r1 = -1.5 + u(rng), r2 = r1 + 0.6 + 1.5 * u(rng), k = 3.0 * u(rng);
    const double c = 0.5 + u(rng);
    const bool plus = trial % 2;
    auto f = [=](double x) { return std::exp(-0.5 * x * x) * std::cos(k * x + 0.3); };
    auto h = [=](double x) { return c * (x - r1) * (x - r2); };
    const auto roots = find_real_roots(h, -5.0, 5.0, 0.05);
    ASSERT_EQ(roots.size(), 2u);
    const auto pv = integrate_principal_value(f, h, roots, -5.0, 5.0, tol,
                                              plus ? Prescription::kPlusI0 : Prescription::kMinusI0);
    const double sign = plus ? -1.0 : 1.0;
    const cplx ref = oracle::extrapolate([&](double eps) {
      auto g = [&](double x) { return f(x) / cplx(h(x), -sign * eps); };
      std::vector<double> cuts{-5.0, 5.0};
      for (double r : {r1, r2}) {
        const double w = eps / std::abs(c * (r2 - r1));
        for (double o : {-50 * w, -10 * w, -2 * w, 0.0, 2 * w, 10 * w, 50 * w}) cuts.push_back(r + o);
      }
      return oracle::adaptive_simpson_pieces(g, cuts, 1e-12);
    }, {0.004, 0.002, 0.001, 0.0005, 0.00025});
    EXPECT_LT(std::abs(pv.total() - ref), std::max(1e-6, 10 * tol)) << "trial " << trial;
  }
}

TEST(GaussianWeighted, Constant) {
  const auto r = integrate_gaussian_weighted([](double) { return 1.0; }, 0.0, 1.0, 1e-12);
  EXPECT_NEAR(r.value, std::sqrt(2.0 * kPi), 1e-12);
  const auto w = integrate_gaussian_weighted([](double) { return 1.0; }, 3.0, 2.5, 1e-12);
  EXPECT_NEAR(w.value, std::sqrt(2.0 * kPi) * 2.5, 1e-11);
}

TEST(GaussianWeighted, OddIntegrand) {
  const auto r = integrate_gaussian_weighted([](double x) { return x; }, 0.0, 1.0, 1e-12);
  EXPECT_NEAR(r.value, 0.0, 1e-12);
}

TEST(GaussianWeighted, Cosine) {
  const auto r = integrate_gaussian_weighted([](double x) { return std::cos(3.0 * x); }, 0.0, 1.0, 1e-13);
  EXPECT_NEAR(r.value, std::sqrt(2.0 * kPi) * std::exp(-4.5), 1e-13);
  const double ref = oracle::simpson([](double x) { return std::exp(-0.5 * x * x) * std::cos(3.0 * x); },
                                     -12.0, 12.0, 200000);
  EXPECT_NEAR(r.value, ref, 1e-13);
}

TEST(Erfc, SymmetryPointAndReflection) {
  EXPECT_EQ(numerics::erfc(0.0), 1.0);
  for (double x = -6.0; x <= 6.0; x += 0.173) {
    EXPECT_NEAR(numerics::erfc(-x) + numerics::erfc(x), 2.0, 4e-16);
    EXPECT_NEAR(numerics::erf(x), 1.0 - numerics::erfc(x), 4e-16);
  }
}

TEST(Erfc, ValueAtOne) { EXPECT_NEAR(numerics::erfc(1.0), 0.15729920705028513066, 1e-15); }

TEST(Erfc, RelativeErrorAcrossNormalRange) {
  double worst = 0.0;
  for (double x = -27.0; x <= 26.5; x += 0.01) {
    const long double ref = std::erfc(static_cast<long double>(x));
    worst = std::max(worst, static_cast<double>(std::abs((numerics::erfc(x) - ref) / ref)));
  }
  EXPECT_LT(worst, 1e-10);
}

TEST(Erfc, SubnormalTail) {
  for (double x = 26.5; x <= 27.0; x += 0.01) {
    const long double ref = std::erfc(static_cast<long double>(x));
    EXPECT_LE(std::abs(numerics::erfc(x) - static_cast<double>(ref)), 1e-10 * static_cast<double>(ref) + 1e-322);
  }
}

TEST(Richardson, Linear) {
  const auto r = richardson_extrapolate(std::vector<std::pair<double, double>>{{0.2, 1.2}, {0.1, 1.1}, {0.05, 1.05}});
  EXPECT_NEAR(r.value.real(), 1.0, 1e-14);
}

TEST(Richardson, Constant) {
  const auto r = richardson_extrapolate(std::vector<std::pair<double, double>>{{0.3, 4.0}, {0.2, 4.0}, {0.1, 4.0}});
  EXPECT_NEAR(r.value.real(), 4.0, 1e-14);
  EXPECT_NEAR(r.error_estimate, 0.0, 1e-14);
}

TEST(Richardson, Quadratic) {
  std::vector<std::pair<double, double>> s;
  for (double e : {0.2, 0.1, 0.05}) s.emplace_back(e, 1.0 + e * e);
  EXPECT_NEAR(richardson_extrapolate(s).value.real(), 1.0, 1e-14);
}

TEST(Richardson, Errors) {
  EXPECT_THROW(richardson_extrapolate(std::vector<std::pair<double, double>>{{0.2, 1.0}, {0.1, 1.0}}),
               InsufficientDataError);
  EXPECT_THROW(richardson_extrapolate(std::vector<std::pair<double, double>>{{0.1, 1.0}, {0.2, 1.0}, {0.05, 1.0}}),
               InvalidArgument);
}

TEST(Richardson, ComplexSamples) {
  std::vector<std::pair<double, cplx>> s;
  for (double e : {0.04, 0.02, 0.01, 0.005}) s.emplace_back(e, cplx(2.0 + e, -1.0 + 3.0 * e * e * e));
  const auto r = richardson_extrapolate(s);
  EXPECT_NEAR(r.value.real(), 2.0, 1e-13);
  EXPECT_NEAR(r.value.imag(), -1.0, 1e-13);
}

}  // namespace
