#include "udw/motion/trajectory.hpp"

#include <cmath>

#include "udw/errors.hpp"

namespace udw::motion {

namespace {

void require_finite(double x, const char* name) {
  if (!std::isfinite(x)) throw InvalidArgument(std::string(name) + " must be finite");
}

double sign_of(double sense) {
  require_finite(sense, "sense");
  if (sense == 0.0) throw InvalidArgument("sense must be nonzero");
  return sense > 0.0 ? 1.0 : -1.0;
}

}  // namespace

CircularTrajectory::CircularTrajectory(double radius, double omega, OrbitPlane plane,
                                       double offset)
    : radius_(radius), omega_(omega), plane_(plane), offset_(offset), kin_{0.0, 1.0, 0.0} {
  require_finite(radius, "radius");
  require_finite(omega, "omega");
  require_finite(offset, "offset");
  if (radius < 0.0) throw InvalidArgument("radius must be non-negative");
  if (is_static()) return;
  const double v = std::abs(omega) * radius;
  if (!(v <= kMaxSpeed)) {
    throw SuperluminalError("speed |omega| R = " + std::to_string(v) + " is not below 1");
  }
  const double gamma = 1.0 / std::sqrt((1.0 - v) * (1.0 + v));
  kin_ = {v, gamma, gamma * gamma * omega * omega * radius};
}

CircularTrajectory CircularTrajectory::from_acceleration_speed(double a, double v, double sense,
                                                               OrbitPlane plane, double offset) {
  require_finite(a, "a");
  require_finite(v, "v");
  const double s = sign_of(sense);
  if (a < 0.0 || v < 0.0) throw InvalidArgument("a and v must be non-negative");
  if (v > kMaxSpeed) throw SuperluminalError("speed " + std::to_string(v) + " is not below 1");
  if (v == 0.0) {
    if (a != 0.0) throw InvalidArgument("a nonzero acceleration needs a nonzero speed");
    return CircularTrajectory(0.0, 0.0, plane, offset);
  }
  if (a == 0.0) throw InvalidArgument("a nonzero speed with zero acceleration has no finite radius");
  const double radius = v * v / ((1.0 - v) * (1.0 + v) * a);
  return CircularTrajectory(radius, s * v / radius, plane, offset);
}

CircularTrajectory CircularTrajectory::from_acceleration_radius(double a, double radius,
                                                                double sense, OrbitPlane plane,
                                                                double offset) {
  require_finite(a, "a");
  require_finite(radius, "radius");
  const double s = sign_of(sense);
  if (a < 0.0 || radius < 0.0) throw InvalidArgument("a and radius must be non-negative");
  if (a == 0.0) return CircularTrajectory(radius, 0.0, plane, offset);
  if (radius == 0.0) throw InvalidArgument("a nonzero acceleration needs a nonzero radius");
  const double ar = a * radius;
  const double v = std::sqrt(ar / (1.0 + ar));
  return CircularTrajectory(radius, s * v / radius, plane, offset);
}

CircularTrajectory CircularTrajectory::from_angular_velocity_speed(double omega, double v,
                                                                   OrbitPlane plane,
                                                                   double offset) {
  require_finite(omega, "omega");
  require_finite(v, "v");
  if (v < 0.0) throw InvalidArgument("v must be non-negative");
  if (v > kMaxSpeed) throw SuperluminalError("speed " + std::to_string(v) + " is not below 1");
  if (v == 0.0) return CircularTrajectory(0.0, omega, plane, offset);
  if (omega == 0.0) throw InvalidArgument("a nonzero speed needs a nonzero angular velocity");
  return CircularTrajectory(v / std::abs(omega), omega, plane, offset);
}

CircularTrajectory CircularTrajectory::with_offset(OrbitPlane plane, double offset) const {
  return CircularTrajectory(radius_, omega_, plane, offset);
}

std::array<double, 4> CircularTrajectory::event(double tau) const {
  const double t = kin_.gamma * tau;
  const double phase = omega_ * t;
  const double c = radius_ * std::cos(phase);
  const double s = radius_ * std::sin(phase);
  if (plane_ == OrbitPlane::kXY) return {t, c, s, offset_};
  return {t, c + offset_, 0.0, s};
}

UniformTrajectory::UniformTrajectory(double a, double offset) : a_(a), offset_(offset) {
  require_finite(a, "a");
  require_finite(offset, "offset");
  if (!(a > 0.0)) throw InvalidArgument("uniform acceleration must be positive");
}

std::array<double, 4> UniformTrajectory::event(double tau) const {
  return {std::sinh(a_ * tau) / a_, std::cosh(a_ * tau) / a_, 0.0, offset_};
}

Kinematics kinematics(const CircularTrajectory& trajectory) { return trajectory.kinematics(); }

void DetectorParams::validate() const {
  require_finite(omega_gap, "omega_gap");
  if (!(sigma > 0.0) || !std::isfinite(sigma)) throw InvalidArgument("sigma must be positive");
}

PairScenario PairScenario::coaxial(const CircularTrajectory& a, const CircularTrajectory& b,
                                   double delta_d, DetectorParams params) {
  PairScenario s{a.with_offset(OrbitPlane::kXY, 0.0), b.with_offset(OrbitPlane::kXY, delta_d),
                 PairGeometry::kCoaxial, delta_d, params};
  s.validate();
  return s;
}

PairScenario PairScenario::perpendicular(const CircularTrajectory& a, const CircularTrajectory& b,
                                         double delta_d, DetectorParams params) {
  PairScenario s{a.with_offset(OrbitPlane::kXY, 0.0), b.with_offset(OrbitPlane::kXZ, delta_d),
                 PairGeometry::kPerpendicular, delta_d, params};
  s.validate();
  return s;
}

PairScenario PairScenario::uniform_pair(double a, double delta_d, DetectorParams params) {
  PairScenario s{UniformTrajectory(a, 0.0), UniformTrajectory(a, delta_d),
                 PairGeometry::kUniformPair, delta_d, params};
  s.validate();
  return s;
}

const CircularTrajectory& PairScenario::circular_a() const {
  const auto* p = std::get_if<CircularTrajectory>(&detector_a);
  if (!p) throw InvalidArgument("detector_a is not circular");
  return *p;
}

const CircularTrajectory& PairScenario::circular_b() const {
  const auto* p = std::get_if<CircularTrajectory>(&detector_b);
  if (!p) throw InvalidArgument("detector_b is not circular");
  return *p;
}

double PairScenario::uniform_acceleration() const {
  const auto* p = std::get_if<UniformTrajectory>(&detector_a);
  if (!p) throw InvalidArgument("detector_a is not uniformly accelerated");
  return p->acceleration();
}

void PairScenario::validate() const {
  shared_params.validate();
  require_finite(delta_d, "delta_d");
  if (delta_d < 0.0) throw InvalidArgument("delta_d must be non-negative");
  switch (geometry) {
    case PairGeometry::kCoaxial:
    case PairGeometry::kPerpendicular: {
      const auto* a = std::get_if<CircularTrajectory>(&detector_a);
      const auto* b = std::get_if<CircularTrajectory>(&detector_b);
      if (!a || !b) throw InvalidArgument(to_string(geometry) + " geometry needs two circular trajectories");
      const OrbitPlane want_b =
          geometry == PairGeometry::kCoaxial ? OrbitPlane::kXY : OrbitPlane::kXZ;
      if (a->plane() != OrbitPlane::kXY || a->offset() != 0.0 || b->plane() != want_b ||
          b->offset() != delta_d) {
        throw InvalidArgument(to_string(geometry) +
                              " geometry: trajectory planes or offsets do not match delta_d");
      }
      break;
    }
    case PairGeometry::kUniformPair: {
      const auto* a = std::get_if<UniformTrajectory>(&detector_a);
      const auto* b = std::get_if<UniformTrajectory>(&detector_b);
      if (!a || !b) throw InvalidArgument("uniform-pair geometry needs two uniform trajectories");
      if (a->acceleration() != b->acceleration()) {
        throw InvalidArgument("uniform-pair geometry needs equal accelerations");
      }
      if (a->offset() != 0.0 || b->offset() != delta_d) {
        throw InvalidArgument("uniform-pair geometry: offsets do not match delta_d");
      }
      break;
    }
  }
}

std::string to_string(PairGeometry geometry) {
  switch (geometry) {
    case PairGeometry::kCoaxial:
      return "coaxial";
    case PairGeometry::kPerpendicular:
      return "perpendicular";
    case PairGeometry::kUniformPair:
      return "uniform-pair";
  }
  return "unknown";
}

PairGeometry parse_geometry(const std::string& name) {
  if (name == "coaxial") return PairGeometry::kCoaxial;
  if (name == "perpendicular") return PairGeometry::kPerpendicular;
  if (name == "uniform-pair" || name == "uniform_pair") return PairGeometry::kUniformPair;
  throw InvalidArgument("unknown geometry '" + name +
                        "' (expected coaxial, perpendicular or uniform-pair)");
}

}  // namespace udw::motion
