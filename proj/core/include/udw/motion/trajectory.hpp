#pragma once

#include <array>
#include <string>
#include <variant>

namespace udw::motion {

/// Speeds above this are rejected as superluminal.
inline constexpr double kMaxSpeed = 1.0 - 1e-9;

/// Orbit plane of a circular trajectory. kXY orbits in a plane parallel to xy
/// at z = offset; kXZ orbits in the xz plane with its centre at x = offset.
enum class OrbitPlane { kXY, kXZ };

struct Kinematics {
  double v;
  double gamma;
  double a;
};

/// Circular motion x = R cos(omega gamma tau), y (or z) = R sin(omega gamma tau),
/// t = gamma tau. omega is signed; R = 0 is a static detector.
class CircularTrajectory {
 public:
  CircularTrajectory(double radius, double omega, OrbitPlane plane = OrbitPlane::kXY,
                     double offset = 0.0);

  /// Inverse constructors. `sense` supplies the sign of omega.
  static CircularTrajectory from_acceleration_speed(double a, double v, double sense = 1.0,
                                                    OrbitPlane plane = OrbitPlane::kXY,
                                                    double offset = 0.0);
  static CircularTrajectory from_acceleration_radius(double a, double radius, double sense = 1.0,
                                                     OrbitPlane plane = OrbitPlane::kXY,
                                                     double offset = 0.0);
  static CircularTrajectory from_angular_velocity_speed(double omega, double v,
                                                        OrbitPlane plane = OrbitPlane::kXY,
                                                        double offset = 0.0);

  double radius() const { return radius_; }
  double omega() const { return omega_; }
  OrbitPlane plane() const { return plane_; }
  double offset() const { return offset_; }
  bool is_static() const { return radius_ == 0.0 || omega_ == 0.0; }

  double speed() const { return kin_.v; }
  double gamma() const { return kin_.gamma; }
  double acceleration() const { return kin_.a; }
  const Kinematics& kinematics() const { return kin_; }

  CircularTrajectory with_offset(OrbitPlane plane, double offset) const;

  /// (t, x, y, z) at proper time tau.
  std::array<double, 4> event(double tau) const;

 private:
  double radius_;
  double omega_;
  OrbitPlane plane_;
  double offset_;
  Kinematics kin_;
};

/// Uniform acceleration t = sinh(a tau)/a, x = cosh(a tau)/a, z = offset.
class UniformTrajectory {
 public:
  explicit UniformTrajectory(double a, double offset = 0.0);

  double acceleration() const { return a_; }
  double offset() const { return offset_; }
  std::array<double, 4> event(double tau) const;

 private:
  double a_;
  double offset_;
};

Kinematics kinematics(const CircularTrajectory& trajectory);

struct DetectorParams {
  /// Energy gap, signed; negative means the detector starts excited.
  double omega_gap = 0.0;
  double sigma = 1.0;

  void validate() const;
};

enum class PairGeometry { kCoaxial, kPerpendicular, kUniformPair };

using Trajectory = std::variant<CircularTrajectory, UniformTrajectory>;

/// Two detectors with a shared gap and switching. The factories place each
/// trajectory at the canonical offset for its geometry.
struct PairScenario {
  Trajectory detector_a;
  Trajectory detector_b;
  PairGeometry geometry;
  double delta_d;
  DetectorParams shared_params;

  /// Both orbit planes parallel to xy, centres on the z axis delta_d apart.
  static PairScenario coaxial(const CircularTrajectory& a, const CircularTrajectory& b,
                              double delta_d, DetectorParams params);
  /// A orbits in xy about the origin, B in xz about (delta_d, 0, 0).
  static PairScenario perpendicular(const CircularTrajectory& a, const CircularTrajectory& b,
                                    double delta_d, DetectorParams params);
  /// Equal uniform accelerations separated by delta_d along z.
  static PairScenario uniform_pair(double a, double delta_d, DetectorParams params);

  const CircularTrajectory& circular_a() const;
  const CircularTrajectory& circular_b() const;
  double uniform_acceleration() const;

  /// Throws InvalidArgument when the trajectories do not fit the geometry.
  void validate() const;
};

std::string to_string(PairGeometry geometry);
PairGeometry parse_geometry(const std::string& name);

}  // namespace udw::motion
