#pragma once

#include <string>

#include "udw/motion/trajectory.hpp"

namespace udw::response {

/// a sigma exp(-2 sqrt(3) |Omega| / a) / (8 sqrt(3 pi)) + theta(-Omega) |Omega| sigma / (2 sqrt(pi)).
/// Meant for a sigma >> gamma >> 1 with beta > 1; evaluated regardless.
double asymptotic_p_large_acceleration(const motion::CircularTrajectory& trajectory,
                                       const motion::DetectorParams& params);

/// a^2 sigma^2 exp(-Omega^2 sigma^2) / (24 pi) plus the static part.
/// Meant for gamma >> a sigma and gamma >> 1 >> a |Omega| sigma^2.
double asymptotic_p_small_acceleration(const motion::CircularTrajectory& trajectory,
                                       const motion::DetectorParams& params);

/// K pi / 3 + theta(-Omega) |Omega| sigma / (2 sqrt(pi)), for v << 1 and a >> |Omega| > 1/sigma.
double asymptotic_p_small_speed(const motion::CircularTrajectory& trajectory,
                                const motion::DetectorParams& params);

/// a sigma / (4 pi^{3/2}) + theta(-Omega) |Omega| sigma / (2 sqrt(pi)), for a >> |Omega| > 1/sigma.
double asymptotic_p_uniform(const motion::UniformTrajectory& trajectory,
                            const motion::DetectorParams& params);

enum class EdrRegime {
  /// a / (2 sqrt 3): infinite duration, v -> 1, a << |Omega|.
  kCircularHighSpeed,
  /// a v sqrt(1 - v^2) / 6: v << 1, a >> |Omega|.
  kCircularSmallSpeed,
  /// a / (2 pi): uniform acceleration, infinite duration.
  kUniform,
  /// (a + pi |Omega|) / (2 pi): uniform acceleration, a >> |Omega| > 1/sigma.
  kUniformFiniteDuration,
};

EdrRegime parse_edr_regime(const std::string& tag);
std::string to_string(EdrRegime regime);

/// Closed-form EDR temperature in the requested regime, in units of 1/sigma.
double asymptotic_edr_limit(EdrRegime regime, double a, double v, double omega_gap);

/// EDR temperature obtained by inserting the large-acceleration P into the EDR
/// definition. Evaluated in the log domain so that exp(-2 sqrt(3) Omega / a)
/// never underflows.
double edr_from_large_acceleration(double a, double omega_gap);

}  // namespace udw::response
