#include "leocache/geometry.hpp"

#include <cmath>

#include "leocache/error.hpp"

namespace leocache {

std::vector<std::string> validate(const OrbitConfig& orbit) {
  if (!(orbit.altitude_m > 0.0)) throw ConfigError("orbit altitude must be > 0");
  if (!(orbit.earth_radius_m > 0.0)) throw ConfigError("earth radius must be > 0");
  if (!(orbit.ground_speed_mps > 0.0)) throw ConfigError("ground speed must be > 0");
  std::vector<std::string> warnings;
  if (orbit.altitude_m < 500'000.0 || orbit.altitude_m > 2'000'000.0) {
    warnings.push_back("altitude " + std::to_string(orbit.altitude_m / 1000.0) +
                       " km outside the LEO range [500, 2000] km");
  }
  return warnings;
}

void validate(const MediumSpeeds& speeds) {
  if (!(speeds.s_C_mps > 0.0) || !(speeds.s_C_mps <= speeds.s_S_mps) ||
      !(speeds.s_S_mps <= kSpeedOfLight)) {
    throw ConfigError("signal speeds must satisfy 0 < s_C <= s_S <= c");
  }
}

double central_angle_at(const OrbitConfig& orbit, double t_s) {
  return orbit.initial_angle_rad - (orbit.ground_speed_mps / orbit.earth_radius_m) * t_s;
}

double slant_range(const OrbitConfig& orbit, double central_angle_rad) {
  const double re = orbit.earth_radius_m;
  const double rs = orbit.earth_radius_m + orbit.altitude_m;
  // re^2 + rs^2 - 2 re rs cos(a) rewritten as h^2 + 4 re rs sin^2(a/2),
  // which keeps full precision near the overhead point.
  const double s = std::sin(0.5 * central_angle_rad);
  return std::sqrt(orbit.altitude_m * orbit.altitude_m + 4.0 * re * rs * s * s);
}

double prop_delay(double distance_m, double speed_mps) { return distance_m / speed_mps; }

double mean_pass_delay(const OrbitConfig& orbit, const PassWindow& window,
                       const MediumSpeeds& speeds, std::size_t n_samples) {
  if (!(window.t_end_s > window.t_start_s)) throw NumericError("degenerate pass window");
  if (n_samples < 2) throw NumericError("mean_pass_delay needs at least 2 samples");
  const double dt = (window.t_end_s - window.t_start_s) / static_cast<double>(n_samples);
  double sum = 0.0;
  for (std::size_t i = 0; i < n_samples; ++i) {
    const double t = window.t_start_s + (static_cast<double>(i) + 0.5) * dt;
    sum += prop_delay(slant_range(orbit, central_angle_at(orbit, t)), speeds.s_S_mps);
  }
  return sum / static_cast<double>(n_samples);
}

long relay_count(double lambda_per_m, double d_C_m) {
  return static_cast<long>(std::floor(lambda_per_m * d_C_m));
}

double travel_time(double d_C_m, double v_mps, double kappa) {
  return kappa * d_C_m / v_mps;
}

}  // namespace leocache
