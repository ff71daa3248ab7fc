#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace leocache {

inline constexpr double kSpeedOfLight = 299'792'458.0;
inline constexpr double kMeanEarthRadius = 6'371'000.0;

// Circular orbit over a spherical Earth. The central angle between the
// sub-satellite point and the ground station moves linearly at
// ground_speed / earth_radius rad/s.
struct OrbitConfig {
  double altitude_m = 1'200'000.0;
  double earth_radius_m = kMeanEarthRadius;
  double ground_speed_mps = 10'000.0;
  double initial_angle_rad = 0.0;
};

struct PassWindow {
  double t_start_s = 0.0;
  double t_end_s = 0.0;
};

struct MediumSpeeds {
  double s_C_mps = kSpeedOfLight;  // data center <-> edge cache medium
  double s_S_mps = kSpeedOfLight;  // free space
};

// Throws ConfigError on hard violations; returns soft-range warnings.
std::vector<std::string> validate(const OrbitConfig& orbit);
void validate(const MediumSpeeds& speeds);

// Positive angles approach the station, so the satellite passes overhead at
// t = initial_angle * R_e / v and the angle turns negative afterwards.
double central_angle_at(const OrbitConfig& orbit, double t_s);

// Law-of-cosines distance from a ground point to the satellite.
double slant_range(const OrbitConfig& orbit, double central_angle_rad);

double prop_delay(double distance_m, double speed_mps);

inline constexpr std::size_t kDefaultPassSamples = 1024;

// Mean free-space delay over the window, sampled at the midpoints of
// n_samples equal sub-intervals.
double mean_pass_delay(const OrbitConfig& orbit, const PassWindow& window,
                       const MediumSpeeds& speeds,
                       std::size_t n_samples = kDefaultPassSamples);

// L = floor(lambda * d_C).
long relay_count(double lambda_per_m, double d_C_m);

// Time for the satellite to cover kappa * d_C at ground speed v.
double travel_time(double d_C_m, double v_mps, double kappa);

}  // namespace leocache
