#pragma once

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "leocache/optimizer.hpp"
#include "leocache/scenarios.hpp"

namespace leocache {

// Experiment description loaded from a JSON file in human units (km, ms, dB,
// km/s) and converted to SI at load time. Defaults: 1 ms slots, outage 0.05,
// kappa 1, fraction step 0.01, split step 0.05, seed 0.
struct RunConfig {
  std::vector<Scenario> scenarios{std::begin(kAllScenarios), std::end(kAllScenarios)};
  ScenarioConfig scenario;
  SweepSpec sweep;
  std::filesystem::path out_dir = "out";
  std::uint64_t seed = 0;
  std::optional<double> frequency_ghz;
  std::optional<double> power_budget_wh;
  std::vector<std::string> warnings;
  std::uint64_t config_hash = 0;
};

// Throws ConfigError with the offending line or field name.
RunConfig load_config(const std::filesystem::path& path);
RunConfig parse_config(const std::string& text, const std::string& source = "<string>");

// Soft-range checks; never alter numeric inputs.
std::vector<std::string> range_warnings(const RunConfig& cfg);

std::uint64_t fnv1a64(const std::string& bytes);

inline double km_to_m(double km) { return km * 1000.0; }
inline double m_to_km(double m) { return m / 1000.0; }
inline double ms_to_s(double ms) { return ms / 1000.0; }
inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

}  // namespace leocache
