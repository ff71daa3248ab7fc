#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "leocache/allocation.hpp"
#include "leocache/channel.hpp"
#include "leocache/geometry.hpp"

namespace leocache {

enum class Scenario { baseline, immediate_forward, relay_forward, store_forward };

inline constexpr Scenario kAllScenarios[] = {Scenario::baseline, Scenario::immediate_forward,
                                             Scenario::relay_forward, Scenario::store_forward};

std::string_view to_string(Scenario s);
Scenario parse_scenario(std::string_view name);  // throws ConfigError

inline bool uses_split(Scenario s) {
  return s == Scenario::relay_forward || s == Scenario::store_forward;
}

struct ScenarioConfig {
  long B_chunks = 400;
  long chunk_bytes = 1400;
  TimeFrame frame;
  long N_caches = 2;
  double d_C_m = 60'000.0;
  MediumSpeeds speeds;
  OrbitConfig orbit_ul;
  OrbitConfig orbit_dl;
  PassWindow pass_ul{0.0, 0.2};
  PassWindow pass_dl{0.0, 0.2};
  ChannelParams ch_ul;
  ChannelParams ch_dl;
  ChannelParams ch_terr;
  double lambda_per_m = 0.0;
  double per_hop_processing_s = 0.0;
  double pi_relay = 0.0;
  double alpha = 0.5;
  double mu_storage = 0.0;
  double kappa = 1.0;
};

// Throws ConfigError on hard violations; returns soft-range warnings.
std::vector<std::string> validate(const ScenarioConfig& cfg);

struct PowerBreakdown {
  double p_ul = 0.0;
  double p_dl = 0.0;
  double p_relay = 0.0;
  double p_terr = 0.0;
  double p_storage = 0.0;
  double total_weighted = 0.0;
  // Largest per-slot transmit power relative to noise over active links.
  double peak_slot_snr = 0.0;

  bool operator==(const PowerBreakdown&) const = default;
};

// alpha * (satellite terms) + (1 - alpha) * p_terr
double weighted_total(const PowerBreakdown& b, double alpha);

// Power-gain quantiles the cost functions size transmitters against.
struct LinkGains {
  double ul = 0.0;
  double dl = 0.0;
  double terr = 0.0;
};

inline constexpr std::size_t kDefaultShadowingSamples = 100'000;

// Analytic eps-quantile per link; links with shadowing use an empirical
// quantile of mc_samples draws seeded from (seed, link index).
LinkGains resolve_link_gains(const ScenarioConfig& cfg, std::size_t mc_samples = kDefaultShadowingSamples,
                             std::uint64_t seed = 0);

// Mean one-way uplink and downlink propagation delays of the satellite path.
struct PathDelays {
  double ul_s = 0.0;
  double dl_s = 0.0;
};

// Per-slot transmit power for `rate` on a link with quantile gain `gain`.
double slot_power(double rate, double gain, const ChannelParams& params);

// Evaluates all four cost functions on one configuration. Gains, pass delays
// and relay geometry are resolved once at construction.
class CostModel {
 public:
  explicit CostModel(ScenarioConfig cfg, std::size_t mc_samples = kDefaultShadowingSamples,
                     std::uint64_t seed = 0);
  CostModel(ScenarioConfig cfg, LinkGains gains);
  // Bypasses the pass-window geometry with fixed delays.
  CostModel(ScenarioConfig cfg, LinkGains gains, PathDelays delays);

  const ScenarioConfig& config() const { return cfg_; }
  const LinkGains& gains() const { return gains_; }
  double mean_ul_delay_s() const { return mean_ul_delay_s_; }
  double mean_dl_delay_s() const { return mean_dl_delay_s_; }
  double terr_delay_s() const { return prop_delay(cfg_.d_C_m, cfg_.speeds.s_C_mps); }
  long relays() const { return relays_; }
  double per_hop_delay_s() const { return per_hop_delay_s_; }
  double travel_time_s() const;

  Segmentation relay_segments(double split) const;
  Segmentation store_segments(double split) const;

  PowerBreakdown baseline(double B) const;
  PowerBreakdown immediate_forward(double B_s) const;
  PowerBreakdown relay_forward(double B_s, double split) const;
  PowerBreakdown store_forward(double B_s, double split) const;

  // Dispatch; split is ignored by baseline and immediate_forward.
  PowerBreakdown evaluate(Scenario s, double B_s, double split) const;

 private:
  PowerBreakdown with_residual(PowerBreakdown b, double B_s) const;
  PowerBreakdown split_path(double B_s, const Segmentation& seg) const;
  PowerBreakdown finish(PowerBreakdown b) const;
  void check_amount(double B_s) const;

  ScenarioConfig cfg_;
  LinkGains gains_;
  double mean_ul_delay_s_ = 0.0;
  double mean_dl_delay_s_ = 0.0;
  long relays_ = 0;
  double per_hop_delay_s_ = 0.0;
};

PowerBreakdown baseline_cost(const ScenarioConfig& cfg, double B);
PowerBreakdown scenario1_cost(const ScenarioConfig& cfg, double B_s);
PowerBreakdown scenario2_cost(const ScenarioConfig& cfg, double B_s, double split);
PowerBreakdown scenario3_cost(const ScenarioConfig& cfg, double B_s, double split);

}  // namespace leocache
