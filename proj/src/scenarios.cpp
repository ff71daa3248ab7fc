#include "leocache/scenarios.hpp"

#include <algorithm>
#include <utility>

#include "leocache/error.hpp"

namespace leocache {

std::string_view to_string(Scenario s) {
  switch (s) {
    case Scenario::baseline: return "baseline";
    case Scenario::immediate_forward: return "immediate_forward";
    case Scenario::relay_forward: return "relay_forward";
    case Scenario::store_forward: return "store_forward";
  }
  return "unknown";
}

Scenario parse_scenario(std::string_view name) {
  for (Scenario s : kAllScenarios) {
    if (to_string(s) == name) return s;
  }
  throw ConfigError("unknown scenario '" + std::string(name) +
                    "' (expected baseline, immediate_forward, relay_forward or store_forward)");
}

std::vector<std::string> validate(const ScenarioConfig& cfg) {
  if (cfg.B_chunks < 0) throw ConfigError("data amount B must be >= 0 chunks");
  if (cfg.chunk_bytes <= 0) throw ConfigError("chunk size must be > 0 bytes");
  if (cfg.N_caches < 1) throw ConfigError("need at least one edge cache");
  if (!(cfg.d_C_m >= 0.0)) throw ConfigError("cache distance must be >= 0");
  if (!(cfg.alpha >= 0.0 && cfg.alpha <= 1.0)) {
    throw ConfigError("weight alpha must lie in [0, 1], got " + std::to_string(cfg.alpha));
  }
  if (!(cfg.pi_relay >= 0.0)) throw ConfigError("relay power cost must be >= 0");
  if (!(cfg.mu_storage >= 0.0)) throw ConfigError("storage cost must be >= 0");
  if (!(cfg.kappa > 0.0)) throw ConfigError("travel proportionality kappa must be > 0");
  if (!(cfg.lambda_per_m >= 0.0)) throw ConfigError("relay density must be >= 0");
  if (!(cfg.per_hop_processing_s >= 0.0)) throw ConfigError("per-hop processing must be >= 0");
  for (const PassWindow* w : {&cfg.pass_ul, &cfg.pass_dl}) {
    if (!(w->t_end_s > w->t_start_s)) throw ConfigError("degenerate pass window");
  }
  validate(cfg.frame);
  validate(cfg.speeds);
  std::vector<std::string> warnings;
  auto append = [&warnings](std::vector<std::string> more, std::string_view prefix) {
    for (auto& w : more) warnings.push_back(std::string(prefix) + w);
  };
  append(validate(cfg.orbit_ul), "uplink orbit: ");
  append(validate(cfg.orbit_dl), "downlink orbit: ");
  append(validate(cfg.ch_ul), "uplink channel: ");
  append(validate(cfg.ch_dl), "downlink channel: ");
  append(validate(cfg.ch_terr), "terrestrial channel: ");
  return warnings;
}

double weighted_total(const PowerBreakdown& b, double alpha) {
  return alpha * (b.p_ul + b.p_dl + b.p_relay + b.p_storage) + (1.0 - alpha) * b.p_terr;
}

LinkGains resolve_link_gains(const ScenarioConfig& cfg, std::size_t mc_samples,
                             std::uint64_t seed) {
  auto one = [&](const ChannelParams& p, std::uint64_t link) {
    if (p.shadowing_sigma_db) {
      return empirical_gain_quantile(p, p.outage_eps, mc_samples, mix_seed(seed, link));
    }
    return gain_quantile(p, p.outage_eps);
  };
  return {one(cfg.ch_ul, 0), one(cfg.ch_dl, 1), one(cfg.ch_terr, 2)};
}

double slot_power(double rate, double gain, const ChannelParams& params) {
  return required_power(rate, gain, params.noise_power);
}

CostModel::CostModel(ScenarioConfig cfg, std::size_t mc_samples, std::uint64_t seed)
    : CostModel(cfg, resolve_link_gains(cfg, mc_samples, seed)) {}

CostModel::CostModel(ScenarioConfig cfg, LinkGains gains)
    : CostModel(cfg, gains,
                PathDelays{mean_pass_delay(cfg.orbit_ul, cfg.pass_ul, cfg.speeds),
                           mean_pass_delay(cfg.orbit_dl, cfg.pass_dl, cfg.speeds)}) {}

CostModel::CostModel(ScenarioConfig cfg, LinkGains gains, PathDelays delays)
    : cfg_(std::move(cfg)), gains_(gains) {
  if (!(delays.ul_s >= 0.0 && delays.dl_s >= 0.0)) throw NumericError("delays must be >= 0");
  mean_ul_delay_s_ = delays.ul_s;
  mean_dl_delay_s_ = delays.dl_s;
  relays_ = relay_count(cfg_.lambda_per_m, cfg_.d_C_m);
  per_hop_delay_s_ = cfg_.per_hop_processing_s;
  if (cfg_.lambda_per_m > 0.0) {
    // Ground spacing 1/lambda projected up to the orbital shell.
    const OrbitConfig& o = cfg_.orbit_ul;
    const double spacing = (1.0 / cfg_.lambda_per_m) * (o.earth_radius_m + o.altitude_m) /
                           o.earth_radius_m;
    per_hop_delay_s_ += prop_delay(spacing, cfg_.speeds.s_S_mps);
  }
}

double CostModel::travel_time_s() const {
  return travel_time(cfg_.d_C_m, cfg_.orbit_ul.ground_speed_mps, cfg_.kappa);
}

Segmentation CostModel::relay_segments(double split) const {
  return scenario2_segments(cfg_.frame, mean_ul_delay_s_, per_hop_delay_s_, relays_,
                            mean_dl_delay_s_, split);
}

Segmentation CostModel::store_segments(double split) const {
  return scenario3_segments(cfg_.frame, mean_ul_delay_s_, mean_dl_delay_s_, terr_delay_s(),
                            travel_time_s(), split);
}

void CostModel::check_amount(double B_s) const {
  if (!(B_s >= 0.0 && B_s <= static_cast<double>(cfg_.B_chunks))) {
    throw NumericError("satellite share must lie in [0, B]");
  }
}

PowerBreakdown CostModel::finish(PowerBreakdown b) const {
  b.total_weighted = weighted_total(b, cfg_.alpha);
  return b;
}

PowerBreakdown CostModel::with_residual(PowerBreakdown b, double B_s) const {
  const double residual = static_cast<double>(cfg_.B_chunks) - B_s;
  if (residual > 0.0) {
    const PowerBreakdown terr = baseline(residual);
    b.p_terr = terr.p_terr;
    b.peak_slot_snr = std::max(b.peak_slot_snr, terr.peak_slot_snr);
  }
  return finish(b);
}

PowerBreakdown CostModel::baseline(double B) const {
  if (!(B >= 0.0)) throw NumericError("data amount must be >= 0");
  PowerBreakdown b;
  if (B > 0.0) {
    const long window =
        baseline_deadline(cfg_.frame, cfg_.N_caches, cfg_.d_C_m, cfg_.speeds.s_C_mps);
    const double per_slot = slot_power(uniform_rate(B, window), gains_.terr, cfg_.ch_terr);
    b.p_terr = static_cast<double>(cfg_.N_caches) * static_cast<double>(window) * per_slot;
    b.peak_slot_snr = per_slot / cfg_.ch_terr.noise_power;
  }
  return finish(b);
}

PowerBreakdown CostModel::immediate_forward(double B_s) const {
  check_amount(B_s);
  PowerBreakdown b;
  if (B_s > 0.0) {
    const long slots = scenario1_deadline(cfg_.frame, mean_ul_delay_s_, mean_dl_delay_s_);
    const double rate = uniform_rate(B_s, slots);
    const double ul = slot_power(rate, gains_.ul, cfg_.ch_ul);
    const double dl = slot_power(rate, gains_.dl, cfg_.ch_dl);
    b.p_ul = static_cast<double>(slots) * ul;
    // One multicast reaches every cache.
    b.p_dl = static_cast<double>(slots) * dl;
    b.peak_slot_snr = std::max(ul / cfg_.ch_ul.noise_power, dl / cfg_.ch_dl.noise_power);
  }
  return with_residual(b, B_s);
}

PowerBreakdown CostModel::split_path(double B_s, const Segmentation& seg) const {
  if (seg.upload_slots < 1 || seg.download_slots < 1) {
    throw InfeasibleDeadline("split leaves no upload or download slot");
  }
  PowerBreakdown b;
  const double ul = slot_power(uniform_rate(B_s, seg.upload_slots), gains_.ul, cfg_.ch_ul);
  const double dl = slot_power(uniform_rate(B_s, seg.download_slots), gains_.dl, cfg_.ch_dl);
  b.p_ul = static_cast<double>(seg.upload_slots) * ul;
  b.p_dl = static_cast<double>(seg.download_slots) * dl;
  b.peak_slot_snr = std::max(ul / cfg_.ch_ul.noise_power, dl / cfg_.ch_dl.noise_power);
  return b;
}

PowerBreakdown CostModel::relay_forward(double B_s, double split) const {
  check_amount(B_s);
  PowerBreakdown b;
  if (B_s > 0.0) {
    b = split_path(B_s, relay_segments(split));
    b.p_relay = static_cast<double>(relays_) * cfg_.pi_relay;
  }
  return with_residual(b, B_s);
}

PowerBreakdown CostModel::store_forward(double B_s, double split) const {
  check_amount(B_s);
  PowerBreakdown b;
  if (B_s > 0.0) {
    const Segmentation seg = store_segments(split);
    b = split_path(B_s, seg);
    // Chunk-slots held onboard from the end of the upload until broadcast ends.
    b.p_storage = cfg_.mu_storage * B_s *
                  static_cast<double>(seg.travel_slots + seg.download_slots);
  }
  return with_residual(b, B_s);
}

PowerBreakdown CostModel::evaluate(Scenario s, double B_s, double split) const {
  switch (s) {
    case Scenario::baseline: return baseline(static_cast<double>(cfg_.B_chunks));
    case Scenario::immediate_forward: return immediate_forward(B_s);
    case Scenario::relay_forward: return relay_forward(B_s, split);
    case Scenario::store_forward: return store_forward(B_s, split);
  }
  throw NumericError("unknown scenario");
}

PowerBreakdown baseline_cost(const ScenarioConfig& cfg, double B) {
  return CostModel(cfg).baseline(B);
}
PowerBreakdown scenario1_cost(const ScenarioConfig& cfg, double B_s) {
  return CostModel(cfg).immediate_forward(B_s);
}
PowerBreakdown scenario2_cost(const ScenarioConfig& cfg, double B_s, double split) {
  return CostModel(cfg).relay_forward(B_s, split);
}
PowerBreakdown scenario3_cost(const ScenarioConfig& cfg, double B_s, double split) {
  return CostModel(cfg).store_forward(B_s, split);
}

}  // namespace leocache
