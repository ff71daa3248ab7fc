#include "leocache/config.hpp"

#include <fstream>
#include <iterator>
#include <set>
#include <sstream>

#include <json.hpp>

#include "leocache/error.hpp"

namespace leocache {

namespace {

using nlohmann::json;

// Reads one JSON object, tracking which keys were consumed so that typos
// surface as errors rather than silently falling back to defaults.
class Section {
 public:
  Section(const json& node, std::string path) : node_(node), path_(std::move(path)) {
    if (!node_.is_object()) throw ConfigError(path_ + ": expected an object");
  }
  ~Section() = default;
  Section(const Section&) = delete;
  Section& operator=(const Section&) = delete;

  bool has(const std::string& key) const { return node_.contains(key); }

  template <typename T>
  T get(const std::string& key, T fallback) {
    seen_.insert(key);
    if (!node_.contains(key) || node_.at(key).is_null()) return fallback;
    return read<T>(key);
  }

  template <typename T>
  std::optional<T> optional(const std::string& key) {
    seen_.insert(key);
    if (!node_.contains(key) || node_.at(key).is_null()) return std::nullopt;
    return read<T>(key);
  }

  Section child(const std::string& key) {
    seen_.insert(key);
    static const json kEmpty = json::object();
    return Section(node_.contains(key) ? node_.at(key) : kEmpty, field(key));
  }

  const json& raw(const std::string& key) {
    seen_.insert(key);
    return node_.at(key);
  }

  void finish() const {
    for (const auto& item : node_.items()) {
      if (!seen_.count(item.key())) throw ConfigError("unknown field '" + field(item.key()) + "'");
    }
  }

  std::string field(const std::string& key) const {
    return path_.empty() ? key : path_ + "." + key;
  }

 private:
  template <typename T>
  T read(const std::string& key) const {
    try {
      return node_.at(key).get<T>();
    } catch (const json::exception& e) {
      throw ConfigError("field '" + field(key) + "': " + e.what());
    }
  }

  const json& node_;
  std::string path_;
  std::set<std::string> seen_;
};

OrbitConfig read_orbit(Section s, const OrbitConfig& base) {
  OrbitConfig o;
  o.altitude_m = km_to_m(s.get("altitude_km", m_to_km(base.altitude_m)));
  o.earth_radius_m = km_to_m(s.get("earth_radius_km", m_to_km(base.earth_radius_m)));
  o.ground_speed_mps = km_to_m(s.get("ground_speed_km_s", m_to_km(base.ground_speed_mps)));
  constexpr double kDeg = 3.14159265358979323846 / 180.0;
  o.initial_angle_rad = s.get("initial_angle_deg", base.initial_angle_rad / kDeg) * kDeg;
  s.finish();
  return o;
}

PassWindow read_pass(Section s, const PassWindow& base) {
  PassWindow w;
  w.t_start_s = ms_to_s(s.get("start_ms", base.t_start_s * 1000.0));
  w.t_end_s = ms_to_s(s.get("end_ms", base.t_end_s * 1000.0));
  s.finish();
  return w;
}

ChannelParams read_channel(Section s) {
  ChannelParams c;
  c.noncentrality = s.get("noncentrality", c.noncentrality);
  if (s.has("mean_gain") && s.has("mean_gain_db")) {
    throw ConfigError(s.field("mean_gain") + ": give mean_gain or mean_gain_db, not both");
  }
  c.scale = s.get("mean_gain", c.scale);
  if (auto db = s.optional<double>("mean_gain_db")) c.scale = db_to_linear(*db);
  c.noise_power = s.get("noise_power", c.noise_power);
  c.outage_eps = s.get("outage_eps", c.outage_eps);
  c.shadowing_sigma_db = s.optional<double>("shadowing_sigma_db");
  c.atmo_loss_db = s.get("atmo_loss_db", c.atmo_loss_db);
  s.finish();
  return c;
}

std::vector<Scenario> read_scenarios(const json& node) {
  if (node.is_string()) {
    const auto name = node.get<std::string>();
    if (name == "all") return {std::begin(kAllScenarios), std::end(kAllScenarios)};
    return {parse_scenario(name)};
  }
  if (!node.is_array() || node.empty()) {
    throw ConfigError("field 'scenarios': expected \"all\", a name or a non-empty list");
  }
  std::vector<Scenario> out;
  for (const auto& item : node) {
    if (!item.is_string()) throw ConfigError("field 'scenarios': names must be strings");
    const Scenario s = parse_scenario(item.get<std::string>());
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int line_of(const std::string& text, std::size_t byte) {
  const auto end = text.begin() + static_cast<std::ptrdiff_t>(std::min(byte, text.size()));
  return 1 + static_cast<int>(std::count(text.begin(), end, '\n'));
}

}  // namespace

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

RunConfig parse_config(const std::string& text, const std::string& source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(source + ":" + std::to_string(line_of(text, e.byte)) + ": " + e.what());
  }

  RunConfig rc;
  rc.config_hash = fnv1a64(text);
  ScenarioConfig& sc = rc.scenario;
  Section root(doc, "");

  rc.seed = root.get<std::uint64_t>("seed", 0);
  if (root.has("scenarios")) rc.scenarios = read_scenarios(root.raw("scenarios"));
  rc.out_dir = root.get<std::string>("out_dir", rc.out_dir.string());

  {
    Section s = root.child("data");
    sc.B_chunks = s.get<long>("chunks", sc.B_chunks);
    sc.chunk_bytes = s.get<long>("chunk_bytes", sc.chunk_bytes);
    s.finish();
  }
  {
    Section s = root.child("frame");
    const double duration_ms = s.get("duration_ms", 200.0);
    const double slot_ms = s.get("slot_ms", 1.0);
    s.finish();
    if (!(slot_ms > 0.0) || !(duration_ms > 0.0)) {
      throw ConfigError("frame: duration_ms and slot_ms must be > 0");
    }
    const double slots = duration_ms / slot_ms;
    const double whole = std::round(slots);
    if (std::abs(slots - whole) > 1e-9 * std::max(1.0, whole)) {
      throw ConfigError("frame: duration_ms must be a whole number of slots");
    }
    sc.frame.total_slots = static_cast<long>(whole);
    sc.frame.slot_duration_s = ms_to_s(slot_ms);
  }
  {
    Section s = root.child("caches");
    sc.N_caches = s.get<long>("count", sc.N_caches);
    sc.d_C_m = km_to_m(s.get("distance_km", m_to_km(sc.d_C_m)));
    s.finish();
  }
  {
    Section s = root.child("media");
    sc.speeds.s_C_mps = km_to_m(s.get("terrestrial_speed_km_s", m_to_km(kSpeedOfLight)));
    sc.speeds.s_S_mps = km_to_m(s.get("free_space_speed_km_s", m_to_km(kSpeedOfLight)));
    s.finish();
  }
  sc.orbit_ul = read_orbit(root.child("orbit"), OrbitConfig{});
  sc.orbit_dl = read_orbit(root.child("orbit_downlink"), sc.orbit_ul);
  const PassWindow whole_frame{
      0.0, static_cast<double>(sc.frame.total_slots) * sc.frame.slot_duration_s};
  sc.pass_ul = read_pass(root.child("pass_uplink"), whole_frame);
  sc.pass_dl = read_pass(root.child("pass_downlink"), sc.pass_ul);
  {
    Section s = root.child("channels");
    sc.ch_ul = read_channel(s.child("uplink"));
    sc.ch_dl = read_channel(s.child("downlink"));
    sc.ch_terr = read_channel(s.child("terrestrial"));
    s.finish();
  }
  {
    Section s = root.child("relay");
    sc.lambda_per_m = s.get("density_per_km", 0.0) / 1000.0;
    sc.pi_relay = s.get("power_cost", sc.pi_relay);
    sc.per_hop_processing_s = ms_to_s(s.get("processing_ms", 0.0));
    s.finish();
  }
  {
    Section s = root.child("storage");
    sc.mu_storage = s.get("cost_per_chunk_slot", sc.mu_storage);
    s.finish();
  }
  {
    Section s = root.child("store_forward");
    sc.kappa = s.get("kappa", sc.kappa);
    s.finish();
  }
  {
    Section s = root.child("weights");
    sc.alpha = s.get("alpha", sc.alpha);
    s.finish();
  }
  {
    Section s = root.child("sweep");
    const double fstep = s.get("fraction_step", 0.01);
    const double sstep = s.get("split_step", 0.05);
    rc.sweep.mc_samples = s.get<std::size_t>("mc_samples", rc.sweep.mc_samples);
    s.finish();
    if (!(fstep > 0.0 && fstep <= 1.0)) throw ConfigError("sweep.fraction_step must lie in (0, 1]");
    if (!(sstep > 0.0 && sstep < 0.5)) throw ConfigError("sweep.split_step must lie in (0, 0.5)");
    rc.sweep.fraction_grid = make_grid(0.0, 1.0, fstep);
    rc.sweep.split_grid = make_grid(sstep, 1.0 - sstep, sstep);
  }
  {
    Section s = root.child("annotations");
    rc.frequency_ghz = s.optional<double>("frequency_ghz");
    rc.power_budget_wh = s.optional<double>("power_budget_wh");
    s.finish();
  }
  root.finish();

  rc.sweep.seed = rc.seed;
  validate(rc.sweep);
  rc.warnings = range_warnings(rc);
  return rc;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_config(text, path.string());
}

std::vector<std::string> range_warnings(const RunConfig& cfg) {
  std::vector<std::string> warnings = validate(cfg.scenario);
  if (cfg.frequency_ghz) {
    const double f = *cfg.frequency_ghz;
    if (!((f >= 1.0 && f <= 17.0) || (f >= 27.0 && f <= 75.0))) {
      warnings.push_back("frequency " + std::to_string(f) +
                         " GHz outside the LEO bands [1, 17] and [27, 75] GHz");
    }
  }
  if (cfg.power_budget_wh) {
    const double p = *cfg.power_budget_wh;
    if (p < 10.0 || p > 50.0) {
      warnings.push_back("power budget " + std::to_string(p) +
                         " Wh outside the typical LEO range [10, 50] Wh");
    }
  }
  // Delay budget checks with no data amount dependence.
  const CostModel model(cfg.scenario, LinkGains{1.0, 1.0, 1.0});
  for (Scenario s : cfg.scenarios) {
    try {
      switch (s) {
        case Scenario::baseline:
          baseline_deadline(cfg.scenario.frame, cfg.scenario.N_caches, cfg.scenario.d_C_m,
                            cfg.scenario.speeds.s_C_mps);
          break;
        case Scenario::immediate_forward:
          scenario1_deadline(cfg.scenario.frame, model.mean_ul_delay_s(), model.mean_dl_delay_s());
          break;
        case Scenario::relay_forward: model.relay_segments(0.5); break;
        case Scenario::store_forward: model.store_segments(0.5); break;
      }
    } catch (const InfeasibleDeadline& e) {
      warnings.push_back(std::string(to_string(s)) + ": " + e.what() +
                         (s == Scenario::baseline ? "" : "; only fraction 0 is feasible"));
    }
  }
  return warnings;
}

}  // namespace leocache
