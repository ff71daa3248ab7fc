// Command-line driver: load a JSON experiment, sweep the selected delivery
// scenarios and write CSV curves, a comparison report and a run manifest.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "leocache/config.hpp"
#include "leocache/error.hpp"
#include "leocache/run.hpp"

namespace {

std::optional<std::uint64_t> seed_from_env() {
  const char* raw = std::getenv("LEO_CACHE_SIM_SEED");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(raw, &used);
    if (used != std::string(raw).size()) throw std::invalid_argument(raw);
    return v;
  } catch (const std::exception&) {
    throw leocache::ConfigError(std::string("LEO_CACHE_SIM_SEED is not an unsigned integer: ") + raw);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Power-cost sweeps for LEO-assisted edge cache delivery"};
  app.set_version_flag("--version", std::string(leocache::kToolVersion));

  std::string config_path;
  std::string scenario = "";
  std::string out_dir;
  std::optional<std::uint64_t> seed;
  std::optional<long> grid_steps;
  bool quiet = false;

  app.add_option("--config", config_path, "JSON experiment file")->required()->check(CLI::ExistingFile);
  app.add_option("--scenario", scenario,
                 "baseline, immediate_forward, relay_forward, store_forward or all");
  app.add_option("--out", out_dir, "output directory (default: config out_dir or ./out)");
  app.add_option("--seed", seed, "RNG seed; overrides LEO_CACHE_SIM_SEED and the config");
  app.add_option("--grid-steps", grid_steps, "number of fraction intervals (101 points = 100)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--quiet", quiet, "suppress warnings and the report on stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    leocache::RunConfig cfg = leocache::load_config(config_path);
    if (!scenario.empty()) {
      if (scenario == "all") {
        cfg.scenarios.assign(std::begin(leocache::kAllScenarios), std::end(leocache::kAllScenarios));
      } else {
        cfg.scenarios = {leocache::parse_scenario(scenario)};
      }
      cfg.warnings = leocache::range_warnings(cfg);
    }
    if (!out_dir.empty()) cfg.out_dir = out_dir;
    if (auto env = seed_from_env()) cfg.seed = *env;
    if (seed) cfg.seed = *seed;
    if (grid_steps) {
      cfg.sweep.fraction_grid =
          leocache::make_grid(0.0, 1.0, 1.0 / static_cast<double>(*grid_steps));
    }
    cfg.sweep.seed = cfg.seed;

    if (!quiet) {
      for (const auto& w : cfg.warnings) std::cerr << "warning: " << w << '\n';
    }
    const leocache::RunSummary summary = leocache::run(cfg);
    if (!quiet) {
      std::cout << leocache::format_report(summary.report);
      for (const auto& f : summary.files) std::cout << "wrote " << f.string() << '\n';
    }
  } catch (const leocache::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
