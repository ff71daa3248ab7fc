#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "leocache/scenarios.hpp"

namespace leocache {

// Evenly spaced grid from start to stop inclusive; the last point is exactly stop.
std::vector<double> make_grid(double start, double stop, double step);

struct SweepSpec {
  Scenario scenario = Scenario::immediate_forward;
  std::vector<double> fraction_grid = make_grid(0.0, 1.0, 0.01);
  std::vector<double> split_grid = make_grid(0.05, 0.95, 0.05);
  std::size_t mc_samples = kDefaultShadowingSamples;
  std::uint64_t seed = 0;
};

void validate(const SweepSpec& spec);

struct SweepPoint {
  double fraction = 0.0;
  double B_s = 0.0;
  double split_used = 0.0;  // NaN when the scenario has no time split
  bool feasible = false;
  PowerBreakdown breakdown;  // NaN components when infeasible
  double required_snr_db = 0.0;
  std::string infeasible_reason;
};

struct SweepResult {
  Scenario scenario = Scenario::baseline;
  std::vector<SweepPoint> points;
  double argmin_fraction = 0.0;
  double argmin_split = 0.0;
  double argmin_total = 0.0;
  double baseline_total = 0.0;  // +inf when the terrestrial path alone is infeasible
};

// Best split for one fraction; infeasible splits are skipped.
SweepPoint evaluate_point(const CostModel& model, Scenario scenario, double fraction,
                          const std::vector<double>& split_grid);

// Grid points run under OpenMP; results are assembled in grid order and are
// identical to sweep_serial.
SweepResult sweep(const CostModel& model, const SweepSpec& spec);
SweepResult sweep(const ScenarioConfig& cfg, const SweepSpec& spec);

SweepResult sweep_serial(const CostModel& model, const SweepSpec& spec);
SweepResult sweep_serial(const ScenarioConfig& cfg, const SweepSpec& spec);

struct ComparisonRow {
  Scenario scenario = Scenario::baseline;
  double argmin_fraction = 0.0;
  double argmin_split = 0.0;
  double argmin_total = 0.0;
  double baseline_total = 0.0;
  double delta_db = 0.0;  // 10 log10(argmin_total / baseline_total)
};

struct ComparisonReport {
  std::vector<ComparisonRow> rows;  // ordered baseline, immediate, relay, store
  Scenario best = Scenario::baseline;
};

ComparisonReport compare(const std::vector<SweepResult>& results);
std::string format_report(const ComparisonReport& report);

}  // namespace leocache
