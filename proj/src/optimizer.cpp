#include "leocache/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>

#include "leocache/error.hpp"

namespace leocache {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();

PowerBreakdown nan_breakdown() {
  return {kNaN, kNaN, kNaN, kNaN, kNaN, kNaN, kNaN};
}

double to_db(double ratio) { return 10.0 * std::log10(ratio); }

SweepResult assemble(const CostModel& model, const SweepSpec& spec,
                     std::vector<SweepPoint> points) {
  SweepResult result;
  result.scenario = spec.scenario;
  result.points = std::move(points);
  bool found = false;
  for (const SweepPoint& p : result.points) {
    // Strict comparison keeps the smallest fraction among ties.
    if (p.feasible && (!found || p.breakdown.total_weighted < result.argmin_total)) {
      found = true;
      result.argmin_total = p.breakdown.total_weighted;
      result.argmin_fraction = p.fraction;
      result.argmin_split = p.split_used;
    }
  }
  if (!found) {
    const std::string why =
        result.points.empty() ? std::string("empty grid") : result.points.back().infeasible_reason;
    throw Error("no feasible operating point for " + std::string(to_string(spec.scenario)) +
                " (" + why + ")");
  }
  try {
    result.baseline_total =
        model.baseline(static_cast<double>(model.config().B_chunks)).total_weighted;
  } catch (const InfeasibleDeadline&) {
    result.baseline_total = kInf;
  }
  return result;
}

const std::vector<double>& effective_fractions(const SweepSpec& spec) {
  static const std::vector<double> kBaselineGrid{0.0};
  return spec.scenario == Scenario::baseline ? kBaselineGrid : spec.fraction_grid;
}

}  // namespace

std::vector<double> make_grid(double start, double stop, double step) {
  if (!(step > 0.0) || !(stop >= start)) throw ConfigError("grid needs step > 0 and stop >= start");
  const auto intervals = static_cast<long>(std::llround((stop - start) / step));
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(intervals) + 1);
  for (long i = 0; i < intervals; ++i) grid.push_back(start + static_cast<double>(i) * step);
  grid.push_back(stop);
  return grid;
}

void validate(const SweepSpec& spec) {
  auto check = [](const std::vector<double>& g, const char* name, bool open) {
    if (g.empty()) throw ConfigError(std::string(name) + " grid is empty");
    if (!std::is_sorted(g.begin(), g.end()) ||
        std::adjacent_find(g.begin(), g.end()) != g.end()) {
      throw ConfigError(std::string(name) + " grid must be strictly increasing");
    }
    const bool ok = open ? (g.front() > 0.0 && g.back() < 1.0)
                         : (g.front() >= 0.0 && g.back() <= 1.0);
    if (!ok) throw ConfigError(std::string(name) + " grid outside its allowed range");
  };
  check(spec.fraction_grid, "fraction", false);
  check(spec.split_grid, "split", true);
  if (spec.mc_samples == 0) throw ConfigError("mc_samples must be > 0");
}

SweepPoint evaluate_point(const CostModel& model, Scenario scenario, double fraction,
                          const std::vector<double>& split_grid) {
  SweepPoint point;
  point.fraction = fraction;
  point.B_s = std::round(fraction * static_cast<double>(model.config().B_chunks));
  point.split_used = kNaN;
  point.breakdown = nan_breakdown();
  point.required_snr_db = kNaN;

  auto consider = [&](double split) {
    try {
      const PowerBreakdown b = model.evaluate(scenario, point.B_s, split);
      if (!point.feasible || b.total_weighted < point.breakdown.total_weighted) {
        point.feasible = true;
        point.breakdown = b;
        point.split_used = split;
      }
    } catch (const InfeasibleDeadline& e) {
      point.infeasible_reason = e.what();
    }
  };
  if (uses_split(scenario)) {
    for (double s : split_grid) consider(s);
  } else {
    consider(kNaN);
  }
  if (point.feasible) {
    point.infeasible_reason.clear();
    point.required_snr_db = to_db(point.breakdown.peak_slot_snr);
  }
  return point;
}

SweepResult sweep_serial(const CostModel& model, const SweepSpec& spec) {
  validate(spec);
  const auto& fractions = effective_fractions(spec);
  std::vector<SweepPoint> points;
  points.reserve(fractions.size());
  for (double f : fractions) points.push_back(evaluate_point(model, spec.scenario, f, spec.split_grid));
  return assemble(model, spec, std::move(points));
}

SweepResult sweep(const CostModel& model, const SweepSpec& spec) {
  validate(spec);
  const auto& fractions = effective_fractions(spec);
  std::vector<SweepPoint> points(fractions.size());
  std::vector<std::exception_ptr> errors(fractions.size());
  const auto n = static_cast<std::int64_t>(fractions.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      points[i] = evaluate_point(model, spec.scenario, fractions[i], spec.split_grid);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return assemble(model, spec, std::move(points));
}

SweepResult sweep(const ScenarioConfig& cfg, const SweepSpec& spec) {
  validate(spec);
  return sweep(CostModel(cfg, spec.mc_samples, spec.seed), spec);
}

SweepResult sweep_serial(const ScenarioConfig& cfg, const SweepSpec& spec) {
  validate(spec);
  return sweep_serial(CostModel(cfg, spec.mc_samples, spec.seed), spec);
}

ComparisonReport compare(const std::vector<SweepResult>& results) {
  if (results.empty()) throw Error("nothing to compare");
  ComparisonReport report;
  for (const SweepResult& r : results) {
    ComparisonRow row;
    row.scenario = r.scenario;
    row.argmin_fraction = r.argmin_fraction;
    row.argmin_split = r.argmin_split;
    row.argmin_total = r.argmin_total;
    row.baseline_total = r.baseline_total;
    if (r.argmin_total == r.baseline_total) {
      row.delta_db = 0.0;
    } else {
      row.delta_db = to_db(r.argmin_total / r.baseline_total);
    }
    report.rows.push_back(row);
  }
  std::stable_sort(report.rows.begin(), report.rows.end(),
                   [](const ComparisonRow& a, const ComparisonRow& b) {
                     return static_cast<int>(a.scenario) < static_cast<int>(b.scenario);
                   });
  const auto best = std::min_element(report.rows.begin(), report.rows.end(),
                                     [](const ComparisonRow& a, const ComparisonRow& b) {
                                       return a.argmin_total < b.argmin_total;
                                     });
  report.best = best->scenario;
  return report;
}

std::string format_report(const ComparisonReport& report) {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "%-18s %10s %8s %20s %20s %12s\n", "scenario", "fraction",
                "split", "min_total", "baseline_total", "delta_db");
  out += line;
  for (const ComparisonRow& r : report.rows) {
    std::snprintf(line, sizeof line, "%-18s %10.4f %8.4f %20.12e %20.12e %12.4f\n",
                  std::string(to_string(r.scenario)).c_str(), r.argmin_fraction, r.argmin_split,
                  r.argmin_total, r.baseline_total, r.delta_db);
    out += line;
  }
  out += "best: " + std::string(to_string(report.best)) + "\n";
  return out;
}

}  // namespace leocache
