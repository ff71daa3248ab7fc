#include "leocache/run.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "leocache/error.hpp"

namespace leocache {

namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << content;
  out.flush();
  if (!out) throw Error("write failed for " + path.string());
}

}  // namespace

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12e", v);
  return buf;
}

std::string format_csv(const SweepResult& result) {
  std::string out = kCsvHeader;
  out += '\n';
  const std::string name(to_string(result.scenario));
  for (const SweepPoint& p : result.points) {
    const PowerBreakdown& b = p.breakdown;
    out += name;
    for (double v : {p.fraction, p.split_used}) out += ',' + format_real(v);
    out += p.feasible ? ",1" : ",0";
    for (double v : {b.p_ul, b.p_dl, b.p_relay, b.p_terr, b.p_storage, b.total_weighted,
                     p.required_snr_db}) {
      out += ',' + format_real(v);
    }
    out += '\n';
  }
  return out;
}

std::string format_manifest(const RunConfig& cfg, const std::vector<std::filesystem::path>& files) {
  nlohmann::json m;
  m["tool"] = kToolName;
  m["version"] = kToolVersion;
  m["seed"] = cfg.seed;
  char hash[32];
  std::snprintf(hash, sizeof hash, "fnv1a64:%016" PRIx64, cfg.config_hash);
  m["config_hash"] = hash;
  nlohmann::json names = nlohmann::json::array();
  for (Scenario s : cfg.scenarios) names.push_back(std::string(to_string(s)));
  m["scenarios"] = names;
  m["fraction_points"] = cfg.sweep.fraction_grid.size();
  m["split_points"] = cfg.sweep.split_grid.size();
  m["mc_samples"] = cfg.sweep.mc_samples;
  nlohmann::json outputs = nlohmann::json::array();
  for (const auto& f : files) outputs.push_back(f.filename().string());
  m["outputs"] = outputs;
  m["warnings"] = cfg.warnings;
  return m.dump(2) + "\n";
}

RunSummary run(const RunConfig& cfg) {
  std::error_code ec;
  std::filesystem::create_directories(cfg.out_dir, ec);
  if (ec) throw Error("cannot create output directory " + cfg.out_dir.string() + ": " + ec.message());

  RunSummary summary;
  SweepSpec spec = cfg.sweep;
  spec.seed = cfg.seed;
  const CostModel model(cfg.scenario, spec.mc_samples, spec.seed);
  for (Scenario s : cfg.scenarios) {
    spec.scenario = s;
    SweepResult result = sweep(model, spec);
    const auto path = cfg.out_dir / ("sweep_" + std::string(to_string(s)) + ".csv");
    write_file(path, format_csv(result));
    summary.files.push_back(path);
    summary.results.push_back(std::move(result));
  }
  summary.report = compare(summary.results);
  const auto report_path = cfg.out_dir / "report.txt";
  write_file(report_path, format_report(summary.report));
  summary.files.push_back(report_path);

  const auto manifest_path = cfg.out_dir / "manifest.json";
  write_file(manifest_path, format_manifest(cfg, summary.files));
  summary.files.push_back(manifest_path);
  return summary;
}

}  // namespace leocache
