#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "leocache/config.hpp"
#include "leocache/optimizer.hpp"

namespace leocache {

inline constexpr const char* kToolName = "leo_cache_sim";
inline constexpr const char* kToolVersion = "1.0.0";

inline constexpr const char* kCsvHeader =
    "scenario,fraction,split,feasible,p_ul,p_dl,p_relay,p_terr,p_storage,total_weighted,"
    "required_snr_db";

struct RunSummary {
  std::vector<SweepResult> results;
  ComparisonReport report;
  std::vector<std::filesystem::path> files;
};

// Sweeps every selected scenario and writes sweep_<scenario>.csv, report.txt
// and manifest.json into cfg.out_dir.
RunSummary run(const RunConfig& cfg);

std::string format_csv(const SweepResult& result);
std::string format_manifest(const RunConfig& cfg, const std::vector<std::filesystem::path>& files);

// %.12e, with nan/inf spelled out.
std::string format_real(double v);

}  // namespace leocache
