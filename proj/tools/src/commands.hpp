#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "config.hpp"
#include "kerrqc/phasespace.hpp"
#include "manifest.hpp"

namespace kerrqc::cli {

std::string tool_version();

/// Subcommand names in help order.
const std::vector<std::string>& subcommands();

struct Scenario {
  TwoModeCoherentInit init;
  KerrConfig kerr;
  std::vector<double> taus;  // strictly increasing, >= 0
  std::int64_t seed = 0;
};

/// Validated scenario; bad values raise ConfigError at the offending key.
Scenario scenario_from(const Config& cfg);
std::vector<double> tau_grid(const Config& cfg);

struct RunOptions {
  std::filesystem::path out;
  unsigned threads = 0;  // 0 = hardware concurrency
  std::string format = "csv";
};

/// Runs one subcommand into opt.out. The manifest is written on success and
/// on failure; failures are rethrown after it is on disk.
RunManifest run(const std::string& subcommand, const Config& cfg, const RunOptions& opt);

/// Process entry: parses flags, loads config and environment overrides, runs.
/// Exit status 0 on success, 2 for usage or config errors, 3 for numeric
/// domain errors, 1 otherwise.
int main_entry(int argc, char** argv);

}  // namespace kerrqc::cli
