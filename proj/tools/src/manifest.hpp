#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace kerrqc::cli {

struct ManifestFile {
  std::string path;  // relative to the output directory
  std::uintmax_t bytes = 0;
  std::uint32_t crc32 = 0;
};

struct StageTime {
  std::string name;
  double seconds = 0.0;
};

struct RunManifest {
  std::string subcommand;
  std::string version;
  std::string scenario_hash;    // crc32 of the resolved config text
  std::string resolved_config;  // canonical text, defaults expanded
  unsigned threads = 0;
  std::vector<ManifestFile> files;
  std::vector<StageTime> stages;
  std::string status = "ok";    // ok | error
  std::string error_kind;       // config | domain | internal
  std::string error_message;
  std::vector<std::string> notes;
};

inline constexpr const char* kManifestName = "manifest.json";

/// Writes `text` to out_dir / name and records size and checksum.
ManifestFile write_output(const std::filesystem::path& out_dir, const std::string& name, const std::string& text);
/// Records a file some other writer produced.
ManifestFile record_output(const std::filesystem::path& out_dir, const std::string& name);

std::string to_json(const RunManifest& m);
void write_manifest(const std::filesystem::path& out_dir, const RunManifest& m);
RunManifest read_manifest(const std::filesystem::path& path);

std::string hex32(std::uint32_t v);

}  // namespace kerrqc::cli
