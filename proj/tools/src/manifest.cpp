#include "manifest.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "kerrqc/grid_io.hpp"

namespace kerrqc::cli {

std::string hex32(std::uint32_t v) {
  char buf[9];
  std::snprintf(buf, sizeof buf, "%08x", v);
  return buf;
}

ManifestFile write_output(const std::filesystem::path& out_dir, const std::string& name, const std::string& text) {
  const auto path = out_dir / name;
  {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + path.string());
    f << text;
    if (!f) throw std::runtime_error("write failed for " + path.string());
  }
  return {name, text.size(), crc32_bytes(text)};
}

ManifestFile record_output(const std::filesystem::path& out_dir, const std::string& name) {
  const auto path = out_dir / name;
  return {name, std::filesystem::file_size(path), crc32_file(path)};
}

std::string to_json(const RunManifest& m) {
  nlohmann::ordered_json j;
  j["tool"] = "kerrqc";
  j["version"] = m.version;
  j["subcommand"] = m.subcommand;
  j["status"] = m.status;
  if (m.status != "ok") j["error"] = {{"kind", m.error_kind}, {"message", m.error_message}};
  j["scenario_hash"] = m.scenario_hash;
  j["threads"] = m.threads;
  j["files"] = nlohmann::ordered_json::array();
  for (const auto& f : m.files) {
    j["files"].push_back({{"path", f.path}, {"bytes", f.bytes}, {"crc32", hex32(f.crc32)}});
  }
  j["stages"] = nlohmann::ordered_json::array();
  for (const auto& s : m.stages) j["stages"].push_back({{"name", s.name}, {"seconds", s.seconds}});
  if (!m.notes.empty()) j["notes"] = m.notes;
  j["resolved_config"] = m.resolved_config;
  return j.dump(2) + "\n";
}

void write_manifest(const std::filesystem::path& out_dir, const RunManifest& m) {
  std::ofstream f(out_dir / kManifestName, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot write " + (out_dir / kManifestName).string());
  f << to_json(m);
}

RunManifest read_manifest(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path.string());
  const auto j = nlohmann::json::parse(f);
  RunManifest m;
  m.version = j.at("version");
  m.subcommand = j.at("subcommand");
  m.status = j.at("status");
  if (j.contains("error")) {
    m.error_kind = j["error"].at("kind");
    m.error_message = j["error"].at("message");
  }
  m.scenario_hash = j.at("scenario_hash");
  m.threads = j.at("threads");
  for (const auto& e : j.at("files")) {
    m.files.push_back({e.at("path"), e.at("bytes"),
                       static_cast<std::uint32_t>(std::stoul(e.at("crc32").get<std::string>(), nullptr, 16))});
  }
  for (const auto& e : j.at("stages")) m.stages.push_back({e.at("name"), e.at("seconds")});
  if (j.contains("notes")) m.notes = j["notes"].get<std::vector<std::string>>();
  m.resolved_config = j.at("resolved_config");
  return m;
}

}  // namespace kerrqc::cli
