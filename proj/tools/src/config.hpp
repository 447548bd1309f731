#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kerrqc::cli {

/// Parse or validation failure, located at line:column of the config file
/// (line 0 for environment overrides and missing files).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string source, int line, int column, const std::string& msg);
  const std::string& source() const { return source_; }
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return msg_; }

 private:
  std::string source_;
  int line_;
  int column_;
  std::string msg_;
};

struct ConfigValue {
  std::string text;
  std::string source;  // file name or environment variable
  int line = 0;        // 0 when defaulted or from the environment
  int column = 0;
  bool defaulted = true;
};

/// Flat `[section]` / `key = value` file. '#' and ';' start comments. Every
/// section and key must be known; unknown names are errors, so typos fail
/// loudly. Environment variables KERRQC_<SECTION>_<KEY> (upper case)
/// override file values.
class Config {
 public:
  static Config defaults();
  static Config parse(const std::string& text, const std::string& source = "<string>");
  static Config load(const std::string& path);

  /// Applies environment overrides from `getenv` (or a supplied lookup, for tests).
  void apply_env();
  void apply_env(const std::map<std::string, std::string>& env);

  const ConfigValue& raw(const std::string& section, const std::string& key) const;
  double get_double(const std::string& section, const std::string& key) const;
  std::int64_t get_int(const std::string& section, const std::string& key) const;
  bool get_bool(const std::string& section, const std::string& key) const;
  std::string get_string(const std::string& section, const std::string& key) const;
  /// Comma-separated numbers; empty text gives an empty list.
  std::vector<double> get_double_list(const std::string& section, const std::string& key) const;

  /// Canonical text of every key with defaults expanded, sections and keys in
  /// schema order. Feeding it back to parse() gives the same config.
  std::string resolved_text() const;
  const std::map<std::string, std::map<std::string, ConfigValue>>& values() const { return values_; }

  [[noreturn]] void fail(const std::string& section, const std::string& key, const std::string& msg) const;

 private:
  std::map<std::string, std::map<std::string, ConfigValue>> values_;
};

/// Ordered schema: (section, key, default).
struct SchemaEntry {
  const char* section;
  const char* key;
  const char* fallback;
  const char* help;
};
const std::vector<SchemaEntry>& schema();

}  // namespace kerrqc::cli
