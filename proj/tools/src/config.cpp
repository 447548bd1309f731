#include "config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace kerrqc::cli {
namespace {

std::string format_location(const std::string& source, int line, int column) {
  if (line <= 0) return source;
  return source + ":" + std::to_string(line) + ":" + std::to_string(column);
}

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return s;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool known(const std::string& section, const std::string& key) {
  for (const auto& e : schema()) {
    if (section == e.section && key == e.key) return true;
  }
  return false;
}

bool known_section(const std::string& section) {
  for (const auto& e : schema()) {
    if (section == e.section) return true;
  }
  return false;
}

}  // namespace

ConfigError::ConfigError(std::string source, int line, int column, const std::string& msg)
    : std::runtime_error(format_location(source, line, column) + ": " + msg),
      source_(std::move(source)),
      line_(line),
      column_(column),
      msg_(msg) {}

const std::vector<SchemaEntry>& schema() {
  static const std::vector<SchemaEntry> entries = {
      {"init", "preset", "none", "none | circular (I0 split equally, <a> = i <b>)"},
      {"init", "I0", "1e6", "total intensity for preset = circular"},
      {"init", "I0a", "1e6", "mode-a intensity (preset = none)"},
      {"init", "I0b", "1e6", "mode-b intensity (preset = none)"},
      {"init", "phi0a", "0", "mode-a phase [rad]"},
      {"init", "phi0b", "0", "mode-b phase [rad]"},
      {"kerr", "chi", "1", "coupling [1/s]"},
      {"kerr", "gamma_a", "0", "mode-a dephasing rate [1/s]"},
      {"kerr", "gamma_b", "0", "mode-b dephasing rate [1/s]"},
      {"tau", "values", "", "explicit comma-separated tau list; overrides start/stop/count"},
      {"tau", "start", "0", "first tau"},
      {"tau", "stop", "1e-5", "last tau"},
      {"tau", "count", "200", "number of points"},
      {"tau", "spacing", "linear", "linear | log"},
      {"run", "seed", "0", "seed recorded for stochastic oracle runs"},
      {"entangle", "order", "40", "Gauss-Hermite nodes per real dimension"},
      {"squeeze", "gamma_over_chi", "0", "comma-separated gamma/chi values, one curve block each"},
      {"squeeze", "form", "consistent", "consistent | printed | full-angle-bracket"},
      {"poincare", "dims", "128", "nodes per axis"},
      {"poincare", "units", "6", "box half-width in units of sqrt(2 I0)"},
      {"poincare", "level", "1e-4", "iso-level relative to the initial peak"},
      {"poincare", "mesh", "true", "write OBJ meshes"},
      {"poincare", "interpolation", "linear", "linear | midpoint"},
      {"poincare", "dephased_width", "saddle", "saddle | printed-total-intensity"},
      {"oracle", "cutoff", "0", "Fock cutoff per mode; 0 = smallest allowed by the tail bound"},
  };
  return entries;
}

Config Config::defaults() {
  Config c;
  for (const auto& e : schema()) c.values_[e.section][e.key] = ConfigValue{e.fallback, "default", 0, 0, true};
  return c;
}

Config Config::parse(const std::string& text, const std::string& source) {
  Config c = defaults();
  std::istringstream in(text);
  std::string line;
  std::string section;
  int lineno = 0;
  std::map<std::string, int> seen;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view body(line);
    const auto hash = body.find_first_of("#;");
    if (hash != std::string_view::npos) body = body.substr(0, hash);
    const auto first = body.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;
    const int col = static_cast<int>(first) + 1;
    const std::string_view content = trim(body);
    if (content.front() == '[') {
      if (content.back() != ']') {
        throw ConfigError(source, lineno, col + static_cast<int>(content.size()), "expected ']' to close section header");
      }
      section = std::string(trim(content.substr(1, content.size() - 2)));
      if (!known_section(section)) throw ConfigError(source, lineno, col + 1, "unknown section [" + section + "]");
      continue;
    }
    const auto eq = body.find('=');
    if (eq == std::string_view::npos) throw ConfigError(source, lineno, col, "expected 'key = value'");
    const std::string key(trim(body.substr(0, eq)));
    if (key.empty()) throw ConfigError(source, lineno, col, "missing key before '='");
    if (section.empty()) throw ConfigError(source, lineno, col, "key '" + key + "' outside of any [section]");
    if (!known(section, key)) {
      throw ConfigError(source, lineno, col, "unknown key '" + key + "' in section [" + section + "]");
    }
    const std::string full = section + "." + key;
    if (seen.count(full)) {
      throw ConfigError(source, lineno, col,
                        "duplicate key '" + key + "' (first set on line " + std::to_string(seen[full]) + ")");
    }
    seen[full] = lineno;
    const std::string_view rest = body.substr(eq + 1);
    const auto vfirst = rest.find_first_not_of(" \t");
    const int vcol = static_cast<int>(eq) + 2 + static_cast<int>(vfirst == std::string_view::npos ? 0 : vfirst);
    c.values_[section][key] = ConfigValue{std::string(trim(rest)), source, lineno, vcol, false};
  }
  return c;
}

Config Config::load(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError(path, 0, 0, "cannot open config file");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse(ss.str(), path);
}

void Config::apply_env() {
  std::map<std::string, std::string> env;
  for (const auto& e : schema()) {
    const std::string name = "KERRQC_" + upper(e.section) + "_" + upper(e.key);
    if (const char* v = std::getenv(name.c_str())) env[name] = v;
  }
  apply_env(env);
}

void Config::apply_env(const std::map<std::string, std::string>& env) {
  for (const auto& e : schema()) {
    const std::string name = "KERRQC_" + upper(e.section) + "_" + upper(e.key);
    const auto it = env.find(name);
    if (it == env.end()) continue;
    values_[e.section][e.key] = ConfigValue{std::string(trim(it->second)), "env " + name, 0, 0, false};
  }
}

const ConfigValue& Config::raw(const std::string& section, const std::string& key) const {
  const auto s = values_.find(section);
  if (s != values_.end()) {
    const auto k = s->second.find(key);
    if (k != s->second.end()) return k->second;
  }
  throw std::logic_error("config key not in schema: " + section + "." + key);
}

void Config::fail(const std::string& section, const std::string& key, const std::string& msg) const {
  const ConfigValue& v = raw(section, key);
  throw ConfigError(v.source, v.line, v.column, section + "." + key + ": " + msg);
}

double Config::get_double(const std::string& section, const std::string& key) const {
  const std::string& t = raw(section, key).text;
  double v = 0.0;
  const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || res.ec != std::errc() || res.ptr != t.data() + t.size()) {
    fail(section, key, "expected a number, got '" + t + "'");
  }
  return v;
}

std::int64_t Config::get_int(const std::string& section, const std::string& key) const {
  const std::string& t = raw(section, key).text;
  std::int64_t v = 0;
  const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || res.ec != std::errc() || res.ptr != t.data() + t.size()) {
    fail(section, key, "expected an integer, got '" + t + "'");
  }
  return v;
}

bool Config::get_bool(const std::string& section, const std::string& key) const {
  const std::string t = raw(section, key).text;
  if (t == "true" || t == "yes" || t == "1" || t == "on") return true;
  if (t == "false" || t == "no" || t == "0" || t == "off") return false;
  fail(section, key, "expected true or false, got '" + t + "'");
}

std::string Config::get_string(const std::string& section, const std::string& key) const {
  return raw(section, key).text;
}

std::vector<double> Config::get_double_list(const std::string& section, const std::string& key) const {
  const std::string& t = raw(section, key).text;
  std::vector<double> out;
  if (trim(t).empty()) return out;
  std::size_t pos = 0;
  while (pos <= t.size()) {
    const auto comma = t.find(',', pos);
    const std::string_view item = trim(std::string_view(t).substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
    double v = 0.0;
    const auto res = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || res.ec != std::errc() || res.ptr != item.data() + item.size()) {
      fail(section, key, "list entry '" + std::string(item) + "' is not a number");
    }
    out.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string Config::resolved_text() const {
  std::string out;
  std::string current;
  for (const auto& e : schema()) {
    if (current != e.section) {
      if (!current.empty()) out += '\n';
      current = e.section;
      out += "[" + current + "]\n";
    }
    out += std::string(e.key) + " = " + raw(e.section, e.key).text + '\n';
  }
  return out;
}

}  // namespace kerrqc::cli
