#include <cmath>

#include "commands.hpp"
#include "config.hpp"
#include "csv.hpp"
#include "doctest.h"

using namespace kerrqc::cli;

namespace {

ConfigError parse_error(const std::string& text) {
  try {
    Config::parse(text, "s.ini");
  } catch (const ConfigError& e) {
    return e;
  }
  FAIL("expected a ConfigError");
  return ConfigError("", 0, 0, "");
}

}  // namespace

TEST_CASE("defaults cover the whole schema") {
  const Config c = Config::defaults();
  for (const auto& e : schema()) CHECK(c.raw(e.section, e.key).defaulted);
  CHECK(c.get_double("init", "I0a") == 1e6);
  CHECK(c.get_int("tau", "count") == 200);
  CHECK(c.get_bool("poincare", "mesh"));
}

TEST_CASE("values, comments and whitespace") {
  const Config c = Config::parse(
      "# scenario\n"
      "[init]\n"
      "  I0a = 2   ; trailing comment\n"
      "I0b=3\n"
      "\n"
      "[squeeze]\n"
      "gamma_over_chi = 0, 0.2 ,1\n",
      "s.ini");
  CHECK(c.get_double("init", "I0a") == 2.0);
  CHECK(c.get_double("init", "I0b") == 3.0);
  CHECK(c.raw("init", "I0a").line == 3);
  CHECK(c.raw("init", "I0a").column == 9);
  CHECK_FALSE(c.raw("init", "I0a").defaulted);
  CHECK(c.get_double_list("squeeze", "gamma_over_chi") == std::vector<double>{0.0, 0.2, 1.0});
  CHECK(c.get_double_list("tau", "values").empty());
}

TEST_CASE("parse errors carry line and column") {
  ConfigError e = parse_error("[init]\nI0a = 1\n[bogus]\n");
  CHECK(e.line() == 3);
  CHECK(e.column() == 2);
  e = parse_error("[init]\n  I0x = 1\n");
  CHECK(e.line() == 2);
  CHECK(e.column() == 3);
  CHECK(std::string(e.what()).find("s.ini:2:3") != std::string::npos);
  e = parse_error("[init]\nI0a = 1\nI0a = 2\n");
  CHECK(e.line() == 3);
  CHECK(e.message().find("line 2") != std::string::npos);
  e = parse_error("I0a = 1\n");
  CHECK(e.line() == 1);
  e = parse_error("[init\n");
  CHECK(e.line() == 1);
  e = parse_error("[init]\nI0a\n");
  CHECK(e.line() == 2);
}

TEST_CASE("type errors point at the value") {
  const Config c = Config::parse("[tau]\ncount =  12x\n", "s.ini");
  try {
    c.get_int("tau", "count");
    FAIL("expected a ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 10);
  }
  CHECK_THROWS_AS(Config::parse("[poincare]\nmesh = maybe\n").get_bool("poincare", "mesh"), ConfigError);
  CHECK_THROWS_AS(Config::parse("[tau]\nvalues = 1, , 2\n").get_double_list("tau", "values"), ConfigError);
}

TEST_CASE("environment overrides the file") {
  Config c = Config::parse("[tau]\ncount = 10\n");
  c.apply_env({{"KERRQC_TAU_COUNT", " 7 "}, {"KERRQC_KERR_CHI", "2.5"}, {"KERRQC_NOT_A_KEY", "1"}});
  CHECK(c.get_int("tau", "count") == 7);
  CHECK(c.get_double("kerr", "chi") == 2.5);
  CHECK(c.raw("tau", "count").source == "env KERRQC_TAU_COUNT");
}

TEST_CASE("resolved text round-trips") {
  Config c = Config::parse("[init]\nI0a = 5\n[squeeze]\nform = printed\n");
  const Config back = Config::parse(c.resolved_text());
  CHECK(back.resolved_text() == c.resolved_text());
  for (const auto& e : schema()) CHECK(back.raw(e.section, e.key).text == c.raw(e.section, e.key).text);
}

TEST_CASE("tau grids") {
  std::vector<double> t = tau_grid(Config::parse("[tau]\nstart = 0\nstop = 1e-5\ncount = 200\n"));
  REQUIRE(t.size() == 200);
  CHECK(t.front() == 0.0);
  CHECK(t.back() == 1e-5);
  t = tau_grid(Config::parse("[tau]\nstart = 1e-6\nstop = 1e-2\ncount = 5\nspacing = log\n"));
  CHECK(t[2] == doctest::Approx(1e-4));
  t = tau_grid(Config::parse("[tau]\nvalues = 0, 1e-3, 2e-3\n"));
  CHECK(t.size() == 3);
  CHECK_THROWS_AS(tau_grid(Config::parse("[tau]\nvalues = 0, 2e-3, 1e-3\n")), ConfigError);
  CHECK_THROWS_AS(tau_grid(Config::parse("[tau]\nvalues = -1\n")), ConfigError);
  CHECK_THROWS_AS(tau_grid(Config::parse("[tau]\nstart = 0\nspacing = log\n")), ConfigError);
  CHECK_THROWS_AS(tau_grid(Config::parse("[tau]\ncount = 0\n")), ConfigError);
}

TEST_CASE("scenario presets") {
  const Scenario s = scenario_from(Config::parse("[init]\npreset = circular\nI0 = 10\n"));
  CHECK(s.init.I0a == 5.0);
  CHECK(s.init.I0b == 5.0);
  CHECK_THROWS_AS(scenario_from(Config::parse("[init]\npreset = circular\nI0a = 10\n")), ConfigError);
  CHECK_THROWS_AS(scenario_from(Config::parse("[init]\nI0 = 10\n")), ConfigError);
  CHECK_THROWS_AS(scenario_from(Config::parse("[init]\nI0a = -1\n")), ConfigError);
  CHECK_THROWS_AS(scenario_from(Config::parse("[kerr]\nchi = 0\n")), ConfigError);
}

TEST_CASE("number formatting is shortest round-trip") {
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(1e-5) == "1e-05");
  CHECK(format_double(1.0 / 3.0) == "0.3333333333333333");
  for (double v : {0.1 + 0.2, 1e-300, 123456.789, -2.5e17, 2.2250738585072014e-308}) CHECK(std::stod(format_double(v)) == v);
  CHECK(format_double(std::nan("")) == "nan");
}

TEST_CASE("csv blocks and empty cells") {
  CsvTable t({{"a", "1", "first"}, {"b", "s", "second"}});
  t.comment("hello");
  t.begin_block("x = 1");
  t.add_row({1.0, std::monostate{}});
  t.begin_block("x = 2");
  t.add_row({2.5, std::string("yes")});
  t.footer("done");
  CHECK(t.str() ==
        "# hello\n# a [1]: first\n# b [s]: second\na,b\n# block x = 1\n1,\n\n# block x = 2\n2.5,yes\n# done\n");
  CHECK_THROWS_AS(t.add_row({1.0}), std::logic_error);
}
