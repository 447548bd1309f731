#include "commands.hpp"

#include <chrono>
#include <cmath>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "csv.hpp"
#include "kerrqc/correlations.hpp"
#include "kerrqc/errors.hpp"
#include "kerrqc/fockoracle.hpp"
#include "kerrqc/grid_io.hpp"
#include "kerrqc/marching_cubes.hpp"
#include "kerrqc/poincare_export.hpp"
#include "kerrqc/polarization.hpp"
#include "kerrqc/quadrature.hpp"
#include "pool.hpp"

#ifndef KERRQC_VERSION
#define KERRQC_VERSION "unknown"
#endif

namespace kerrqc::cli {
namespace {

using Row = std::vector<CsvCell>;

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

double finite_at_least(const Config& cfg, const char* section, const char* key, double lo, bool strict) {
  const double v = cfg.get_double(section, key);
  if (!std::isfinite(v) || v < lo || (strict && v == lo)) {
    cfg.fail(section, key, std::string("must be ") + (strict ? "> " : ">= ") + format_double(lo) + ", got " +
                               cfg.raw(section, key).text);
  }
  return v;
}

// Re-raises failures at one tau with the point attached.
template <typename F>
auto at_tau(double tau, F f) -> decltype(f()) {
  try {
    return f();
  } catch (const DomainError& e) {
    throw DomainError("at tau = " + format_double(tau) + ": " + e.what());
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw std::runtime_error("at tau = " + format_double(tau) + ": " + e.what());
  }
}

void require_unitary(const Config& cfg, const Scenario& sc, const std::string& sub) {
  if (sc.kerr.gamma_a != 0.0) cfg.fail("kerr", "gamma_a", "dephasing is not supported by '" + sub + "'");
  if (sc.kerr.gamma_b != 0.0) cfg.fail("kerr", "gamma_b", "dephasing is not supported by '" + sub + "'");
}

std::vector<std::string> scenario_comments(const std::string& sub, const Scenario& sc, const std::string& hash) {
  return {
      "kerrqc " + tool_version() + " " + sub,
      "scenario " + hash,
      "I0a = " + format_double(sc.init.I0a) + ", I0b = " + format_double(sc.init.I0b) +
          ", phi0a = " + format_double(sc.init.phi0a) + ", phi0b = " + format_double(sc.init.phi0b),
      "chi = " + format_double(sc.kerr.chi) + " 1/s, gamma_a = " + format_double(sc.kerr.gamma_a) +
          " 1/s, gamma_b = " + format_double(sc.kerr.gamma_b) + " 1/s",
  };
}

struct Context {
  const Config& cfg;
  const RunOptions& opt;
  Scenario sc;
  RunManifest& manifest;
  unsigned threads;

  void emit(const std::string& name, const CsvTable& table) {
    manifest.files.push_back(write_output(opt.out, name, table.str()));
  }
  void stage(const std::string& name, const Stopwatch& w) { manifest.stages.push_back({name, w.seconds()}); }
};

void cmd_purity(Context& ctx) {
  require_unitary(ctx.cfg, ctx.sc, "purity");
  const auto& sc = ctx.sc;
  const bool integral_ok = sc.init.I0a >= 1e3;
  Stopwatch w;
  const auto rows = parallel_map<Row>(sc.taus.size(), ctx.threads, [&](std::size_t i) {
    const double tau = sc.taus[i];
    return at_tau(tau, [&] {
      Row r{tau, purity_qc_series(sc.init, tau).value, std::monostate{}, purity_asymptotic(sc.init, tau).value,
            purity_exact(sc.init, tau).value};
      if (integral_ok) r[2] = purity_qc_integral(sc.init, tau).value;
      return r;
    });
  });
  ctx.stage("compute", w);

  CsvTable t({
      {"tau", "1", "dimensionless time chi t / 2"},
      {"P_qc_series", "1", "quasiclassical purity of mode a, Bessel series"},
      {"P_qc_integral", "1", "continuum limit of the series; empty when I0a < 1000"},
      {"P_asymptotic", "1", "1 / sqrt(1 + 16 I0a I0b tau^2); meaningful while I0b tau <= 1"},
      {"P_exact", "1", "purity of mode a under the full quantum evolution"},
  });
  for (auto& c : scenario_comments("purity", sc, ctx.manifest.scenario_hash)) t.comment(c);
  for (const auto& r : rows) t.add_row(r);
  Stopwatch wr;
  ctx.emit("purity.csv", t);
  ctx.stage("write", wr);
}

void cmd_entangle(Context& ctx) {
  require_unitary(ctx.cfg, ctx.sc, "entangle");
  const auto& sc = ctx.sc;
  const std::int64_t order = ctx.cfg.get_int("entangle", "order");
  if (order < 20 || order > kMaxHermiteOrder) {
    ctx.cfg.fail("entangle", "order", "must lie in [20, " + std::to_string(kMaxHermiteOrder) + "]");
  }
  Stopwatch w;
  const auto rows = parallel_map<Row>(sc.taus.size(), ctx.threads, [&](std::size_t i) {
    const double tau = sc.taus[i];
    return at_tau(tau, [&] {
      const SymplecticSpectrum s = symplectic_spectrum(covariance_matrix(sc.init, tau, {static_cast<int>(order)}));
      return Row{tau, s.nu_tilde_minus, s.nu_plus, s.nu_minus, std::string(to_string(entanglement_witness(s)))};
    });
  });
  ctx.stage("compute", w);

  CsvTable t({
      {"tau", "1", "dimensionless time chi t / 2"},
      {"nu_tilde_minus", "1", "smallest symplectic eigenvalue of the partially transposed covariance"},
      {"nu_plus", "1", "larger symplectic eigenvalue of the covariance"},
      {"nu_minus", "1", "smaller symplectic eigenvalue of the covariance"},
      {"verdict", "-", "entangled when nu_tilde_minus < 1/2; never claims separability"},
  });
  for (auto& c : scenario_comments("entangle", sc, ctx.manifest.scenario_hash)) t.comment(c);
  t.comment("covariance from " + std::to_string(order) + "^4 Gauss-Hermite nodes; vacuum level 1/2");
  for (const auto& r : rows) t.add_row(r);
  Stopwatch wr;
  ctx.emit("entangle.csv", t);
  ctx.stage("write", wr);
}

DarkPlaneForm dark_plane_form(const Config& cfg) {
  const std::string f = cfg.get_string("squeeze", "form");
  if (f == "consistent") return DarkPlaneForm::kConsistent;
  if (f == "printed") return DarkPlaneForm::kPrinted;
  if (f == "full-angle-bracket") return DarkPlaneForm::kFullAngleBracket;
  cfg.fail("squeeze", "form", "expected consistent, printed or full-angle-bracket, got '" + f + "'");
}

void cmd_squeeze(Context& ctx) {
  const auto& sc = ctx.sc;
  if (sc.kerr.gamma() != 0.0) {
    ctx.cfg.fail("kerr", sc.kerr.gamma_a != 0.0 ? "gamma_a" : "gamma_b",
                 "squeeze takes its dephasing rates from squeeze.gamma_over_chi");
  }
  if (std::abs(sc.init.I0a - sc.init.I0b) > 1e-12 * sc.init.total_intensity()) {
    ctx.cfg.fail("init", "I0b", "squeeze needs equal mode intensities (circular input); use preset = circular");
  }
  const std::vector<double> gammas = ctx.cfg.get_double_list("squeeze", "gamma_over_chi");
  if (gammas.empty()) ctx.cfg.fail("squeeze", "gamma_over_chi", "needs at least one value");
  for (double g : gammas) {
    if (!std::isfinite(g) || g < 0) ctx.cfg.fail("squeeze", "gamma_over_chi", "values must be >= 0");
  }
  const DarkPlaneForm form = dark_plane_form(ctx.cfg);
  const double I0 = sc.init.total_intensity();

  Stopwatch w;
  const std::size_t nt = sc.taus.size();
  const auto rows = parallel_map<Row>(gammas.size() * nt, ctx.threads, [&](std::size_t idx) {
    const double g = gammas[idx / nt];
    const double tau = sc.taus[idx % nt];
    return at_tau(tau, [&] {
      const SqueezingReport r = squeezing_report(I0, tau, g, sc.kerr.chi, seconds_from_tau(tau, sc.kerr.chi), form);
      return Row{g, tau, r.mean_Sy, r.var_sq, r.var_antisq, r.theta_sq, r.optimal_amount,
                 std::string(r.squeezing_certified ? "true" : "false")};
    });
  });
  ctx.stage("compute", w);

  CsvTable t({
      {"gamma_over_chi", "1", "dephasing rate over coupling for this block"},
      {"tau", "1", "dimensionless time chi t / 2"},
      {"mean_Sy", "photons", "mean Stokes component along the initial polarisation"},
      {"var_sq", "photons^2", "dark-plane variance at the squeezing angle; shot noise = I0"},
      {"var_antisq", "photons^2", "dark-plane variance at the squeezing angle + pi/2"},
      {"theta_sq", "rad", "squeezing angle"},
      {"optimal_amount", "photons^2", "var_sq - |mean_Sy|; negative means polarisation squeezing"},
      {"certified", "-", "true when var_sq < |mean_Sy|"},
  });
  for (auto& c : scenario_comments("squeeze", sc, ctx.manifest.scenario_hash)) t.comment(c);
  t.comment("circular input with I0 = I0a + I0b = " + format_double(I0) + "; variance form " +
            ctx.cfg.get_string("squeeze", "form"));
  for (std::size_t b = 0; b < gammas.size(); ++b) {
    t.begin_block("gamma_over_chi = " + format_double(gammas[b]));
    for (std::size_t i = 0; i < nt; ++i) t.add_row(rows[b * nt + i]);
  }
  Stopwatch wr;
  ctx.emit("squeeze.csv", t);
  ctx.stage("write", wr);
}

std::string frame_name(std::size_t k, const char* ext) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "poincare_%04zu.%s", k, ext);
  return buf;
}

void cmd_poincare(Context& ctx) {
  const Config& cfg = ctx.cfg;
  const auto& sc = ctx.sc;
  const std::int64_t n = cfg.get_int("poincare", "dims");
  if (n < 8 || n > 1024) cfg.fail("poincare", "dims", "must lie in [8, 1024]");
  const double units = finite_at_least(cfg, "poincare", "units", 0.0, true);
  const double level = cfg.get_double("poincare", "level");
  if (!(level > 0.0 && level < 1.0)) cfg.fail("poincare", "level", "must lie in (0, 1)");
  const bool mesh = cfg.get_bool("poincare", "mesh");
  const std::string interp_name = cfg.get_string("poincare", "interpolation");
  EdgeInterpolation interp = EdgeInterpolation::kLinear;
  if (interp_name == "midpoint") {
    interp = EdgeInterpolation::kMidpoint;
  } else if (interp_name != "linear") {
    cfg.fail("poincare", "interpolation", "expected linear or midpoint, got '" + interp_name + "'");
  }
  const std::string width_name = cfg.get_string("poincare", "dephased_width");
  DephasedWidthForm width = DephasedWidthForm::kSaddle;
  if (width_name == "printed-total-intensity") {
    width = DephasedWidthForm::kPrintedTotalIntensity;
  } else if (width_name != "saddle") {
    cfg.fail("poincare", "dephased_width", "expected saddle or printed-total-intensity, got '" + width_name + "'");
  }
  if (sc.init.total_intensity() <= 0.0) cfg.fail("init", "I0a", "poincare needs a nonzero total intensity");

  const Box box = default_box(sc.init, units);
  const std::array<std::int64_t, 3> dims{n, n, n};
  const bool dephased = sc.kerr.gamma() > 0.0;

  CsvTable t({
      {"index", "1", "frame number"},
      {"tau", "1", "dimensionless time chi t / 2"},
      {"grid_file", "-", "binary grid of W / W_peak(tau = 0)"},
      {"mesh_file", "-", "OBJ iso-surface at the requested level; empty when the level is not crossed"},
      {"max_value", "1", "largest sampled W / W_peak(tau = 0)"},
      {"triangles", "1", "triangle count of the iso-surface"},
      {"volume", "photons^3", "volume enclosed by the iso-surface"},
      {"axis_ratio", "1", "major over minor principal semi-axis of the enclosed solid"},
      {"volume_ratio_unitary", "1", "dephased over unitary enclosed volume; empty without dephasing"},
      {"axis_angle_unitary", "deg", "angle between dephased and unitary major axes; empty without dephasing"},
  });
  for (auto& c : scenario_comments("poincare", sc, ctx.manifest.scenario_hash)) t.comment(c);
  t.comment("box centre (" + format_double(box.center[0]) + ", " + format_double(box.center[1]) + ", " +
            format_double(box.center[2]) + "), half-width " + format_double(box.half_width[0]) + " photons, " +
            std::to_string(n) + "^3 nodes, level " + format_double(level));

  double t_sample = 0.0, t_mesh = 0.0, t_write = 0.0;
  for (std::size_t k = 0; k < sc.taus.size(); ++k) {
    const double tau = sc.taus[k];
    Row row{static_cast<double>(k), tau, frame_name(k, "grid"), std::monostate{}, std::monostate{},
            std::monostate{}, std::monostate{}, std::monostate{}, std::monostate{}, std::monostate{}};
    at_tau(tau, [&] {
      Stopwatch ws;
      const ScalarGrid3D grid = sample_grid(sc.init, tau, sc.kerr, box, dims, ctx.threads, width);
      t_sample += ws.seconds();
      Stopwatch ww;
      write_grid(ctx.opt.out / frame_name(k, "grid"), grid);
      ctx.manifest.files.push_back(record_output(ctx.opt.out, frame_name(k, "grid")));
      ctx.manifest.files.push_back(record_output(ctx.opt.out, sidecar_path(frame_name(k, "grid")).string()));
      t_write += ww.seconds();
      double peak = grid.values.front();
      for (double v : grid.values) peak = std::max(peak, v);
      row[4] = peak;
      if (!mesh) return;
      Stopwatch wm;
      IsoMesh m;
      try {
        m = extract_isosurface(grid, level, interp);
      } catch (const LevelOutOfRangeError&) {
        ctx.manifest.notes.push_back("frame " + std::to_string(k) + ": level not crossed, no mesh");
        t_mesh += wm.seconds();
        return;
      }
      const SolidMoments sm = solid_moments(m);
      row[5] = static_cast<double>(m.triangles.size());
      row[6] = sm.volume;
      row[7] = sm.axis_ratio();
      if (dephased) {
        KerrConfig unitary = sc.kerr;
        unitary.gamma_a = unitary.gamma_b = 0.0;
        const ScalarGrid3D ref = sample_grid(sc.init, tau, unitary, box, dims, ctx.threads);
        const ShrinkMetric s = dephasing_shrink_metric(ref, grid, level);
        row[8] = s.volume_ratio;
        row[9] = s.axis_angle_deg;
      }
      t_mesh += wm.seconds();
      Stopwatch wo;
      write_obj(ctx.opt.out / frame_name(k, "obj"), m);
      ctx.manifest.files.push_back(record_output(ctx.opt.out, frame_name(k, "obj")));
      ctx.manifest.files.push_back(record_output(ctx.opt.out, sidecar_path(frame_name(k, "obj")).string()));
      row[3] = frame_name(k, "obj");
      t_write += wo.seconds();
    });
    t.add_row(std::move(row));
  }
  ctx.manifest.stages.push_back({"sample", t_sample});
  ctx.manifest.stages.push_back({"mesh", t_mesh});
  Stopwatch wr;
  ctx.emit("poincare.csv", t);
  ctx.manifest.stages.push_back({"write", t_write + wr.seconds()});
}

void cmd_oracle(Context& ctx) {
  require_unitary(ctx.cfg, ctx.sc, "oracle");
  const auto& sc = ctx.sc;
  const std::int64_t requested = ctx.cfg.get_int("oracle", "cutoff");
  if (requested < 0) ctx.cfg.fail("oracle", "cutoff", "must be >= 0");
  const int cutoff = requested == 0 ? fock::minimal_cutoff(sc.init) : static_cast<int>(requested);
  if (cutoff > 1000) {
    ctx.cfg.fail(requested == 0 ? "init" : "oracle", requested == 0 ? "I0a" : "cutoff",
                 "Fock cutoff " + std::to_string(cutoff) + " exceeds 1000; the oracle is meant for small intensities");
  }
  Stopwatch wp;
  const fock::FockState psi0 = fock::coherent_fock(sc.init, cutoff);
  ctx.stage("prepare", wp);

  Stopwatch w;
  const auto rows = parallel_map<Row>(sc.taus.size(), ctx.threads, [&](std::size_t i) {
    const double tau = sc.taus[i];
    return at_tau(tau, [&] {
      const fock::FockState s = fock::evolve_fock(psi0, tau);
      const double exact = purity_exact(sc.init, tau).value;
      const double pa = fock::reduced_purity(s, fock::Mode::kA);
      const double pb = fock::reduced_purity(s, fock::Mode::kB);
      return Row{tau, exact, pa, pb, std::max(std::abs(exact - pa), std::abs(exact - pb))};
    });
  });
  ctx.stage("compute", w);

  double worst = 0.0;
  for (const auto& r : rows) worst = std::max(worst, std::get<double>(r[4]));
  CsvTable t({
      {"tau", "1", "dimensionless time chi t / 2"},
      {"P_exact", "1", "closed-form purity of mode a under the full quantum evolution"},
      {"P_fock_a", "1", "purity of mode a from the truncated number-basis state"},
      {"P_fock_b", "1", "purity of mode b from the truncated number-basis state"},
      {"abs_diff", "1", "max(|P_exact - P_fock_a|, |P_exact - P_fock_b|)"},
  });
  for (auto& c : scenario_comments("oracle", sc, ctx.manifest.scenario_hash)) t.comment(c);
  t.comment("cutoff " + std::to_string(cutoff) + " per mode, truncated norm " + format_double(psi0.norm_leak));
  for (const auto& r : rows) t.add_row(r);
  t.footer("max abs_diff = " + format_double(worst));
  ctx.manifest.notes.push_back("max abs_diff = " + format_double(worst));
  Stopwatch wr;
  ctx.emit("oracle.csv", t);
  ctx.stage("write", wr);
}

}  // namespace

std::string tool_version() { return KERRQC_VERSION; }

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names = {"purity", "entangle", "squeeze", "poincare", "oracle"};
  return names;
}

std::vector<double> tau_grid(const Config& cfg) {
  std::vector<double> taus = cfg.get_double_list("tau", "values");
  const bool explicit_list = !taus.empty();
  if (!explicit_list) {
    const double start = finite_at_least(cfg, "tau", "start", 0.0, false);
    const double stop = finite_at_least(cfg, "tau", "stop", 0.0, false);
    const std::int64_t count = cfg.get_int("tau", "count");
    if (count < 1 || count > 10'000'000) cfg.fail("tau", "count", "must lie in [1, 1e7]");
    const std::string spacing = cfg.get_string("tau", "spacing");
    if (spacing != "linear" && spacing != "log") cfg.fail("tau", "spacing", "expected linear or log");
    if (count > 1 && !(stop > start)) cfg.fail("tau", "stop", "must exceed tau.start");
    if (spacing == "log" && start <= 0.0) cfg.fail("tau", "start", "log spacing needs start > 0");
    taus.resize(static_cast<std::size_t>(count));
    for (std::int64_t i = 0; i < count; ++i) {
      const double f = count == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(count - 1);
      taus[i] = spacing == "linear" ? start + (stop - start) * f : start * std::pow(stop / start, f);
    }
    if (count > 1) taus.back() = stop;
  }
  for (std::size_t i = 0; i < taus.size(); ++i) {
    const char* key = explicit_list ? "values" : "start";
    if (!std::isfinite(taus[i]) || taus[i] < 0.0) cfg.fail("tau", key, "tau must be finite and >= 0");
    if (i > 0 && !(taus[i] > taus[i - 1])) cfg.fail("tau", key, "tau grid must be strictly increasing");
  }
  return taus;
}

Scenario scenario_from(const Config& cfg) {
  Scenario sc;
  const std::string preset = cfg.get_string("init", "preset");
  if (preset == "circular") {
    for (const char* key : {"I0a", "I0b", "phi0a", "phi0b"}) {
      if (!cfg.raw("init", key).defaulted) cfg.fail("init", key, "has no effect with preset = circular; use init.I0");
    }
    sc.init = TwoModeCoherentInit::circular(finite_at_least(cfg, "init", "I0", 0.0, false));
  } else if (preset == "none") {
    if (!cfg.raw("init", "I0").defaulted) cfg.fail("init", "I0", "only used with preset = circular");
    sc.init.I0a = finite_at_least(cfg, "init", "I0a", 0.0, false);
    sc.init.I0b = finite_at_least(cfg, "init", "I0b", 0.0, false);
    sc.init.phi0a = finite_at_least(cfg, "init", "phi0a", -INFINITY, false);
    sc.init.phi0b = finite_at_least(cfg, "init", "phi0b", -INFINITY, false);
  } else {
    cfg.fail("init", "preset", "expected none or circular, got '" + preset + "'");
  }
  sc.kerr.chi = finite_at_least(cfg, "kerr", "chi", 0.0, true);
  sc.kerr.gamma_a = finite_at_least(cfg, "kerr", "gamma_a", 0.0, false);
  sc.kerr.gamma_b = finite_at_least(cfg, "kerr", "gamma_b", 0.0, false);
  sc.taus = tau_grid(cfg);
  sc.seed = cfg.get_int("run", "seed");
  return sc;
}

RunManifest run(const std::string& subcommand, const Config& cfg, const RunOptions& opt) {
  RunManifest m;
  m.subcommand = subcommand;
  m.version = tool_version();
  m.resolved_config = cfg.resolved_text();
  m.scenario_hash = "crc32:" + hex32(crc32_bytes(m.resolved_config));
  m.threads = resolve_threads(opt.threads);
  std::filesystem::create_directories(opt.out);

  auto fail = [&](const char* kind, const std::exception& e) {
    m.status = "error";
    m.error_kind = kind;
    m.error_message = e.what();
    write_manifest(opt.out, m);
  };
  try {
    if (opt.format != "csv") throw ConfigError("--format", 0, 0, "unsupported format '" + opt.format + "'");
    Stopwatch w;
    Context ctx{cfg, opt, scenario_from(cfg), m, m.threads};
    m.stages.push_back({"setup", w.seconds()});
    if (subcommand == "purity") {
      cmd_purity(ctx);
    } else if (subcommand == "entangle") {
      cmd_entangle(ctx);
    } else if (subcommand == "squeeze") {
      cmd_squeeze(ctx);
    } else if (subcommand == "poincare") {
      cmd_poincare(ctx);
    } else if (subcommand == "oracle") {
      cmd_oracle(ctx);
    } else {
      throw ConfigError("command line", 0, 0, "unknown subcommand '" + subcommand + "'");
    }
  } catch (const ConfigError& e) {
    fail("config", e);
    throw;
  } catch (const DomainError& e) {
    fail("domain", e);
    throw;
  } catch (const std::exception& e) {
    fail("internal", e);
    throw;
  }
  write_manifest(opt.out, m);
  return m;
}

int main_entry(int argc, char** argv) {
  CLI::App app{"Quasiclassical cross-Kerr phase-space calculations", "kerrqc"};
  std::string subcommand;
  std::string config_path;
  RunOptions opt;
  std::string out = "kerrqc-out";
  app.add_option("subcommand", subcommand, "purity | entangle | squeeze | poincare | oracle")
      ->required()
      ->check(CLI::IsMember(subcommands()));
  app.add_option("--config", config_path, "scenario file ([section] / key = value)");
  app.add_option("--out", out, "output directory")->capture_default_str();
  app.add_option("--threads", opt.threads, "worker threads, 0 = all cores")->capture_default_str();
  app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"csv"}))->capture_default_str();
  app.set_version_flag("--version", tool_version());
  app.footer("Any config key can be overridden with KERRQC_<SECTION>_<KEY>, e.g. KERRQC_TAU_COUNT=50.");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  opt.out = out;

  Config cfg;
  try {
    cfg = config_path.empty() ? Config::defaults() : Config::load(config_path);
    cfg.apply_env();
  } catch (const ConfigError& e) {
    std::cerr << "kerrqc: config error: " << e.what() << '\n';
    try {
      std::filesystem::create_directories(opt.out);
      RunManifest m;
      m.subcommand = subcommand;
      m.version = tool_version();
      m.status = "error";
      m.error_kind = "config";
      m.error_message = e.what();
      write_manifest(opt.out, m);
    } catch (const std::exception& w) {
      std::cerr << "kerrqc: could not write manifest: " << w.what() << '\n';
    }
    return 2;
  }

  try {
    const RunManifest m = run(subcommand, cfg, opt);
    for (const auto& n : m.notes) std::cerr << "kerrqc: " << n << '\n';
    std::cerr << "kerrqc: " << subcommand << " wrote " << m.files.size() << " file(s) to " << opt.out.string()
              << '\n';
    return 0;
  } catch (const ConfigError& e) {
    std::cerr << "kerrqc: config error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "kerrqc: domain error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "kerrqc: error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace kerrqc::cli
