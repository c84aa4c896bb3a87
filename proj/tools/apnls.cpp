#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "apnls/harness/config.hpp"
#include "apnls/harness/experiments.hpp"
#include "apnls/harness/initial_data.hpp"
#include "apnls/harness/plotdata.hpp"
#include "apnls/harness/sweep.hpp"
#include "apnls/snapshot.hpp"

namespace fs = std::filesystem;
using namespace apnls;
using namespace apnls::harness;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBlowUp = 1;
constexpr int kExitConfig = 2;
constexpr int kExitCheckFailed = 3;

struct GlobalOptions {
  std::string config;
  std::string out;
  std::string cache;
  unsigned threads = 1;
  std::uint64_t seed = 20240607;
};

ExperimentConfig load(const GlobalOptions& g) {
  ExperimentConfig c = g.config.empty() ? default_config_1d() : load_config(g.config);
  if (!g.out.empty()) c.output.dir = g.out;
  if (!g.cache.empty()) c.output.cache = g.cache;
  return c;
}

double pick_epsilon(const ExperimentConfig& c, const std::optional<double>& eps) {
  if (eps) return *eps;
  if (c.sweep.epsilons.empty()) throw ConfigError("no epsilon given and sweep.epsilon is empty");
  return c.sweep.epsilons.front();
}

std::size_t pick_points(const ExperimentConfig& c, const std::optional<std::size_t>& points) {
  if (points) return *points;
  if (c.sweep.points.empty()) throw ConfigError("no J given and sweep.J is empty");
  return c.sweep.points.back();
}

std::string fmt(const char* spec, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, x);
  return buf;
}

int cmd_run(const GlobalOptions& g, std::optional<double> eps_opt, std::optional<std::size_t> j_opt) {
  const ExperimentConfig c = load(g);
  const double eps = pick_epsilon(c, eps_opt);
  const std::size_t points = pick_points(c, j_opt);
  const fs::path dir = c.output.dir;
  std::vector<fs::path> files;
  switch (c.equation) {
    case Equation::ap_nls: {
      const auto run = run_ap(c, eps, points, run_options(c));
      files = write_run(run, dir);
      std::cout << "ap-nls eps=" << format_number(eps) << " J=" << points << " steps=" << run.steps
                << " wall=" << fmt("%.3f", run.wall_seconds) << "s\n";
      break;
    }
    case Equation::splitting_nls: {
      const auto run = run_splitting(c, eps, points);
      files = write_run(run, dir);
      std::cout << "splitting-nls eps=" << format_number(eps) << " J=" << points << " steps=" << run.steps
                << " wall=" << fmt("%.3f", run.wall_seconds) << "s\n";
      break;
    }
    case Equation::eikonal:
    case Equation::linear: {
      if (c.sweep.times.empty()) throw ConfigError("run: no output times");
      const GridPtr grid = make_experiment_grid(c, points);
      const InitialFields init = build_initial(c.initial, grid);
      eikonal::EikonalOptions options;
      options.cfl = c.sweep.cfl;
      options.dt_max = c.sweep.dt_max;
      const auto traj = eikonal::eikonal_run(init.phi, make_potential(c), c.potential.viscosity,
                                             c.sweep.times.back(), options);
      fs::create_directories(dir);
      const auto& last = traj.final();
      const std::string tag = "t" + format_number(last.t);
      save_snapshot(dir / ("phase-" + tag + ".dat"), make_snapshot(last.phi, eps, last.t, SnapshotKind::phase));
      save_snapshot(dir / ("v-" + tag + ".dat"), make_snapshot(last.v, eps, last.t));
      files = {dir / ("phase-" + tag + ".dat"), dir / ("v-" + tag + ".dat")};
      if (c.equation == Equation::linear) {
        if (!(eps > 0.0)) throw ConfigError("run: the linear pathway needs epsilon > 0");
        const auto amp = eikonal::linear_amplitude_run(init.a, traj, eps);
        save_snapshot(dir / ("a-" + tag + ".dat"), make_snapshot(amp.a.back(), eps, last.t));
        save_snapshot(dir / ("u-" + tag + ".dat"),
                      make_snapshot(obs::reconstruct(amp.a.back(), last.phi, eps), eps, last.t));
        files.push_back(dir / ("a-" + tag + ".dat"));
        files.push_back(dir / ("u-" + tag + ".dat"));
      }
      std::cout << to_string(c.equation) << " J=" << points << " steps=" << traj.frames.size() - 1 << "\n";
      break;
    }
  }
  for (const auto& f : files) std::cout << "  " << f.string() << "\n";
  return kExitOk;
}

int cmd_reference(const GlobalOptions& g) {
  const ExperimentConfig c = load(g);
  if (c.sweep.epsilons.empty()) throw ConfigError("reference: sweep.epsilon is empty");
  const ReferenceCache cache(c.output.cache);
  for (double eps : c.sweep.epsilons) {
    bool hit = false;
    reference_solution(c, eps, &cache, &hit);
    std::cout << "eps=" << format_number(eps) << " J_ref=" << c.reference.points << " "
              << (hit ? "cached" : "computed") << " -> " << cache.entry(reference_key(c, eps)).string()
              << "\n";
  }
  return kExitOk;
}

int cmd_sweep(const GlobalOptions& g, bool no_cache) {
  const ExperimentConfig c = load(g);
  SweepOptions options;
  options.threads = g.threads;
  options.use_cache = !no_cache;
  options.log = &std::cerr;
  const auto records = run_sweep(c, options);
  for (const auto& path : write_tables(c, records, c.output.dir)) std::cout << path.string() << "\n";
  bool blew_up = false;
  for (const auto& r : records) blew_up = blew_up || r.status.rfind("blowup", 0) == 0;
  return blew_up ? kExitBlowUp : kExitOk;
}

// Domain length from the table's metadata sidecar, if present.
std::optional<double> sidecar_length(const fs::path& csv) {
  fs::path meta = csv;
  meta.replace_extension(".meta.txt");
  std::ifstream in(meta);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ss(line);
    std::string key;
    double lo = 0.0, hi = 0.0;
    if (ss >> key && key == "bounds" && ss >> lo >> hi) return hi - lo;
  }
  return std::nullopt;
}

int cmd_plotdata(const GlobalOptions& g, const std::vector<std::string>& tables, const std::string& mode_text,
                 std::optional<double> length_opt) {
  const PlotMode mode = parse_plot_mode(mode_text);
  const fs::path dir = g.out.empty() ? fs::path("plotdata") : fs::path(g.out);
  for (const auto& table : tables) {
    const auto records = load_table(table);
    if (records.empty()) throw ConfigError("plotdata: " + table + " has no rows");
    double length = 2.0;
    if (length_opt) {
      length = *length_opt;
    } else if (auto l = sidecar_length(table)) {
      length = *l;
    } else if (!g.config.empty()) {
      const auto c = load_config(g.config);
      length = c.upper - c.lower;
    }
    const auto series = make_series(records, mode, length);
    write_plotdata(series, mode, dir);
    for (const auto& s : series) {
      std::cout << to_string(mode) << " " << s.quantity << " t=" << format_number(s.t)
                << (mode == PlotMode::vs_j ? " eps=" : " J=") << format_number(s.key)
                << " points=" << s.x.size()
                << " slope=" << (s.slope ? fmt("%.3f", *s.slope) : std::string("-")) << "\n";
    }
  }
  return kExitOk;
}

int cmd_reconstruct(const GlobalOptions& g, std::optional<double> eps_opt, bool compare,
                    const std::string& quadrature_text) {
  const ExperimentConfig c = load(g);
  const double eps = pick_epsilon(c, eps_opt);
  obs::PhaseQuadrature quadrature = obs::PhaseQuadrature::left_rectangle;
  if (quadrature_text == "trapezoid") {
    quadrature = obs::PhaseQuadrature::trapezoid;
  } else if (quadrature_text != "left") {
    throw ConfigError("reconstruct: quadrature must be left or trapezoid");
  }
  const fs::path dir = c.output.dir;
  fs::create_directories(dir);
  const fs::path cache = c.output.cache;
  std::cout << "J,t,err_re_u\n";
  for (std::size_t points : c.sweep.points) {
    const auto points_out = reconstruct_run(c, eps, points, compare, quadrature, &cache);
    for (const auto& p : points_out) {
      const std::string name = "u-eps" + format_number(eps) + "-J" + std::to_string(points) + "-t" +
                               format_number(p.t) + ".dat";
      save_snapshot(dir / name, make_snapshot(p.u, eps, p.t));
      std::cout << points << "," << format_number(p.t) << ","
                << (p.err_re_u ? format_number(*p.err_re_u) : std::string()) << "\n";
    }
  }
  return kExitOk;
}

int cmd_eikonal_verify(const GlobalOptions& g) {
  ExperimentConfig c;
  if (g.config.empty()) {
    c.equation = Equation::eikonal;
    c.lower = 0.0;
    c.upper = 1.0;
    c.initial.tag = "cosine-phase";
    c.sweep.points = {64, 128, 256};
    c.sweep.times = {0.1};
    c.reference.points = 512;
  } else {
    c = load_config(g.config);
  }
  const auto rows = eikonal_verify(c);
  std::cout << "J,dx,dt,steps,rel_max_error,order\n";
  std::vector<double> h, err;
  for (const auto& r : rows) {
    std::cout << r.points << "," << format_number(r.dx) << "," << format_number(r.dt) << "," << r.steps
              << "," << fmt("%.6e", r.error) << "," << (r.order ? fmt("%.3f", *r.order) : std::string())
              << "\n";
    h.push_back(r.dx);
    err.push_back(r.error);
  }
  if (auto p = fitted_order(h, err)) std::cout << "fitted order " << fmt("%.3f", *p) << "\n";
  return kExitOk;
}

int cmd_selftest(const GlobalOptions& g) {
  bool all = true;
  for (const auto& r : selftest(g.seed)) {
    std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail << "\n";
    all = all && r.passed;
  }
  return all ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Asymptotic-preserving solver suite for the semiclassical NLS"};
  app.fallthrough();
  app.require_subcommand(1);
  GlobalOptions g;
  app.add_option("--config", g.config, "Experiment configuration (INI)");
  app.add_option("--out", g.out, "Output directory");
  app.add_option("--cache", g.cache, "Reference cache directory");
  app.add_option("--threads", g.threads, "Worker threads for sweeps")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Seed for randomized self-test checks");

  std::optional<double> eps;
  std::optional<std::size_t> points;
  bool no_cache = false;
  bool compare = false;
  std::string quadrature = "left";
  std::vector<std::string> tables;
  std::string mode = "vs-J";
  std::optional<double> length;

  auto* run = app.add_subcommand("run", "Single solve, snapshots per output time");
  run->add_option("--epsilon", eps, "Scaled Planck constant (default: first of sweep.epsilon)");
  run->add_option("--J", points, "Points per axis (default: last of sweep.J)");
  auto* reference = app.add_subcommand("reference", "Build and cache splitting references");
  auto* sweep = app.add_subcommand("sweep", "Error tables over (epsilon, J)");
  sweep->add_flag("--no-cache", no_cache, "Recompute references without touching the cache");
  auto* plot = app.add_subcommand("plotdata", "Log-log series and fitted slopes from error tables");
  plot->add_option("tables", tables, "Error table CSV files")->required();
  plot->add_option("--mode", mode, "vs-J or vs-eps")->check(CLI::IsMember({"vs-J", "vs-eps"}));
  plot->add_option("--length", length, "Domain length for dx (default: from table metadata)");
  auto* recon = app.add_subcommand("reconstruct", "Phase accumulation and wave function output");
  recon->add_option("--epsilon", eps, "Scaled Planck constant (default: first of sweep.epsilon)");
  recon->add_flag("--compare", compare, "Report the Re u error against the splitting reference");
  recon->add_option("--quadrature", quadrature, "left or trapezoid")
      ->check(CLI::IsMember({"left", "trapezoid"}));
  auto* eik = app.add_subcommand("eikonal-verify", "Viscous eikonal solver against Cole-Hopf");
  auto* self = app.add_subcommand("selftest", "Invariant suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*run) return cmd_run(g, eps, points);
    if (*reference) return cmd_reference(g);
    if (*sweep) return cmd_sweep(g, no_cache);
    if (*plot) return cmd_plotdata(g, tables, mode, length);
    if (*recon) return cmd_reconstruct(g, eps, compare, quadrature);
    if (*eik) return cmd_eikonal_verify(g);
    if (*self) return cmd_selftest(g);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const BlowUpError& e) {
    std::cerr << "blow-up at t=" << e.time() << ": " << e.what() << "\n";
    return kExitBlowUp;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBlowUp;
  }
  return kExitOk;
}
