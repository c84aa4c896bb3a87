#include "apnls/harness/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "apnls/harness/cache.hpp"
#include "apnls/harness/initial_data.hpp"
#include "apnls/harness/sweep.hpp"
#include "apnls/observables.hpp"
#include "apnls/snapshot.hpp"
#include "apnls/spectral.hpp"

namespace apnls::harness {
namespace fs = std::filesystem;

namespace {

std::string time_tag(double t) { return "t" + format_number(t); }

fs::path save(const fs::path& dir, const std::string& name, const Snapshot& s) {
  const fs::path path = dir / name;
  save_snapshot(path, s);
  return path;
}

void write_observables(std::vector<fs::path>& files, const fs::path& dir, const std::string& tag,
                       const obs::ObservableSet& o, double eps, double t) {
  files.push_back(save(dir, "rho-" + tag + ".dat", make_snapshot(o.rho, eps, t, SnapshotKind::rho)));
  files.push_back(
      save(dir, "current-" + tag + ".dat", make_snapshot(o.current, eps, t, SnapshotKind::current)));
  files.push_back(
      save(dir, "energy-" + tag + ".dat", make_snapshot(o.energy, eps, t, SnapshotKind::energy)));
}

double max_abs(const RealField& f) {
  double m = 0.0;
  for (double x : f.values()) m = std::max(m, std::abs(x));
  return m;
}

double relative_gap(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

CheckResult check(std::string name, bool passed, std::string detail) {
  return {std::move(name), passed, std::move(detail)};
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

// Sum of a few random Fourier modes: smooth and periodic on the grid.
struct RandomModes {
  std::vector<int> modes;
  std::vector<double> amps;
  std::vector<double> phases;

  RandomModes(std::mt19937_64& rng, int count) {
    std::uniform_int_distribution<int> mode(1, 6);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (int i = 0; i < count; ++i) {
      modes.push_back(mode(rng));
      amps.push_back(unit(rng));
      phases.push_back(std::numbers::pi * unit(rng));
    }
  }
  double value(double z) const {
    double s = 0.0;
    for (std::size_t i = 0; i < modes.size(); ++i) s += amps[i] * std::cos(modes[i] * z + phases[i]);
    return s;
  }
  double derivative(double z) const {
    double s = 0.0;
    for (std::size_t i = 0; i < modes.size(); ++i) {
      s -= amps[i] * modes[i] * std::sin(modes[i] * z + phases[i]);
    }
    return s;
  }
};

}  // namespace

hydro::RunOptions run_options(const ExperimentConfig& c) {
  hydro::RunOptions o;
  o.cfl = c.sweep.cfl;
  o.dt_max = c.sweep.dt_max;
  o.output_times = c.sweep.times;
  return o;
}

hydro::RunResult run_ap(const ExperimentConfig& c, double eps, std::size_t points,
                        const hydro::RunOptions& options) {
  if (c.sweep.times.empty()) throw ConfigError("run: no output times");
  const GridPtr grid = make_experiment_grid(c, points);
  return hydro::run(build_hydro_state(c.initial, grid, eps), c.sweep.times.back(),
                    make_nonlinearity(c), options);
}

nls::SolveResult run_splitting(const ExperimentConfig& c, double eps, std::size_t points) {
  if (c.sweep.times.empty()) throw ConfigError("run: no output times");
  const GridPtr grid = make_experiment_grid(c, points);
  const double dt = c.sweep.splitting_dt_factor * grid->min_spacing();
  return nls::strang_solve(build_wave_state(c.initial, grid, eps), c.sweep.times.back(), dt,
                           make_nonlinearity(c), c.sweep.times);
}

std::vector<fs::path> write_run(const hydro::RunResult& run, const fs::path& dir) {
  fs::create_directories(dir);
  std::vector<fs::path> files;
  for (const auto& s : run.snapshots) {
    const std::string tag = time_tag(s.t);
    files.push_back(save(dir, "a-" + tag + ".dat", make_snapshot(s.a, s.epsilon, s.t)));
    files.push_back(save(dir, "v-" + tag + ".dat", make_snapshot(s.v, s.epsilon, s.t)));
    files.push_back(
        save(dir, "phase-" + tag + ".dat", make_snapshot(s.phi, s.epsilon, s.t, SnapshotKind::phase)));
    write_observables(files, dir, tag, obs::observables(s.a, s.v, s.epsilon), s.epsilon, s.t);
  }
  return files;
}

std::vector<fs::path> write_run(const nls::SolveResult& run, const fs::path& dir) {
  fs::create_directories(dir);
  std::vector<fs::path> files;
  for (const auto& s : run.snapshots) {
    const std::string tag = time_tag(s.t);
    files.push_back(save(dir, "u-" + tag + ".dat", make_snapshot(s.u, s.epsilon, s.t)));
    write_observables(files, dir, tag, obs::wave_observables(s.u, s.epsilon), s.epsilon, s.t);
  }
  return files;
}

std::vector<ReconstructionPoint> reconstruct_run(const ExperimentConfig& c, double eps,
                                                 std::size_t points, bool compare,
                                                 obs::PhaseQuadrature quadrature,
                                                 const fs::path* cache_dir) {
  if (!(eps > 0.0)) throw ConfigError("reconstruct: epsilon must be > 0");
  hydro::RunOptions options = run_options(c);
  options.track_phase = true;
  options.phase_quadrature = quadrature;
  const auto run = run_ap(c, eps, points, options);

  std::vector<nls::WaveState> reference;
  if (compare) {
    std::optional<ReferenceCache> cache;
    if (cache_dir) cache.emplace(*cache_dir);
    reference = reference_solution(c, eps, cache ? &*cache : nullptr);
  }
  std::vector<ReconstructionPoint> out;
  for (std::size_t k = 0; k < run.snapshots.size(); ++k) {
    const auto& s = run.snapshots[k];
    ReconstructionPoint p{s.t, obs::reconstruct(s.a, s.phi, eps), std::nullopt};
    if (compare) p.err_re_u = obs::rel_l1_error(real_part(p.u), real_part(reference[k].u));
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<EikonalRow> eikonal_verify(const ExperimentConfig& c) {
  if (c.potential.tag != "zero") throw ConfigError("eikonal-verify: the Cole-Hopf check needs V = 0");
  if (c.potential.viscosity != 1.0) {
    throw ConfigError("eikonal-verify: the Cole-Hopf check needs viscosity 1");
  }
  if (c.sweep.points.empty() || c.sweep.times.empty()) {
    throw ConfigError("eikonal-verify: J list and times must be non-empty");
  }
  const double t_final = c.sweep.times.back();
  std::vector<EikonalRow> rows;
  for (std::size_t points : c.sweep.points) {
    const GridPtr grid = make_experiment_grid(c, points);
    const InitialFields init = build_initial(c.initial, grid);
    double speed = 0.0;
    for (int d = 0; d < init.v.dim(); ++d) speed = std::max(speed, max_abs(init.v[d]));
    eikonal::EikonalOptions options;
    options.fixed_dt = c.sweep.cfl * grid->min_spacing() / std::max(speed, 1.0);
    const auto traj = eikonal::eikonal_run(init.phi, PotentialSpec::zero(), 1.0, t_final, options);
    const RealField exact = eikonal::cole_hopf_oracle(init.phi, t_final);
    double diff = 0.0;
    for (std::size_t i = 0; i < exact.size(); ++i) {
      diff = std::max(diff, std::abs(traj.final().phi[i] - exact[i]));
    }
    EikonalRow row{points, grid->min_spacing(), *options.fixed_dt, traj.frames.size() - 1,
                   diff / std::max(max_abs(exact), 1e-300), std::nullopt};
    if (!rows.empty()) {
      const auto& prev = rows.back();
      row.order = std::log(prev.error / row.error) / std::log(prev.dx / row.dx);
    }
    rows.push_back(row);
  }
  return rows;
}

std::optional<double> fitted_order(const std::vector<double>& h, const std::vector<double>& err) {
  if (h.size() != err.size() || h.size() < 2) return std::nullopt;
  const double n = static_cast<double>(h.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (!(h[i] > 0.0) || !(err[i] > 0.0)) return std::nullopt;
    const double x = std::log(h[i]);
    const double y = std::log(err[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::vector<CheckResult> selftest(std::uint64_t seed) {
  std::vector<CheckResult> results;
  std::mt19937_64 rng(seed);
  const auto cubic = Nonlinearity::cubic();
  const GridPtr line = make_grid_1d(0.0, 1.0, 128);
  const double k0 = 2.0 * std::numbers::pi;

  {
    const RandomModes re(rng, 4), im(rng, 4);
    const ComplexField u = sample_complex(line, [&](auto x) {
      return Complex(re.value(k0 * x[0]), im.value(k0 * x[0]));
    });
    const ComplexField w = spectral::schrodinger_propagate(u, 0.3, 0.7);
    const double gap = relative_gap(obs::mass(w), obs::mass(u));
    results.push_back(check("schrodinger l2 preservation", gap < 1e-13, "relative gap " + sci(gap)));
  }
  {
    const RandomModes re(rng, 4);
    const RealField f = sample_real(line, [&](auto x) { return 1.0 + re.value(k0 * x[0]); });
    const RealField g = spectral::heat_propagate(f, 0.5, 0.2);
    double mf = 0.0, mg = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      mf += f[i];
      mg += g[i];
    }
    const double gap = relative_gap(mg, mf);
    results.push_back(check("heat mean preservation", gap < 1e-13, "relative gap " + sci(gap)));
  }
  {
    const RandomModes re(rng, 5);
    const RealField f = sample_real(line, [&](auto x) { return re.value(k0 * x[0]); });
    const RealField df = spectral::gradient(f, 0);
    double err = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      err = std::max(err, std::abs(df[i] - k0 * re.derivative(k0 * line->node(0, i))));
    }
    results.push_back(check("spectral derivative of random modes", err < 1e-10, "max error " + sci(err)));
  }
  {
    HydroState s = make_hydro_state(ComplexField(line, Complex(0.6, -0.3)),
                                    RealVectorField({RealField(line, 0.4)}), RealField(line), 0.1);
    const HydroState next = hydro::strang_step(s, 1e-3, cubic);
    double gap = 0.0;
    for (std::size_t i = 0; i < line->size(); ++i) {
      gap = std::max({gap, std::abs(next.a[i] - s.a[i]) / std::abs(s.a[i]),
                      std::abs(next.v[0][i] - s.v[0][i]) / std::abs(s.v[0][i])});
    }
    results.push_back(check("constant state fixed point", gap < 1e-13, "relative change " + sci(gap)));
  }
  {
    const Complex c(0.8, 0.2);
    const double eps = 0.05, t = 0.1;
    const auto sol = nls::strang_solve({ComplexField(line, c), 0.0, eps}, t, 1e-3, cubic);
    const Complex exact = c * std::polar(1.0, -std::norm(c) * t / eps);
    double err = 0.0;
    for (const Complex& z : sol.snapshots.back().u.values()) err = std::max(err, std::abs(z - exact));
    results.push_back(check("plane wave exactness", err < 1e-10, "max error " + sci(err)));
  }
  {
    InitialConfig ic;
    const GridPtr g = make_grid_1d(-0.5, 1.5, 256);
    nls::WaveState s = build_wave_state(ic, g, 0.5);
    const double m0 = obs::mass(s.u);
    for (int n = 0; n < 200; ++n) s = nls::strang_step(std::move(s), 1e-3, cubic);
    const double gap = relative_gap(obs::mass(s.u), m0);
    results.push_back(check("splitting mass conservation", gap < 1e-12, "relative drift " + sci(gap)));
  }
  {
    InitialConfig ic;
    const GridPtr g = make_grid_1d(-0.5, 1.5, 128);
    HydroState full = build_hydro_state(ic, g, 0.0);
    HydroState transport = full;
    hydro::split_step(full, 2e-3, 0.0, cubic);
    hydro::transport_substep(transport, 2e-3, cubic);
    const bool same = full.a == transport.a && full.v == transport.v;
    results.push_back(check("eps = 0 step equals bare transport", same, same ? "bitwise" : "differs"));
  }
  {
    InitialConfig ic;
    ic.tag = "gauss-logcosh-2d";
    const GridPtr g = make_grid_2d({-0.5, 1.5}, {-0.5, 1.5}, 64, 64);
    HydroState s = build_hydro_state(ic, g, 0.01);
    for (int n = 0; n < 5; ++n) s = hydro::strang_step(std::move(s), hydro::cfl_dt(s), cubic);
    const RealField rho = obs::observables(s.a, s.v, s.epsilon).rho;
    double gap = 0.0;
    for (std::size_t i = 0; i < 64; ++i) {
      for (std::size_t j = 0; j < 64; ++j) gap = std::max(gap, std::abs(rho[i * 64 + j] - rho[j * 64 + i]));
    }
    gap /= max_abs(rho);
    results.push_back(check("2D transpose symmetry", gap < 1e-10, "relative gap " + sci(gap)));
  }
  {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    ComplexField a(line);
    RealVectorField v(line);
    for (std::size_t i = 0; i < line->size(); ++i) {
      a[i] = Complex(unit(rng), unit(rng));
      v[0][i] = unit(rng);
    }
    const auto o = obs::observables(a, v, 0.3);
    const bool ok = std::all_of(o.rho.values().begin(), o.rho.values().end(), [](double x) { return x >= 0.0; }) &&
                    std::all_of(o.energy.values().begin(), o.energy.values().end(),
                                [](double x) { return x >= 0.0; });
    results.push_back(check("observables nonnegative on random data", ok, ok ? "rho, e >= 0" : "negative value"));
  }
  return results;
}

}  // namespace apnls::harness
