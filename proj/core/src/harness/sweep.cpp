#include "apnls/harness/sweep.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>
#include <type_traits>

#include "apnls/harness/initial_data.hpp"
#include "apnls/observables.hpp"
#include "apnls/time_loop.hpp"

namespace apnls::harness {
namespace fs = std::filesystem;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Runs fn(0..count-1) on at most `threads` workers.
template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  const std::size_t workers = std::min<std::size_t>(std::max(1u, threads), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  }
}

std::string nl_description(const ExperimentConfig& c) {
  const auto& n = c.nonlinearity;
  return n.tag + " lambda=" + format_double(n.lambda) + " delta=" + format_double(n.delta) +
         " eta=" + format_double(n.eta);
}

std::string initial_description(const ExperimentConfig& c) {
  const auto& i = c.initial;
  return i.tag + " amplitude=" + format_double(i.amplitude) + " path=" + i.path +
         " phase_path=" + i.phase_path;
}

std::string sanitize(std::string text) {
  for (char& ch : text) {
    if (ch == ',' || ch == '\n' || ch == '\r') ch = ' ';
  }
  return text;
}

std::vector<obs::ObservableSet> reference_observables(const std::vector<nls::WaveState>& ref) {
  std::vector<obs::ObservableSet> out;
  for (const auto& s : ref) out.push_back(obs::wave_observables(s.u, s.epsilon));
  return out;
}

std::vector<obs::ObservableSet> run_cell(const ExperimentConfig& c, double eps, std::size_t points,
                                         const Nonlinearity& nl) {
  const GridPtr grid = make_experiment_grid(c, points);
  const double t_final = c.sweep.times.back();
  std::vector<obs::ObservableSet> out;
  if (c.equation == Equation::ap_nls) {
    hydro::RunOptions opts;
    opts.cfl = c.sweep.cfl;
    opts.dt_max = c.sweep.dt_max;
    opts.output_times = c.sweep.times;
    opts.track_phase = false;
    const auto result = hydro::run(build_hydro_state(c.initial, grid, eps), t_final, nl, opts);
    for (const auto& s : result.snapshots) out.push_back(obs::observables(s.a, s.v, eps));
  } else {
    const double dt = c.sweep.splitting_dt_factor * grid->min_spacing();
    const auto result =
        nls::strang_solve(build_wave_state(c.initial, grid, eps), t_final, dt, nl, c.sweep.times);
    for (const auto& s : result.snapshots) {
      if (!s.u.all_finite()) throw BlowUpError("splitting solver produced non-finite values", s.t);
      out.push_back(obs::wave_observables(s.u, eps));
    }
  }
  return out;
}

}  // namespace

void check_mesh_rule(const ExperimentConfig& c, double eps) {
  if (!(eps > 0.0)) throw ConfigError("sweep: reference solutions need epsilon > 0");
  if (!c.reference.enforce_mesh_rule) return;
  const double dx = (c.upper - c.lower) / static_cast<double>(c.reference.points);
  if (dx > 0.5 * eps * (1.0 + 1e-12)) {
    throw ConfigError("sweep: reference dx = " + format_number(dx) + " exceeds eps/2 for eps = " +
                      format_number(eps) + " (raise reference.J or disable enforce_mesh_rule)");
  }
}

ReferenceKey reference_key(const ExperimentConfig& c, double eps) {
  ReferenceKey key;
  key.equation = "splitting-nls";
  key.nonlinearity = nl_description(c);
  key.initial = initial_description(c);
  key.dim = c.dim;
  key.points = c.reference.points;
  key.lower = c.lower;
  key.upper = c.upper;
  key.epsilon = eps;
  key.dt = c.reference.dt_factor * eps;
  key.times = c.sweep.times;
  return key;
}

std::vector<nls::WaveState> reference_solution(const ExperimentConfig& c, double eps,
                                               const ReferenceCache* cache, bool* from_cache) {
  check_mesh_rule(c, eps);
  if (c.sweep.times.empty()) throw ConfigError("sweep: no output times");
  const ReferenceKey key = reference_key(c, eps);
  if (from_cache) *from_cache = false;
  if (cache) {
    if (auto hit = cache->load(key)) {
      std::vector<nls::WaveState> states;
      for (const auto& snap : *hit) states.push_back({complex_field(snap), snap.time, snap.epsilon});
      if (from_cache) *from_cache = true;
      return states;
    }
  }
  ExperimentConfig ref_config = c;
  ref_config.equation = Equation::splitting_nls;
  const GridPtr grid = make_experiment_grid(c, c.reference.points);
  const auto result = nls::strang_solve(build_wave_state(c.initial, grid, eps), c.sweep.times.back(),
                                        key.dt, make_nonlinearity(ref_config), c.sweep.times);
  for (const auto& s : result.snapshots) {
    if (!s.u.all_finite()) throw BlowUpError("reference solution produced non-finite values", s.t);
  }
  if (cache) {
    std::vector<Snapshot> snaps;
    for (const auto& s : result.snapshots) snaps.push_back(make_snapshot(s.u, eps, s.t));
    cache->store(key, snaps);
  }
  return result.snapshots;
}

std::vector<ErrorRecord> run_sweep(const ExperimentConfig& c, const SweepOptions& options) {
  validate_config(c);
  if (c.equation != Equation::ap_nls && c.equation != Equation::splitting_nls) {
    throw ConfigError("sweep: equation must be ap-nls or splitting-nls");
  }
  if (c.sweep.epsilons.empty() || c.sweep.points.empty() || c.sweep.times.empty()) {
    throw ConfigError("sweep: epsilon, J and times must be non-empty");
  }
  for (double eps : c.sweep.epsilons) check_mesh_rule(c, eps);
  const Nonlinearity nl = make_nonlinearity(c);
  std::optional<ReferenceCache> cache;
  if (options.use_cache) cache.emplace(c.output.cache);

  std::mutex log_mutex;
  auto log = [&](const std::string& line) {
    if (!options.log) return;
    std::lock_guard lock(log_mutex);
    *options.log << line << std::endl;
  };

  const auto& eps_list = c.sweep.epsilons;
  const auto& j_list = c.sweep.points;
  const auto& times = c.sweep.times;

  std::vector<std::vector<obs::ObservableSet>> refs(eps_list.size());
  std::vector<std::string> ref_status(eps_list.size(), "ok");
  parallel_for(eps_list.size(), options.threads, [&](std::size_t e) {
    try {
      bool hit = false;
      refs[e] = reference_observables(
          reference_solution(c, eps_list[e], cache ? &*cache : nullptr, &hit));
      log("reference eps=" + format_number(eps_list[e]) + (hit ? " (cached)" : " (computed)"));
    } catch (const std::exception& ex) {
      ref_status[e] = "reference-failed: " + sanitize(ex.what());
      log("reference eps=" + format_number(eps_list[e]) + " failed: " + ex.what());
    }
  });

  const std::size_t cells = eps_list.size() * j_list.size();
  std::vector<std::vector<ErrorRecord>> rows(cells);
  parallel_for(cells, options.threads, [&](std::size_t cell) {
    const std::size_t e = cell / j_list.size();
    const std::size_t jx = cell % j_list.size();
    const double eps = eps_list[e];
    auto fill = [&](const std::string& status, double wall) {
      for (double t : times) rows[cell].push_back({eps, j_list[jx], t, kNaN, kNaN, wall, status});
    };
    if (ref_status[e] != "ok") {
      fill(ref_status[e], 0.0);
      return;
    }
    const auto start = std::chrono::steady_clock::now();
    try {
      const auto cell_obs = run_cell(c, eps, j_list[jx], nl);
      const double wall = c.output.record_walltime
                              ? std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()
                              : 0.0;
      for (std::size_t k = 0; k < times.size(); ++k) {
        rows[cell].push_back({eps, j_list[jx], times[k],
                              obs::rel_l1_error(cell_obs[k].rho, refs[e][k].rho),
                              obs::rel_l1_error(cell_obs[k].current, refs[e][k].current), wall, "ok"});
      }
      log("cell eps=" + format_number(eps) + " J=" + std::to_string(j_list[jx]) + " done");
    } catch (const BlowUpError& ex) {
      fill("blowup: " + sanitize(ex.what()), 0.0);
    } catch (const std::exception& ex) {
      fill("error: " + sanitize(ex.what()), 0.0);
    }
  });

  std::vector<ErrorRecord> out;
  for (auto& r : rows) out.insert(out.end(), r.begin(), r.end());
  return out;
}

std::string format_table(const std::vector<ErrorRecord>& records, double t) {
  std::ostringstream out;
  out << kTableHeader << '\n';
  for (const auto& r : records) {
    if (r.t != t) continue;
    out << format_number(r.epsilon) << ',' << r.points << ',' << format_number(r.t) << ','
        << format_number(r.err_rho) << ',' << format_number(r.err_j) << ','
        << format_number(r.walltime) << ',' << r.status << '\n';
  }
  return out.str();
}

std::vector<ErrorRecord> parse_table(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("table: empty input");
  if (line.rfind("epsilon,J,t,err_rho,err_j,walltime_s", 0) != 0) {
    throw std::runtime_error("table: unexpected header '" + line + "'");
  }
  std::vector<ErrorRecord> records;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cols;
    std::stringstream ss(line);
    std::string col;
    while (std::getline(ss, col, ',')) cols.push_back(col);
    if (cols.size() < 6) throw std::runtime_error("table: short row '" + line + "'");
    ErrorRecord r;
    try {
      r.epsilon = std::stod(cols[0]);
      r.points = std::stoul(cols[1]);
      r.t = std::stod(cols[2]);
      r.err_rho = std::stod(cols[3]);
      r.err_j = std::stod(cols[4]);
      r.walltime = std::stod(cols[5]);
    } catch (const std::exception&) {
      throw std::runtime_error("table: malformed row '" + line + "'");
    }
    r.status = cols.size() > 6 ? cols[6] : "ok";
    records.push_back(r);
  }
  return records;
}

std::vector<ErrorRecord> load_table(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("table: cannot open " + path.string());
  return parse_table(in);
}

std::string table_metadata(const ExperimentConfig& c, double t) {
  std::ostringstream out;
  auto list = [](const auto& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ' ';
      if constexpr (std::is_floating_point_v<std::decay_t<decltype(v[i])>>) {
        s += format_number(v[i]);
      } else {
        s += std::to_string(v[i]);
      }
    }
    return s;
  };
  out << "solver " << to_string(c.equation) << '\n'
      << "t " << format_number(t) << '\n'
      << "dim " << c.dim << '\n'
      << "bounds " << format_number(c.lower) << ' ' << format_number(c.upper) << '\n'
      << "nonlinearity " << nl_description(c) << '\n'
      << "initial " << initial_description(c) << '\n'
      << "epsilon_set " << list(c.sweep.epsilons) << '\n'
      << "J_set " << list(c.sweep.points) << '\n'
      << "reference splitting-nls J_ref=" << c.reference.points
      << " dt=" << format_number(c.reference.dt_factor) << "*epsilon"
      << " mesh_rule=" << (c.reference.enforce_mesh_rule ? "enforced" : "off") << '\n';
  if (c.equation == Equation::ap_nls) {
    out << "time_step cfl=" << format_number(c.sweep.cfl) << " dt_max=" << format_number(c.sweep.dt_max)
        << '\n';
  } else {
    out << "time_step dt=" << format_number(c.sweep.splitting_dt_factor) << "*dx\n";
  }
  out << "norm relative l1, dx-weighted; reference restricted to coarse nodes\n"
      << "current_norm sum over components of |j_d|\n";
  return out.str();
}

std::vector<fs::path> write_tables(const ExperimentConfig& c, const std::vector<ErrorRecord>& records,
                                   const fs::path& dir) {
  fs::create_directories(dir);
  std::vector<fs::path> paths;
  for (double t : c.sweep.times) {
    const std::string stem = "errors-t" + format_number(t);
    const fs::path csv = dir / (stem + ".csv");
    std::ofstream(csv, std::ios::binary) << format_table(records, t);
    std::ofstream(dir / (stem + ".meta.txt"), std::ios::binary) << table_metadata(c, t);
    paths.push_back(csv);
  }
  return paths;
}

}  // namespace apnls::harness
