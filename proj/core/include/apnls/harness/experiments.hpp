#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "apnls/eikonal.hpp"
#include "apnls/harness/config.hpp"
#include "apnls/hydro_state.hpp"
#include "apnls/nls_reference.hpp"
#include "apnls/time_loop.hpp"

namespace apnls::harness {

/// Run options taken from the sweep section.
hydro::RunOptions run_options(const ExperimentConfig& config);

/// Single AP solve at (eps, J) with snapshots at the configured times.
hydro::RunResult run_ap(const ExperimentConfig& config, double epsilon, std::size_t points,
                        const hydro::RunOptions& options);

/// Single splitting solve at (eps, J) with dt = splitting_dt_factor * dx.
nls::SolveResult run_splitting(const ExperimentConfig& config, double epsilon, std::size_t points);

/// Writes the snapshots of a solve into dir and returns the files. AP runs
/// emit a, v, phi, rho, j and e per output time; splitting runs emit u, rho,
/// j and e.
std::vector<std::filesystem::path> write_run(const hydro::RunResult& run,
                                             const std::filesystem::path& dir);
std::vector<std::filesystem::path> write_run(const nls::SolveResult& run,
                                             const std::filesystem::path& dir);

struct ReconstructionPoint {
  double t = 0.0;
  ComplexField u;                  // a exp(i phi / eps) from the AP run
  std::optional<double> err_re_u;  // against the splitting reference when requested
};

/// AP run with phase tracking at (eps, J), reconstructed at every output
/// time; when `compare` is set the reference of the sweep section is built
/// (or read from `cache`) and the relative l1 error of Re u is reported.
std::vector<ReconstructionPoint> reconstruct_run(const ExperimentConfig& config, double epsilon,
                                                 std::size_t points, bool compare,
                                                 obs::PhaseQuadrature quadrature,
                                                 const std::filesystem::path* cache = nullptr);

struct EikonalRow {
  std::size_t points = 0;
  double dx = 0.0;
  double dt = 0.0;
  std::size_t steps = 0;
  double error = 0.0;  // max |phi - phi_exact| / max |phi_exact|
  std::optional<double> order;  // against the previous row
};

/// Viscous eikonal runs against the Cole-Hopf solution for every J of the
/// sweep section at t = times.back(). Needs V = 0 and viscosity 1. Steps are
/// fixed at dt = cfl * dx / max|v0| so that dt scales with dx.
std::vector<EikonalRow> eikonal_verify(const ExperimentConfig& config);

/// Least-squares order of err against h on log-log axes.
std::optional<double> fitted_order(const std::vector<double>& h, const std::vector<double>& err);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Fast invariant suite: propagator exactness, conservation, fixed points,
/// symmetry and randomized property checks seeded with `seed`.
std::vector<CheckResult> selftest(std::uint64_t seed);

}  // namespace apnls::harness
