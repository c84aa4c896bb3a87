#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "apnls/grid.hpp"
#include "apnls/nonlinearity.hpp"

namespace apnls::harness {

/// Malformed or inconsistent experiment configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Equation { ap_nls, splitting_nls, eikonal, linear };

std::string to_string(Equation e);
Equation parse_equation(const std::string& text);

struct NonlinearityConfig {
  std::string tag = "cubic";  // cubic | cubic-quintic | saturated
  double lambda = 0.0;
  double delta = 1.0;
  double eta = 0.0;

  friend bool operator==(const NonlinearityConfig&, const NonlinearityConfig&) = default;
};

struct PotentialConfig {
  std::string tag = "zero";  // zero | single-cosine | table
  double amplitude = 0.0;
  int mode = 1;
  std::string path;  // table: real snapshot of nodal samples
  double viscosity = 1.0;  // nu of the eikonal pathway

  friend bool operator==(const PotentialConfig&, const PotentialConfig&) = default;
};

struct InitialConfig {
  // gauss-logcosh-1d | gauss-logcosh-2d | maxwell-2temp | plane-wave |
  // cosine-phase | custom-snapshot
  std::string tag = "gauss-logcosh-1d";
  double amplitude = 1.0;
  std::string path;        // custom-snapshot: complex amplitude snapshot
  std::string phase_path;  // custom-snapshot: optional phase snapshot

  friend bool operator==(const InitialConfig&, const InitialConfig&) = default;
};

struct SweepConfig {
  std::vector<double> epsilons;
  std::vector<std::size_t> points;  // J per axis, ascending powers of two
  std::vector<double> times;        // ascending output times
  double cfl = 0.8;
  double dt_max = 1e-2;
  /// Coarse splitting-solver runs use dt = splitting_dt_factor * dx.
  double splitting_dt_factor = 0.4;

  friend bool operator==(const SweepConfig&, const SweepConfig&) = default;
};

struct ReferenceConfig {
  std::size_t points = 4096;
  /// Reference dt = dt_factor * eps.
  double dt_factor = 0.01;
  /// Require reference dx <= eps / 2.
  bool enforce_mesh_rule = true;

  friend bool operator==(const ReferenceConfig&, const ReferenceConfig&) = default;
};

struct OutputConfig {
  std::string dir = "out";
  std::string cache = "cache";
  bool record_walltime = true;

  friend bool operator==(const OutputConfig&, const OutputConfig&) = default;
};

struct ExperimentConfig {
  Equation equation = Equation::ap_nls;
  int dim = 1;
  double lower = -0.5;  // every axis spans [lower, upper]
  double upper = 1.5;
  NonlinearityConfig nonlinearity;
  PotentialConfig potential;
  InitialConfig initial;
  SweepConfig sweep;
  ReferenceConfig reference;
  OutputConfig output;

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

/// Desk-scale 1D study: J = 2^5..2^10, eps in {1e-1, 1e-2, 1e-3}, J_ref = 2^12.
ExperimentConfig default_config_1d();
/// Desk-scale radial 2D study: J = 2^6..2^9, eps in {1e-1, 1e-2, 5e-3}, J_ref = 2^10.
ExperimentConfig default_config_2d();

/// INI text: [section] headers, key = value, ';' comments, lists comma-separated.
/// Unknown sections or keys are rejected. Throws ConfigError.
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig parse_config_string(const std::string& text);
ExperimentConfig load_config(const std::filesystem::path& path);

std::string serialize_config(const ExperimentConfig& config);

/// Shortest decimal text that parses back to the same double.
std::string format_number(double x);

/// Checks ordering, ranges and reference nesting. Throws ConfigError.
void validate_config(const ExperimentConfig& config);

/// Grid with J points per axis on the configured box.
GridPtr make_experiment_grid(const ExperimentConfig& config, std::size_t points);

/// Builds the coupling term; loads table potentials from disk.
Nonlinearity make_nonlinearity(const ExperimentConfig& config);
PotentialSpec make_potential(const ExperimentConfig& config);

}  // namespace apnls::harness
