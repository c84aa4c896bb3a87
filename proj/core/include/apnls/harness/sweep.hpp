#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "apnls/harness/cache.hpp"
#include "apnls/harness/config.hpp"
#include "apnls/nls_reference.hpp"

namespace apnls::harness {

/// One row of an error table. Failed cells keep NaN errors and a non-"ok"
/// status.
struct ErrorRecord {
  double epsilon = 0.0;
  std::size_t points = 0;
  double t = 0.0;
  double err_rho = 0.0;
  double err_j = 0.0;
  double walltime = 0.0;
  std::string status = "ok";
};

struct SweepOptions {
  unsigned threads = 1;
  /// Reuse and populate config.output.cache.
  bool use_cache = true;
  /// Progress lines; null for silence.
  std::ostream* log = nullptr;
};

/// Throws ConfigError when the reference grid violates dx <= eps/2 and the
/// rule is enforced, or when eps <= 0.
void check_mesh_rule(const ExperimentConfig& config, double epsilon);

ReferenceKey reference_key(const ExperimentConfig& config, double epsilon);

/// Splitting solution at J_ref with dt = dt_factor * eps at every configured
/// output time, read from the cache when present.
std::vector<nls::WaveState> reference_solution(const ExperimentConfig& config, double epsilon,
                                               const ReferenceCache* cache = nullptr,
                                               bool* from_cache = nullptr);

/// Every (eps, J) cell against its reference, rows ordered by eps, J, t in
/// config order. The table does not depend on the thread count.
std::vector<ErrorRecord> run_sweep(const ExperimentConfig& config, const SweepOptions& options = {});

inline constexpr const char* kTableHeader = "epsilon,J,t,err_rho,err_j,walltime_s,status";

/// CSV rows of one output time, header included.
std::string format_table(const std::vector<ErrorRecord>& records, double t);
std::vector<ErrorRecord> parse_table(std::istream& in);
std::vector<ErrorRecord> load_table(const std::filesystem::path& path);

/// Sidecar text: solver, reference rule, eps set, J list, norm convention.
std::string table_metadata(const ExperimentConfig& config, double t);

/// errors-t<t>.csv and errors-t<t>.meta.txt per output time. Returns the CSV
/// paths.
std::vector<std::filesystem::path> write_tables(const ExperimentConfig& config,
                                                const std::vector<ErrorRecord>& records,
                                                const std::filesystem::path& dir);

}  // namespace apnls::harness
