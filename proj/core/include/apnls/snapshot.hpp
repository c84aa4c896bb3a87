#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "apnls/field.hpp"

namespace apnls {

enum class SnapshotKind { complex, realvec, rho, current, energy, phase };

std::string to_string(SnapshotKind kind);
SnapshotKind parse_snapshot_kind(const std::string& text);

/// Nodal data written to disk: six header lines (dim, J, bounds, epsilon,
/// time, kind) and then one node per line, row-major, 17 significant digits.
struct Snapshot {
  GridPtr grid;
  double epsilon = 0.0;
  double time = 0.0;
  SnapshotKind kind = SnapshotKind::complex;
  std::size_t columns = 0;
  std::vector<double> values;  // node-major, `columns` entries per node
};

std::size_t columns_for(SnapshotKind kind, int dim);

Snapshot make_snapshot(const ComplexField& f, double epsilon, double time);
Snapshot make_snapshot(const RealVectorField& f, double epsilon, double time,
                       SnapshotKind kind = SnapshotKind::realvec);
Snapshot make_snapshot(const RealField& f, double epsilon, double time, SnapshotKind kind);

ComplexField complex_field(const Snapshot& s);
RealVectorField vector_field(const Snapshot& s);
RealField real_field(const Snapshot& s);

void write_snapshot(std::ostream& out, const Snapshot& s);
Snapshot read_snapshot(std::istream& in);

void save_snapshot(const std::filesystem::path& path, const Snapshot& s);
Snapshot load_snapshot(const std::filesystem::path& path);

/// Formats with 17 significant digits (exact round trip for doubles).
std::string format_double(double x);

}  // namespace apnls
