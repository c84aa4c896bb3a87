#include "apnls/snapshot.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace apnls {
namespace {

std::string expect_line(std::istream& in, const std::string& key) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("snapshot: missing header line '" + key + "'");
  std::istringstream ls(line);
  std::string got;
  ls >> got;
  if (got != key) throw std::runtime_error("snapshot: expected '" + key + "', found '" + got + "'");
  std::string rest;
  std::getline(ls, rest);
  return rest;
}

std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> out;
  const char* p = text.data();
  const char* end = p + text.size();
  while (p < end) {
    while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
    if (p == end) break;
    double x = 0.0;
    auto [next, ec] = std::from_chars(p, end, x);
    if (ec != std::errc()) throw std::runtime_error("snapshot: malformed number in '" + text + "'");
    out.push_back(x);
    p = next;
  }
  return out;
}

}  // namespace

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string to_string(SnapshotKind kind) {
  switch (kind) {
    case SnapshotKind::complex: return "complex";
    case SnapshotKind::realvec: return "realvec";
    case SnapshotKind::rho: return "rho";
    case SnapshotKind::current: return "current";
    case SnapshotKind::energy: return "energy";
    case SnapshotKind::phase: return "phase";
  }
  return "?";
}

SnapshotKind parse_snapshot_kind(const std::string& text) {
  for (auto k : {SnapshotKind::complex, SnapshotKind::realvec, SnapshotKind::rho,
                 SnapshotKind::current, SnapshotKind::energy, SnapshotKind::phase}) {
    if (to_string(k) == text) return k;
  }
  throw std::runtime_error("snapshot: unknown kind '" + text + "'");
}

std::size_t columns_for(SnapshotKind kind, int dim) {
  switch (kind) {
    case SnapshotKind::complex: return 2;
    case SnapshotKind::realvec:
    case SnapshotKind::current: return static_cast<std::size_t>(dim);
    default: return 1;
  }
}

Snapshot make_snapshot(const ComplexField& f, double epsilon, double time) {
  Snapshot s{f.grid_ptr(), epsilon, time, SnapshotKind::complex, 2, {}};
  s.values.reserve(2 * f.size());
  for (const auto& z : f.values()) {
    s.values.push_back(z.real());
    s.values.push_back(z.imag());
  }
  return s;
}

Snapshot make_snapshot(const RealVectorField& f, double epsilon, double time, SnapshotKind kind) {
  const auto d = static_cast<std::size_t>(f.dim());
  Snapshot s{f.grid_ptr(), epsilon, time, kind, d, {}};
  s.values.reserve(d * f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t c = 0; c < d; ++c) s.values.push_back(f[static_cast<int>(c)][i]);
  }
  return s;
}

Snapshot make_snapshot(const RealField& f, double epsilon, double time, SnapshotKind kind) {
  if (columns_for(kind, f.grid().dim()) != 1) {
    throw std::invalid_argument("snapshot: kind " + to_string(kind) + " is not scalar");
  }
  return Snapshot{f.grid_ptr(), epsilon, time, kind, 1, {f.values().begin(), f.values().end()}};
}

ComplexField complex_field(const Snapshot& s) {
  if (s.columns != 2) throw std::runtime_error("snapshot: not a complex snapshot");
  ComplexField f(s.grid);
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = Complex(s.values[2 * i], s.values[2 * i + 1]);
  return f;
}

RealVectorField vector_field(const Snapshot& s) {
  const int d = s.grid->dim();
  if (s.columns != static_cast<std::size_t>(d)) {
    throw std::runtime_error("snapshot: column count does not match a vector field");
  }
  RealVectorField f(s.grid);
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (int c = 0; c < d; ++c) f[c][i] = s.values[i * s.columns + static_cast<std::size_t>(c)];
  }
  return f;
}

RealField real_field(const Snapshot& s) {
  if (s.columns != 1) throw std::runtime_error("snapshot: not a scalar snapshot");
  return RealField(s.grid, s.values);
}

void write_snapshot(std::ostream& out, const Snapshot& s) {
  const auto& g = *s.grid;
  out << "dim " << g.dim() << '\n' << "J";
  for (int d = 0; d < g.dim(); ++d) out << ' ' << g.points(d);
  out << '\n' << "bounds";
  for (int d = 0; d < g.dim(); ++d) {
    out << ' ' << format_double(g.lower(d)) << ' ' << format_double(g.upper(d));
  }
  out << '\n'
      << "epsilon " << format_double(s.epsilon) << '\n'
      << "time " << format_double(s.time) << '\n'
      << "kind " << to_string(s.kind) << '\n';
  std::string line;
  for (std::size_t i = 0; i < g.size(); ++i) {
    line.clear();
    for (std::size_t c = 0; c < s.columns; ++c) {
      if (c) line += ' ';
      line += format_double(s.values[i * s.columns + c]);
    }
    line += '\n';
    out << line;
  }
}

Snapshot read_snapshot(std::istream& in) {
  const auto dim_v = parse_doubles(expect_line(in, "dim"));
  if (dim_v.size() != 1 || (dim_v[0] != 1.0 && dim_v[0] != 2.0)) {
    throw std::runtime_error("snapshot: bad dim");
  }
  const int dim = static_cast<int>(dim_v[0]);
  const auto j_v = parse_doubles(expect_line(in, "J"));
  const auto b_v = parse_doubles(expect_line(in, "bounds"));
  if (j_v.size() != static_cast<std::size_t>(dim) || b_v.size() != 2 * static_cast<std::size_t>(dim)) {
    throw std::runtime_error("snapshot: J/bounds do not match dim");
  }
  std::vector<Interval> bounds;
  std::vector<std::size_t> points;
  for (int d = 0; d < dim; ++d) {
    bounds.push_back({b_v[2 * d], b_v[2 * d + 1]});
    points.push_back(static_cast<std::size_t>(j_v[d]));
  }
  Snapshot s;
  s.grid = make_grid(dim, bounds, points);
  const auto eps_v = parse_doubles(expect_line(in, "epsilon"));
  const auto t_v = parse_doubles(expect_line(in, "time"));
  if (eps_v.size() != 1 || t_v.size() != 1) throw std::runtime_error("snapshot: bad epsilon/time");
  s.epsilon = eps_v[0];
  s.time = t_v[0];
  std::istringstream kind_text(expect_line(in, "kind"));
  std::string kind;
  kind_text >> kind;
  s.kind = parse_snapshot_kind(kind);
  s.columns = columns_for(s.kind, dim);
  s.values.reserve(s.columns * s.grid->size());
  std::string line;
  for (std::size_t i = 0; i < s.grid->size(); ++i) {
    if (!std::getline(in, line)) throw std::runtime_error("snapshot: truncated node data");
    const auto row = parse_doubles(line);
    if (row.size() != s.columns) throw std::runtime_error("snapshot: wrong column count at node " + std::to_string(i));
    s.values.insert(s.values.end(), row.begin(), row.end());
  }
  return s;
}

void save_snapshot(const std::filesystem::path& path, const Snapshot& s) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("snapshot: cannot write " + path.string());
  write_snapshot(out, s);
  if (!out) throw std::runtime_error("snapshot: write failed for " + path.string());
}

Snapshot load_snapshot(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("snapshot: cannot read " + path.string());
  return read_snapshot(in);
}

}  // namespace apnls
