#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "apnls/snapshot.hpp"

namespace apnls::harness {

/// Identity of a reference solve. Two keys with the same canonical text
/// describe the same computation.
struct ReferenceKey {
  std::string equation;     // solver tag
  std::string nonlinearity;  // tag plus parameters
  std::string initial;       // tag plus parameters
  int dim = 1;
  std::size_t points = 0;
  double lower = 0.0;
  double upper = 0.0;
  double epsilon = 0.0;
  double dt = 0.0;
  std::vector<double> times;

  /// One "name value" line per field, numbers at 17 significant digits.
  std::string canonical() const;
  /// Lowercase hex SHA-256 of canonical().
  std::string hash() const;
};

std::string sha256_hex(std::string_view data);

/// On-disk store laid out as <root>/<hash>/snapshot-NNN.dat plus meta.txt.
/// Entries are written to a private temporary directory and renamed into
/// place, so readers never see partial entries.
class ReferenceCache {
 public:
  explicit ReferenceCache(std::filesystem::path root);

  const std::filesystem::path& root() const { return root_; }
  std::filesystem::path entry(const ReferenceKey& key) const;

  /// Snapshots in output-time order, or nullopt when the entry is absent or
  /// was written for a different canonical key.
  std::optional<std::vector<Snapshot>> load(const ReferenceKey& key) const;

  /// Stores the entry unless it already exists. Returns false when another
  /// writer got there first.
  bool store(const ReferenceKey& key, const std::vector<Snapshot>& snapshots) const;

 private:
  std::filesystem::path root_;
};

}  // namespace apnls::harness
