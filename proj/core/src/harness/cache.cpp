#include "apnls/harness/cache.hpp"

#include <atomic>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include <unistd.h>

#include <openssl/evp.h>

namespace apnls::harness {
namespace fs = std::filesystem;

namespace {

std::string snapshot_name(std::size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "snapshot-%03zu.dat", index);
  return buf;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::string ReferenceKey::canonical() const {
  std::ostringstream out;
  out << "equation " << equation << '\n'
      << "nonlinearity " << nonlinearity << '\n'
      << "initial " << initial << '\n'
      << "dim " << dim << '\n'
      << "J " << points << '\n'
      << "bounds " << format_double(lower) << ' ' << format_double(upper) << '\n'
      << "epsilon " << format_double(epsilon) << '\n'
      << "dt " << format_double(dt) << '\n'
      << "times";
  for (double t : times) out << ' ' << format_double(t);
  out << '\n';
  return out.str();
}

std::string ReferenceKey::hash() const { return sha256_hex(canonical()); }

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256: digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  hex.reserve(2 * length);
  for (unsigned int i = 0; i < length; ++i) {
    hex.push_back(kHex[digest[i] >> 4]);
    hex.push_back(kHex[digest[i] & 0xf]);
  }
  return hex;
}

ReferenceCache::ReferenceCache(fs::path root) : root_(std::move(root)) {}

fs::path ReferenceCache::entry(const ReferenceKey& key) const { return root_ / key.hash(); }

std::optional<std::vector<Snapshot>> ReferenceCache::load(const ReferenceKey& key) const {
  const fs::path dir = entry(key);
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) return std::nullopt;
  if (read_file(dir / "meta.txt") != key.canonical()) return std::nullopt;
  std::vector<Snapshot> snapshots;
  for (std::size_t i = 0; i < key.times.size(); ++i) {
    const fs::path file = dir / snapshot_name(i);
    if (!fs::exists(file, ec)) return std::nullopt;
    snapshots.push_back(load_snapshot(file));
  }
  return snapshots;
}

bool ReferenceCache::store(const ReferenceKey& key, const std::vector<Snapshot>& snapshots) const {
  if (snapshots.size() != key.times.size()) {
    throw std::invalid_argument("cache: one snapshot per output time is required");
  }
  const fs::path target = entry(key);
  std::error_code ec;
  if (fs::exists(target, ec)) return false;
  fs::create_directories(root_);

  static std::atomic<unsigned long> counter{0};
  const fs::path staging = root_ / (".tmp-" + key.hash() + "-" + std::to_string(::getpid()) + "-" +
                                    std::to_string(counter++));
  fs::create_directories(staging);
  try {
    for (std::size_t i = 0; i < snapshots.size(); ++i) {
      save_snapshot(staging / snapshot_name(i), snapshots[i]);
    }
    std::ofstream meta(staging / "meta.txt", std::ios::binary);
    meta << key.canonical();
    meta.close();
    if (!meta) throw std::runtime_error("cache: cannot write meta.txt");
  } catch (...) {
    fs::remove_all(staging, ec);
    throw;
  }
  fs::rename(staging, target, ec);
  if (ec) {
    fs::remove_all(staging, ec);
    return false;
  }
  return true;
}

}  // namespace apnls::harness
