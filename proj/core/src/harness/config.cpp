#include "apnls/harness/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "apnls/snapshot.hpp"

namespace apnls::harness {
namespace {

namespace pt = boost::property_tree;

const std::map<std::string, std::set<std::string>>& known_keys() {
  static const std::map<std::string, std::set<std::string>> keys = {
      {"experiment", {"equation", "dim"}},
      {"grid", {"lower", "upper"}},
      {"nonlinearity", {"tag", "lambda", "delta", "eta"}},
      {"potential", {"tag", "amplitude", "mode", "path", "viscosity"}},
      {"initial", {"tag", "amplitude", "path", "phase_path"}},
      {"sweep", {"epsilon", "J", "times", "cfl", "dt_max", "splitting_dt_factor"}},
      {"reference", {"J", "dt_factor", "enforce_mesh_rule"}},
      {"output", {"dir", "cache", "record_walltime"}},
  };
  return keys;
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

double parse_double(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
    throw ConfigError("config: '" + key + "' expects a number, got '" + text + "'");
  }
  return value;
}

long long parse_integer(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
    throw ConfigError("config: '" + key + "' expects an integer, got '" + text + "'");
  }
  return value;
}

std::size_t parse_count(const std::string& key, const std::string& text) {
  const long long v = parse_integer(key, text);
  if (v <= 0) throw ConfigError("config: '" + key + "' must be positive");
  return static_cast<std::size_t>(v);
}

bool parse_bool(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  if (t == "true" || t == "1" || t == "yes") return true;
  if (t == "false" || t == "0" || t == "no") return false;
  throw ConfigError("config: '" + key + "' expects true or false, got '" + text + "'");
}

template <class T, class Fmt>
std::string join(const std::vector<T>& items, Fmt fmt) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += fmt(items[i]);
  }
  return out;
}

bool strictly_ascending(const auto& v) {
  return std::adjacent_find(v.begin(), v.end(), [](auto x, auto y) { return !(x < y); }) == v.end();
}

}  // namespace

std::string format_number(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

std::string to_string(Equation e) {
  switch (e) {
    case Equation::ap_nls: return "ap-nls";
    case Equation::splitting_nls: return "splitting-nls";
    case Equation::eikonal: return "eikonal";
    case Equation::linear: return "linear";
  }
  return "ap-nls";
}

Equation parse_equation(const std::string& text) {
  if (text == "ap-nls") return Equation::ap_nls;
  if (text == "splitting-nls") return Equation::splitting_nls;
  if (text == "eikonal") return Equation::eikonal;
  if (text == "linear") return Equation::linear;
  throw ConfigError("config: unknown equation '" + text + "'");
}

ExperimentConfig default_config_1d() {
  ExperimentConfig c;
  c.sweep.epsilons = {1e-1, 1e-2, 1e-3};
  c.sweep.points = {32, 64, 128, 256, 512, 1024};
  c.sweep.times = {0.05, 0.13};
  c.reference.points = 4096;
  return c;
}

ExperimentConfig default_config_2d() {
  ExperimentConfig c;
  c.dim = 2;
  c.initial.tag = "gauss-logcosh-2d";
  c.sweep.epsilons = {1e-1, 1e-2, 5e-3};
  c.sweep.points = {64, 128, 256, 512};
  c.sweep.times = {0.05};
  c.reference.points = 1024;
  return c;
}

ExperimentConfig parse_config(std::istream& in) {
  pt::ptree tree;
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  const auto& keys = known_keys();
  for (const auto& [section, body] : tree) {
    const auto it = keys.find(section);
    if (it == keys.end() || !body.data().empty()) {
      throw ConfigError("config: unknown section '" + section + "'");
    }
    for (const auto& [key, value] : body) {
      if (!it->second.count(key)) {
        throw ConfigError("config: unknown key '" + section + "." + key + "'");
      }
    }
  }
  auto get = [&](const std::string& path) -> std::optional<std::string> {
    if (auto v = tree.get_optional<std::string>(pt::ptree::path_type(path, '.'))) return trim(*v);
    return std::nullopt;
  };

  ExperimentConfig c;
  if (auto v = get("experiment.equation")) c.equation = parse_equation(*v);
  if (auto v = get("experiment.dim")) c.dim = static_cast<int>(parse_integer("experiment.dim", *v));
  if (auto v = get("grid.lower")) c.lower = parse_double("grid.lower", *v);
  if (auto v = get("grid.upper")) c.upper = parse_double("grid.upper", *v);

  if (auto v = get("nonlinearity.tag")) c.nonlinearity.tag = *v;
  if (auto v = get("nonlinearity.lambda")) c.nonlinearity.lambda = parse_double("nonlinearity.lambda", *v);
  if (auto v = get("nonlinearity.delta")) c.nonlinearity.delta = parse_double("nonlinearity.delta", *v);
  if (auto v = get("nonlinearity.eta")) c.nonlinearity.eta = parse_double("nonlinearity.eta", *v);

  if (auto v = get("potential.tag")) c.potential.tag = *v;
  if (auto v = get("potential.amplitude")) c.potential.amplitude = parse_double("potential.amplitude", *v);
  if (auto v = get("potential.mode")) c.potential.mode = static_cast<int>(parse_integer("potential.mode", *v));
  if (auto v = get("potential.path")) c.potential.path = *v;
  if (auto v = get("potential.viscosity")) c.potential.viscosity = parse_double("potential.viscosity", *v);

  if (auto v = get("initial.tag")) c.initial.tag = *v;
  if (auto v = get("initial.amplitude")) c.initial.amplitude = parse_double("initial.amplitude", *v);
  if (auto v = get("initial.path")) c.initial.path = *v;
  if (auto v = get("initial.phase_path")) c.initial.phase_path = *v;

  if (auto v = get("sweep.epsilon")) {
    for (const auto& item : split_list(*v)) c.sweep.epsilons.push_back(parse_double("sweep.epsilon", item));
  }
  if (auto v = get("sweep.J")) {
    for (const auto& item : split_list(*v)) c.sweep.points.push_back(parse_count("sweep.J", item));
  }
  if (auto v = get("sweep.times")) {
    for (const auto& item : split_list(*v)) c.sweep.times.push_back(parse_double("sweep.times", item));
  }
  if (auto v = get("sweep.cfl")) c.sweep.cfl = parse_double("sweep.cfl", *v);
  if (auto v = get("sweep.dt_max")) c.sweep.dt_max = parse_double("sweep.dt_max", *v);
  if (auto v = get("sweep.splitting_dt_factor")) {
    c.sweep.splitting_dt_factor = parse_double("sweep.splitting_dt_factor", *v);
  }

  if (auto v = get("reference.J")) c.reference.points = parse_count("reference.J", *v);
  if (auto v = get("reference.dt_factor")) c.reference.dt_factor = parse_double("reference.dt_factor", *v);
  if (auto v = get("reference.enforce_mesh_rule")) {
    c.reference.enforce_mesh_rule = parse_bool("reference.enforce_mesh_rule", *v);
  }

  if (auto v = get("output.dir")) c.output.dir = *v;
  if (auto v = get("output.cache")) c.output.cache = *v;
  if (auto v = get("output.record_walltime")) {
    c.output.record_walltime = parse_bool("output.record_walltime", *v);
  }
  validate_config(c);
  return c;
}

ExperimentConfig parse_config_string(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open " + path.string());
  return parse_config(in);
}

std::string serialize_config(const ExperimentConfig& c) {
  std::ostringstream out;
  auto num = [](double x) { return format_number(x); };
  auto count = [](std::size_t x) { return std::to_string(x); };
  auto flag = [](bool b) { return std::string(b ? "true" : "false"); };
  out << "[experiment]\n"
      << "equation = " << to_string(c.equation) << "\n"
      << "dim = " << c.dim << "\n\n"
      << "[grid]\n"
      << "lower = " << num(c.lower) << "\n"
      << "upper = " << num(c.upper) << "\n\n"
      << "[nonlinearity]\n"
      << "tag = " << c.nonlinearity.tag << "\n"
      << "lambda = " << num(c.nonlinearity.lambda) << "\n"
      << "delta = " << num(c.nonlinearity.delta) << "\n"
      << "eta = " << num(c.nonlinearity.eta) << "\n\n"
      << "[potential]\n"
      << "tag = " << c.potential.tag << "\n"
      << "amplitude = " << num(c.potential.amplitude) << "\n"
      << "mode = " << c.potential.mode << "\n"
      << "path = " << c.potential.path << "\n"
      << "viscosity = " << num(c.potential.viscosity) << "\n\n"
      << "[initial]\n"
      << "tag = " << c.initial.tag << "\n"
      << "amplitude = " << num(c.initial.amplitude) << "\n"
      << "path = " << c.initial.path << "\n"
      << "phase_path = " << c.initial.phase_path << "\n\n"
      << "[sweep]\n"
      << "epsilon = " << join(c.sweep.epsilons, num) << "\n"
      << "J = " << join(c.sweep.points, count) << "\n"
      << "times = " << join(c.sweep.times, num) << "\n"
      << "cfl = " << num(c.sweep.cfl) << "\n"
      << "dt_max = " << num(c.sweep.dt_max) << "\n"
      << "splitting_dt_factor = " << num(c.sweep.splitting_dt_factor) << "\n\n"
      << "[reference]\n"
      << "J = " << c.reference.points << "\n"
      << "dt_factor = " << num(c.reference.dt_factor) << "\n"
      << "enforce_mesh_rule = " << flag(c.reference.enforce_mesh_rule) << "\n\n"
      << "[output]\n"
      << "dir = " << c.output.dir << "\n"
      << "cache = " << c.output.cache << "\n"
      << "record_walltime = " << flag(c.output.record_walltime) << "\n";
  return out.str();
}

void validate_config(const ExperimentConfig& c) {
  if (c.dim != 1 && c.dim != 2) throw ConfigError("config: dim must be 1 or 2");
  if (!(c.upper > c.lower) || !std::isfinite(c.lower) || !std::isfinite(c.upper)) {
    throw ConfigError("config: grid requires lower < upper");
  }
  static const std::set<std::string> nl_tags = {"cubic", "cubic-quintic", "saturated"};
  if (!nl_tags.count(c.nonlinearity.tag)) {
    throw ConfigError("config: unknown nonlinearity '" + c.nonlinearity.tag + "'");
  }
  static const std::set<std::string> potential_tags = {"zero", "single-cosine", "table"};
  if (!potential_tags.count(c.potential.tag)) {
    throw ConfigError("config: unknown potential '" + c.potential.tag + "'");
  }
  if (c.potential.tag == "table" && c.potential.path.empty()) {
    throw ConfigError("config: table potential requires potential.path");
  }
  if (!(c.potential.viscosity > 0.0)) throw ConfigError("config: potential.viscosity must be > 0");
  static const std::set<std::string> initial_tags = {"gauss-logcosh-1d", "gauss-logcosh-2d",
                                                     "maxwell-2temp",    "plane-wave",
                                                     "cosine-phase",     "custom-snapshot"};
  if (!initial_tags.count(c.initial.tag)) {
    throw ConfigError("config: unknown initial data '" + c.initial.tag + "'");
  }
  if ((c.initial.tag == "gauss-logcosh-1d" && c.dim != 1) ||
      ((c.initial.tag == "gauss-logcosh-2d" || c.initial.tag == "maxwell-2temp") && c.dim != 2)) {
    throw ConfigError("config: initial data '" + c.initial.tag + "' does not match dim");
  }
  if (c.initial.tag == "custom-snapshot" && c.initial.path.empty()) {
    throw ConfigError("config: custom-snapshot requires initial.path");
  }

  const auto& s = c.sweep;
  for (double e : s.epsilons) {
    if (!(e >= 0.0 && e <= 1.0)) throw ConfigError("config: epsilon must lie in [0, 1]");
  }
  if (!strictly_ascending(s.points)) throw ConfigError("config: J list must be ascending");
  for (std::size_t j : s.points) {
    if (!is_power_of_two(j) || j < 4) throw ConfigError("config: J must be a power of two >= 4");
  }
  if (!strictly_ascending(s.times)) throw ConfigError("config: output times must be ascending");
  for (double t : s.times) {
    if (!(t > 0.0) || !std::isfinite(t)) throw ConfigError("config: output times must be > 0");
  }
  if (!(s.cfl > 0.0 && s.cfl <= 1.0)) throw ConfigError("config: cfl must lie in (0, 1]");
  if (!(s.dt_max > 0.0)) throw ConfigError("config: dt_max must be > 0");
  if (!(s.splitting_dt_factor > 0.0)) throw ConfigError("config: splitting_dt_factor must be > 0");

  const auto& r = c.reference;
  if (!is_power_of_two(r.points)) throw ConfigError("config: reference J must be a power of two");
  for (std::size_t j : s.points) {
    if (!(r.points > j) || r.points % j != 0) {
      throw ConfigError("config: reference J must exceed and be a multiple of every sweep J");
    }
  }
  if (!(r.dt_factor > 0.0)) throw ConfigError("config: reference dt_factor must be > 0");
}

GridPtr make_experiment_grid(const ExperimentConfig& c, std::size_t points) {
  const Interval box{c.lower, c.upper};
  return c.dim == 1 ? make_grid_1d(box.lower, box.upper, points)
                    : make_grid_2d(box, box, points, points);
}

PotentialSpec make_potential(const ExperimentConfig& c) {
  if (c.potential.tag == "zero") return PotentialSpec::zero();
  if (c.potential.tag == "single-cosine") {
    return PotentialSpec::cosine(c.potential.amplitude, c.potential.mode);
  }
  try {
    return PotentialSpec::table(real_field(load_snapshot(c.potential.path)));
  } catch (const std::exception& e) {
    throw ConfigError("config: cannot load potential table: " + std::string(e.what()));
  }
}

Nonlinearity make_nonlinearity(const ExperimentConfig& c) {
  if (c.equation == Equation::eikonal || c.equation == Equation::linear) {
    return Nonlinearity::linear_potential(make_potential(c));
  }
  try {
    const auto& n = c.nonlinearity;
    if (n.tag == "cubic") return Nonlinearity::cubic();
    if (n.tag == "cubic-quintic") return Nonlinearity::cubic_quintic(n.lambda);
    return Nonlinearity::saturated(n.delta, n.eta, n.lambda);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
}

}  // namespace apnls::harness
