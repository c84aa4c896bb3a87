#include "apnls/harness/plotdata.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <stdexcept>
#include <tuple>

namespace apnls::harness {
namespace fs = std::filesystem;

PlotMode parse_plot_mode(const std::string& text) {
  if (text == "vs-J") return PlotMode::vs_j;
  if (text == "vs-eps") return PlotMode::vs_eps;
  throw std::invalid_argument("plotdata: mode must be vs-J or vs-eps, got '" + text + "'");
}

std::string to_string(PlotMode mode) { return mode == PlotMode::vs_j ? "vs-J" : "vs-eps"; }

std::optional<double> loglog_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) return std::nullopt;
  const double n = static_cast<double>(x.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) return std::nullopt;
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = n * sxx - sx * sx;
  if (!(std::abs(denom) > 0.0)) return std::nullopt;
  return (n * sxy - sx * sy) / denom;
}

std::vector<PlotSeries> make_series(const std::vector<ErrorRecord>& records, PlotMode mode,
                                    double length) {
  // Keyed by (t, series key); rows keep table order inside a series.
  std::map<std::tuple<double, double>, std::pair<PlotSeries, PlotSeries>> groups;
  std::vector<std::tuple<double, double>> order;
  for (const auto& r : records) {
    if (r.status != "ok" || !std::isfinite(r.err_rho) || !std::isfinite(r.err_j)) continue;
    const double key = mode == PlotMode::vs_j ? r.epsilon : static_cast<double>(r.points);
    const double x = mode == PlotMode::vs_j ? length / static_cast<double>(r.points) : r.epsilon;
    const auto id = std::make_tuple(r.t, key);
    auto [it, fresh] = groups.try_emplace(id);
    if (fresh) {
      order.push_back(id);
      it->second.first = {"rho", r.t, key, {}, {}, std::nullopt};
      it->second.second = {"j", r.t, key, {}, {}, std::nullopt};
    }
    it->second.first.x.push_back(x);
    it->second.first.y.push_back(r.err_rho);
    it->second.second.x.push_back(x);
    it->second.second.y.push_back(r.err_j);
  }
  std::vector<PlotSeries> out;
  for (const auto& id : order) {
    for (PlotSeries* s : {&groups[id].first, &groups[id].second}) {
      s->slope = loglog_slope(s->x, s->y);
      out.push_back(*s);
    }
  }
  return out;
}

std::vector<fs::path> write_plotdata(const std::vector<PlotSeries>& series, PlotMode mode,
                                     const fs::path& dir) {
  fs::create_directories(dir);
  const bool vs_j = mode == PlotMode::vs_j;
  std::vector<fs::path> written;
  std::ofstream summary(dir / "slopes.csv", std::ios::binary);
  summary << "mode,quantity,t," << (vs_j ? "epsilon" : "J") << ",points,slope\n";
  for (const auto& s : series) {
    const std::string key = vs_j ? "eps" + format_number(s.key)
                                 : "J" + std::to_string(static_cast<std::size_t>(s.key));
    const fs::path path =
        dir / (to_string(mode) + "-" + s.quantity + "-t" + format_number(s.t) + "-" + key + ".dat");
    std::ofstream out(path, std::ios::binary);
    out << "# " << (vs_j ? "epsilon " : "J ") << format_number(s.key) << '\n'
        << "# t " << format_number(s.t) << '\n';
    if (s.slope) out << "# slope " << format_number(*s.slope) << '\n';
    out << "# " << (vs_j ? "dx" : "epsilon") << " err_" << s.quantity << '\n';
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      out << format_number(s.x[i]) << ' ' << format_number(s.y[i]) << '\n';
    }
    summary << to_string(mode) << ',' << s.quantity << ',' << format_number(s.t) << ','
            << format_number(s.key) << ',' << s.x.size() << ','
            << (s.slope ? format_number(*s.slope) : std::string()) << '\n';
    written.push_back(path);
  }
  written.push_back(dir / "slopes.csv");
  return written;
}

}  // namespace apnls::harness
