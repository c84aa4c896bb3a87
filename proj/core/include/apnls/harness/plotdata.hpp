#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "apnls/harness/sweep.hpp"

namespace apnls::harness {

enum class PlotMode {
  vs_j,    // one series per (t, eps); abscissa dx = L / J
  vs_eps,  // one series per (t, J); abscissa eps
};

PlotMode parse_plot_mode(const std::string& text);
std::string to_string(PlotMode mode);

struct PlotSeries {
  std::string quantity;  // "rho" or "j"
  double t = 0.0;
  double key = 0.0;      // eps for vs_j, J for vs_eps
  std::vector<double> x;
  std::vector<double> y;
  /// Least-squares slope of log y against log x; empty below two points.
  std::optional<double> slope;
};

/// Least-squares slope on log-log axes. Empty with fewer than two points or
/// any non-positive coordinate.
std::optional<double> loglog_slope(std::span<const double> x, std::span<const double> y);

/// Groups the table into series. Rows whose status is not "ok" are skipped.
/// `length` is the domain length used to turn J into dx.
std::vector<PlotSeries> make_series(const std::vector<ErrorRecord>& records, PlotMode mode,
                                    double length);

/// One whitespace-separated file per series with "# slope" and "# key"
/// comment lines, plus slopes.csv summarizing all series. Returns the files
/// written.
std::vector<std::filesystem::path> write_plotdata(const std::vector<PlotSeries>& series,
                                                  PlotMode mode, const std::filesystem::path& dir);

}  // namespace apnls::harness
