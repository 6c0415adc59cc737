#pragma once

#include <optional>
#include <string>
#include <vector>

namespace sompkit::svg {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  std::string color = "#1f6fb2";
  bool dashed = false;
  bool markers = true;
};

struct VLine {
  std::string label;
  double x = 0.0;
  std::string color = "#b22222";
};

/// Self-contained line plot (no external fonts or scripts); output is a
/// deterministic function of the inputs.
struct LinePlot {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<Series> series;
  std::vector<VLine> vlines;
  std::vector<std::string> notes;
  std::optional<double> y_min;
  std::optional<double> y_max;

  void write(const std::string& path) const;
  std::string render() const;
};

/// Grayscale cell grid (0 = black, 1 = white) over two sweep axes, with
/// optional staircase overlays marking per-column theory thresholds.
struct ColormapPlot {
  std::string title;
  std::string x_label;  // axis1
  std::string y_label;  // axis2
  std::vector<double> x_values;
  std::vector<double> y_values;
  std::vector<std::vector<double>> cells;  // cells[ix][iy] in [0,1]
  struct Overlay {
    std::string label;
    std::vector<std::optional<double>> y_per_x;
    std::string color = "#b22222";
    bool dashed = false;
  };
  std::vector<Overlay> overlays;
  std::vector<std::string> notes;

  void write(const std::string& path) const;
  std::string render() const;
};

}  // namespace sompkit::svg
