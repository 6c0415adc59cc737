#include "sompkit/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "sompkit/errors.hpp"

namespace sompkit::svg {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 30.0;
constexpr double kMarginTop = 46.0;
constexpr double kMarginBottom = 64.0;

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string fmt_tick(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Range {
  double lo = 0.0;
  double hi = 1.0;
  void expand(double v) {
    if (std::isfinite(v)) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
};

// 1-2-5 tick spacing
std::vector<double> ticks(double lo, double hi, int target = 6) {
  std::vector<double> out;
  const double span = hi - lo;
  if (!(span > 0)) return {lo};
  const double raw = span / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double mult : {1.0, 2.0, 5.0, 10.0}) {
    if (mag * mult >= raw) {
      step = mag * mult;
      break;
    }
  }
  const double first = std::ceil(lo / step) * step;
  for (double t = first; t <= hi + 0.5 * step; t += step) {
    out.push_back(std::abs(t) < 1e-12 * step ? 0.0 : t);
  }
  return out;
}

class Canvas {
 public:
  Canvas(double x_lo, double x_hi, double y_lo, double y_hi)
      : x_lo_(x_lo), x_hi_(x_hi), y_lo_(y_lo), y_hi_(y_hi) {
    out_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
         << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight
         << "\">\n";
    out_ << "<rect width=\"" << kWidth << "\" height=\"" << kHeight
         << "\" fill=\"#ffffff\"/>\n";
  }

  double px(double x) const {
    return kMarginLeft + (x - x_lo_) / (x_hi_ - x_lo_) * (kWidth - kMarginLeft - kMarginRight);
  }
  double py(double y) const {
    return kHeight - kMarginBottom -
           (y - y_lo_) / (y_hi_ - y_lo_) * (kHeight - kMarginTop - kMarginBottom);
  }

  void frame_and_axes(const std::string& title, const std::string& x_label,
                      const std::string& y_label) {
    out_ << "<rect x=\"" << fmt(kMarginLeft) << "\" y=\"" << fmt(kMarginTop) << "\" width=\""
         << fmt(kWidth - kMarginLeft - kMarginRight) << "\" height=\""
         << fmt(kHeight - kMarginTop - kMarginBottom)
         << "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    for (double t : ticks(x_lo_, x_hi_)) {
      const double x = px(t);
      out_ << "<line x1=\"" << fmt(x) << "\" y1=\"" << fmt(kHeight - kMarginBottom)
           << "\" x2=\"" << fmt(x) << "\" y2=\"" << fmt(kHeight - kMarginBottom + 5)
           << "\" stroke=\"#333333\"/>\n";
      text(x, kHeight - kMarginBottom + 20, fmt_tick(t), "middle", 12);
    }
    for (double t : ticks(y_lo_, y_hi_)) {
      const double y = py(t);
      out_ << "<line x1=\"" << fmt(kMarginLeft - 5) << "\" y1=\"" << fmt(y) << "\" x2=\""
           << fmt(kMarginLeft) << "\" y2=\"" << fmt(y) << "\" stroke=\"#333333\"/>\n";
      text(kMarginLeft - 9, y + 4, fmt_tick(t), "end", 12);
    }
    text(kWidth / 2, 24, title, "middle", 15);
    text(kWidth / 2, kHeight - 18, x_label, "middle", 13);
    out_ << "<text x=\"" << fmt(18.0) << "\" y=\"" << fmt(kHeight / 2)
         << "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\" "
            "transform=\"rotate(-90 18 "
         << fmt(kHeight / 2) << ")\">" << escape(y_label) << "</text>\n";
  }

  void text(double x, double y, const std::string& s, const std::string& anchor, int size) {
    out_ << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(y)
         << "\" font-family=\"sans-serif\" font-size=\"" << size << "\" text-anchor=\""
         << anchor << "\">" << escape(s) << "</text>\n";
  }

  void polyline(const std::vector<double>& xs, const std::vector<double>& ys,
                const std::string& color, bool dashed, bool markers) {
    out_ << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.8\"";
    if (dashed) out_ << " stroke-dasharray=\"7,4\"";
    out_ << " points=\"";
    for (std::size_t i = 0; i < xs.size(); ++i) {
      out_ << fmt(px(xs[i])) << "," << fmt(py(ys[i])) << " ";
    }
    out_ << "\"/>\n";
    if (markers) {
      for (std::size_t i = 0; i < xs.size(); ++i) {
        out_ << "<circle cx=\"" << fmt(px(xs[i])) << "\" cy=\"" << fmt(py(ys[i]))
             << "\" r=\"2.4\" fill=\"" << color << "\"/>\n";
      }
    }
  }

  void raw(const std::string& s) { out_ << s; }

  std::string finish() {
    out_ << "</svg>\n";
    return out_.str();
  }

 private:
  double x_lo_, x_hi_, y_lo_, y_hi_;
  std::ostringstream out_;
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("svg: cannot open " + path);
  out << content;
  if (!out) throw io_error("svg: write failed for " + path);
}

}  // namespace

std::string LinePlot::render() const {
  Range xr, yr;
  bool any = false;
  xr.lo = 1e300; xr.hi = -1e300;
  yr.lo = 1e300; yr.hi = -1e300;
  for (const auto& s : series) {
    for (double v : s.x) { xr.expand(v); any = true; }
    for (double v : s.y) yr.expand(v);
  }
  for (const auto& v : vlines) xr.expand(v.x);
  if (!any) { xr.lo = 0; xr.hi = 1; yr.lo = 0; yr.hi = 1; }
  if (y_min) yr.lo = *y_min;
  if (y_max) yr.hi = *y_max;
  if (!(xr.hi > xr.lo)) xr.hi = xr.lo + 1;
  if (!(yr.hi > yr.lo)) yr.hi = yr.lo + 1;
  const double ypad = 0.04 * (yr.hi - yr.lo);
  if (!y_min) yr.lo -= ypad;
  if (!y_max) yr.hi += ypad;

  Canvas canvas(xr.lo, xr.hi, yr.lo, yr.hi);
  canvas.frame_and_axes(title, x_label, y_label);
  for (const auto& v : vlines) {
    std::ostringstream line;
    line << "<line x1=\"" << fmt(canvas.px(v.x)) << "\" y1=\"" << fmt(canvas.py(yr.lo))
         << "\" x2=\"" << fmt(canvas.px(v.x)) << "\" y2=\"" << fmt(canvas.py(yr.hi))
         << "\" stroke=\"" << v.color << "\" stroke-width=\"1.6\" stroke-dasharray=\"5,4\"/>\n";
    canvas.raw(line.str());
  }
  for (const auto& s : series) {
    canvas.polyline(s.x, s.y, s.color, s.dashed, s.markers);
  }

  double legend_y = kMarginTop + 16;
  for (const auto& s : series) {
    std::ostringstream swatch;
    swatch << "<line x1=\"" << fmt(kMarginLeft + 12) << "\" y1=\"" << fmt(legend_y - 4)
           << "\" x2=\"" << fmt(kMarginLeft + 40) << "\" y2=\"" << fmt(legend_y - 4)
           << "\" stroke=\"" << s.color << "\" stroke-width=\"2\""
           << (s.dashed ? " stroke-dasharray=\"7,4\"" : "") << "/>\n";
    canvas.raw(swatch.str());
    canvas.text(kMarginLeft + 46, legend_y, s.label, "start", 12);
    legend_y += 16;
  }
  for (const auto& v : vlines) {
    std::ostringstream swatch;
    swatch << "<line x1=\"" << fmt(kMarginLeft + 12) << "\" y1=\"" << fmt(legend_y - 4)
           << "\" x2=\"" << fmt(kMarginLeft + 40) << "\" y2=\"" << fmt(legend_y - 4)
           << "\" stroke=\"" << v.color << "\" stroke-width=\"2\" stroke-dasharray=\"5,4\"/>\n";
    canvas.raw(swatch.str());
    canvas.text(kMarginLeft + 46, legend_y, v.label, "start", 12);
    legend_y += 16;
  }
  for (const auto& note : notes) {
    canvas.text(kMarginLeft + 12, legend_y, note, "start", 11);
    legend_y += 14;
  }
  return canvas.finish();
}

void LinePlot::write(const std::string& path) const { write_file(path, render()); }

std::string ColormapPlot::render() const {
  if (x_values.empty() || y_values.empty()) {
    throw dimension_error("colormap: empty axes");
  }
  // cell boundaries at the midpoints between grid values
  auto edges = [](const std::vector<double>& v) {
    std::vector<double> e(v.size() + 1);
    for (std::size_t i = 1; i < v.size(); ++i) e[i] = 0.5 * (v[i - 1] + v[i]);
    e.front() = v.front() - (v.size() > 1 ? 0.5 * (v[1] - v[0]) : 0.5);
    e.back() = v.back() + (v.size() > 1 ? 0.5 * (v[v.size() - 1] - v[v.size() - 2]) : 0.5);
    return e;
  };
  const std::vector<double> xe = edges(x_values);
  const std::vector<double> ye = edges(y_values);

  Canvas canvas(xe.front(), xe.back(), ye.front(), ye.back());
  for (std::size_t ix = 0; ix < x_values.size(); ++ix) {
    for (std::size_t iy = 0; iy < y_values.size(); ++iy) {
      const double v = std::clamp(cells[ix][iy], 0.0, 1.0);
      const int level = static_cast<int>(std::lround(v * 255.0));
      char color[8];
      std::snprintf(color, sizeof(color), "#%02x%02x%02x", level, level, level);
      std::ostringstream rect;
      rect << "<rect x=\"" << fmt(canvas.px(xe[ix])) << "\" y=\""
           << fmt(canvas.py(ye[iy + 1])) << "\" width=\""
           << fmt(canvas.px(xe[ix + 1]) - canvas.px(xe[ix])) << "\" height=\""
           << fmt(canvas.py(ye[iy]) - canvas.py(ye[iy + 1])) << "\" fill=\"" << color
           << "\"/>\n";
      canvas.raw(rect.str());
    }
  }
  canvas.frame_and_axes(title, x_label, y_label);

  for (const auto& overlay : overlays) {
    std::vector<double> xs, ys;
    auto flush = [&]() {
      if (xs.size() >= 2) canvas.polyline(xs, ys, overlay.color, overlay.dashed, false);
      xs.clear();
      ys.clear();
    };
    for (std::size_t ix = 0; ix < x_values.size(); ++ix) {
      if (!overlay.y_per_x[ix].has_value()) {
        flush();
        continue;
      }
      const double y = std::clamp(*overlay.y_per_x[ix], ye.front(), ye.back());
      xs.push_back(xe[ix]);
      ys.push_back(y);
      xs.push_back(xe[ix + 1]);
      ys.push_back(y);
    }
    flush();
  }

  double legend_y = kMarginTop - 10;
  canvas.text(kMarginLeft, legend_y, "black = 0, white = 1", "start", 11);
  double note_y = kMarginTop + 14;
  for (const auto& overlay : overlays) {
    std::ostringstream swatch;
    swatch << "<line x1=\"" << fmt(kWidth - kMarginRight - 170) << "\" y1=\""
           << fmt(note_y - 4) << "\" x2=\"" << fmt(kWidth - kMarginRight - 142) << "\" y2=\""
           << fmt(note_y - 4) << "\" stroke=\"" << overlay.color << "\" stroke-width=\"2\""
           << (overlay.dashed ? " stroke-dasharray=\"7,4\"" : "") << "/>\n";
    canvas.raw(swatch.str());
    canvas.text(kWidth - kMarginRight - 136, note_y, overlay.label, "start", 11);
    note_y += 15;
  }
  for (const auto& note : notes) {
    canvas.text(kWidth - kMarginRight - 170, note_y, note, "start", 11);
    note_y += 14;
  }
  return canvas.finish();
}

void ColormapPlot::write(const std::string& path) const { write_file(path, render()); }

}  // namespace sompkit::svg
