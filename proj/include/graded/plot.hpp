#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iterator>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "graded/error.hpp"
#include "graded/set_core.hpp"

namespace graded::plot {

struct Point {
  double x;
  TruthDegree y;
};

/// A labelled sampled curve; x strictly increasing.
class PlotSeries {
 public:
  PlotSeries(std::string label, std::vector<Point> points) : label_(std::move(label)), points_(std::move(points)) {
    for (std::size_t i = 1; i < points_.size(); ++i) {
      if (!(points_[i - 1].x < points_[i].x)) throw DomainError("plot series x must be strictly increasing");
    }
  }

  const std::string& label() const { return label_; }
  const std::vector<Point>& points() const { return points_; }

 private:
  std::string label_;
  std::vector<Point> points_;
};

inline constexpr int kDefaultSamples = 512;

/// Sample grid for a group of sets on one universe: `samples` uniform points
/// plus every breakpoint, plus the float just below each interior jump so
/// both sides of the jump appear.
inline std::vector<double> sample_grid(const std::vector<const FuzzySet*>& sets, int samples = kDefaultSamples) {
  if (sets.empty()) return {};
  if (samples < 2) throw DomainError("need at least 2 samples");
  const Universe& u = sets.front()->universe();
  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(samples) + 8);
  for (int i = 0; i < samples; ++i) {
    xs.push_back(i + 1 == samples ? u.hi() : u.lo() + (u.hi() - u.lo()) * i / (samples - 1));
  }
  for (const FuzzySet* s : sets) {
    if (!(s->universe() == u)) throw DomainError("plotted sets must share a universe");
    for (const auto& k : s->curve().breakpoints()) {
      xs.push_back(k.x);
      if (k.is_jump() && k.x > u.lo()) xs.push_back(std::nextafter(k.x, -std::numeric_limits<double>::infinity()));
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

inline PlotSeries sample(const FuzzySet& set, std::string label, const std::vector<double>& xs) {
  std::vector<Point> pts;
  pts.reserve(xs.size());
  for (double x : xs) pts.push_back({x, mf_eval(set, x)});
  return PlotSeries(std::move(label), std::move(pts));
}

inline std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  std::string s = buf;
  if (s == "-0") s = "0";
  return s;
}

/// CSV: header `x,label1,...`, one row per shared sample x, LF endings.
inline std::string emit_csv(const std::vector<PlotSeries>& series) {
  std::string out = "x";
  for (const auto& s : series) out += "," + s.label();
  out += "\n";
  if (series.empty()) return out;
  const auto& grid = series.front().points();
  for (const auto& s : series) {
    const auto& pts = s.points();
    if (pts.size() != grid.size()) throw DomainError("series '" + s.label() + "' has a different sample grid");
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (pts[i].x != grid[i].x) throw DomainError("series '" + s.label() + "' has a different sample grid");
    }
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    out += format_number(grid[i].x);
    for (const auto& s : series) out += "," + format_number(s.points()[i].y.value());
    out += "\n";
  }
  return out;
}

inline std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

/// Standalone SVG line chart with one polyline per series, y in [0, 1].
inline std::string emit_svg(const std::vector<PlotSeries>& series, int width = 640, int height = 400) {
  if (width <= 0 || height <= 0) throw DomainError("svg width and height must be positive");
  static constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
  const double left = 50, right = 20, top = 20, bottom = 40;
  const double plot_w = std::max(1.0, width - left - right);
  const double plot_h = std::max(1.0, height - top - bottom);

  double x_min = 0.0, x_max = 1.0;
  bool first = true;
  for (const auto& s : series) {
    for (const auto& p : s.points()) {
      if (first) {
        x_min = x_max = p.x;
        first = false;
      }
      x_min = std::min(x_min, p.x);
      x_max = std::max(x_max, p.x);
    }
  }
  if (!(x_min < x_max)) x_max = x_min + 1.0;

  auto px = [&](double x) { return left + (x - x_min) / (x_max - x_min) * plot_w; };
  auto py = [&](double y) { return top + (1.0 - y) * plot_h; };
  auto num = [](double v) { return format_number(std::round(v * 100.0) / 100.0); };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) + "\" height=\"" +
         std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(width) + " " + std::to_string(height) +
         "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // axes
  out += "<g stroke=\"black\" stroke-width=\"1\">\n";
  out += "<line x1=\"" + num(left) + "\" y1=\"" + num(py(0)) + "\" x2=\"" + num(left + plot_w) + "\" y2=\"" +
         num(py(0)) + "\"/>\n";
  out += "<line x1=\"" + num(left) + "\" y1=\"" + num(py(0)) + "\" x2=\"" + num(left) + "\" y2=\"" + num(py(1)) +
         "\"/>\n";
  for (double x : {x_min, x_max}) {
    out += "<line x1=\"" + num(px(x)) + "\" y1=\"" + num(py(0)) + "\" x2=\"" + num(px(x)) + "\" y2=\"" +
           num(py(0) + 5) + "\"/>\n";
  }
  for (double y : {0.0, 0.5, 1.0}) {
    out += "<line x1=\"" + num(left - 5) + "\" y1=\"" + num(py(y)) + "\" x2=\"" + num(left) + "\" y2=\"" +
           num(py(y)) + "\"/>\n";
  }
  out += "</g>\n";
  out += "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"black\">\n";
  for (double x : {x_min, x_max}) {
    out += "<text x=\"" + num(px(x)) + "\" y=\"" + num(py(0) + 18) + "\" text-anchor=\"middle\">" +
           format_number(x) + "</text>\n";
  }
  for (double y : {0.0, 0.5, 1.0}) {
    out += "<text x=\"" + num(left - 8) + "\" y=\"" + num(py(y) + 4) + "\" text-anchor=\"end\">" + format_number(y) +
           "</text>\n";
  }
  out += "</g>\n";

  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* color = kColors[i % std::size(kColors)];
    out += "<polyline fill=\"none\" stroke=\"" + std::string(color) + "\" stroke-width=\"1.5\" points=\"";
    bool sep = false;
    for (const auto& p : series[i].points()) {
      if (sep) out += ' ';
      out += num(px(p.x)) + "," + num(py(p.y.value()));
      sep = true;
    }
    out += "\"/>\n";
  }

  // legend
  out += "<g font-family=\"sans-serif\" font-size=\"11\">\n";
  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* color = kColors[i % std::size(kColors)];
    const double ly = top + 14.0 * static_cast<double>(i) + 6;
    const double lx = left + plot_w - 120;
    out += "<line x1=\"" + num(lx) + "\" y1=\"" + num(ly) + "\" x2=\"" + num(lx + 18) + "\" y2=\"" + num(ly) +
           "\" stroke=\"" + color + "\" stroke-width=\"2\"/>\n";
    out += "<text x=\"" + num(lx + 24) + "\" y=\"" + num(ly + 4) + "\">" + escape(series[i].label()) + "</text>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace graded::plot
