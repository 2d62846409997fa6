#pragma once

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include "barcode/diagnostics.hpp"
#include "barcode/interval.hpp"

namespace barcode {

namespace detail {

struct PlotScale {
  double lo = 0.0;
  double hi = 1.0;
  bool has_bars = false;
};

inline PlotScale plot_scale(const Barcode& b) {
  PlotScale s;
  if (b.empty()) return s;
  s.has_bars = true;
  s.lo = b.bars().front().birth();
  s.hi = s.lo;
  for (const auto& bar : b.bars()) {
    s.lo = std::min(s.lo, bar.birth());
    s.hi = std::max(s.hi, bar.birth());
    if (!bar.infinite()) s.hi = std::max(s.hi, bar.death());
  }
  if (s.hi == s.lo) s.hi = s.lo + 1.0;
  return s;
}

inline std::string fixed2(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.2f", x);
  return buf;
}

}  // namespace detail

// Aligned ASCII rows, one bar each, over a shared action axis. Open births
// are marked '(', finite deaths ']', semi-infinite bars run off the right
// edge with '>'.
inline std::string render_text(const Barcode& b) {
  const int width = 60;
  const int label_width = 22;
  auto scale = detail::plot_scale(b);
  auto col = [&](double x) {
    double f = (x - scale.lo) / (scale.hi - scale.lo);
    return static_cast<int>(f * (width - 1) + 0.5);
  };
  std::string out;
  std::string axis(label_width, ' ');
  axis += format_double(scale.has_bars ? scale.lo : 0.0);
  std::string hi_label = format_double(scale.has_bars ? scale.hi : 1.0);
  while (axis.size() + hi_label.size() < static_cast<std::size_t>(label_width + width))
    axis += ' ';
  axis += hi_label;
  out += axis + "\n";
  out += std::string(label_width, ' ') + std::string(width, '-') + "\n";
  for (const auto& bar : b.bars()) {
    std::string label = "(" + format_double(bar.birth()) + ", " +
                        (bar.infinite() ? "inf)" : format_double(bar.death()) + "]");
    label.resize(label_width, ' ');
    std::string row(width, ' ');
    int from = col(bar.birth());
    int to = bar.infinite() ? width - 1 : col(bar.death());
    for (int c = from; c <= to; ++c) row[c] = '=';
    row[from] = '(';
    row[to] = bar.infinite() ? '>' : ']';
    out += label + row + "\n";
  }
  return out;
}

// SVG 1.1 rendering: one horizontal segment per bar over an action axis,
// arrowheads for semi-infinite bars.
inline std::string render_svg(const Barcode& b) {
  const double margin = 48.0, row_height = 22.0, plot_width = 560.0;
  auto scale = detail::plot_scale(b);
  const int rows = static_cast<int>(b.size());
  const double height = margin * 2 + std::max(rows, 1) * row_height;
  const double width = margin * 2 + plot_width;
  auto x_of = [&](double v) {
    return margin + (v - scale.lo) / (scale.hi - scale.lo) * plot_width;
  };
  using detail::fixed2;
  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         fixed2(width) + "\" height=\"" + fixed2(height) + "\" viewBox=\"0 0 " +
         fixed2(width) + " " + fixed2(height) + "\">\n";
  double axis_y = height - margin;
  svg += "  <line class=\"axis\" x1=\"" + fixed2(margin) + "\" y1=\"" + fixed2(axis_y) +
         "\" x2=\"" + fixed2(margin + plot_width) + "\" y2=\"" + fixed2(axis_y) +
         "\" stroke=\"black\"/>\n";
  if (scale.has_bars) {
    svg += "  <text x=\"" + fixed2(margin) + "\" y=\"" + fixed2(axis_y + 16) +
           "\" font-size=\"11\" text-anchor=\"middle\">" + format_double(scale.lo) +
           "</text>\n";
    svg += "  <text x=\"" + fixed2(margin + plot_width) + "\" y=\"" + fixed2(axis_y + 16) +
           "\" font-size=\"11\" text-anchor=\"middle\">" + format_double(scale.hi) +
           "</text>\n";
  }
  int row = 0;
  for (const auto& bar : b.bars()) {
    double y = margin + row * row_height + row_height / 2;
    double x1 = x_of(bar.birth());
    double x2 = bar.infinite() ? margin + plot_width : x_of(bar.death());
    svg += "  <line class=\"bar\" x1=\"" + fixed2(x1) + "\" y1=\"" + fixed2(y) +
           "\" x2=\"" + fixed2(x2) + "\" y2=\"" + fixed2(y) +
           "\" stroke=\"black\" stroke-width=\"3\"/>\n";
    svg += "  <circle cx=\"" + fixed2(x1) + "\" cy=\"" + fixed2(y) +
           "\" r=\"3.5\" fill=\"white\" stroke=\"black\"/>\n";
    if (bar.infinite()) {
      svg += "  <path class=\"arrow\" d=\"M " + fixed2(x2) + " " + fixed2(y - 5) + " L " +
             fixed2(x2 + 10) + " " + fixed2(y) + " L " + fixed2(x2) + " " +
             fixed2(y + 5) + " Z\" fill=\"black\"/>\n";
    } else {
      svg += "  <circle cx=\"" + fixed2(x2) + "\" cy=\"" + fixed2(y) +
             "\" r=\"3.5\" fill=\"black\"/>\n";
    }
    ++row;
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace barcode
