#include "bregman/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace bregman {

namespace {

constexpr double kWidth = 640.0, kHeight = 480.0, kMargin = 64.0;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace

std::string emit_plot(const RunRecord& record, const std::string& column) {
  if (record.rows.empty()) throw std::invalid_argument("emit_plot: empty record");
  const int yc = record.column(column);
  if (yc < 0) throw std::invalid_argument("emit_plot: unknown column '" + column + "'");
  const std::string x_label =
      record.log_x ? "log10(" + record.header[0] + ")" : record.header[0];

  std::vector<double> xs, ys;
  for (const auto& row : record.rows) {
    double x = row[0];
    const double y = row[static_cast<size_t>(yc)];
    if (!std::isfinite(y)) continue;
    if (record.log_x) {
      if (!(x > 0.0)) continue;
      x = std::log10(x);
    }
    xs.push_back(x);
    ys.push_back(y);
  }
  if (xs.empty()) throw std::invalid_argument("emit_plot: no plottable rows");

  double x_lo = *std::min_element(xs.begin(), xs.end());
  double x_hi = *std::max_element(xs.begin(), xs.end());
  double y_lo = *std::min_element(ys.begin(), ys.end());
  double y_hi = *std::max_element(ys.begin(), ys.end());
  if (x_hi - x_lo <= 0.0) x_hi = x_lo + 1.0;
  if (y_hi - y_lo <= 0.0) y_hi = y_lo + 1.0;

  const double plot_w = kWidth - 2.0 * kMargin;
  const double plot_h = kHeight - 2.0 * kMargin;
  auto px = [&](double x) { return kMargin + (x - x_lo) / (x_hi - x_lo) * plot_w; };
  auto py = [&](double y) {
    return kHeight - kMargin - (y - y_lo) / (y_hi - y_lo) * plot_h;
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
      << kHeight << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // Axes.
  svg << "<line x1=\"" << num(kMargin) << "\" y1=\"" << num(kHeight - kMargin)
      << "\" x2=\"" << num(kWidth - kMargin) << "\" y2=\""
      << num(kHeight - kMargin) << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << num(kMargin) << "\" y1=\"" << num(kMargin)
      << "\" x2=\"" << num(kMargin) << "\" y2=\"" << num(kHeight - kMargin)
      << "\" stroke=\"black\"/>\n";
  // Ticks.
  for (int t = 0; t <= 4; ++t) {
    const double fx = x_lo + (x_hi - x_lo) * t / 4.0;
    const double fy = y_lo + (y_hi - y_lo) * t / 4.0;
    svg << "<line x1=\"" << num(px(fx)) << "\" y1=\"" << num(kHeight - kMargin)
        << "\" x2=\"" << num(px(fx)) << "\" y2=\""
        << num(kHeight - kMargin + 5.0) << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << num(px(fx)) << "\" y=\""
        << num(kHeight - kMargin + 20.0)
        << "\" font-size=\"11\" text-anchor=\"middle\">" << num(fx)
        << "</text>\n";
    svg << "<line x1=\"" << num(kMargin - 5.0) << "\" y1=\"" << num(py(fy))
        << "\" x2=\"" << num(kMargin) << "\" y2=\"" << num(py(fy))
        << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << num(kMargin - 8.0) << "\" y=\"" << num(py(fy) + 4.0)
        << "\" font-size=\"11\" text-anchor=\"end\">" << num(fy)
        << "</text>\n";
  }
  // Axis labels.
  svg << "<text x=\"" << num(kWidth / 2.0) << "\" y=\"" << num(kHeight - 16.0)
      << "\" font-size=\"13\" text-anchor=\"middle\">" << x_label
      << "</text>\n";
  svg << "<text x=\"" << num(18.0) << "\" y=\"" << num(kHeight / 2.0)
      << "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
      << num(kHeight / 2.0) << ")\">" << column << "</text>\n";
  // Series.
  svg << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
  for (size_t i = 0; i < xs.size(); ++i) {
    svg << (i ? " " : "") << num(px(xs[i])) << "," << num(py(ys[i]));
  }
  svg << "\"/>\n</svg>\n";
  return svg.str();
}

}  // namespace bregman
