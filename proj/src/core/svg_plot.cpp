#include "svg_plot.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "errors.hpp"

namespace abflux {
namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 600.0;
constexpr double kTitleBand = 30.0;
constexpr double kMarginLeft = 80.0;
constexpr double kMarginRight = 170.0;
constexpr double kMarginTop = 28.0;
constexpr double kMarginBottom = 42.0;

constexpr std::array<const char*, 8> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                                 "#9467bd", "#8c564b", "#e377c2", "#17becf"};

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  if (std::string_view(buf) == "-0.00") return "0.00";
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", std::abs(v) < 1e-12 ? 0.0 : v);
  return buf;
}

std::string escape(std::string_view text) {
  std::string out;
  for (char c : text) {
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

double nice_step(double span, int target_ticks) {
  const double raw = span / target_ticks;
  const double magnitude = std::pow(10.0, std::floor(std::log10(raw)));
  const double fraction = raw / magnitude;
  const double nice = fraction < 1.5 ? 1.0 : fraction < 3.0 ? 2.0 : fraction < 7.0 ? 5.0 : 10.0;
  return nice * magnitude;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void include(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void pad() {
    if (!(hi > lo)) {
      const double d = std::max(std::abs(lo) * 0.1, 1.0);
      lo -= d;
      hi += d;
    }
  }
};

void render_panel(std::ostringstream& out, const PlotPanel& panel, double top, double height) {
  const double left = kMarginLeft;
  const double right = kWidth - kMarginRight;
  const double plot_top = top + kMarginTop;
  const double plot_bottom = top + height - kMarginBottom;

  Range xr;
  Range yr;
  for (const auto& s : panel.series) {
    if (s.x.size() != s.y.size()) throw DomainError("plot series x/y length mismatch");
    for (double v : s.x) xr.include(v);
    for (double v : s.y) yr.include(v);
  }
  if (!std::isfinite(xr.lo)) {
    xr = {0.0, 1.0};
    yr = {0.0, 1.0};
  }
  xr.pad();
  yr.pad();
  const double y_step = nice_step(yr.hi - yr.lo, 5);
  yr.lo = std::floor(yr.lo / y_step) * y_step;
  yr.hi = std::ceil(yr.hi / y_step) * y_step;
  const double x_step = nice_step(xr.hi - xr.lo, 6);

  auto px = [&](double x) { return left + (x - xr.lo) / (xr.hi - xr.lo) * (right - left); };
  auto py = [&](double y) {
    return plot_bottom - (y - yr.lo) / (yr.hi - yr.lo) * (plot_bottom - plot_top);
  };

  out << "<g>\n";
  out << "<text x=\"" << fixed(0.5 * (left + right)) << "\" y=\"" << fixed(top + 18.0)
      << "\" text-anchor=\"middle\" font-size=\"14\">" << escape(panel.title) << "</text>\n";
  out << "<rect x=\"" << fixed(left) << "\" y=\"" << fixed(plot_top) << "\" width=\""
      << fixed(right - left) << "\" height=\"" << fixed(plot_bottom - plot_top)
      << "\" fill=\"none\" stroke=\"#000\"/>\n";

  for (double y = yr.lo; y <= yr.hi + 0.5 * y_step; y += y_step) {
    out << "<line x1=\"" << fixed(left) << "\" y1=\"" << fixed(py(y)) << "\" x2=\""
        << fixed(right) << "\" y2=\"" << fixed(py(y)) << "\" stroke=\"#ddd\"/>\n";
    out << "<text x=\"" << fixed(left - 6.0) << "\" y=\"" << fixed(py(y) + 4.0)
        << "\" text-anchor=\"end\" font-size=\"11\">" << tick_label(y) << "</text>\n";
  }
  for (double x = std::ceil(xr.lo / x_step) * x_step; x <= xr.hi + 1e-9 * x_step; x += x_step) {
    out << "<text x=\"" << fixed(px(x)) << "\" y=\"" << fixed(plot_bottom + 16.0)
        << "\" text-anchor=\"middle\" font-size=\"11\">" << tick_label(x) << "</text>\n";
  }
  out << "<text x=\"" << fixed(0.5 * (left + right)) << "\" y=\"" << fixed(plot_bottom + 34.0)
      << "\" text-anchor=\"middle\" font-size=\"12\">" << escape(panel.x_label) << "</text>\n";
  const double mid_y = 0.5 * (plot_top + plot_bottom);
  out << "<text x=\"18\" y=\"" << fixed(mid_y) << "\" transform=\"rotate(-90 18 " << fixed(mid_y)
      << ")\" text-anchor=\"middle\" font-size=\"12\">" << escape(panel.y_label) << "</text>\n";

  for (std::size_t i = 0; i < panel.series.size(); ++i) {
    const auto& s = panel.series[i];
    const char* color = kPalette[i % kPalette.size()];
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t j = 0; j < s.x.size(); ++j) {
      out << (j ? " " : "") << fixed(px(s.x[j])) << ',' << fixed(py(s.y[j]));
    }
    out << "\"/>\n";
    for (std::size_t j = 0; j < s.x.size(); ++j) {
      out << "<circle cx=\"" << fixed(px(s.x[j])) << "\" cy=\"" << fixed(py(s.y[j]))
          << "\" r=\"2.5\" fill=\"" << color << "\"/>\n";
    }
    const double legend_y = plot_top + 14.0 * (i + 1);
    if (legend_y < plot_bottom) {
      out << "<line x1=\"" << fixed(right + 10.0) << "\" y1=\"" << fixed(legend_y - 4.0)
          << "\" x2=\"" << fixed(right + 28.0) << "\" y2=\"" << fixed(legend_y - 4.0)
          << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
      out << "<text x=\"" << fixed(right + 32.0) << "\" y=\"" << fixed(legend_y)
          << "\" font-size=\"11\">" << escape(s.label) << "</text>\n";
    }
  }
  out << "</g>\n";
}

}  // namespace

std::string render_svg(std::span<const PlotPanel> panels, std::string_view title) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" "
         "viewBox=\"0 0 800 600\" font-family=\"sans-serif\">\n";
  out << "<rect width=\"800\" height=\"600\" fill=\"#fff\"/>\n";
  out << "<text x=\"400\" y=\"20\" text-anchor=\"middle\" font-size=\"15\">" << escape(title)
      << "</text>\n";
  const double band = panels.empty() ? 0.0 : (kHeight - kTitleBand) / panels.size();
  for (std::size_t i = 0; i < panels.size(); ++i) {
    render_panel(out, panels[i], kTitleBand + i * band, band);
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace abflux
