#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace abflux {

struct PlotSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

struct PlotPanel {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<PlotSeries> series;
};

/// Static line-and-marker plot, panels stacked vertically in a fixed
/// 800x600 viewBox. No scripting; output depends only on the input values.
std::string render_svg(std::span<const PlotPanel> panels, std::string_view title);

}  // namespace abflux
