#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "reupload/lab/records.hpp"

namespace reupload::tools {

struct PlotSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> mean;
  std::vector<double> min;
  std::vector<double> max;
};

struct PlotData {
  std::string metric;
  std::string x_axis;
  std::vector<PlotSeries> series;
};

// Aggregates records into one series per group value (mean/min/max over
// seeds at each x). x_axis and group_by are column names: "L", "P", "N" or
// "M_train". The "bound" metric, when present, becomes its own series.
PlotData build_plot_data(std::span<const lab::RunRecord> records,
                         const std::string& metric, const std::string& x_axis,
                         const std::string& group_by);

// Standalone SVG: one polyline per series plus a translucent min/max band.
void write_svg(std::ostream& out, const PlotData& data, bool log_y);
void write_svg(const std::string& path, const PlotData& data, bool log_y);

}  // namespace reupload::tools
