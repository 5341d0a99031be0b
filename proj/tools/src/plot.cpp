#include "plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace reupload::tools {

namespace {

using lab::RunRecord;

std::optional<double> metric_value(const RunRecord& r,
                                   const std::string& name) {
  if (name == "train_error") return r.train_error;
  if (name == "test_error") return r.test_error;
  if (name == "train_acc") return r.train_acc;
  if (name == "test_acc") return r.test_acc;
  if (name == "h_gap_train") return r.h_gap_train;
  if (name == "h_gap_test") return r.h_gap_test;
  if (name == "div_pre") return r.div_pre;
  if (name == "div_post") return r.div_post;
  if (name == "bound") return r.bound;
  throw std::invalid_argument("unknown metric column '" + name + "'");
}

std::optional<double> axis_value(const RunRecord& r, const std::string& name) {
  if (name == "L") {
    return r.layers ? std::optional<double>(*r.layers) : std::nullopt;
  }
  if (name == "P") {
    return r.repetitions ? std::optional<double>(*r.repetitions)
                         : std::nullopt;
  }
  if (name == "N") {
    return r.n_qubits ? std::optional<double>(*r.n_qubits) : std::nullopt;
  }
  if (name == "M_train") {
    return r.train_size ? std::optional<double>(static_cast<double>(*r.train_size))
                        : std::nullopt;
  }
  throw std::invalid_argument("unknown axis column '" + name + "'");
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

PlotSeries make_series(std::span<const RunRecord> records,
                       const std::string& metric, const std::string& x_axis,
                       const std::string& label, auto&& keep) {
  std::vector<double> xs;
  for (const auto& r : records) {
    if (!keep(r)) continue;
    const auto x = axis_value(r, x_axis);
    if (x && std::find(xs.begin(), xs.end(), *x) == xs.end()) {
      xs.push_back(*x);
    }
  }
  std::sort(xs.begin(), xs.end());

  PlotSeries s;
  s.label = label;
  for (double x : xs) {
    std::vector<double> values;
    for (const auto& r : records) {
      if (!keep(r)) continue;
      const auto rx = axis_value(r, x_axis);
      if (!rx || *rx != x) continue;
      if (const auto v = metric_value(r, metric)) values.push_back(*v);
    }
    if (values.empty()) continue;
    const auto a = lab::aggregate(values);
    s.x.push_back(x);
    s.mean.push_back(a.mean);
    s.min.push_back(a.min);
    s.max.push_back(a.max);
  }
  return s;
}

}  // namespace

PlotData build_plot_data(std::span<const lab::RunRecord> records,
                         const std::string& metric, const std::string& x_axis,
                         const std::string& group_by) {
  if (records.empty()) throw std::invalid_argument("no records to plot");

  PlotData data;
  data.metric = metric;
  data.x_axis = x_axis;

  std::vector<double> groups;
  for (const auto& r : records) {
    const auto g = axis_value(r, group_by);
    if (g && std::find(groups.begin(), groups.end(), *g) == groups.end()) {
      groups.push_back(*g);
    }
  }
  std::sort(groups.begin(), groups.end());
  if (groups.empty()) groups.push_back(0.0);  // ungrouped fallback

  for (double g : groups) {
    auto s = make_series(records, metric, x_axis,
                         group_by + "=" + fmt(g), [&](const RunRecord& r) {
                           const auto v = axis_value(r, group_by);
                           return v && *v == g;
                         });
    if (!s.x.empty()) data.series.push_back(std::move(s));
  }
  if (data.series.empty()) {
    // No group column present: one series over everything.
    auto s = make_series(records, metric, x_axis, metric,
                         [](const RunRecord&) { return true; });
    if (!s.x.empty()) data.series.push_back(std::move(s));
  }
  if (metric != "bound") {
    auto s = make_series(records, "bound", x_axis, "bound",
                         [](const RunRecord&) { return true; });
    if (!s.x.empty()) data.series.push_back(std::move(s));
  }
  if (data.series.empty()) {
    throw std::invalid_argument("metric '" + metric + "' has no values");
  }
  return data;
}

void write_svg(std::ostream& out, const PlotData& data, bool log_y) {
  constexpr double kW = 800.0, kH = 560.0;
  constexpr double kLeft = 70.0, kRight = 30.0, kTop = 40.0, kBottom = 50.0;
  constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c",
                                     "#9467bd", "#ff7f0e", "#8c564b",
                                     "#e377c2", "#7f7f7f"};

  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (const auto& s : data.series) {
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      xmin = std::min(xmin, s.x[i]);
      xmax = std::max(xmax, s.x[i]);
      ymin = std::min(ymin, s.min[i]);
      ymax = std::max(ymax, s.max[i]);
    }
  }
  if (log_y) ymin = std::max(ymin, 1e-12);
  if (xmax == xmin) {
    xmin -= 0.5;
    xmax += 0.5;
  }
  if (ymax <= ymin) ymax = ymin + (log_y ? ymin : 1.0);

  const auto ty = [&](double v) {
    double t;
    if (log_y) {
      t = (std::log10(std::max(v, ymin)) - std::log10(ymin)) /
          (std::log10(ymax) - std::log10(ymin));
    } else {
      t = (v - ymin) / (ymax - ymin);
    }
    return kH - kBottom - t * (kH - kTop - kBottom);
  };
  const auto tx = [&](double v) {
    return kLeft + (v - xmin) / (xmax - xmin) * (kW - kLeft - kRight);
  };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW
      << "\" height=\"" << kH << "\" viewBox=\"0 0 " << kW << ' ' << kH
      << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << kW / 2 << "\" y=\"20\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"15\">" << data.metric
      << " vs " << data.x_axis << "</text>\n";

  // axes
  out << "<line x1=\"" << kLeft << "\" y1=\"" << kH - kBottom << "\" x2=\""
      << kW - kRight << "\" y2=\"" << kH - kBottom
      << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft
      << "\" y2=\"" << kH - kBottom << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    double v;
    if (log_y) {
      v = std::pow(10.0, std::log10(ymin) +
                             i * (std::log10(ymax) - std::log10(ymin)) / 4.0);
    } else {
      v = ymin + i * (ymax - ymin) / 4.0;
    }
    out << "<text x=\"" << kLeft - 8 << "\" y=\"" << fmt(ty(v) + 4)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
        << "font-size=\"11\">" << fmt(v) << "</text>\n";
  }
  for (int i = 0; i <= 4; ++i) {
    const double v = xmin + i * (xmax - xmin) / 4.0;
    out << "<text x=\"" << fmt(tx(v)) << "\" y=\"" << kH - kBottom + 18
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        << "font-size=\"11\">" << fmt(v) << "</text>\n";
  }

  for (std::size_t si = 0; si < data.series.size(); ++si) {
    const auto& s = data.series[si];
    const char* color = kColors[si % std::size(kColors)];
    if (s.x.size() > 1) {
      // min/max band
      out << "<polygon fill=\"" << color << "\" fill-opacity=\"0.15\" "
          << "stroke=\"none\" points=\"";
      for (std::size_t i = 0; i < s.x.size(); ++i) {
        out << fmt(tx(s.x[i])) << ',' << fmt(ty(s.max[i])) << ' ';
      }
      for (std::size_t i = s.x.size(); i-- > 0;) {
        out << fmt(tx(s.x[i])) << ',' << fmt(ty(s.min[i]))
            << (i == 0 ? "" : " ");
      }
      out << "\"/>\n";
      out << "<polyline fill=\"none\" stroke=\"" << color
          << "\" stroke-width=\"2\" points=\"";
      for (std::size_t i = 0; i < s.x.size(); ++i) {
        out << fmt(tx(s.x[i])) << ',' << fmt(ty(s.mean[i]))
            << (i + 1 == s.x.size() ? "" : " ");
      }
      out << "\"/>\n";
    }
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      out << "<circle cx=\"" << fmt(tx(s.x[i])) << "\" cy=\""
          << fmt(ty(s.mean[i])) << "\" r=\"3\" fill=\"" << color << "\"/>\n";
    }
    out << "<text x=\"" << kW - kRight - 6 << "\" y=\""
        << kTop + 16.0 * static_cast<double>(si + 1)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
        << "font-size=\"12\" fill=\"" << color << "\">" << s.label
        << "</text>\n";
  }
  out << "</svg>\n";
}

void write_svg(const std::string& path, const PlotData& data, bool log_y) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_svg(out, data, log_y);
  if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace reupload::tools
