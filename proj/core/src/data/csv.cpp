#include "reupload/data/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace reupload::data {

namespace {

std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_value(const std::string& field, std::size_t line) {
  std::size_t pos = 0;
  double v;
  try {
    v = std::stod(field, &pos);
  } catch (const std::exception&) {
    throw std::runtime_error("malformed CSV value on line " +
                             std::to_string(line) + ": '" + field + "'");
  }
  if (pos != field.size()) {
    throw std::runtime_error("malformed CSV value on line " +
                             std::to_string(line) + ": '" + field + "'");
  }
  return v;
}

}  // namespace

void write_dataset_csv(std::ostream& out, const Dataset& ds) {
  for (int d = 0; d < ds.dim; ++d) out << 'f' << d << ',';
  out << "label\n";
  for (const auto& s : ds.samples) {
    if (static_cast<int>(s.features.size()) != ds.dim) {
      throw std::invalid_argument("sample width differs from dataset dim");
    }
    for (double f : s.features) out << format_value(f) << ',';
    out << format_value(s.label) << '\n';
  }
}

void write_dataset_csv(const std::string& path, const Dataset& ds) {
  std::ofstream out(path, std::ios::binary);  // binary: keep LF on all hosts
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_dataset_csv(out, ds);
  if (!out) throw std::runtime_error("failed writing " + path);
}

Dataset read_dataset_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw std::runtime_error("CSV is missing its header");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();

  int dim = 0;
  {
    std::stringstream header(line);
    std::string field;
    bool saw_label = false;
    while (std::getline(header, field, ',')) {
      if (field == "label") {
        saw_label = true;
        break;
      }
      if (field != "f" + std::to_string(dim)) {
        throw std::runtime_error("unexpected CSV header field '" + field + "'");
      }
      ++dim;
    }
    if (!saw_label) {
      throw std::runtime_error("CSV header is missing the label column");
    }
  }

  Dataset ds;
  ds.dim = dim;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::stringstream row(line);
    std::string field;
    Sample s;
    while (std::getline(row, field, ',')) {
      s.features.push_back(parse_value(field, line_no));
    }
    if (static_cast<int>(s.features.size()) != dim + 1) {
      throw std::runtime_error("row width mismatch on line " +
                               std::to_string(line_no));
    }
    s.label = s.features.back();
    s.features.pop_back();
    ds.samples.push_back(std::move(s));
  }
  return ds;
}

Dataset read_dataset_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_dataset_csv(in);
}

}  // namespace reupload::data
