#include "reupload/lab/records.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace reupload::lab {

namespace {

const char* const kHeader =
    "experiment,N,L,P,M_train,seed,train_error,test_error,train_acc,"
    "test_acc,h_gap_train,h_gap_test,div_pre,div_post,bound,seconds";

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

template <typename T>
std::string cell(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_floating_point_v<T>) {
    return fmt(*v);
  } else {
    return std::to_string(*v);
  }
}

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream row(line);
  std::string field;
  while (std::getline(row, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

template <typename T, typename Parse>
std::optional<T> parse_cell(const std::string& field, Parse parse) {
  if (field.empty()) return std::nullopt;
  return static_cast<T>(parse(field));
}

struct MetricColumn {
  const char* name;
  std::optional<double> RunRecord::* member;
};

constexpr MetricColumn kMetrics[] = {
    {"train_error", &RunRecord::train_error},
    {"test_error", &RunRecord::test_error},
    {"train_acc", &RunRecord::train_acc},
    {"test_acc", &RunRecord::test_acc},
    {"h_gap_train", &RunRecord::h_gap_train},
    {"h_gap_test", &RunRecord::h_gap_test},
    {"div_pre", &RunRecord::div_pre},
    {"div_post", &RunRecord::div_post},
    {"bound", &RunRecord::bound},
};

}  // namespace

void write_records_csv(std::ostream& out, std::span<const RunRecord> records) {
  out << kHeader << '\n';
  for (const auto& r : records) {
    out << r.experiment << ',' << cell(r.n_qubits) << ',' << cell(r.layers)
        << ',' << cell(r.repetitions) << ',' << cell(r.train_size) << ','
        << cell(r.seed);
    for (const auto& m : kMetrics) out << ',' << cell(r.*(m.member));
    out << ',' << fmt(r.seconds) << '\n';
  }
}

void write_records_csv(const std::string& path,
                       std::span<const RunRecord> records) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_records_csv(out, records);
  if (!out) throw std::runtime_error("failed writing " + path);
}

std::vector<RunRecord> read_records_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kHeader) {
    throw std::runtime_error("unexpected result CSV header");
  }
  std::vector<RunRecord> records;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_row(line);
    if (f.size() != 16) {
      throw std::runtime_error("result CSV row has wrong width");
    }
    RunRecord r;
    r.experiment = f[0];
    r.n_qubits = parse_cell<int>(f[1], [](const std::string& s) { return std::stoi(s); });
    r.layers = parse_cell<int>(f[2], [](const std::string& s) { return std::stoi(s); });
    r.repetitions = parse_cell<int>(f[3], [](const std::string& s) { return std::stoi(s); });
    r.train_size = parse_cell<std::size_t>(f[4], [](const std::string& s) { return std::stoull(s); });
    r.seed = parse_cell<std::uint64_t>(f[5], [](const std::string& s) { return std::stoull(s); });
    for (std::size_t i = 0; i < std::size(kMetrics); ++i) {
      r.*(kMetrics[i].member) = parse_cell<double>(
          f[6 + i], [](const std::string& s) { return std::stod(s); });
    }
    r.seconds = f[15].empty() ? 0.0 : std::stod(f[15]);
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<RunRecord> read_records_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_records_csv(in);
}

Aggregate aggregate(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("nothing to aggregate");
  Aggregate a;
  a.count = values.size();
  a.min = a.max = values.front();
  double sum = 0.0;
  for (double v : values) {
    sum += v;
    a.min = std::min(a.min, v);
    a.max = std::max(a.max, v);
  }
  a.mean = sum / static_cast<double>(values.size());
  return a;
}

void write_summary_json(std::ostream& out,
                        std::span<const RunRecord> records) {
  using json = nlohmann::ordered_json;

  struct Key {
    std::optional<int> n, l, p;
    std::optional<std::size_t> m;
    bool operator==(const Key&) const = default;
  };
  std::vector<Key> order;
  std::vector<std::vector<const RunRecord*>> groups;
  for (const auto& r : records) {
    const Key k{r.n_qubits, r.layers, r.repetitions, r.train_size};
    auto it = std::find(order.begin(), order.end(), k);
    if (it == order.end()) {
      order.push_back(k);
      groups.emplace_back();
      it = std::prev(order.end());
    }
    groups[static_cast<std::size_t>(it - order.begin())].push_back(&r);
  }

  json root;
  root["experiment"] = records.empty() ? "" : records.front().experiment;
  root["groups"] = json::array();
  for (std::size_t g = 0; g < groups.size(); ++g) {
    json entry;
    json point;
    if (order[g].n) point["N"] = *order[g].n;
    if (order[g].l) point["L"] = *order[g].l;
    if (order[g].p) point["P"] = *order[g].p;
    if (order[g].m) point["M_train"] = *order[g].m;
    entry["point"] = std::move(point);
    entry["seeds"] = groups[g].size();
    json metrics;
    for (const auto& m : kMetrics) {
      std::vector<double> values;
      for (const RunRecord* r : groups[g]) {
        if (const auto& v = r->*(m.member)) values.push_back(*v);
      }
      if (values.empty()) continue;
      const Aggregate a = aggregate(values);
      metrics[m.name] = {{"mean", a.mean}, {"min", a.min}, {"max", a.max}};
    }
    entry["metrics"] = std::move(metrics);
    root["groups"].push_back(std::move(entry));
  }
  out << root.dump(2) << '\n';
}

void write_summary_json(const std::string& path,
                        std::span<const RunRecord> records) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_summary_json(out, records);
  if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace reupload::lab
