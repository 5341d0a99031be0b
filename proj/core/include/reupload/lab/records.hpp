#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace reupload::lab {

// One row of an experiment result table. Unset fields render as empty CSV
// cells (not every experiment produces every metric).
struct RunRecord {
  std::string experiment;
  std::optional<int> n_qubits;
  std::optional<int> layers;
  std::optional<int> repetitions;
  std::optional<std::size_t> train_size;
  std::optional<std::uint64_t> seed;
  std::optional<double> train_error;
  std::optional<double> test_error;
  std::optional<double> train_acc;
  std::optional<double> test_acc;
  std::optional<double> h_gap_train;
  std::optional<double> h_gap_test;
  std::optional<double> div_pre;
  std::optional<double> div_post;
  std::optional<double> bound;
  double seconds = 0.0;
};

// Column order: experiment,N,L,P,M_train,seed,train_error,test_error,
// train_acc,test_acc,h_gap_train,h_gap_test,div_pre,div_post,bound,seconds
void write_records_csv(std::ostream& out, std::span<const RunRecord> records);
void write_records_csv(const std::string& path,
                       std::span<const RunRecord> records);

std::vector<RunRecord> read_records_csv(std::istream& in);
std::vector<RunRecord> read_records_csv(const std::string& path);

struct Aggregate {
  double mean = 0.0;
  double min = 0.0;
  double max = 0.0;
  std::size_t count = 0;
};

Aggregate aggregate(std::span<const double> values);

// Per-grid-point (N,L,P,M_train) mean/min/max of every present metric,
// grouped in first-appearance order.
void write_summary_json(std::ostream& out, std::span<const RunRecord> records);
void write_summary_json(const std::string& path,
                        std::span<const RunRecord> records);

}  // namespace reupload::lab
