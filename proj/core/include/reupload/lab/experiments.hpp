#pragma once

#include "reupload/lab/records.hpp"
#include "reupload/model/train.hpp"

namespace reupload::lab {

// Grid + execution settings for one experiment family. default_config()
// fills in the per-id defaults; individual fields may be overridden before
// running.
struct ExperimentConfig {
  std::string id;

  std::vector<int> n_grid;
  std::vector<int> l_grid;
  std::vector<int> p_grid;
  std::vector<std::size_t> size_grid;  // scaling study train sizes
  std::vector<int> q_grid;             // quantization bit grid
  std::vector<std::uint64_t> seeds;

  model::TrainConfig train;
  double sigma2 = 0.8;
  double margin = 0.3;
  std::size_t train_size = 600;
  std::size_t test_size = 10000;
  std::size_t mc_samples = 100000;
  double eps = 0.1;
  int jobs = 1;

  void validate() const;
};

extern const char* const kExperimentIds[8];

// Profile is one of "paper" (full sizes), "desk" (reduced seeds/epochs for
// a workstation), "ci" (small smoke-test sizes).
ExperimentConfig default_config(const std::string& id,
                                const std::string& profile = "desk");

// Dispatch on cfg.id. Record order is deterministic (grid-major, then seed)
// and independent of cfg.jobs.
std::vector<RunRecord> run_experiment(const ExperimentConfig& cfg);

std::vector<RunRecord> run_divergence(const ExperimentConfig& cfg);
std::vector<RunRecord> run_linsep_sweep(const ExperimentConfig& cfg);
std::vector<RunRecord> run_same_dataset(const ExperimentConfig& cfg);
std::vector<RunRecord> run_regression(const ExperimentConfig& cfg);
std::vector<RunRecord> run_scaling_study(const ExperimentConfig& cfg);
std::vector<RunRecord> run_counter_example(const ExperimentConfig& cfg);
std::vector<RunRecord> run_bound_sweep(const ExperimentConfig& cfg);
// One record per (instance, q); the M_train column carries q since the
// quantization sweep has no training set.
std::vector<RunRecord> run_approx_check(const ExperimentConfig& cfg);

}  // namespace reupload::lab
