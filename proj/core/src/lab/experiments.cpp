#include "reupload/lab/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "reupload/data/generators.hpp"
#include "reupload/data/quantize.hpp"
#include "reupload/lab/pool.hpp"
#include "reupload/pauli/bounds.hpp"
#include "reupload/pauli/divergence.hpp"
#include "reupload/pauli/expected.hpp"
#include "reupload/rng.hpp"

namespace reupload::lab {

namespace {

using Clock = std::chrono::steady_clock;

// Salt for the test-set stream so it never reuses a training seed.
constexpr std::uint64_t kTestSalt = 0x7e57da7a5eedULL;

double elapsed(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

model::TrainConfig seeded(const ExperimentConfig& cfg, std::uint64_t seed) {
  model::TrainConfig tc = cfg.train;
  tc.seed = seed;
  return tc;
}

void fill_classification_metrics(RunRecord& r, const model::TrainResult& res,
                                 const data::Dataset& train_ds,
                                 const data::Dataset& test_ds) {
  const auto& h = res.hypothesis;
  r.train_error = res.history.empty() ? model::empirical_error(h, train_ds)
                                      : res.best_error;
  r.test_error = model::empirical_error(h, test_ds);
  r.train_acc = model::accuracy(h, train_ds);
  r.test_acc = model::accuracy(h, test_ds);
  r.h_gap_train = model::hypothesis_gap(h, train_ds);
  r.h_gap_test = model::hypothesis_gap(h, test_ds);
}

void fill_regression_metrics(RunRecord& r, const model::TrainResult& res,
                             const data::Dataset& train_ds,
                             const data::Dataset& test_ds) {
  const auto& h = res.hypothesis;
  r.train_error = model::empirical_error(h, train_ds);
  r.test_error = model::empirical_error(h, test_ds);
  r.h_gap_train = model::hypothesis_gap(h, train_ds);
  r.h_gap_test = model::hypothesis_gap(h, test_ds);
}

data::Dataset slice_features(const data::Dataset& ds, int dim) {
  if (dim > ds.dim) throw std::invalid_argument("cannot widen a dataset");
  if (dim == ds.dim) return ds;
  data::Dataset out;
  out.dim = dim;
  out.samples.reserve(ds.size());
  for (const auto& s : ds.samples) {
    data::Sample t;
    t.label = s.label;
    t.features.assign(s.features.begin(), s.features.begin() + dim);
    out.samples.push_back(std::move(t));
  }
  return out;
}

pauli::GaussianSpec class_gaussian(int dim, int label, double sigma2) {
  pauli::GaussianSpec g;
  g.means = data::class_means(dim, label);
  g.variances.assign(dim, sigma2);
  return g;
}

// Mean over the two classes of d2(class-average state, maximally mixed).
double class_divergence(const model::CircuitSpec& spec,
                        const model::ParameterTensor& theta, double sigma2,
                        std::size_t samples, std::uint64_t seed) {
  const auto rho_i = sim::maximally_mixed(spec.n_qubits);
  double sum = 0.0;
  for (int label = 0; label < 2; ++label) {
    const auto gauss = class_gaussian(spec.data_dim(), label, sigma2);
    const auto rho = pauli::expected_state_monte_carlo(
        spec, gauss, theta, samples, seed * 2 + label);
    sum += pauli::d2(rho, rho_i);
  }
  return sum / 2.0;
}

model::ParameterTensor initial_parameters(const model::CircuitSpec& spec,
                                          std::uint64_t seed) {
  model::ParameterTensor theta(spec.repetitions, spec.total_layers,
                               spec.n_qubits);
  Rng rng = derive_stream(seed, "init");
  for (double& v : theta.values) v = rng.gaussian();
  return theta;
}

template <typename Point, typename Fn>
std::vector<RunRecord> run_grid(const ExperimentConfig& cfg,
                                const std::vector<Point>& points, Fn&& fn) {
  const std::size_t total = points.size() * cfg.seeds.size();
  std::vector<RunRecord> records(total);
  parallel_for_indexed(total, cfg.jobs, [&](std::size_t i) {
    const auto& point = points[i / cfg.seeds.size()];
    const std::uint64_t seed = cfg.seeds[i % cfg.seeds.size()];
    const auto start = Clock::now();
    records[i] = fn(point, seed);
    records[i].seconds = elapsed(start);
  });
  return records;
}

std::vector<std::uint64_t> seed_range(std::uint64_t count) {
  std::vector<std::uint64_t> seeds(count);
  for (std::uint64_t i = 0; i < count; ++i) seeds[i] = i + 1;
  return seeds;
}

}  // namespace

const char* const kExperimentIds[8] = {
    "divergence",    "linsep_sweep",    "same_dataset", "regression",
    "scaling_study", "counter_example", "bound_sweep",  "approx_check"};

void ExperimentConfig::validate() const {
  if (std::find_if(std::begin(kExperimentIds), std::end(kExperimentIds),
                   [&](const char* s) { return id == s; }) ==
      std::end(kExperimentIds)) {
    throw std::invalid_argument("unknown experiment id '" + id + "'");
  }
  if (seeds.empty()) throw std::invalid_argument("seed list is empty");
  if (!(sigma2 > 0.0)) throw std::invalid_argument("sigma2 must be positive");
  if (mc_samples == 0) throw std::invalid_argument("mc_samples must be >= 1");
  train.validate();
}

ExperimentConfig default_config(const std::string& id,
                                const std::string& profile) {
  if (profile != "paper" && profile != "desk" && profile != "ci") {
    throw std::invalid_argument("unknown profile '" + profile + "'");
  }
  const bool ci = profile == "ci";
  const bool paper = profile == "paper";

  ExperimentConfig cfg;
  cfg.id = id;
  cfg.seeds = seed_range(paper ? 10 : (ci ? 2 : 5));
  cfg.train.epochs = paper ? 1000 : (ci ? 60 : 300);
  cfg.test_size = ci ? 2000 : 10000;
  cfg.mc_samples = paper ? 1000000 : (ci ? 20000 : 100000);

  if (id == "divergence") {
    cfg.n_grid = ci ? std::vector<int>{1, 2} : std::vector<int>{1, 2, 3};
    cfg.p_grid = ci ? std::vector<int>{2} : std::vector<int>{2, 4};
    cfg.l_grid = ci ? std::vector<int>{0, 1, 4} : std::vector<int>{0, 1, 2, 4, 6, 8};
    cfg.train_size = ci ? 400 : 2000;
    cfg.mc_samples = ci ? 20000 : 100000;  // per-class averaging pool
  } else if (id == "linsep_sweep") {
    cfg.n_grid = {1};
    cfg.l_grid = ci ? std::vector<int>{1, 8}
                    : std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8};
    cfg.p_grid = ci ? std::vector<int>{8} : std::vector<int>{1, 2, 4, 8};
    cfg.train_size = 600;
  } else if (id == "same_dataset") {
    cfg.p_grid = {8};
    cfg.train_size = 600;
    cfg.test_size = 2000;  // 1000 per class
  } else if (id == "regression") {
    cfg.n_grid = {2};
    cfg.l_grid = ci ? std::vector<int>{1, 10}
                    : std::vector<int>{1, 2, 4, 6, 8, 10};
    cfg.p_grid = {1};
    cfg.train_size = 600;
    cfg.train.loss = model::Loss::mse;
  } else if (id == "scaling_study") {
    cfg.n_grid = {1};
    cfg.l_grid = {8};
    cfg.size_grid = ci ? std::vector<std::size_t>{600, 1200}
                       : std::vector<std::size_t>{600, 1200, 2000, 5000};
    cfg.p_grid = ci ? std::vector<int>{8, 16} : std::vector<int>{8, 16, 32, 64};
    cfg.train_size = ci ? 1200 : 5000;  // size used for the P sweep
  } else if (id == "counter_example") {
    cfg.n_grid = {1};
    cfg.l_grid = ci ? std::vector<int>{8} : std::vector<int>{1, 2, 4, 6, 8};
    cfg.p_grid = {8};
    cfg.train_size = 600;
  } else if (id == "bound_sweep") {
    cfg.n_grid = ci ? std::vector<int>{1, 2} : std::vector<int>{1, 2, 3};
    cfg.l_grid = ci ? std::vector<int>{0, 2, 9}
                    : std::vector<int>{0, 1, 2, 4, 6, 8, 9, 12};
    cfg.mc_samples = ci ? 20000 : 100000;
    cfg.seeds = seed_range(ci ? 2 : 3);
  } else if (id == "approx_check") {
    cfg.q_grid = {2, 4, 8, 12};
    cfg.seeds = seed_range(ci ? 10 : 50);
  } else {
    throw std::invalid_argument("unknown experiment id '" + id + "'");
  }
  return cfg;
}

std::vector<RunRecord> run_divergence(const ExperimentConfig& cfg) {
  cfg.validate();
  struct Point {
    int n, l, p;
  };
  std::vector<Point> points;
  std::vector<std::pair<int, int>> np;  // (N, P) combinations
  for (int n : cfg.n_grid) np.emplace_back(n, 1);
  for (int p : cfg.p_grid) {
    if (!(p == 1 && !cfg.n_grid.empty() &&
          std::find(cfg.n_grid.begin(), cfg.n_grid.end(), 1) !=
              cfg.n_grid.end())) {
      np.emplace_back(1, p);
    }
  }
  for (const auto& [n, p] : np) {
    for (int l : cfg.l_grid) points.push_back({n, l, p});
  }

  return run_grid(cfg, points, [&](const Point& pt, std::uint64_t seed) {
    RunRecord r;
    r.experiment = cfg.id;
    r.n_qubits = pt.n;
    r.layers = pt.l;
    r.repetitions = pt.p;
    r.seed = seed;
    r.bound = pauli::divergence_bound(pt.n, pt.l, cfg.sigma2);
    if (pt.l == 0) {
      // No data, no training: the encoded state is pure.
      const model::CircuitSpec spec{pt.n, 0, 0, 1, model::Entangler::ring_cnot};
      const auto theta = initial_parameters(spec, seed);
      const auto psi = model::encode_state(spec, theta, {});
      const double div =
          pauli::d2(sim::density_from_vector(psi), sim::maximally_mixed(pt.n));
      r.div_pre = div;
      r.div_post = div;
      return r;
    }
    const model::CircuitSpec spec{pt.n, pt.l, pt.l, pt.p,
                                  model::Entangler::ring_cnot};
    r.train_size = cfg.train_size;
    const auto ds = data::gen_gaussian_means(spec.data_dim(), cfg.train_size,
                                             cfg.sigma2, seed);
    r.div_pre = class_divergence(spec, initial_parameters(spec, seed),
                                 cfg.sigma2, cfg.mc_samples, seed);
    const auto res =
        model::train(ds, spec, model::Task::classification, seeded(cfg, seed));
    r.train_error = res.history.empty()
                        ? model::empirical_error(res.hypothesis, ds)
                        : res.best_error;
    r.div_post = class_divergence(spec, res.hypothesis.theta, cfg.sigma2,
                                  cfg.mc_samples, seed);
    return r;
  });
}

std::vector<RunRecord> run_linsep_sweep(const ExperimentConfig& cfg) {
  cfg.validate();
  const int total_layers =
      *std::max_element(cfg.l_grid.begin(), cfg.l_grid.end());
  struct Point {
    int l, p;
  };
  std::vector<Point> points;
  for (int l : cfg.l_grid) {
    for (int p : cfg.p_grid) points.push_back({l, p});
  }

  return run_grid(cfg, points, [&](const Point& pt, std::uint64_t seed) {
    const model::CircuitSpec spec{1, pt.l, total_layers, pt.p,
                                  model::Entangler::none};
    const int dim = spec.data_dim();
    const auto train_ds = data::gen_linsep(dim, cfg.train_size, cfg.margin, seed);
    const auto test_ds =
        data::gen_linsep(dim, cfg.test_size, cfg.margin, seed ^ kTestSalt);

    RunRecord r;
    r.experiment = cfg.id;
    r.n_qubits = 1;
    r.layers = pt.l;
    r.repetitions = pt.p;
    r.train_size = cfg.train_size;
    r.seed = seed;
    const auto res = model::train(train_ds, spec, model::Task::classification,
                                  seeded(cfg, seed));
    fill_classification_metrics(r, res, train_ds, test_ds);
    return r;
  });
}

std::vector<RunRecord> run_same_dataset(const ExperimentConfig& cfg) {
  cfg.validate();
  constexpr int kDim = 24;
  const std::vector<std::pair<int, int>> pairs{{1, 8}, {2, 4}, {4, 2}, {8, 1}};
  const int reps = cfg.p_grid.empty() ? 8 : cfg.p_grid.front();

  return run_grid(cfg, pairs, [&](const std::pair<int, int>& pt,
                                  std::uint64_t seed) {
    const auto [n, l] = pt;
    const model::CircuitSpec spec{n, l, l, reps, model::Entangler::none};
    const auto train_ds =
        data::gen_linsep(kDim, cfg.train_size, cfg.margin, seed);
    const auto test_ds =
        data::gen_linsep(kDim, cfg.test_size, cfg.margin, seed ^ kTestSalt);

    RunRecord r;
    r.experiment = cfg.id;
    r.n_qubits = n;
    r.layers = l;
    r.repetitions = reps;
    r.train_size = cfg.train_size;
    r.seed = seed;
    const auto res = model::train(train_ds, spec, model::Task::classification,
                                  seeded(cfg, seed));
    fill_classification_metrics(r, res, train_ds, test_ds);
    return r;
  });
}

std::vector<RunRecord> run_regression(const ExperimentConfig& cfg) {
  cfg.validate();
  const int n = cfg.n_grid.empty() ? 2 : cfg.n_grid.front();
  const int total_layers =
      *std::max_element(cfg.l_grid.begin(), cfg.l_grid.end());
  const int reps = cfg.p_grid.empty() ? 1 : cfg.p_grid.front();

  return run_grid(cfg, cfg.l_grid, [&](int l, std::uint64_t seed) {
    const model::CircuitSpec spec{n, l, total_layers, reps,
                                  model::Entangler::ring_cnot};
    const int dim = spec.data_dim();
    const auto train_ds = data::gen_regression(dim, cfg.train_size, seed);
    const auto test_ds =
        data::gen_regression(dim, cfg.test_size, seed ^ kTestSalt);

    RunRecord r;
    r.experiment = cfg.id;
    r.n_qubits = n;
    r.layers = l;
    r.repetitions = reps;
    r.train_size = cfg.train_size;
    r.seed = seed;
    const auto res = model::train(train_ds, spec, model::Task::regression,
                                  seeded(cfg, seed));
    fill_regression_metrics(r, res, train_ds, test_ds);
    return r;
  });
}

std::vector<RunRecord> run_scaling_study(const ExperimentConfig& cfg) {
  cfg.validate();
  const int l = cfg.l_grid.empty() ? 8 : cfg.l_grid.front();
  struct Point {
    std::size_t size;
    int p;
  };
  std::vector<Point> points;
  for (std::size_t size : cfg.size_grid) points.push_back({size, 8});
  for (int p : cfg.p_grid) {
    if (p == 8 && !cfg.size_grid.empty() &&
        std::find(cfg.size_grid.begin(), cfg.size_grid.end(),
                  cfg.train_size) != cfg.size_grid.end()) {
      continue;  // (train_size, 8) already covered by the size sweep
    }
    points.push_back({cfg.train_size, p});
  }

  return run_grid(cfg, points, [&](const Point& pt, std::uint64_t seed) {
    const model::CircuitSpec spec{1, l, l, pt.p, model::Entangler::none};
    const int dim = spec.data_dim();
    const auto train_ds = data::gen_linsep(dim, pt.size, cfg.margin, seed);
    const auto test_ds =
        data::gen_linsep(dim, cfg.test_size, cfg.margin, seed ^ kTestSalt);

    RunRecord r;
    r.experiment = cfg.id;
    r.n_qubits = 1;
    r.layers = l;
    r.repetitions = pt.p;
    r.train_size = pt.size;
    r.seed = seed;
    const auto res = model::train(train_ds, spec, model::Task::classification,
                                  seeded(cfg, seed));
    fill_classification_metrics(r, res, train_ds, test_ds);
    return r;
  });
}

std::vector<RunRecord> run_counter_example(const ExperimentConfig& cfg) {
  cfg.validate();
  constexpr int kDim = 24;
  const int total_layers =
      *std::max_element(cfg.l_grid.begin(), cfg.l_grid.end());
  const int reps = cfg.p_grid.empty() ? 8 : cfg.p_grid.front();

  return run_grid(cfg, cfg.l_grid, [&](int l, std::uint64_t seed) {
    const model::CircuitSpec spec{1, l, total_layers, reps,
                                  model::Entangler::none};
    const auto train_full =
        data::gen_correlated(kDim, cfg.train_size, seed);
    const auto test_full =
        data::gen_correlated(kDim, cfg.test_size, seed ^ kTestSalt);
    const auto train_ds = slice_features(train_full, spec.data_dim());
    const auto test_ds = slice_features(test_full, spec.data_dim());

    RunRecord r;
    r.experiment = cfg.id;
    r.n_qubits = 1;
    r.layers = l;
    r.repetitions = reps;
    r.train_size = cfg.train_size;
    r.seed = seed;
    const auto res = model::train(train_ds, spec, model::Task::classification,
                                  seeded(cfg, seed));
    fill_classification_metrics(r, res, train_ds, test_ds);
    return r;
  });
}

std::vector<RunRecord> run_bound_sweep(const ExperimentConfig& cfg) {
  cfg.validate();
  struct Point {
    int n, l;
  };
  std::vector<Point> points;
  for (int n : cfg.n_grid) {
    for (int l : cfg.l_grid) points.push_back({n, l});
  }

  return run_grid(cfg, points, [&](const Point& pt, std::uint64_t seed) {
    const model::CircuitSpec spec{pt.n, pt.l, pt.l, 1,
                                  model::Entangler::ring_cnot};
    const auto theta = initial_parameters(spec, seed);
    pauli::GaussianSpec gauss = class_gaussian(spec.data_dim(), 0, cfg.sigma2);
    const auto rho_i = sim::maximally_mixed(pt.n);

    RunRecord r;
    r.experiment = cfg.id;
    r.n_qubits = pt.n;
    r.layers = pt.l;
    r.repetitions = 1;
    r.seed = seed;
    r.bound = pauli::divergence_bound(pt.n, pt.l, cfg.sigma2);
    // div_pre = analytic divergence, div_post = Monte-Carlo divergence.
    const auto beta = pauli::expected_state_analytic(spec, gauss, theta);
    r.div_pre = pauli::d2(pauli::from_pauli(beta), rho_i);
    const auto rho_mc = pauli::expected_state_monte_carlo(
        spec, gauss, theta, cfg.mc_samples, seed);
    r.div_post = pauli::d2(rho_mc, rho_i);
    // Distance of the expected hypothesis from random guessing.
    const auto h0 = sim::observable_h0(pt.n);
    r.h_gap_test = std::abs(sim::expectation(h0, rho_mc) - 0.5);
    return r;
  });
}

std::vector<RunRecord> run_approx_check(const ExperimentConfig& cfg) {
  cfg.validate();
  if (cfg.q_grid.empty()) {
    throw std::invalid_argument("approx_check needs a q grid");
  }
  constexpr double kTwoPi = 2.0 * std::numbers::pi;

  const std::size_t total = cfg.seeds.size() * cfg.q_grid.size();
  std::vector<RunRecord> records(total);
  parallel_for_indexed(total, cfg.jobs, [&](std::size_t i) {
    const std::uint64_t seed = cfg.seeds[i / cfg.q_grid.size()];
    const int q = cfg.q_grid[i % cfg.q_grid.size()];
    const auto start = Clock::now();

    // Random small instance drawn from the seed: N <= 2, L <= 3, P <= 3.
    Rng rng = derive_stream(seed, "data");
    const int n = 1 + static_cast<int>(rng.next_u64() % 2);
    const int l = 1 + static_cast<int>(rng.next_u64() % 3);
    const int p = 1 + static_cast<int>(rng.next_u64() % 3);
    const model::CircuitSpec spec{n, l, l, p, model::Entangler::ring_cnot};
    model::ParameterTensor theta(p, l, n);
    for (double& v : theta.values) v = rng.gaussian();
    std::vector<double> x(spec.data_dim());
    for (double& v : x) v = rng.uniform(0.0, kTwoPi);

    const auto obs = sim::observable_h0(n);
    const double h = model::evaluate(spec, theta, x, obs);
    const auto quantized = data::quantize(x, q);
    const double h_q = model::evaluate(spec, theta, quantized.values, obs);

    RunRecord r;
    r.experiment = cfg.id;
    r.n_qubits = n;
    r.layers = l;
    r.repetitions = p;
    r.train_size = static_cast<std::size_t>(q);  // q rides the M_train column
    r.seed = seed;
    r.test_error = std::abs(h - h_q);
    r.bound = data::approx_error_bound(n, l, p, q);
    r.seconds = elapsed(start);
    records[i] = std::move(r);
  });
  return records;
}

std::vector<RunRecord> run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  if (cfg.id == "divergence") return run_divergence(cfg);
  if (cfg.id == "linsep_sweep") return run_linsep_sweep(cfg);
  if (cfg.id == "same_dataset") return run_same_dataset(cfg);
  if (cfg.id == "regression") return run_regression(cfg);
  if (cfg.id == "scaling_study") return run_scaling_study(cfg);
  if (cfg.id == "counter_example") return run_counter_example(cfg);
  if (cfg.id == "bound_sweep") return run_bound_sweep(cfg);
  if (cfg.id == "approx_check") return run_approx_check(cfg);
  throw std::invalid_argument("unknown experiment id '" + cfg.id + "'");
}

}  // namespace reupload::lab
