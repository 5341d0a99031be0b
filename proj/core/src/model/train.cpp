#include "reupload/model/train.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "reupload/rng.hpp"

namespace reupload::model {

namespace {

sim::Observable task_observable(const Hypothesis& h, int label) {
  if (h.task == Task::regression) {
    return sim::observable_tensor_z(h.spec.n_qubits);
  }
  return label == 0 ? sim::observable_h0(h.spec.n_qubits)
                    : sim::observable_h1(h.spec.n_qubits);
}

int sample_label(const data::Sample& s) {
  return s.label >= 0.5 ? 1 : 0;
}

void check_dataset(const Hypothesis& h, const data::Dataset& ds) {
  if (ds.empty()) throw std::invalid_argument("dataset is empty");
  if (ds.dim != h.spec.data_dim()) {
    throw std::invalid_argument("dataset feature dimension mismatch");
  }
}

}  // namespace

void TrainConfig::validate() const {
  if (!(learning_rate > 0.0)) {
    throw std::invalid_argument("learning rate must be positive");
  }
  if (epochs < 0) throw std::invalid_argument("epoch count must be >= 0");
  if (batch_size < 1) throw std::invalid_argument("batch size must be >= 1");
  if (!(prob_clip > 0.0 && prob_clip < 0.1)) {
    throw std::invalid_argument("prob_clip must lie in (0, 0.1)");
  }
}

double hypothesis_value(const Hypothesis& h, std::span<const double> x,
                        int label) {
  if (h.task == Task::classification && label != 0 && label != 1) {
    throw std::invalid_argument("classification label must be 0 or 1");
  }
  return evaluate(h.spec, h.theta, x, task_observable(h, label));
}

int predict_class(const Hypothesis& h, std::span<const double> x) {
  if (h.task != Task::classification) {
    throw std::invalid_argument("predict_class needs a classification model");
  }
  const double h0 = hypothesis_value(h, x, 0);
  const double h1 = hypothesis_value(h, x, 1);
  if (std::abs(h0 - h1) <= 1e-12) return 0;
  return h1 > h0 ? 1 : 0;
}

double empirical_error(const Hypothesis& h, const data::Dataset& ds) {
  check_dataset(h, ds);
  double sum = 0.0;
  for (const auto& s : ds.samples) {
    if (h.task == Task::classification) {
      sum += std::abs(1.0 - hypothesis_value(h, s.features, sample_label(s)));
    } else {
      sum += std::abs(s.label - hypothesis_value(h, s.features));
    }
  }
  return sum / static_cast<double>(ds.size());
}

double accuracy(const Hypothesis& h, const data::Dataset& ds) {
  check_dataset(h, ds);
  std::size_t correct = 0;
  for (const auto& s : ds.samples) {
    if (predict_class(h, s.features) == sample_label(s)) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(ds.size());
}

double hypothesis_gap(const Hypothesis& h, const data::Dataset& ds) {
  check_dataset(h, ds);
  double sum = 0.0;
  for (const auto& s : ds.samples) {
    if (h.task == Task::classification) {
      sum += std::abs(hypothesis_value(h, s.features, 0) - 0.5);
    } else {
      sum += std::abs(hypothesis_value(h, s.features));
    }
  }
  return sum / static_cast<double>(ds.size());
}

double batch_loss(const Hypothesis& h, const data::Dataset& ds,
                  std::span<const std::size_t> indices,
                  const TrainConfig& cfg) {
  check_dataset(h, ds);
  cfg.validate();
  if (indices.empty()) throw std::invalid_argument("batch is empty");
  double sum = 0.0;
  for (std::size_t i : indices) {
    const auto& s = ds.samples[i];
    if (cfg.loss == Loss::cross_entropy) {
      const double p =
          std::clamp(hypothesis_value(h, s.features, sample_label(s)),
                     cfg.prob_clip, 1.0 - cfg.prob_clip);
      sum -= std::log(p);
    } else {
      const double diff = s.label - hypothesis_value(h, s.features);
      sum += diff * diff;
    }
  }
  return sum / static_cast<double>(indices.size());
}

double batch_loss_and_gradient(const Hypothesis& h, const data::Dataset& ds,
                               std::span<const std::size_t> indices,
                               const TrainConfig& cfg,
                               std::vector<double>& grad) {
  check_dataset(h, ds);
  cfg.validate();
  if (indices.empty()) throw std::invalid_argument("batch is empty");

  grad.assign(h.theta.size(), 0.0);
  std::vector<double> g;
  double sum = 0.0;
  for (std::size_t i : indices) {
    const auto& s = ds.samples[i];
    const auto obs = task_observable(h, sample_label(s));
    const double value =
        evaluate_with_gradient(h.spec, h.theta, s.features, obs, g);
    double dloss;  // d(per-sample loss)/dh
    if (cfg.loss == Loss::cross_entropy) {
      if (value <= cfg.prob_clip || value >= 1.0 - cfg.prob_clip) {
        // Inside the clipped region the loss is flat in h.
        sum -= std::log(std::clamp(value, cfg.prob_clip, 1.0 - cfg.prob_clip));
        continue;
      }
      sum -= std::log(value);
      dloss = -1.0 / value;
    } else {
      const double diff = value - s.label;
      sum += diff * diff;
      dloss = 2.0 * diff;
    }
    for (std::size_t k = 0; k < grad.size(); ++k) grad[k] += dloss * g[k];
  }
  const double inv = 1.0 / static_cast<double>(indices.size());
  for (double& v : grad) v *= inv;
  return sum * inv;
}

void adam_step(ParameterTensor& theta, const std::vector<double>& grad,
               AdamState& state, const TrainConfig& cfg) {
  if (grad.size() != theta.size()) {
    throw std::invalid_argument("gradient shape mismatch");
  }
  if (state.m.empty()) {
    state.m.assign(theta.size(), 0.0);
    state.v.assign(theta.size(), 0.0);
  }
  ++state.t;
  const double bc1 = 1.0 - std::pow(cfg.adam_beta1, state.t);
  const double bc2 = 1.0 - std::pow(cfg.adam_beta2, state.t);
  for (std::size_t k = 0; k < theta.size(); ++k) {
    state.m[k] = cfg.adam_beta1 * state.m[k] + (1.0 - cfg.adam_beta1) * grad[k];
    state.v[k] =
        cfg.adam_beta2 * state.v[k] + (1.0 - cfg.adam_beta2) * grad[k] * grad[k];
    const double mhat = state.m[k] / bc1;
    const double vhat = state.v[k] / bc2;
    theta.values[k] -= cfg.learning_rate * mhat / (std::sqrt(vhat) + cfg.adam_eps);
  }
}

TrainResult train(const data::Dataset& ds, const CircuitSpec& spec, Task task,
                  const TrainConfig& cfg) {
  spec.validate();
  cfg.validate();
  if (ds.empty()) throw std::invalid_argument("dataset is empty");
  if (ds.dim != spec.data_dim()) {
    throw std::invalid_argument("dataset feature dimension mismatch");
  }

  TrainResult result;
  result.hypothesis.spec = spec;
  result.hypothesis.task = task;

  ParameterTensor theta(spec.repetitions, spec.total_layers, spec.n_qubits);
  {
    Rng rng = derive_stream(cfg.seed, "init");
    for (double& v : theta.values) v = rng.gaussian();
  }
  result.hypothesis.theta = theta;
  if (cfg.epochs == 0) return result;

  Rng shuffle_rng = derive_stream(cfg.seed, "shuffle");
  std::vector<std::size_t> order(ds.size());
  std::iota(order.begin(), order.end(), std::size_t{0});

  Hypothesis current{spec, theta, task};
  AdamState adam;
  std::vector<double> grad;
  double best_error = std::numeric_limits<double>::infinity();

  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    // Fisher-Yates reshuffle from the dedicated stream each epoch.
    for (std::size_t i = order.size(); i > 1; --i) {
      const std::size_t j =
          static_cast<std::size_t>(shuffle_rng.uniform01() * static_cast<double>(i));
      std::swap(order[i - 1], order[std::min(j, i - 1)]);
    }
    for (std::size_t start = 0; start < order.size();
         start += static_cast<std::size_t>(cfg.batch_size)) {
      const std::size_t stop =
          std::min(order.size(), start + static_cast<std::size_t>(cfg.batch_size));
      batch_loss_and_gradient(
          current, ds,
          std::span<const std::size_t>(order.data() + start, stop - start), cfg,
          grad);
      adam_step(current.theta, grad, adam, cfg);
    }
    const double err = empirical_error(current, ds);
    result.history.push_back(err);
    if (err < best_error) {
      best_error = err;
      result.hypothesis.theta = current.theta;
      result.best_epoch = epoch;
    }
  }
  result.best_error = best_error;
  return result;
}

}  // namespace reupload::model
