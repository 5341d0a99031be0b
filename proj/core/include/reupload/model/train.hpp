#pragma once

#include <cstdint>

#include "reupload/data/dataset.hpp"
#include "reupload/model/evaluate.hpp"

namespace reupload::model {

enum class Loss { cross_entropy, mse };

struct TrainConfig {
  double learning_rate = 0.005;
  int epochs = 1000;
  int batch_size = 200;
  std::uint64_t seed = 1;
  Loss loss = Loss::cross_entropy;
  double adam_beta1 = 0.9;
  double adam_beta2 = 0.999;
  double adam_eps = 1e-8;
  double prob_clip = 1e-7;

  void validate() const;
};

enum class Task { classification, regression };

// A trained (or fixed) model together with its observable family:
// classification measures H0/H1 on qubit 0, regression measures Z x ... x Z.
struct Hypothesis {
  CircuitSpec spec;
  ParameterTensor theta;
  Task task = Task::classification;
};

// Classification: Tr[H_label rho(x)] in [0,1]. Regression ignores the label
// and returns <Z x ... x Z> in [-1,1].
double hypothesis_value(const Hypothesis& h, std::span<const double> x,
                        int label = 0);

// Class with the larger measurement result; ties (|h0 - h1| <= 1e-12) go to 0.
int predict_class(const Hypothesis& h, std::span<const double> x);

// Empirical error: classification mean |1 - h(x; H_y)|, regression
// mean |f(x) - h(x)|.
double empirical_error(const Hypothesis& h, const data::Dataset& ds);

double accuracy(const Hypothesis& h, const data::Dataset& ds);

// Mean distance of the hypothesis from random guessing: classification
// mean |h(x; H0) - 1/2|, regression mean |h(x)| (the maximally mixed state
// gives <Z x ... x Z> = 0).
double hypothesis_gap(const Hypothesis& h, const data::Dataset& ds);

// Minibatch loss: cross_entropy = -mean log(clip(h_y, clip, 1-clip)),
// mse = mean (f - h)^2.
double batch_loss(const Hypothesis& h, const data::Dataset& ds,
                  std::span<const std::size_t> indices,
                  const TrainConfig& cfg);

// Loss together with its exact gradient (parameter-shift chained through
// the loss derivative), in theta's flat order.
double batch_loss_and_gradient(const Hypothesis& h, const data::Dataset& ds,
                               std::span<const std::size_t> indices,
                               const TrainConfig& cfg,
                               std::vector<double>& grad);

struct AdamState {
  std::vector<double> m;
  std::vector<double> v;
  int t = 0;
};

void adam_step(ParameterTensor& theta, const std::vector<double>& grad,
               AdamState& state, const TrainConfig& cfg);

struct TrainResult {
  Hypothesis hypothesis;           // parameters from the best epoch
  std::vector<double> history;     // training error after each epoch
  int best_epoch = -1;             // -1 when epochs == 0
  double best_error = 0.0;
};

// Adam over shuffled minibatches; initial angles i.i.d. N(0,1) from
// cfg.seed. Returns the parameters with the lowest training error across
// epochs (earliest epoch on ties). Deterministic given (dataset, spec, cfg).
TrainResult train(const data::Dataset& ds, const CircuitSpec& spec, Task task,
                  const TrainConfig& cfg);

}  // namespace reupload::model
