#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "reupload/data/generators.hpp"
#include "reupload/model/circuit.hpp"
#include "reupload/model/evaluate.hpp"
#include "reupload/model/train.hpp"

using namespace reupload;
using sim::CMatrix;

TEST_CASE("circuit spec validation and parameter layout") {
  model::CircuitSpec bad{0, 1, 1, 1, model::Entangler::none};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  model::CircuitSpec bad2{1, 3, 2, 1, model::Entangler::none};  // L > Lmax
  CHECK_THROWS_AS(bad2.validate(), std::invalid_argument);

  model::ParameterTensor theta(2, 3, 2);
  CHECK(theta.size() == 2u * 3u * 2u * 3u);
  theta.at(1, 2, 1, 2) = 7.0;
  CHECK(theta.values.back() == 7.0);
  CHECK(theta.index(0, 0, 0, 1) == 1u);
  CHECK(theta.index(0, 0, 1, 0) == 3u);
  CHECK(theta.index(0, 1, 0, 0) == 6u);
  CHECK(theta.index(1, 0, 0, 0) == 18u);
}

TEST_CASE("build_unitary single qubit matches hand composition") {
  model::CircuitSpec spec{1, 1, 1, 1, model::Entangler::none};
  auto theta = model::zero_parameters(spec);
  theta.at(0, 0, 0, 0) = 0.3;
  theta.at(0, 0, 0, 1) = -1.1;
  theta.at(0, 0, 0, 2) = 0.7;
  std::vector<double> x = {0.5, 0.2, -0.9};
  CMatrix expect = sim::r3(0.3, -1.1, 0.7) * sim::r3(0.5, 0.2, -0.9);
  CHECK((model::build_unitary(spec, x, theta) - expect).norm() < 1e-14);
}

TEST_CASE("build_unitary repetitions compose left-to-right in time") {
  model::CircuitSpec spec{1, 1, 1, 2, model::Entangler::none};
  Rng rng(201);
  auto theta = test::random_theta(spec, rng);
  auto x = test::random_features(3, rng);
  CMatrix enc = sim::r3(x[0], x[1], x[2]);
  CMatrix p0 = sim::r3(theta.at(0, 0, 0, 0), theta.at(0, 0, 0, 1),
                       theta.at(0, 0, 0, 2));
  CMatrix p1 = sim::r3(theta.at(1, 0, 0, 0), theta.at(1, 0, 0, 1),
                       theta.at(1, 0, 0, 2));
  CMatrix expect = p1 * enc * p0 * enc;
  CHECK((model::build_unitary(spec, x, theta) - expect).norm() < 1e-13);
}

TEST_CASE("padded layers upload zeros: data beyond 3NL is never read") {
  model::CircuitSpec spec{1, 1, 3, 1, model::Entangler::none};
  Rng rng(202);
  auto theta = test::random_theta(spec, rng);
  auto x = test::random_features(spec.data_dim(), rng);
  // A padded circuit equals an unpadded one whose data is zero-extended.
  model::CircuitSpec wide{1, 3, 3, 1, model::Entangler::none};
  std::vector<double> xz = x;
  xz.resize(wide.data_dim(), 0.0);
  CHECK((model::build_unitary(spec, x, theta) -
         model::build_unitary(wide, xz, theta))
            .norm() < 1e-13);
}

TEST_CASE("ring entangler appears after every parameterized layer") {
  model::CircuitSpec spec{2, 1, 1, 1, model::Entangler::ring_cnot};
  Rng rng(203);
  auto theta = test::random_theta(spec, rng);
  auto x = test::random_features(spec.data_dim(), rng);
  CMatrix enc = sim::embed(sim::r3(x[0], x[1], x[2]), 0, 2) *
                sim::embed(sim::r3(x[3], x[4], x[5]), 1, 2);
  CMatrix par = sim::embed(sim::r3(theta.at(0, 0, 0, 0), theta.at(0, 0, 0, 1),
                                   theta.at(0, 0, 0, 2)),
                           0, 2) *
                sim::embed(sim::r3(theta.at(0, 0, 1, 0), theta.at(0, 0, 1, 1),
                                   theta.at(0, 0, 1, 2)),
                           1, 2);
  CMatrix expect = sim::cnot_ring(2) * par * enc;
  CHECK((model::build_unitary(spec, x, theta) - expect).norm() < 1e-13);
  CHECK((model::parameterized_layer_unitary(spec, theta, 0, 0) -
         sim::cnot_ring(2) * par)
            .norm() < 1e-13);
}

TEST_CASE("encode_state agrees with the dense unitary") {
  Rng rng(204);
  for (auto ent : {model::Entangler::none, model::Entangler::ring_cnot}) {
    model::CircuitSpec spec{2, 2, 3, 2, ent};
    auto theta = test::random_theta(spec, rng);
    auto x = test::random_features(spec.data_dim(), rng);
    auto psi = model::encode_state(spec, theta, x);
    sim::CVector expect =
        model::build_unitary(spec, x, theta) * sim::zero_state(2).amps;
    CHECK((psi.amps - expect).norm() < 1e-12);
  }
}

TEST_CASE("evaluate agrees across observables and code paths") {
  Rng rng(205);
  // entangler == none takes the factorized per-qubit path for H0/H1/TensorZ;
  // a custom observable with the same matrix forces the dense path.
  for (int n : {1, 2, 3}) {
    model::CircuitSpec spec{n, 2, 2, 2, model::Entangler::none};
    auto theta = test::random_theta(spec, rng);
    auto x = test::random_features(spec.data_dim(), rng);
    for (auto obs : {sim::observable_h0(n), sim::observable_h1(n),
                     sim::observable_tensor_z(n)}) {
      double fast = model::evaluate(spec, theta, x, obs);
      double slow =
          model::evaluate(spec, theta, x, sim::observable_custom(obs.mat));
      CHECK(fast == doctest::Approx(slow).epsilon(1e-11));
      auto psi = model::encode_state(spec, theta, x);
      CHECK(fast == doctest::Approx(sim::expectation(obs, psi)).epsilon(1e-11));
    }
  }
}

TEST_CASE("h0 and h1 expectations always sum to one") {
  Rng rng(206);
  for (int rep = 0; rep < 5; ++rep) {
    model::CircuitSpec spec{2, 2, 2, 1, model::Entangler::ring_cnot};
    auto theta = test::random_theta(spec, rng);
    auto x = test::random_features(spec.data_dim(), rng);
    double h0 = model::evaluate(spec, theta, x, sim::observable_h0(2));
    double h1 = model::evaluate(spec, theta, x, sim::observable_h1(2));
    CHECK(h0 + h1 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(h0 >= -1e-12);
    CHECK(h0 <= 1 + 1e-12);
  }
}

TEST_CASE("parameter-shift gradient matches finite differences") {
  Rng rng(207);
  std::vector<double> grad, fd;
  const double h = 1e-5;
  for (auto ent : {model::Entangler::none, model::Entangler::ring_cnot}) {
    for (auto obs_kind : {0, 1, 2}) {
      model::CircuitSpec spec{2, 2, 2, 2, ent};
      auto theta = test::random_theta(spec, rng);
      auto x = test::random_features(spec.data_dim(), rng);
      sim::Observable obs = obs_kind == 0   ? sim::observable_h0(2)
                            : obs_kind == 1 ? sim::observable_h1(2)
                                            : sim::observable_tensor_z(2);
      double val = model::evaluate_with_gradient(spec, theta, x, obs, grad);
      CHECK(val == doctest::Approx(model::evaluate(spec, theta, x, obs))
                       .epsilon(1e-12));
      REQUIRE(grad.size() == theta.size());
      fd.resize(grad.size());
      for (std::size_t k = 0; k < theta.size(); ++k) {
        auto tp = theta, tm = theta;
        tp.values[k] += h;
        tm.values[k] -= h;
        fd[k] = (model::evaluate(spec, tp, x, obs) -
                 model::evaluate(spec, tm, x, obs)) /
                (2 * h);
        CHECK(std::abs(grad[k] - fd[k]) < 1e-7);
      }
    }
  }
}

TEST_CASE("gradient of a custom observable (dense fallback)") {
  Rng rng(208);
  model::CircuitSpec spec{1, 1, 1, 1, model::Entangler::none};
  auto theta = test::random_theta(spec, rng);
  auto x = test::random_features(3, rng);
  auto obs = sim::observable_custom(sim::pauli_x());
  std::vector<double> grad;
  model::evaluate_with_gradient(spec, theta, x, obs, grad);
  const double h = 1e-5;
  for (std::size_t k = 0; k < theta.size(); ++k) {
    auto tp = theta, tm = theta;
    tp.values[k] += h;
    tm.values[k] -= h;
    double fd = (model::evaluate(spec, tp, x, obs) -
                 model::evaluate(spec, tm, x, obs)) /
                (2 * h);
    CHECK(std::abs(grad[k] - fd) < 1e-7);
  }
}

TEST_CASE("hypothesis values, prediction, tie break") {
  model::CircuitSpec spec{1, 1, 1, 1, model::Entangler::none};
  model::Hypothesis h{spec, model::zero_parameters(spec),
                      model::Task::classification};
  // Identity circuit on |0>: h0 = 1, h1 = 0 -> class 0.
  std::vector<double> zero = {0.0, 0.0, 0.0};
  CHECK(model::hypothesis_value(h, zero, 0) == doctest::Approx(1.0));
  CHECK(model::hypothesis_value(h, zero, 1) == doctest::Approx(0.0));
  CHECK(model::predict_class(h, zero) == 0);
  // ry(pi/2) puts the state on the equator: exact tie -> class 0.
  std::vector<double> eq = {0.0, 3.14159265358979323846 / 2, 0.0};
  CHECK(model::predict_class(h, eq) == 0);

  model::Hypothesis r{spec, model::zero_parameters(spec),
                      model::Task::regression};
  CHECK(model::hypothesis_value(r, zero) == doctest::Approx(1.0));  // <Z> on |0>
  std::vector<double> flip = {0.0, 3.14159265358979323846, 0.0};
  CHECK(model::hypothesis_value(r, flip) == doctest::Approx(-1.0));
}

TEST_CASE("empirical error, accuracy, gap against a manual loop") {
  Rng rng(209);
  model::CircuitSpec spec{1, 2, 2, 1, model::Entangler::none};
  model::Hypothesis h{spec, test::random_theta(spec, rng),
                      model::Task::classification};
  auto ds = data::gen_gaussian_means(spec.data_dim(), 40, 0.8, 77);

  double err = 0, acc = 0, gap = 0;
  for (const auto& s : ds.samples) {
    double hy = model::hypothesis_value(h, s.features, (int)s.label);
    err += std::abs(1.0 - hy);
    acc += model::predict_class(h, s.features) == (int)s.label ? 1.0 : 0.0;
    gap += std::abs(model::hypothesis_value(h, s.features, 0) - 0.5);
  }
  CHECK(model::empirical_error(h, ds) ==
        doctest::Approx(err / ds.size()).epsilon(1e-12));
  CHECK(model::accuracy(h, ds) == doctest::Approx(acc / ds.size()));
  CHECK(model::hypothesis_gap(h, ds) ==
        doctest::Approx(gap / ds.size()).epsilon(1e-12));

  // Regression: mean absolute deviation, not squared.
  model::CircuitSpec rspec{1, 2, 2, 1, model::Entangler::none};
  model::Hypothesis hr{rspec, test::random_theta(rspec, rng),
                       model::Task::regression};
  auto rds = data::gen_regression(rspec.data_dim(), 40, 78);
  double rerr = 0, rgap = 0;
  for (const auto& s : rds.samples) {
    double hv = model::hypothesis_value(hr, s.features);
    rerr += std::abs(s.label - hv);
    rgap += std::abs(hv);
  }
  CHECK(model::empirical_error(hr, rds) ==
        doctest::Approx(rerr / rds.size()).epsilon(1e-12));
  CHECK(model::hypothesis_gap(hr, rds) ==
        doctest::Approx(rgap / rds.size()).epsilon(1e-12));
}

TEST_CASE("batch losses and their gradients") {
  Rng rng(210);
  model::CircuitSpec spec{1, 1, 1, 1, model::Entangler::none};
  model::Hypothesis h{spec, test::random_theta(spec, rng),
                      model::Task::classification};
  auto ds = data::gen_gaussian_means(3, 10, 0.8, 5);
  std::vector<std::size_t> idx = {0, 1, 2, 3, 4};
  model::TrainConfig cfg;

  double manual = 0;
  for (auto i : idx) {
    double hy = model::hypothesis_value(h, ds.samples[i].features,
                                        (int)ds.samples[i].label);
    hy = std::min(std::max(hy, cfg.prob_clip), 1 - cfg.prob_clip);
    manual -= std::log(hy);
  }
  manual /= idx.size();
  CHECK(model::batch_loss(h, ds, idx, cfg) ==
        doctest::Approx(manual).epsilon(1e-12));

  // Gradient of the loss vs finite differences through batch_loss.
  std::vector<double> grad;
  model::batch_loss_and_gradient(h, ds, idx, cfg, grad);
  const double step = 1e-5;
  for (std::size_t k = 0; k < h.theta.size(); ++k) {
    auto hp = h, hm = h;
    hp.theta.values[k] += step;
    hm.theta.values[k] -= step;
    double fd = (model::batch_loss(hp, ds, idx, cfg) -
                 model::batch_loss(hm, ds, idx, cfg)) /
                (2 * step);
    CHECK(std::abs(grad[k] - fd) < 1e-6);
  }

  // MSE path on a regression task.
  model::Hypothesis hr{spec, test::random_theta(spec, rng),
                       model::Task::regression};
  auto rds = data::gen_regression(3, 10, 6);
  model::TrainConfig rcfg;
  rcfg.loss = model::Loss::mse;
  model::batch_loss_and_gradient(hr, rds, idx, rcfg, grad);
  for (std::size_t k = 0; k < hr.theta.size(); ++k) {
    auto hp = hr, hm = hr;
    hp.theta.values[k] += step;
    hm.theta.values[k] -= step;
    double fd = (model::batch_loss(hp, rds, idx, rcfg) -
                 model::batch_loss(hm, rds, idx, rcfg)) /
                (2 * step);
    CHECK(std::abs(grad[k] - fd) < 1e-6);
  }
}

TEST_CASE("adam first step moves by roughly lr * sign(grad)") {
  model::CircuitSpec spec{1, 1, 1, 1, model::Entangler::none};
  auto theta = model::zero_parameters(spec);
  model::AdamState st;
  model::TrainConfig cfg;
  std::vector<double> grad = {0.5, -2.0, 1e-12};
  model::adam_step(theta, grad, st, cfg);
  CHECK(st.t == 1);
  // Bias-corrected first step: lr * g / (|g| + eps') ~ lr * sign(g).
  CHECK(theta.values[0] == doctest::Approx(-cfg.learning_rate).epsilon(1e-3));
  CHECK(theta.values[1] == doctest::Approx(cfg.learning_rate).epsilon(1e-3));
  CHECK(std::abs(theta.values[2]) < cfg.learning_rate);
}

TEST_CASE("training is deterministic and respects epochs = 0") {
  model::CircuitSpec spec{1, 2, 2, 1, model::Entangler::none};
  auto ds = data::gen_gaussian_means(spec.data_dim(), 30, 0.8, 3);
  model::TrainConfig cfg;
  cfg.epochs = 4;
  cfg.batch_size = 10;
  cfg.seed = 12;

  auto a = model::train(ds, spec, model::Task::classification, cfg);
  auto b = model::train(ds, spec, model::Task::classification, cfg);
  CHECK(a.hypothesis.theta.values == b.hypothesis.theta.values);
  CHECK(a.history == b.history);
  REQUIRE(a.history.size() == 4u);
  CHECK(a.best_epoch >= 0);
  CHECK(a.best_epoch < 4);
  double lo = *std::min_element(a.history.begin(), a.history.end());
  CHECK(a.best_error == doctest::Approx(lo));
  CHECK(model::empirical_error(a.hypothesis, ds) ==
        doctest::Approx(a.best_error).epsilon(1e-12));

  cfg.epochs = 0;
  auto z = model::train(ds, spec, model::Task::classification, cfg);
  CHECK(z.history.empty());
  CHECK(z.best_epoch == -1);

  // A different seed changes the initialization.
  cfg.epochs = 1;
  cfg.seed = 13;
  auto c = model::train(ds, spec, model::Task::classification, cfg);
  CHECK(c.hypothesis.theta.values != a.hypothesis.theta.values);
}

TEST_CASE("training actually reduces the error on easy data") {
  model::CircuitSpec spec{1, 1, 8, 8, model::Entangler::none};
  auto ds = data::gen_linsep(spec.data_dim(), 60, 0.3, 9);
  model::TrainConfig cfg;
  cfg.epochs = 30;
  cfg.batch_size = 20;
  cfg.seed = 4;
  auto r = model::train(ds, spec, model::Task::classification, cfg);
  CHECK(r.best_error < r.history.front());
  CHECK(r.best_error < 0.35);
}
