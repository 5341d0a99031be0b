#include <cmath>

#include <unsupported/Eigen/KroneckerProduct>

#include "doctest.h"
#include "helpers.hpp"
#include "reupload/pauli/bounds.hpp"
#include "reupload/pauli/divergence.hpp"
#include "reupload/pauli/expected.hpp"
#include "reupload/pauli/pauli_vector.hpp"
#include "reupload/pauli/transfer.hpp"

using namespace reupload;
using sim::CMatrix;
using sim::Complex;

namespace {

sim::DensityMatrix pure(int n, Eigen::Index idx) {
  return sim::density_from_vector(sim::basis_state(n, idx));
}

sim::DensityMatrix random_state(Rng& rng, int n) {
  // Mixture of two random pure states; full rank is not needed here.
  auto u = test::random_unitary(rng, 1 << n);
  auto a = sim::density_from_vector(
      sim::apply(u, sim::basis_state(n, 0)));
  auto b = sim::density_from_vector(
      sim::apply(u, sim::basis_state(n, (1 << n) - 1)));
  double w = rng.uniform(0.1, 0.9);
  return sim::mix({a, b}, {w, 1 - w});
}

}  // namespace

TEST_CASE("pauli element ordering {I,Z,X,Y}, qubit 0 most significant") {
  CHECK((pauli::pauli_element(1, 0) - CMatrix::Identity(2, 2)).norm() == 0.0);
  CHECK((pauli::pauli_element(1, 1) - sim::pauli_z()).norm() == 0.0);
  CHECK((pauli::pauli_element(1, 2) - sim::pauli_x()).norm() == 0.0);
  CHECK((pauli::pauli_element(1, 3) - sim::pauli_y()).norm() == 0.0);
  // Index 1 at n=2 is I (x) Z (last qubit varies fastest).
  CMatrix iz = Eigen::kroneckerProduct(CMatrix::Identity(2, 2),
                                       sim::pauli_z());
  CHECK((pauli::pauli_element(2, 1) - iz).norm() == 0.0);
  // Index 4 is Z (x) I.
  CMatrix zi = Eigen::kroneckerProduct(sim::pauli_z(),
                                       CMatrix::Identity(2, 2));
  CHECK((pauli::pauli_element(2, 4) - zi).norm() == 0.0);
}

TEST_CASE("pauli vector round trip and purity identity") {
  Rng rng(101);
  for (int n = 1; n <= 3; ++n) {
    auto rho = random_state(rng, n);
    auto v = pauli::to_pauli(rho);
    CHECK(v.coeffs(0) == doctest::Approx(1.0));  // unit trace
    auto back = pauli::from_pauli(v);
    CHECK((back.mat - rho.mat).norm() < 1e-12);
    // Tr[rho^2] = 2^{-n} sum c_i^2
    CHECK(sim::purity(rho) ==
          doctest::Approx(v.coeffs.squaredNorm() / (1 << n)).epsilon(1e-12));
  }
}

TEST_CASE("transfer matrices are orthogonal with 1 (+) H block structure") {
  Rng rng(102);
  for (int n = 1; n <= 3; ++n) {
    for (int rep = 0; rep < 5; ++rep) {
      auto t = pauli::transfer_of_unitary(test::random_unitary(rng, 1 << n));
      Eigen::Index d = t.dim();
      CHECK((t.entries.transpose() * t.entries -
             Eigen::MatrixXd::Identity(d, d))
                .cwiseAbs()
                .maxCoeff() < 1e-10);
      CHECK(t.entries(0, 0) == doctest::Approx(1.0));
      CHECK(t.entries.row(0).tail(d - 1).cwiseAbs().maxCoeff() < 1e-12);
      CHECK(t.entries.col(0).tail(d - 1).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("transfer composition is a homomorphism and acts on states") {
  Rng rng(103);
  for (int n = 1; n <= 2; ++n) {
    auto u = test::random_unitary(rng, 1 << n);
    auto v = test::random_unitary(rng, 1 << n);
    auto tu = pauli::transfer_of_unitary(u);
    auto tv = pauli::transfer_of_unitary(v);
    auto tuv = pauli::transfer_of_unitary(u * v);
    CHECK((tuv.entries - tu.entries * tv.entries).cwiseAbs().maxCoeff() <
          1e-10);

    auto rho = random_state(rng, n);
    auto lhs = pauli::to_pauli(
        sim::DensityMatrix(n, u * rho.mat * u.adjoint()));
    Eigen::VectorXd rhs = tu.entries * pauli::to_pauli(rho).coeffs;
    CHECK((lhs.coeffs - rhs).cwiseAbs().maxCoeff() < 1e-11);
  }
}

TEST_CASE("expected cos/sin of a gaussian angle") {
  auto [c0, s0] = pauli::expected_cos_sin(0.0, 0.8);
  CHECK(c0 == doctest::Approx(0.670320046035639301).epsilon(1e-14));
  CHECK(s0 == doctest::Approx(0.0));
  auto [c1, s1] = pauli::expected_cos_sin(1.3, 0.0);
  CHECK(c1 == doctest::Approx(std::cos(1.3)).epsilon(1e-14));
  CHECK(s1 == doctest::Approx(std::sin(1.3)).epsilon(1e-14));
}

TEST_CASE("expected single-gate transfer: zero-variance limit is exact") {
  Rng rng(104);
  for (int rep = 0; rep < 10; ++rep) {
    std::array<double, 3> mu = {rng.uniform(-3, 3), rng.uniform(-3, 3),
                                rng.uniform(-3, 3)};
    auto expect = pauli::transfer_of_unitary(sim::r3(mu[0], mu[1], mu[2]));
    auto got = pauli::expected_transfer_single(mu, {1e-14, 1e-14, 1e-14});
    CHECK((got.entries - expect.entries).cwiseAbs().maxCoeff() < 1e-7);
  }
}

TEST_CASE("expected single-gate transfer matches a small monte carlo") {
  Rng rng(105);
  std::array<double, 3> mu = {rng.uniform(-3, 3), rng.uniform(-3, 3),
                              rng.uniform(-3, 3)};
  const double s2 = 0.8;
  Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(4, 4);
  const int draws = 60000;
  for (int i = 0; i < draws; ++i) {
    double x1 = rng.gaussian(mu[0], std::sqrt(s2));
    double x2 = rng.gaussian(mu[1], std::sqrt(s2));
    double x3 = rng.gaussian(mu[2], std::sqrt(s2));
    acc += pauli::transfer_of_unitary(sim::r3(x1, x2, x3)).entries;
  }
  acc /= draws;
  auto closed = pauli::expected_transfer_single(mu, {s2, s2, s2});
  CHECK((closed.entries - acc).cwiseAbs().maxCoeff() < 2e-2);
}

TEST_CASE("contraction eigenvalue bounded by e^{-sigma2}") {
  Rng rng(106);
  const double kExpM08 = 0.449328964117221591;  // e^{-0.8}
  for (int rep = 0; rep < 20; ++rep) {
    std::array<double, 3> mu = {rng.uniform(-3, 3), rng.uniform(-3, 3),
                                rng.uniform(-3, 3)};
    auto t = pauli::expected_transfer_single(mu, {0.8, 0.8, 0.8});
    double lam = pauli::contraction_eigenvalue(t);
    CHECK(lam <= kExpM08 + 1e-9);
    CHECK(lam >= 0.0);
  }
  // A unitary's transfer block is orthogonal: contraction eigenvalue 1.
  auto exact = pauli::transfer_of_unitary(sim::r3(0.3, 1.1, -0.4));
  CHECK(pauli::contraction_eigenvalue(exact) == doctest::Approx(1.0));
}

TEST_CASE("expected layer transfer: padded layers are the identity") {
  model::CircuitSpec spec{2, 1, 3, 1, model::Entangler::ring_cnot};
  pauli::GaussianSpec gauss;
  gauss.means.assign(spec.data_dim(), 0.5);
  gauss.variances.assign(spec.data_dim(), 0.8);
  auto t1 = pauli::expected_layer_transfer(spec, gauss, 1);
  CHECK((t1.entries - Eigen::MatrixXd::Identity(16, 16)).norm() == 0.0);
  auto t0 = pauli::expected_layer_transfer(spec, gauss, 0);
  CHECK(t0.dim() == 16);
  // Tensor structure: equals kron of the two single-qubit factors.
  auto f = pauli::expected_transfer_single({0.5, 0.5, 0.5}, {0.8, 0.8, 0.8});
  Eigen::MatrixXd kron = Eigen::kroneckerProduct(f.entries, f.entries);
  CHECK((t0.entries - kron).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("analytic expected state: depth 0 is the pure rotated state") {
  model::CircuitSpec spec{1, 0, 2, 1, model::Entangler::none};
  pauli::GaussianSpec gauss;  // no data components
  Rng rng(107);
  auto theta = test::random_theta(spec, rng);
  auto beta = pauli::expected_state_analytic(spec, gauss, theta);
  // No noise anywhere: coefficient norm of a pure state is 2 (squared).
  CHECK(beta.coeffs.squaredNorm() == doctest::Approx(2.0).epsilon(1e-12));

  std::vector<double> x;  // empty data vector for L = 0
  auto psi = model::encode_state(spec, theta, x);
  auto direct = pauli::to_pauli(sim::density_from_vector(psi));
  CHECK((beta.coeffs - direct.coeffs).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("analytic expected state rejects P > 1") {
  model::CircuitSpec spec{1, 1, 1, 2, model::Entangler::none};
  pauli::GaussianSpec gauss;
  gauss.means.assign(3, 0.0);
  gauss.variances.assign(3, 0.8);
  auto theta = model::zero_parameters(spec);
  CHECK_THROWS_AS(pauli::expected_state_analytic(spec, gauss, theta),
                  std::invalid_argument);
}

TEST_CASE("monte carlo expected state converges to the analytic one") {
  model::CircuitSpec spec{2, 2, 2, 1, model::Entangler::ring_cnot};
  pauli::GaussianSpec gauss;
  gauss.means.assign(spec.data_dim(), 0.3);
  gauss.variances.assign(spec.data_dim(), 0.8);
  Rng rng(108);
  auto theta = test::random_theta(spec, rng);

  auto beta = pauli::expected_state_analytic(spec, gauss, theta);
  auto exact = pauli::from_pauli(beta);
  auto mc = pauli::expected_state_monte_carlo(spec, gauss, theta, 40000, 9, 2);
  CHECK((mc.mat - exact.mat).cwiseAbs().maxCoeff() < 0.02);

  // Worker count must not change a single byte of the estimate.
  auto mc1 = pauli::expected_state_monte_carlo(spec, gauss, theta, 5000, 9, 1);
  auto mc4 = pauli::expected_state_monte_carlo(spec, gauss, theta, 5000, 9, 4);
  CHECK((mc1.mat - mc4.mat).norm() == 0.0);
}

TEST_CASE("d2 against hand values") {
  auto mixed1 = sim::maximally_mixed(1);
  CHECK(pauli::d2(pure(1, 0), mixed1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(pauli::d2(mixed1, mixed1) == doctest::Approx(0.0));
  CHECK(pauli::d2(pure(2, 0), sim::maximally_mixed(2)) ==
        doctest::Approx(2.0).epsilon(1e-12));

  // diag(3/4, 1/4) vs I/2: 1 + log2(9/16 + 1/16) = log2(5/4).
  auto rho = sim::mix({pure(1, 0), pure(1, 1)}, {0.75, 0.25});
  CHECK(pauli::d2(rho, mixed1) ==
        doctest::Approx(0.321928094887362348).epsilon(1e-12));

  // General full-rank second argument (not the mixed state shortcut):
  // Tr[rho1^2 rho2^{-1}] = (9/16)(4) + (1/16)(4/3) = 9/4 + 1/12 = 7/3.
  auto rho2 = sim::mix({pure(1, 0), pure(1, 1)}, {0.25, 0.75});
  CHECK(pauli::d2(rho, rho2) ==
        doctest::Approx(std::log2(7.0 / 3.0)).epsilon(1e-12));

  CHECK_THROWS_AS(pauli::d2(mixed1, pure(1, 0)), std::domain_error);
}

TEST_CASE("trace distance, fidelity, affinity on known pairs") {
  CHECK(pauli::trace_distance(pure(1, 0), pure(1, 1)) ==
        doctest::Approx(1.0));
  CHECK(pauli::trace_distance(pure(1, 0), sim::maximally_mixed(1)) ==
        doctest::Approx(0.5));
  CHECK(pauli::trace_distance(pure(1, 0), pure(1, 0)) ==
        doctest::Approx(0.0));

  const double kInvSqrt2 = 0.707106781186547524;
  CHECK(pauli::fidelity(pure(1, 0), sim::maximally_mixed(1)) ==
        doctest::Approx(kInvSqrt2).epsilon(1e-12));
  CHECK(pauli::fidelity(pure(1, 0), pure(1, 0)) == doctest::Approx(1.0));
  CHECK(pauli::affinity(pure(1, 0), sim::maximally_mixed(1)) ==
        doctest::Approx(kInvSqrt2).epsilon(1e-12));
}

TEST_CASE("renyi family consistency") {
  auto rho = sim::mix({pure(1, 0), pure(1, 1)}, {0.75, 0.25});
  auto mixed = sim::maximally_mixed(1);
  CHECK(pauli::renyi(2.0, rho, mixed) ==
        doctest::Approx(pauli::d2(rho, mixed)).epsilon(1e-12));
  CHECK(pauli::renyi(0.5, rho, mixed) ==
        doctest::Approx(-2 * std::log2(pauli::affinity(rho, mixed)))
            .epsilon(1e-12));
  // Monotone nondecreasing in alpha.
  double prev = -1;
  for (double a : {0.3, 0.5, 0.9, 1.5, 2.0, 3.0}) {
    double v = pauli::renyi(a, rho, mixed);
    CHECK(v >= prev - 1e-12);
    prev = v;
  }
  CHECK_THROWS_AS(pauli::renyi(1.0, rho, mixed), std::domain_error);
  CHECK_THROWS_AS(pauli::renyi(-0.5, rho, mixed), std::domain_error);
}

TEST_CASE("fuchs-van de graaf sandwich on random states") {
  Rng rng(109);
  for (int rep = 0; rep < 10; ++rep) {
    auto a = random_state(rng, 2);
    auto b = random_state(rng, 2);
    double td = pauli::trace_distance(a, b);
    double f = pauli::fidelity(a, b);
    CHECK(td >= 1 - f - 1e-10);
    CHECK(td <= std::sqrt(1 - f * f) + 1e-10);
  }
}

TEST_CASE("divergence bound values") {
  // log2(1 + 1 * e^{-6.4}), frozen from a high-precision evaluation.
  CHECK(pauli::divergence_bound(1, 8, 0.8) ==
        doctest::Approx(0.00239513116493443526).epsilon(1e-14));
  CHECK(pauli::divergence_bound(2, 0, 0.8) == doctest::Approx(2.0));
  CHECK(pauli::divergence_bound(1, 0, 0.8) == doctest::Approx(1.0));
  // Monotone decreasing in L, increasing in N.
  for (int l = 0; l < 12; ++l)
    CHECK(pauli::divergence_bound(2, l + 1, 0.8) <
          pauli::divergence_bound(2, l, 0.8));
  CHECK(pauli::divergence_bound(3, 5, 0.8) >
        pauli::divergence_bound(2, 5, 0.8));
}

TEST_CASE("layer threshold values") {
  // (3 ln2 + 2 ln 10)/0.8 = 8.3557... -> 9.
  CHECK(pauli::layer_threshold(1, 0.8, 0.1) == 9);
  // eps = 1: (3 ln2)/0.8 = 2.599... -> 3.
  CHECK(pauli::layer_threshold(1, 0.8, 1.0) == 3);
  CHECK(pauli::layer_threshold(2, 0.8, 0.1) >=
        pauli::layer_threshold(1, 0.8, 0.1));
  CHECK(pauli::layer_threshold(1, 1.6, 0.1) <
        pauli::layer_threshold(1, 0.8, 0.1));
}

TEST_CASE("trace distance bound implied by d2") {
  CHECK(pauli::trace_distance_from_d2(0.0) == doctest::Approx(0.0));
  CHECK(pauli::trace_distance_from_d2(1.0) ==
        doctest::Approx(0.707106781186547524).epsilon(1e-12));
  // Holds on random states against the maximally mixed state.
  Rng rng(110);
  for (int rep = 0; rep < 10; ++rep) {
    auto rho = random_state(rng, 2);
    double d = pauli::d2(rho, sim::maximally_mixed(2));
    CHECK(pauli::trace_distance(rho, sim::maximally_mixed(2)) <=
          pauli::trace_distance_from_d2(d) + 1e-10);
  }
}

TEST_CASE("analytic d2 equals log2 of the coefficient norm") {
  Rng rng(111);
  for (int n = 1; n <= 2; ++n) {
    model::CircuitSpec spec{n, 3, 3, 1, model::Entangler::ring_cnot};
    pauli::GaussianSpec gauss;
    gauss.means.assign(spec.data_dim(), 0.0);
    gauss.variances.assign(spec.data_dim(), 0.8);
    auto theta = test::random_theta(spec, rng);
    auto beta = pauli::expected_state_analytic(spec, gauss, theta);
    double d = pauli::d2(pauli::from_pauli(beta), sim::maximally_mixed(n));
    CHECK(d == doctest::Approx(std::log2(beta.coeffs.squaredNorm()))
                   .epsilon(1e-9));
    CHECK(d <= pauli::divergence_bound(n, 3, 0.8) + 1e-9);
  }
}
