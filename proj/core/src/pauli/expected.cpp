#include "reupload/pauli/expected.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <unsupported/Eigen/KroneckerProduct>

#include "reupload/model/evaluate.hpp"
#include "reupload/rng.hpp"

namespace reupload::pauli {

double GaussianSpec::sigma_floor() const {
  if (variances.empty()) {
    throw std::invalid_argument("gaussian spec has no components");
  }
  return *std::min_element(variances.begin(), variances.end());
}

void GaussianSpec::validate(int expected_dim) const {
  if (static_cast<int>(means.size()) != expected_dim ||
      static_cast<int>(variances.size()) != expected_dim) {
    throw std::invalid_argument("gaussian spec dimension mismatch");
  }
  for (double v : variances) {
    if (!(v > 0.0)) {
      throw std::invalid_argument("gaussian spec requires positive variances");
    }
  }
}

TransferMatrix expected_layer_transfer(const model::CircuitSpec& spec,
                                       const GaussianSpec& gauss, int layer) {
  spec.validate();
  gauss.validate(spec.data_dim());
  if (layer < 0 || layer >= spec.total_layers) {
    throw std::out_of_range("layer index out of range");
  }
  const int n = spec.n_qubits;
  if (layer >= spec.encoding_layers) {
    // Padded layers encode zeros: the data rotation is the identity.
    return TransferMatrix(
        n, Eigen::MatrixXd::Identity(Eigen::Index{1} << (2 * n),
                                     Eigen::Index{1} << (2 * n)));
  }
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(1, 1);
  for (int q = 0; q < n; ++q) {
    const std::size_t base = (static_cast<std::size_t>(layer) * n + q) * 3;
    const std::array<double, 3> mu{gauss.means[base], gauss.means[base + 1],
                                   gauss.means[base + 2]};
    const std::array<double, 3> s2{gauss.variances[base],
                                   gauss.variances[base + 1],
                                   gauss.variances[base + 2]};
    m = Eigen::kroneckerProduct(m, expected_transfer_single(mu, s2).entries)
            .eval();
  }
  return TransferMatrix(n, std::move(m));
}

PauliVector expected_state_analytic(const model::CircuitSpec& spec,
                                    const GaussianSpec& gauss,
                                    const model::ParameterTensor& theta) {
  spec.validate();
  gauss.validate(spec.data_dim());
  if (spec.repetitions != 1) {
    throw std::invalid_argument(
        "analytic expected state requires a single repetition");
  }
  const int n = spec.n_qubits;

  // Pauli coefficients of |0...0><0...0|: (1, 1, 0, 0) per qubit.
  Eigen::VectorXd v = Eigen::VectorXd::Ones(1);
  Eigen::Vector4d alpha(1.0, 1.0, 0.0, 0.0);
  for (int q = 0; q < n; ++q) {
    v = Eigen::kroneckerProduct(v, alpha).eval();
  }

  for (int l = 0; l < spec.total_layers; ++l) {
    v = expected_layer_transfer(spec, gauss, l).entries * v;
    const auto h = transfer_of_unitary(parameterized_layer_unitary(spec, theta, 0, l));
    v = h.entries * v;
  }
  return PauliVector(n, std::move(v));
}

sim::DensityMatrix expected_state_monte_carlo(
    const model::CircuitSpec& spec, const GaussianSpec& gauss,
    const model::ParameterTensor& theta, std::size_t samples,
    std::uint64_t seed, int jobs) {
  spec.validate();
  gauss.validate(spec.data_dim());
  if (samples == 0) {
    throw std::invalid_argument("monte carlo requires at least one sample");
  }
  if (jobs < 1) jobs = 1;

  // Fixed partition into chunks with independent streams so that the result
  // does not depend on the worker count.
  constexpr std::size_t kChunks = 64;
  const std::size_t n_chunks = std::min(kChunks, samples);
  const Eigen::Index dim = Eigen::Index{1} << spec.n_qubits;
  const int d = spec.data_dim();

  std::vector<sim::CMatrix> partial(n_chunks);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    std::vector<double> x(d);
    for (;;) {
      const std::size_t c = next.fetch_add(1);
      if (c >= n_chunks) break;
      std::size_t count = samples / n_chunks + (c < samples % n_chunks ? 1 : 0);
      Rng rng = derive_stream(seed, "mc", c);
      sim::CMatrix acc = sim::CMatrix::Zero(dim, dim);
      for (std::size_t s = 0; s < count; ++s) {
        for (int j = 0; j < d; ++j) {
          x[j] = rng.gaussian(gauss.means[j], std::sqrt(gauss.variances[j]));
        }
        const auto psi = model::encode_state(spec, theta, x);
        acc.noalias() += psi.amps * psi.amps.adjoint();
      }
      partial[c] = std::move(acc);
    }
  };

  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    const int n_threads = std::min<int>(jobs, static_cast<int>(n_chunks));
    threads.reserve(n_threads);
    for (int t = 0; t < n_threads; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }

  sim::CMatrix sum = sim::CMatrix::Zero(dim, dim);
  for (const auto& p : partial) sum += p;
  sum /= static_cast<double>(samples);
  // Symmetrize away accumulation noise before the Hermiticity check.
  sum = ((sum + sum.adjoint().eval()) / 2.0).eval();
  return sim::DensityMatrix(spec.n_qubits, std::move(sum));
}

}  // namespace reupload::pauli
