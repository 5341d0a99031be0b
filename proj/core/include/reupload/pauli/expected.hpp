#pragma once

#include <cstdint>

#include "reupload/model/circuit.hpp"
#include "reupload/pauli/transfer.hpp"

namespace reupload::pauli {

// Independent Gaussian data distribution x_{l,n,i} ~ N(mean, variance), laid
// out layer-major (layer, qubit, component), 3NL entries each.
struct GaussianSpec {
  std::vector<double> means;
  std::vector<double> variances;

  double sigma_floor() const;
  void validate(int expected_dim) const;
};

// Expected encoding transfer of one layer: tensor product over qubits of the
// single-qubit closed form. Padded layers (l >= L) contribute the identity.
TransferMatrix expected_layer_transfer(const model::CircuitSpec& spec,
                                       const GaussianSpec& gauss, int layer);

// beta = H_Lmax E[T_Lmax] ... H_1 E[T_1] alpha for the initial state |0...0>.
// Only valid for P = 1; repetition breaks the linear factorization.
PauliVector expected_state_analytic(const model::CircuitSpec& spec,
                                    const GaussianSpec& gauss,
                                    const model::ParameterTensor& theta);

// Equal-weight mixture of encoded pure states over i.i.d. Gaussian draws.
// Deterministic given seed; independent of the worker count.
sim::DensityMatrix expected_state_monte_carlo(const model::CircuitSpec& spec,
                                              const GaussianSpec& gauss,
                                              const model::ParameterTensor& theta,
                                              std::size_t samples,
                                              std::uint64_t seed,
                                              int jobs = 1);

}  // namespace reupload::pauli
