#include "reupload/model/circuit.hpp"

#include <stdexcept>

namespace reupload::model {

void CircuitSpec::validate() const {
  if (n_qubits < 1 || n_qubits > 10) {
    throw std::invalid_argument("CircuitSpec: n_qubits must be in [1, 10]");
  }
  if (encoding_layers < 0 || total_layers < encoding_layers) {
    throw std::invalid_argument(
        "CircuitSpec: need 0 <= encoding_layers <= total_layers");
  }
  if (repetitions < 1) {
    throw std::invalid_argument("CircuitSpec: repetitions must be >= 1");
  }
}

ParameterTensor::ParameterTensor(int p, int lmax, int n)
    : repetitions(p),
      total_layers(lmax),
      n_qubits(n),
      values(static_cast<std::size_t>(p) * lmax * n * 3, 0.0) {}

ParameterTensor zero_parameters(const CircuitSpec& spec) {
  return ParameterTensor(spec.repetitions, spec.total_layers, spec.n_qubits);
}

sim::CMatrix parameterized_layer_unitary(const CircuitSpec& spec,
                                         const ParameterTensor& theta, int p,
                                         int l) {
  const Eigen::Index dim = Eigen::Index{1} << spec.n_qubits;
  sim::CMatrix u = sim::CMatrix::Identity(dim, dim);
  for (int n = 0; n < spec.n_qubits; ++n) {
    u = sim::embed(sim::r3(theta.at(p, l, n, 0), theta.at(p, l, n, 1),
                           theta.at(p, l, n, 2)),
                   n, spec.n_qubits) *
        u;
  }
  if (spec.entangler == Entangler::ring_cnot && spec.n_qubits >= 2) {
    u = sim::cnot_ring(spec.n_qubits) * u;
  }
  return u;
}

sim::CMatrix build_unitary(const CircuitSpec& spec, std::span<const double> x,
                           const ParameterTensor& theta) {
  spec.validate();
  if (static_cast<int>(x.size()) != spec.data_dim()) {
    throw std::invalid_argument("build_unitary: data dimension mismatch");
  }
  const Eigen::Index dim = Eigen::Index{1} << spec.n_qubits;
  sim::CMatrix v = sim::CMatrix::Identity(dim, dim);
  for (int p = 0; p < spec.repetitions; ++p) {
    for (int l = 0; l < spec.total_layers; ++l) {
      for (int n = 0; n < spec.n_qubits; ++n) {
        double x1 = 0.0, x2 = 0.0, x3 = 0.0;
        if (l < spec.encoding_layers) {
          const std::size_t base =
              (static_cast<std::size_t>(l) * spec.n_qubits + n) * 3;
          x1 = x[base];
          x2 = x[base + 1];
          x3 = x[base + 2];
        }
        v = sim::embed(sim::r3(x1, x2, x3), n, spec.n_qubits) * v;
      }
      v = parameterized_layer_unitary(spec, theta, p, l) * v;
    }
  }
  return v;
}

}  // namespace reupload::model
