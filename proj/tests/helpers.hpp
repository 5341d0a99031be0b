#pragma once

#include <Eigen/Dense>
#include <complex>

#include "reupload/model/circuit.hpp"
#include "reupload/rng.hpp"

namespace reupload::test {

// Haar-ish random unitary: QR of a complex Ginibre matrix with the phase
// convention fixed so the result is deterministic for a given Rng state.
inline sim::CMatrix random_unitary(Rng& rng, int dim) {
  sim::CMatrix g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      g(i, j) = sim::Complex(rng.gaussian(), rng.gaussian());
  Eigen::HouseholderQR<sim::CMatrix> qr(g);
  sim::CMatrix q = qr.householderQ();
  sim::CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    sim::Complex d = r(j, j);
    q.col(j) *= d / std::abs(d);
  }
  return q;
}

inline model::ParameterTensor random_theta(const model::CircuitSpec& spec,
                                           Rng& rng) {
  model::ParameterTensor theta(spec.repetitions, spec.total_layers,
                               spec.n_qubits);
  for (auto& v : theta.values) v = rng.uniform(-3.14159265358979323846,
                                               3.14159265358979323846);
  return theta;
}

inline std::vector<double> random_features(int dim, Rng& rng) {
  std::vector<double> x(dim);
  for (auto& v : x) v = rng.uniform(-3.14159265358979323846,
                                    3.14159265358979323846);
  return x;
}

}  // namespace reupload::test
