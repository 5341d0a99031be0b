#pragma once

#include "reupload/sim/state.hpp"

namespace reupload::pauli {

// Coefficients of a state in the {I, Z, X, Y}^{x n} basis, qubit 0 as the
// leftmost factor. The multi-qubit index is mixed-radix base 4 with qubit 0
// most significant, so e.g. index 1 is I...IZ on the last qubit.
struct PauliVector {
  int n_qubits = 0;
  Eigen::VectorXd coeffs;

  PauliVector() = default;
  PauliVector(int n, Eigen::VectorXd c);

  Eigen::Index dim() const { return coeffs.size(); }
};

// Pauli basis element P_i for the ordering above; digit 0=I, 1=Z, 2=X, 3=Y.
sim::CMatrix pauli_element(int n_qubits, Eigen::Index index);

PauliVector to_pauli(const sim::DensityMatrix& rho);
sim::DensityMatrix from_pauli(const PauliVector& v);

}  // namespace reupload::pauli
