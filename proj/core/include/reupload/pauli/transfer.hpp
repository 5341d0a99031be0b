#pragma once

#include <array>

#include "reupload/pauli/pauli_vector.hpp"

namespace reupload::pauli {

// Real 4^n x 4^n map of Pauli coefficients: to_pauli(U rho U^dag) =
// transfer * to_pauli(rho). Orthogonal with a 1 (+) H block structure when
// built from a unitary.
struct TransferMatrix {
  int n_qubits = 0;
  Eigen::MatrixXd entries;

  TransferMatrix() = default;
  TransferMatrix(int n, Eigen::MatrixXd m);

  Eigen::Index dim() const { return entries.rows(); }
};

// Definitional construction: entry(i, j) = 2^{-n} Tr[P_i U P_j U^dag].
TransferMatrix transfer_of_unitary(const sim::CMatrix& u);

// (E[cos x], E[sin x]) for x ~ N(mu, sigma2); both damped by e^{-sigma2/2}.
std::pair<double, double> expected_cos_sin(double mu, double sigma2);

// Closed-form expected transfer matrix of the single-qubit encoding gate
// r3(x1, x2, x3) with x_i ~ N(mu_i, sigma2_i) independent.
TransferMatrix expected_transfer_single(const std::array<double, 3>& mu,
                                        const std::array<double, 3>& sigma2);

// Max eigenvalue of T^t T where T is the lower-right 3x3 block.
double contraction_eigenvalue(const TransferMatrix& t);

}  // namespace reupload::pauli
