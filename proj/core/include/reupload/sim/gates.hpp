#pragma once

#include <Eigen/Dense>
#include <complex>

namespace reupload::sim {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// Qubit 0 is the leftmost tensor factor, i.e. the most significant bit of the
// computational-basis index.

CMatrix pauli_x();
CMatrix pauli_y();
CMatrix pauli_z();

// e^{-i angle Z / 2}
CMatrix rz(double angle);
// e^{-i angle Y / 2}
CMatrix ry(double angle);
// rz(phi3) * ry(phi2) * rz(phi1)
CMatrix r3(double phi1, double phi2, double phi3);

// I^{x qubit} (x) gate (x) I^{x (n_qubits - qubit - 1)}
CMatrix embed(const CMatrix& gate, int qubit, int n_qubits);

CMatrix cnot(int control, int target, int n_qubits);

// Product of CNOT(i -> (i+1) mod n) for i = 0..n-1, ascending i.
CMatrix cnot_ring(int n_qubits);

bool is_unitary(const CMatrix& u, double tol = 1e-10);

}  // namespace reupload::sim
