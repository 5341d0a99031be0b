#include "reupload/sim/gates.hpp"

#include <cmath>
#include <stdexcept>
#include <unsupported/Eigen/KroneckerProduct>

namespace reupload::sim {

namespace {
const Complex kI{0.0, 1.0};

void require_finite(double angle) {
  if (!std::isfinite(angle)) {
    throw std::domain_error("rotation angle must be finite");
  }
}
}  // namespace

CMatrix pauli_x() {
  CMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

CMatrix pauli_y() {
  CMatrix m(2, 2);
  m << 0, -kI, kI, 0;
  return m;
}

CMatrix pauli_z() {
  CMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

CMatrix rz(double angle) {
  require_finite(angle);
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 0) = std::exp(-kI * (angle / 2.0));
  m(1, 1) = std::exp(kI * (angle / 2.0));
  return m;
}

CMatrix ry(double angle) {
  require_finite(angle);
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  CMatrix m(2, 2);
  m << c, -s, s, c;
  return m;
}

CMatrix r3(double phi1, double phi2, double phi3) {
  return rz(phi3) * ry(phi2) * rz(phi1);
}

CMatrix embed(const CMatrix& gate, int qubit, int n_qubits) {
  if (qubit < 0 || qubit >= n_qubits) {
    throw std::out_of_range("embed: qubit index out of range");
  }
  const Eigen::Index left = Eigen::Index{1} << qubit;
  const Eigen::Index right = Eigen::Index{1} << (n_qubits - qubit - 1);
  CMatrix tmp = Eigen::kroneckerProduct(CMatrix::Identity(left, left), gate);
  return Eigen::kroneckerProduct(tmp, CMatrix::Identity(right, right));
}

CMatrix cnot(int control, int target, int n_qubits) {
  if (control == target || control < 0 || target < 0 ||
      control >= n_qubits || target >= n_qubits) {
    throw std::out_of_range("cnot: bad qubit indices");
  }
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  const Eigen::Index cbit = Eigen::Index{1} << (n_qubits - 1 - control);
  const Eigen::Index tbit = Eigen::Index{1} << (n_qubits - 1 - target);
  CMatrix m = CMatrix::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const Eigen::Index j = (i & cbit) ? (i ^ tbit) : i;
    m(j, i) = 1.0;
  }
  return m;
}

CMatrix cnot_ring(int n_qubits) {
  if (n_qubits < 2) {
    throw std::domain_error("cnot_ring requires at least 2 qubits");
  }
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  CMatrix m = CMatrix::Identity(dim, dim);
  for (int i = 0; i < n_qubits; ++i) {
    m = cnot(i, (i + 1) % n_qubits, n_qubits) * m;
  }
  return m;
}

bool is_unitary(const CMatrix& u, double tol) {
  if (u.rows() != u.cols()) return false;
  CMatrix delta = u * u.adjoint() - CMatrix::Identity(u.rows(), u.cols());
  return delta.cwiseAbs().maxCoeff() <= tol;
}

}  // namespace reupload::sim
