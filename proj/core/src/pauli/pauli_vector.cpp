#include "reupload/pauli/pauli_vector.hpp"

#include <cmath>
#include <stdexcept>
#include <unsupported/Eigen/KroneckerProduct>

namespace reupload::pauli {

namespace {

sim::CMatrix single_pauli(int digit) {
  switch (digit) {
    case 0:
      return sim::CMatrix::Identity(2, 2);
    case 1:
      return sim::pauli_z();
    case 2:
      return sim::pauli_x();
    default:
      return sim::pauli_y();
  }
}

}  // namespace

PauliVector::PauliVector(int n, Eigen::VectorXd c)
    : n_qubits(n), coeffs(std::move(c)) {
  const Eigen::Index expected = Eigen::Index{1} << (2 * n_qubits);
  if (coeffs.size() != expected) {
    throw std::invalid_argument("PauliVector: dimension is not 4^n");
  }
  if (std::abs(coeffs(0) - 1.0) > 1e-9) {
    throw std::invalid_argument("PauliVector: identity coefficient != 1");
  }
}

sim::CMatrix pauli_element(int n_qubits, Eigen::Index index) {
  sim::CMatrix m = sim::CMatrix::Identity(1, 1);
  for (int q = 0; q < n_qubits; ++q) {
    const int digit =
        static_cast<int>((index >> (2 * (n_qubits - 1 - q))) & 3);
    m = Eigen::kroneckerProduct(m, single_pauli(digit)).eval();
  }
  return m;
}

PauliVector to_pauli(const sim::DensityMatrix& rho) {
  const Eigen::Index dim = Eigen::Index{1} << (2 * rho.n_qubits);
  Eigen::VectorXd coeffs(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    coeffs(i) = (rho.mat * pauli_element(rho.n_qubits, i)).trace().real();
  }
  return PauliVector(rho.n_qubits, std::move(coeffs));
}

sim::DensityMatrix from_pauli(const PauliVector& v) {
  const Eigen::Index dim = Eigen::Index{1} << v.n_qubits;
  sim::CMatrix acc = sim::CMatrix::Zero(dim, dim);
  for (Eigen::Index i = 0; i < v.dim(); ++i) {
    acc += v.coeffs(i) * pauli_element(v.n_qubits, i);
  }
  acc /= static_cast<double>(dim);
  return sim::DensityMatrix(v.n_qubits, std::move(acc));
}

}  // namespace reupload::pauli
