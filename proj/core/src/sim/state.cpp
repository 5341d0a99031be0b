#include "reupload/sim/state.hpp"

#include <cmath>
#include <stdexcept>

namespace reupload::sim {

namespace {
bool is_power_of_two(Eigen::Index x) { return x > 0 && (x & (x - 1)) == 0; }
}  // namespace

StateVector::StateVector(int n, CVector a) : n_qubits(n), amps(std::move(a)) {
  if (amps.size() != (Eigen::Index{1} << n_qubits)) {
    throw std::invalid_argument("StateVector: dimension is not 2^n");
  }
  if (std::abs(amps.squaredNorm() - 1.0) > 1e-10) {
    throw std::invalid_argument("StateVector: not normalized");
  }
}

DensityMatrix::DensityMatrix(int n, CMatrix m) : n_qubits(n), mat(std::move(m)) {
  if (mat.rows() != mat.cols() || !is_power_of_two(mat.rows()) ||
      mat.rows() != (Eigen::Index{1} << n_qubits)) {
    throw std::invalid_argument("DensityMatrix: dimension is not 2^n");
  }
  if ((mat - mat.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
    throw std::invalid_argument("DensityMatrix: not Hermitian");
  }
  if (std::abs(mat.trace().real() - 1.0) > 1e-10 ||
      std::abs(mat.trace().imag()) > 1e-10) {
    throw std::invalid_argument("DensityMatrix: trace != 1");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> es(mat, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-9) {
    throw std::invalid_argument("DensityMatrix: negative eigenvalue");
  }
}

StateVector zero_state(int n_qubits) { return basis_state(n_qubits, 0); }

StateVector basis_state(int n_qubits, Eigen::Index index) {
  CVector amps = CVector::Zero(Eigen::Index{1} << n_qubits);
  amps(index) = 1.0;
  return StateVector(n_qubits, std::move(amps));
}

StateVector apply(const CMatrix& gate, const StateVector& state) {
  if (gate.cols() != state.dim()) {
    throw std::invalid_argument("apply: dimension mismatch");
  }
  return StateVector(state.n_qubits, gate * state.amps);
}

void apply_rz_inplace(CVector& amps, int qubit, int n_qubits, double angle) {
  const Complex e0 = std::exp(Complex(0.0, -angle / 2.0));
  const Complex e1 = std::exp(Complex(0.0, angle / 2.0));
  const Eigen::Index bit = Eigen::Index{1} << (n_qubits - 1 - qubit);
  const Eigen::Index dim = amps.size();
  for (Eigen::Index base = 0; base < dim; base += 2 * bit) {
    for (Eigen::Index i = base; i < base + bit; ++i) {
      amps(i) *= e0;
      amps(i + bit) *= e1;
    }
  }
}

void apply_ry_inplace(CVector& amps, int qubit, int n_qubits, double angle) {
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  const Eigen::Index bit = Eigen::Index{1} << (n_qubits - 1 - qubit);
  const Eigen::Index dim = amps.size();
  for (Eigen::Index base = 0; base < dim; base += 2 * bit) {
    for (Eigen::Index i = base; i < base + bit; ++i) {
      const Complex a = amps(i);
      const Complex b = amps(i + bit);
      amps(i) = c * a - s * b;
      amps(i + bit) = s * a + c * b;
    }
  }
}

void apply_cnot_inplace(CVector& amps, int control, int target, int n_qubits) {
  const Eigen::Index cbit = Eigen::Index{1} << (n_qubits - 1 - control);
  const Eigen::Index tbit = Eigen::Index{1} << (n_qubits - 1 - target);
  const Eigen::Index dim = amps.size();
  for (Eigen::Index i = 0; i < dim; ++i) {
    if ((i & cbit) && !(i & tbit)) {
      std::swap(amps(i), amps(i | tbit));
    }
  }
}

DensityMatrix density_from_vector(const StateVector& state) {
  return DensityMatrix(state.n_qubits, state.amps * state.amps.adjoint());
}

DensityMatrix mix(const std::vector<DensityMatrix>& states,
                  const std::vector<double>& weights) {
  if (states.empty() || states.size() != weights.size()) {
    throw std::invalid_argument("mix: states/weights size mismatch");
  }
  double total = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw std::invalid_argument("mix: negative weight");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-6) {
    throw std::invalid_argument("mix: weights do not sum to 1");
  }
  CMatrix acc = CMatrix::Zero(states[0].dim(), states[0].dim());
  for (std::size_t i = 0; i < states.size(); ++i) {
    acc += weights[i] * states[i].mat;
  }
  acc /= total;
  return DensityMatrix(states[0].n_qubits, std::move(acc));
}

DensityMatrix maximally_mixed(int n_qubits) {
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  return DensityMatrix(n_qubits,
                       CMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

double purity(const DensityMatrix& rho) {
  return (rho.mat * rho.mat).trace().real();
}

}  // namespace reupload::sim
