#include "reupload/sim/observable.hpp"

#include <stdexcept>

namespace reupload::sim {

Observable::Observable(Kind k, CMatrix m) : kind(k), mat(std::move(m)) {
  if ((mat - mat.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
    throw std::invalid_argument("Observable: not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> es(mat, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1.0 - 1e-9 ||
      es.eigenvalues().maxCoeff() > 1.0 + 1e-9) {
    throw std::invalid_argument("Observable: eigenvalues outside [-1, 1]");
  }
}

Observable observable_h0(int n_qubits) {
  CMatrix p(2, 2);
  p << 1, 0, 0, 0;
  return Observable(Observable::Kind::H0, embed(p, 0, n_qubits));
}

Observable observable_h1(int n_qubits) {
  CMatrix p(2, 2);
  p << 0, 0, 0, 1;
  return Observable(Observable::Kind::H1, embed(p, 0, n_qubits));
}

Observable observable_tensor_z(int n_qubits) {
  CMatrix m = pauli_z();
  for (int i = 1; i < n_qubits; ++i) {
    CMatrix next(m.rows() * 2, m.cols() * 2);
    next.topLeftCorner(m.rows(), m.cols()) = m;
    next.bottomRightCorner(m.rows(), m.cols()) = -m;
    next.topRightCorner(m.rows(), m.cols()).setZero();
    next.bottomLeftCorner(m.rows(), m.cols()).setZero();
    m = std::move(next);
  }
  return Observable(Observable::Kind::TensorZ, std::move(m));
}

Observable observable_custom(CMatrix m) {
  return Observable(Observable::Kind::Custom, std::move(m));
}

double expectation(const Observable& obs, const StateVector& state) {
  if (obs.mat.cols() != state.dim()) {
    throw std::invalid_argument("expectation: dimension mismatch");
  }
  return (state.amps.adjoint() * obs.mat * state.amps)(0, 0).real();
}

double expectation(const Observable& obs, const DensityMatrix& rho) {
  if (obs.mat.cols() != rho.dim()) {
    throw std::invalid_argument("expectation: dimension mismatch");
  }
  return (obs.mat * rho.mat).trace().real();
}

}  // namespace reupload::sim
