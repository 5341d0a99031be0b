#include "reupload/pauli/transfer.hpp"

#include <cmath>
#include <stdexcept>

namespace reupload::pauli {

TransferMatrix::TransferMatrix(int n, Eigen::MatrixXd m)
    : n_qubits(n), entries(std::move(m)) {
  const Eigen::Index expected = Eigen::Index{1} << (2 * n_qubits);
  if (entries.rows() != expected || entries.cols() != expected) {
    throw std::invalid_argument("TransferMatrix: dimension is not 4^n");
  }
  for (Eigen::Index i = 0; i < expected; ++i) {
    const double want = (i == 0) ? 1.0 : 0.0;
    if (std::abs(entries(0, i) - want) > 1e-9 ||
        std::abs(entries(i, 0) - want) > 1e-9) {
      throw std::invalid_argument(
          "TransferMatrix: first row/column is not (1, 0, ..., 0)");
    }
  }
}

TransferMatrix transfer_of_unitary(const sim::CMatrix& u) {
  if (!sim::is_unitary(u, 1e-8)) {
    throw std::invalid_argument("transfer_of_unitary: input is not unitary");
  }
  int n = 0;
  while ((Eigen::Index{1} << n) < u.rows()) ++n;
  const Eigen::Index dim = Eigen::Index{1} << (2 * n);
  const double scale = 1.0 / static_cast<double>(Eigen::Index{1} << n);
  Eigen::MatrixXd h(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    const sim::CMatrix conj = u * pauli_element(n, j) * u.adjoint();
    for (Eigen::Index i = 0; i < dim; ++i) {
      h(i, j) = scale * (pauli_element(n, i) * conj).trace().real();
    }
  }
  return TransferMatrix(n, std::move(h));
}

std::pair<double, double> expected_cos_sin(double mu, double sigma2) {
  if (sigma2 < 0.0) {
    throw std::domain_error("expected_cos_sin: negative variance");
  }
  const double damp = std::exp(-sigma2 / 2.0);
  return {damp * std::cos(mu), damp * std::sin(mu)};
}

TransferMatrix expected_transfer_single(const std::array<double, 3>& mu,
                                        const std::array<double, 3>& sigma2) {
  for (double s : sigma2) {
    if (s <= 0.0) {
      throw std::domain_error("expected_transfer_single: variance must be > 0");
    }
  }
  const double a1 = std::exp(-sigma2[0] / 2.0);
  const double a2 = std::exp(-sigma2[1] / 2.0);
  const double a3 = std::exp(-sigma2[2] / 2.0);
  const double c1 = std::cos(mu[0]), s1 = std::sin(mu[0]);
  const double c2 = std::cos(mu[1]), s2 = std::sin(mu[1]);
  const double c3 = std::cos(mu[2]), s3 = std::sin(mu[2]);

  const double tzz = a2 * c2;
  const double tzx = a2 * s2 * a3 * c3;
  const double tzy = a2 * s2 * a3 * s3;
  const double txz = -a2 * s2 * a1 * c1;
  const double txx = a2 * c2 * a1 * c1 * a3 * c3 - a1 * s1 * a3 * s3;
  const double txy = a2 * c2 * a1 * c1 * a3 * s3 + a1 * s1 * a3 * c3;
  const double tyz = a2 * s2 * a1 * s1;
  const double tyx = -a2 * c2 * a1 * s1 * a3 * c3 - a1 * c1 * a3 * s3;
  const double tyy = -a2 * c2 * a1 * s1 * a3 * s3 + a1 * c1 * a3 * c3;

  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(4, 4);
  m(0, 0) = 1.0;
  m(1, 1) = tzz;
  m(1, 2) = txz;
  m(1, 3) = tyz;
  m(2, 1) = tzx;
  m(2, 2) = txx;
  m(2, 3) = tyx;
  m(3, 1) = tzy;
  m(3, 2) = txy;
  m(3, 3) = tyy;
  return TransferMatrix(1, std::move(m));
}

double contraction_eigenvalue(const TransferMatrix& t) {
  const Eigen::Index k = t.dim() - 1;
  const Eigen::MatrixXd block = t.entries.bottomRightCorner(k, k);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
      block.transpose() * block, Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

}  // namespace reupload::pauli
