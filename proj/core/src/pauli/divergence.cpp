#include "reupload/pauli/divergence.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace reupload::pauli {

namespace {

using sim::CMatrix;

void require_same_shape(const sim::DensityMatrix& a,
                        const sim::DensityMatrix& b) {
  if (a.n_qubits != b.n_qubits) {
    throw std::invalid_argument("density matrices live on different registers");
  }
}

Eigen::SelfAdjointEigenSolver<CMatrix> eigen_of(const sim::DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(rho.mat);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("eigendecomposition failed");
  }
  return es;
}

void require_full_rank(const Eigen::SelfAdjointEigenSolver<CMatrix>& es,
                       const char* where) {
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig <= 1e-10) {
    std::ostringstream msg;
    msg << where << ": second argument is not full rank (min eigenvalue "
        << min_eig << ")";
    throw std::domain_error(msg.str());
  }
}

// rho^p with eigenvalues clamped at zero (rho is PSD up to solver noise).
CMatrix psd_power(const sim::DensityMatrix& rho, double p) {
  const auto es = eigen_of(rho);
  Eigen::VectorXd lam = es.eigenvalues().cwiseMax(0.0);
  Eigen::VectorXd powered(lam.size());
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    powered(i) = std::pow(lam(i), p);
  }
  return es.eigenvectors() * powered.asDiagonal() *
         es.eigenvectors().adjoint();
}

bool is_maximally_mixed(const sim::DensityMatrix& rho) {
  const Eigen::Index d = rho.dim();
  return (rho.mat - CMatrix::Identity(d, d) / static_cast<double>(d)).norm() <
         1e-12;
}

}  // namespace

double d2(const sim::DensityMatrix& rho1, const sim::DensityMatrix& rho2) {
  require_same_shape(rho1, rho2);
  if (is_maximally_mixed(rho2)) {
    return rho1.n_qubits + std::log2(sim::purity(rho1));
  }
  const auto es = eigen_of(rho2);
  require_full_rank(es, "d2");
  const CMatrix inv = es.eigenvectors() *
                      es.eigenvalues().cwiseInverse().asDiagonal() *
                      es.eigenvectors().adjoint();
  const double tr = (rho1.mat * rho1.mat * inv).trace().real();
  return std::log2(tr);
}

double trace_distance(const sim::DensityMatrix& rho1,
                      const sim::DensityMatrix& rho2) {
  require_same_shape(rho1, rho2);
  Eigen::SelfAdjointEigenSolver<CMatrix> es(rho1.mat - rho2.mat,
                                            Eigen::EigenvaluesOnly);
  const double t = 0.5 * es.eigenvalues().cwiseAbs().sum();
  return std::clamp(t, 0.0, 1.0);
}

double fidelity(const sim::DensityMatrix& rho1,
                const sim::DensityMatrix& rho2) {
  require_same_shape(rho1, rho2);
  const CMatrix s = psd_power(rho1, 0.5);
  Eigen::SelfAdjointEigenSolver<CMatrix> es(s * rho2.mat * s,
                                            Eigen::EigenvaluesOnly);
  const double f = es.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
  return std::clamp(f, 0.0, 1.0);
}

double affinity(const sim::DensityMatrix& rho1,
                const sim::DensityMatrix& rho2) {
  require_same_shape(rho1, rho2);
  const double a =
      (psd_power(rho1, 0.5) * psd_power(rho2, 0.5)).trace().real();
  return std::clamp(a, 0.0, 1.0);
}

double renyi(double alpha, const sim::DensityMatrix& rho1,
             const sim::DensityMatrix& rho2) {
  require_same_shape(rho1, rho2);
  if (!(alpha > 0.0)) {
    throw std::domain_error("renyi order must be positive");
  }
  if (alpha == 1.0) {
    throw std::domain_error(
        "renyi order 1 is the relative entropy limit, which is not provided");
  }
  require_full_rank(eigen_of(rho2), "renyi");
  const double tr =
      (psd_power(rho1, alpha) * psd_power(rho2, 1.0 - alpha)).trace().real();
  return std::log2(tr) / (alpha - 1.0);
}

}  // namespace reupload::pauli
