#include "reupload/pauli/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace reupload::pauli {

double divergence_bound(int n_qubits, int layers, double sigma2) {
  if (n_qubits < 1) throw std::invalid_argument("need at least one qubit");
  if (layers < 0) throw std::invalid_argument("layer count must be >= 0");
  if (!(sigma2 > 0.0)) {
    throw std::invalid_argument("variance must be positive");
  }
  const double x =
      (std::exp2(n_qubits) - 1.0) * std::exp(-layers * sigma2);
  return std::log1p(x) / std::numbers::ln2;
}

int layer_threshold(int n_qubits, double sigma2, double eps) {
  if (n_qubits < 1) throw std::invalid_argument("need at least one qubit");
  if (!(sigma2 > 0.0)) {
    throw std::invalid_argument("variance must be positive");
  }
  if (!(eps > 0.0 && eps < 1.0)) {
    throw std::domain_error("eps must lie in (0, 1)");
  }
  const double rhs =
      ((n_qubits + 2) * std::numbers::ln2 + 2.0 * std::log(1.0 / eps)) /
      sigma2;
  return static_cast<int>(std::ceil(rhs));
}

double trace_distance_from_d2(double d2_value) {
  if (d2_value < 0.0) {
    throw std::domain_error("divergence value must be nonnegative");
  }
  return std::sqrt(1.0 - std::exp2(-d2_value));
}

}  // namespace reupload::pauli
