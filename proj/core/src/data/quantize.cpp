#include "reupload/data/quantize.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace reupload::data {

QuantizeResult quantize(std::span<const double> x, int q) {
  if (q < 0) throw std::invalid_argument("fractional bit count must be >= 0");
  constexpr double two_pi = 2.0 * std::numbers::pi;
  const double scale = std::ldexp(1.0, q);

  QuantizeResult out;
  out.values.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i])) {
      throw std::invalid_argument("inputs must be finite");
    }
    double r = std::fmod(x[i], two_pi);
    if (r < 0.0) r += two_pi;
    const double truncated = std::floor(r * scale) / scale;
    out.values[i] = truncated;
    out.max_err = std::max(out.max_err, r - truncated);
  }
  return out;
}

int approx_qubits_needed(int n_qubits, int layers, int repetitions,
                         double delta) {
  if (n_qubits < 1 || layers < 1 || repetitions < 1) {
    throw std::invalid_argument("circuit dimensions must be >= 1");
  }
  if (!(delta > 0.0)) throw std::invalid_argument("delta must be positive");
  const double q = std::ceil(
      std::log2(3.0 * n_qubits * layers * repetitions / delta));
  return std::max(0, static_cast<int>(q));
}

double approx_error_bound(int n_qubits, int layers, int repetitions, int q) {
  if (n_qubits < 1 || layers < 1 || repetitions < 1) {
    throw std::invalid_argument("circuit dimensions must be >= 1");
  }
  if (q < 0) throw std::invalid_argument("fractional bit count must be >= 0");
  return 3.0 * n_qubits * layers * repetitions * std::ldexp(1.0, -q);
}

}  // namespace reupload::data
