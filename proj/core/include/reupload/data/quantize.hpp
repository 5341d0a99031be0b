#pragma once

#include <span>
#include <vector>

namespace reupload::data {

struct QuantizeResult {
  std::vector<double> values;
  double max_err = 0.0;  // vs the mod-2pi reduced inputs; <= 2^-q
};

// Reduce each entry mod 2pi, then truncate to 3 integer + q fractional
// binary digits (floor, matching a one-sided remainder).
QuantizeResult quantize(std::span<const double> x, int q);

// Fractional bits needed so the hypothesis of a circuit with N qubits,
// L encoding layers and P repetitions moves by at most delta:
// ceil(log2(3 P L N / delta)), floored at zero.
int approx_qubits_needed(int n_qubits, int layers, int repetitions,
                         double delta);

// Worst-case hypothesis shift from quantizing the data: 3 N L P 2^-q.
double approx_error_bound(int n_qubits, int layers, int repetitions, int q);

}  // namespace reupload::data
