#pragma once

#include <span>
#include <vector>

#include "reupload/sim/gates.hpp"

namespace reupload::model {

enum class Entangler { ring_cnot, none };

struct CircuitSpec {
  int n_qubits = 1;
  int encoding_layers = 1;    // L: layers that carry data
  int total_layers = 1;       // L_max >= L: padded layers encode zeros
  int repetitions = 1;        // P
  Entangler entangler = Entangler::ring_cnot;

  int data_dim() const { return 3 * n_qubits * encoding_layers; }
  void validate() const;
};

// Trainable angles indexed [p][l][n][component], p in 0..P-1, l in 0..Lmax-1,
// n in 0..N-1, component in 0..2.
struct ParameterTensor {
  int repetitions = 0;
  int total_layers = 0;
  int n_qubits = 0;
  std::vector<double> values;

  ParameterTensor() = default;
  ParameterTensor(int p, int lmax, int n);

  std::size_t index(int p, int l, int n, int c) const {
    return ((static_cast<std::size_t>(p) * total_layers + l) * n_qubits + n) *
               3 +
           c;
  }
  double& at(int p, int l, int n, int c) { return values[index(p, l, n, c)]; }
  double at(int p, int l, int n, int c) const {
    return values[index(p, l, n, c)];
  }
  std::size_t size() const { return values.size(); }
};

ParameterTensor zero_parameters(const CircuitSpec& spec);

// Full 2^N x 2^N data re-uploading unitary: for p = 1..P, for l = 1..Lmax,
// the encoding layer (r3 per qubit, zeros when l > L) followed by the
// parameterized layer (r3 per qubit, then the entangler).
sim::CMatrix build_unitary(const CircuitSpec& spec, std::span<const double> x,
                           const ParameterTensor& theta);

// Unitary of a single parameterized layer (r3 per qubit, then entangler).
sim::CMatrix parameterized_layer_unitary(const CircuitSpec& spec,
                                         const ParameterTensor& theta, int p,
                                         int l);

}  // namespace reupload::model
