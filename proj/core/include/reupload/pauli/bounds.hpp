#pragma once

namespace reupload::pauli {

// Upper bound on d2(expected encoded state, maximally mixed):
// log2(1 + (2^N - 1) e^{-L sigma2}).
double divergence_bound(int n_qubits, int layers, double sigma2);

// Smallest encoding depth L with L >= (1/sigma2)[(N+2) ln 2 + 2 ln(1/eps)],
// past which every hypothesis sits within eps of random guessing.
int layer_threshold(int n_qubits, double sigma2, double eps);

// Trace-distance bound sqrt(1 - 2^{-d2}) implied by a divergence value.
double trace_distance_from_d2(double d2_value);

}  // namespace reupload::pauli
