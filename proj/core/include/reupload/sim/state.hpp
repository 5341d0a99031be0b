#pragma once

#include <vector>

#include "reupload/sim/gates.hpp"

namespace reupload::sim {

struct StateVector {
  int n_qubits = 0;
  CVector amps;

  StateVector() = default;
  StateVector(int n, CVector a);

  Eigen::Index dim() const { return amps.size(); }
};

struct DensityMatrix {
  int n_qubits = 0;
  CMatrix mat;

  DensityMatrix() = default;
  DensityMatrix(int n, CMatrix m);

  Eigen::Index dim() const { return mat.rows(); }
};

StateVector zero_state(int n_qubits);
StateVector basis_state(int n_qubits, Eigen::Index index);

StateVector apply(const CMatrix& gate, const StateVector& state);

// In-place single-qubit rotation kernels used by the training loops.
void apply_rz_inplace(CVector& amps, int qubit, int n_qubits, double angle);
void apply_ry_inplace(CVector& amps, int qubit, int n_qubits, double angle);
void apply_cnot_inplace(CVector& amps, int control, int target, int n_qubits);

DensityMatrix density_from_vector(const StateVector& state);
DensityMatrix mix(const std::vector<DensityMatrix>& states,
                  const std::vector<double>& weights);
DensityMatrix maximally_mixed(int n_qubits);

double purity(const DensityMatrix& rho);

}  // namespace reupload::sim
