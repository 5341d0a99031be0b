#pragma once

#include "reupload/sim/state.hpp"

namespace reupload::sim {

struct Observable {
  enum class Kind { H0, H1, TensorZ, Custom };

  Kind kind = Kind::Custom;
  CMatrix mat;

  Observable() = default;
  Observable(Kind k, CMatrix m);
};

// |0><0| on qubit 0, identity elsewhere.
Observable observable_h0(int n_qubits);
// |1><1| on qubit 0, identity elsewhere.
Observable observable_h1(int n_qubits);
// Z (x) Z (x) ... (x) Z
Observable observable_tensor_z(int n_qubits);
Observable observable_custom(CMatrix m);

double expectation(const Observable& obs, const StateVector& state);
double expectation(const Observable& obs, const DensityMatrix& rho);

}  // namespace reupload::sim
