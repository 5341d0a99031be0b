#pragma once

#include "reupload/sim/state.hpp"

namespace reupload::pauli {

// Petz-Renyi-2 divergence log2(Tr[rho1^2 rho2^{-1}]). rho2 must be full rank
// (min eigenvalue > 1e-10); the maximally mixed rho2 is handled without
// inversion as N + log2(Tr[rho1^2]).
double d2(const sim::DensityMatrix& rho1, const sim::DensityMatrix& rho2);

double trace_distance(const sim::DensityMatrix& rho1,
                      const sim::DensityMatrix& rho2);

// Uhlmann fidelity Tr sqrt(sqrt(rho1) rho2 sqrt(rho1)).
double fidelity(const sim::DensityMatrix& rho1, const sim::DensityMatrix& rho2);

// Tr[sqrt(rho1) sqrt(rho2)]; renyi(1/2) = -2 log2(affinity).
double affinity(const sim::DensityMatrix& rho1, const sim::DensityMatrix& rho2);

// Petz-Renyi divergence of order alpha in (0,1) or (1,inf):
// (alpha-1)^{-1} log2 Tr[rho1^alpha rho2^{1-alpha}]. alpha = 1 is rejected
// (that limit is the relative entropy, not provided here).
double renyi(double alpha, const sim::DensityMatrix& rho1,
             const sim::DensityMatrix& rho2);

}  // namespace reupload::pauli
