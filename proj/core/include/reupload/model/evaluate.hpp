#pragma once

#include "reupload/model/circuit.hpp"
#include "reupload/sim/observable.hpp"

namespace reupload::model {

// Statevector produced by the re-uploading circuit on |0...0>.
sim::StateVector encode_state(const CircuitSpec& spec,
                              const ParameterTensor& theta,
                              std::span<const double> x);

// Tr[H rho(x, theta)].
double evaluate(const CircuitSpec& spec, const ParameterTensor& theta,
                std::span<const double> x, const sim::Observable& obs);

// Exact parameter-shift gradient of the measured expectation with respect to
// every entry of theta. Returns the expectation value; grad is resized and
// filled in theta's flat index order.
double evaluate_with_gradient(const CircuitSpec& spec,
                              const ParameterTensor& theta,
                              std::span<const double> x,
                              const sim::Observable& obs,
                              std::vector<double>& grad);

}  // namespace reupload::model
