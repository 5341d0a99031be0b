#include "reupload/model/evaluate.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace reupload::model {

namespace {

using sim::CMatrix;
using sim::Complex;
using sim::CVector;

constexpr double kHalfPi = std::numbers::pi / 2.0;

enum class OpKind { rot_z, rot_y, ring };

struct Op {
  OpKind kind;
  int qubit = 0;
  double angle = 0.0;
  int theta_index = -1;  // -1: data-fixed angle
};

std::vector<Op> compile_circuit(const CircuitSpec& spec,
                                const ParameterTensor& theta,
                                std::span<const double> x) {
  spec.validate();
  if (static_cast<int>(x.size()) != spec.data_dim()) {
    throw std::invalid_argument("circuit input dimension mismatch");
  }
  std::vector<Op> ops;
  ops.reserve(static_cast<std::size_t>(spec.repetitions) * spec.total_layers *
              (6 * spec.n_qubits + 1));
  for (int p = 0; p < spec.repetitions; ++p) {
    for (int l = 0; l < spec.total_layers; ++l) {
      for (int n = 0; n < spec.n_qubits; ++n) {
        double x1 = 0.0, x2 = 0.0, x3 = 0.0;
        if (l < spec.encoding_layers) {
          const std::size_t base =
              (static_cast<std::size_t>(l) * spec.n_qubits + n) * 3;
          x1 = x[base];
          x2 = x[base + 1];
          x3 = x[base + 2];
        }
        // r3(x1, x2, x3) = rz(x3) ry(x2) rz(x1), applied left to right
        ops.push_back({OpKind::rot_z, n, x1, -1});
        ops.push_back({OpKind::rot_y, n, x2, -1});
        ops.push_back({OpKind::rot_z, n, x3, -1});
      }
      for (int n = 0; n < spec.n_qubits; ++n) {
        ops.push_back({OpKind::rot_z, n, theta.at(p, l, n, 0),
                       static_cast<int>(theta.index(p, l, n, 0))});
        ops.push_back({OpKind::rot_y, n, theta.at(p, l, n, 1),
                       static_cast<int>(theta.index(p, l, n, 1))});
        ops.push_back({OpKind::rot_z, n, theta.at(p, l, n, 2),
                       static_cast<int>(theta.index(p, l, n, 2))});
      }
      if (spec.entangler == Entangler::ring_cnot && spec.n_qubits >= 2) {
        ops.push_back({OpKind::ring, -1, 0.0, -1});
      }
    }
  }
  return ops;
}

void apply_op(CVector& amps, const Op& op, int n_qubits) {
  switch (op.kind) {
    case OpKind::rot_z:
      sim::apply_rz_inplace(amps, op.qubit, n_qubits, op.angle);
      break;
    case OpKind::rot_y:
      sim::apply_ry_inplace(amps, op.qubit, n_qubits, op.angle);
      break;
    case OpKind::ring:
      for (int i = 0; i < n_qubits; ++i) {
        sim::apply_cnot_inplace(amps, i, (i + 1) % n_qubits, n_qubits);
      }
      break;
  }
}

// ---------------------------------------------------------------------------
// Single-qubit fast path (used whenever entangler == none, where the circuit
// is a tensor product of per-qubit sub-circuits).

struct Rot2 {
  OpKind kind;
  double angle;
  int theta_index;
};

using Vec2 = Eigen::Vector2cd;
using Mat2 = Eigen::Matrix2cd;

std::vector<std::vector<Rot2>> compile_per_qubit(const CircuitSpec& spec,
                                                 const ParameterTensor& theta,
                                                 std::span<const double> x) {
  spec.validate();
  if (static_cast<int>(x.size()) != spec.data_dim()) {
    throw std::invalid_argument("circuit input dimension mismatch");
  }
  std::vector<std::vector<Rot2>> per_qubit(spec.n_qubits);
  for (int p = 0; p < spec.repetitions; ++p) {
    for (int l = 0; l < spec.total_layers; ++l) {
      for (int n = 0; n < spec.n_qubits; ++n) {
        double x1 = 0.0, x2 = 0.0, x3 = 0.0;
        if (l < spec.encoding_layers) {
          const std::size_t base =
              (static_cast<std::size_t>(l) * spec.n_qubits + n) * 3;
          x1 = x[base];
          x2 = x[base + 1];
          x3 = x[base + 2];
        }
        auto& ops = per_qubit[n];
        ops.push_back({OpKind::rot_z, x1, -1});
        ops.push_back({OpKind::rot_y, x2, -1});
        ops.push_back({OpKind::rot_z, x3, -1});
        ops.push_back({OpKind::rot_z, theta.at(p, l, n, 0),
                       static_cast<int>(theta.index(p, l, n, 0))});
        ops.push_back({OpKind::rot_y, theta.at(p, l, n, 1),
                       static_cast<int>(theta.index(p, l, n, 1))});
        ops.push_back({OpKind::rot_z, theta.at(p, l, n, 2),
                       static_cast<int>(theta.index(p, l, n, 2))});
      }
    }
  }
  return per_qubit;
}

void apply_rot2(Vec2& v, OpKind kind, double angle) {
  if (kind == OpKind::rot_z) {
    v(0) *= std::exp(Complex(0.0, -angle / 2.0));
    v(1) *= std::exp(Complex(0.0, angle / 2.0));
  } else {
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    const Complex a = v(0), b = v(1);
    v(0) = c * a - s * b;
    v(1) = s * a + c * b;
  }
}

Mat2 rot2_matrix(OpKind kind, double angle) {
  Mat2 g;
  if (kind == OpKind::rot_z) {
    g << std::exp(Complex(0.0, -angle / 2.0)), 0.0, 0.0,
        std::exp(Complex(0.0, angle / 2.0));
  } else {
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    g << c, -s, s, c;
  }
  return g;
}

Vec2 run_qubit(const std::vector<Rot2>& ops) {
  Vec2 v(1.0, 0.0);
  for (const auto& op : ops) apply_rot2(v, op.kind, op.angle);
  return v;
}

double quad_form2(const Vec2& v, const Mat2& m) {
  return (v.adjoint() * m * v)(0, 0).real();
}

// Expectation of a 2x2 observable on one qubit's sub-circuit plus the
// parameter-shift gradient with respect to that qubit's angles.
double qubit_value_and_gradient(const std::vector<Rot2>& ops, const Mat2& obs,
                                std::vector<double>& grad) {
  std::vector<Vec2> fwd(ops.size() + 1);
  fwd[0] = Vec2(1.0, 0.0);
  for (std::size_t k = 0; k < ops.size(); ++k) {
    fwd[k + 1] = fwd[k];
    apply_rot2(fwd[k + 1], ops[k].kind, ops[k].angle);
  }
  const double value = quad_form2(fwd.back(), obs);

  Mat2 m = obs;
  for (std::size_t k = ops.size(); k-- > 0;) {
    const auto& op = ops[k];
    if (op.theta_index >= 0) {
      Vec2 plus = fwd[k];
      apply_rot2(plus, op.kind, op.angle + kHalfPi);
      Vec2 minus = fwd[k];
      apply_rot2(minus, op.kind, op.angle - kHalfPi);
      grad[op.theta_index] = 0.5 * (quad_form2(plus, m) - quad_form2(minus, m));
    }
    const Mat2 g = rot2_matrix(op.kind, op.angle);
    m = (g.adjoint() * m * g).eval();
  }
  return value;
}

bool factorizable(const CircuitSpec& spec, const sim::Observable& obs) {
  if (spec.entangler == Entangler::ring_cnot && spec.n_qubits >= 2) {
    return false;
  }
  return obs.kind == sim::Observable::Kind::H0 ||
         obs.kind == sim::Observable::Kind::H1 ||
         obs.kind == sim::Observable::Kind::TensorZ;
}

Mat2 qubit0_observable(sim::Observable::Kind kind) {
  Mat2 m = Mat2::Zero();
  if (kind == sim::Observable::Kind::H0) {
    m(0, 0) = 1.0;
  } else {
    m(1, 1) = 1.0;
  }
  return m;
}

Mat2 pauli_z2() {
  Mat2 m;
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

}  // namespace

sim::StateVector encode_state(const CircuitSpec& spec,
                              const ParameterTensor& theta,
                              std::span<const double> x) {
  const auto ops = compile_circuit(spec, theta, x);
  CVector amps = CVector::Zero(Eigen::Index{1} << spec.n_qubits);
  amps(0) = 1.0;
  for (const auto& op : ops) apply_op(amps, op, spec.n_qubits);
  return sim::StateVector(spec.n_qubits, std::move(amps));
}

double evaluate(const CircuitSpec& spec, const ParameterTensor& theta,
                std::span<const double> x, const sim::Observable& obs) {
  if (factorizable(spec, obs)) {
    const auto per_qubit = compile_per_qubit(spec, theta, x);
    if (obs.kind == sim::Observable::Kind::TensorZ) {
      double h = 1.0;
      for (const auto& ops : per_qubit) {
        h *= quad_form2(run_qubit(ops), pauli_z2());
      }
      return h;
    }
    return quad_form2(run_qubit(per_qubit[0]), qubit0_observable(obs.kind));
  }
  return sim::expectation(obs, encode_state(spec, theta, x));
}

double evaluate_with_gradient(const CircuitSpec& spec,
                              const ParameterTensor& theta,
                              std::span<const double> x,
                              const sim::Observable& obs,
                              std::vector<double>& grad) {
  grad.assign(theta.size(), 0.0);

  if (factorizable(spec, obs)) {
    const auto per_qubit = compile_per_qubit(spec, theta, x);
    if (obs.kind != sim::Observable::Kind::TensorZ) {
      // Observables on qubit 0 only: the other factors trace out.
      return qubit_value_and_gradient(per_qubit[0],
                                      qubit0_observable(obs.kind), grad);
    }
    // <Z x ... x Z> factorizes into a product of per-qubit <Z>; the chain
    // rule multiplies each qubit's gradient by the other factors.
    const int n = spec.n_qubits;
    std::vector<double> z(n);
    std::vector<std::vector<double>> partial(n);
    for (int q = 0; q < n; ++q) {
      partial[q].assign(theta.size(), 0.0);
      z[q] = qubit_value_and_gradient(per_qubit[q], pauli_z2(), partial[q]);
    }
    double h = 1.0;
    for (int q = 0; q < n; ++q) h *= z[q];
    for (int q = 0; q < n; ++q) {
      double rest = 1.0;
      for (int r = 0; r < n; ++r) {
        if (r != q) rest *= z[r];
      }
      for (std::size_t i = 0; i < grad.size(); ++i) {
        grad[i] += rest * partial[q][i];
      }
    }
    return h;
  }

  // Generic path: cache forward states, sweep the conjugated observable
  // backwards, evaluate the two shifted circuits locally at each gate.
  const auto ops = compile_circuit(spec, theta, x);
  const int n = spec.n_qubits;
  const Eigen::Index dim = Eigen::Index{1} << n;

  std::vector<CVector> fwd(ops.size() + 1);
  fwd[0] = CVector::Zero(dim);
  fwd[0](0) = 1.0;
  for (std::size_t k = 0; k < ops.size(); ++k) {
    fwd[k + 1] = fwd[k];
    apply_op(fwd[k + 1], ops[k], n);
  }
  const double value =
      (fwd.back().adjoint() * obs.mat * fwd.back())(0, 0).real();

  std::vector<CMatrix> z_emb(n), y_emb(n);
  for (int q = 0; q < n; ++q) {
    z_emb[q] = sim::embed(sim::pauli_z(), q, n);
    y_emb[q] = sim::embed(sim::pauli_y(), q, n);
  }
  CMatrix ring;
  if (spec.entangler == Entangler::ring_cnot && n >= 2) {
    ring = sim::cnot_ring(n);
  }

  CMatrix m = obs.mat;
  for (std::size_t k = ops.size(); k-- > 0;) {
    const auto& op = ops[k];
    if (op.theta_index >= 0) {
      CVector plus = fwd[k];
      CVector minus = fwd[k];
      Op shifted = op;
      shifted.angle = op.angle + kHalfPi;
      apply_op(plus, shifted, n);
      shifted.angle = op.angle - kHalfPi;
      apply_op(minus, shifted, n);
      const double hp = (plus.adjoint() * m * plus)(0, 0).real();
      const double hm = (minus.adjoint() * m * minus)(0, 0).real();
      grad[op.theta_index] = 0.5 * (hp - hm);
    }
    if (op.kind == OpKind::ring) {
      m = (ring.adjoint() * m * ring).eval();
    } else {
      const CMatrix& p = (op.kind == OpKind::rot_z) ? z_emb[op.qubit]
                                                    : y_emb[op.qubit];
      const double c = std::cos(op.angle / 2.0);
      const double s = std::sin(op.angle / 2.0);
      const CMatrix g =
          c * CMatrix::Identity(dim, dim) - Complex(0.0, s) * p;
      m = (g.adjoint() * m * g).eval();
    }
  }
  return value;
}

}  // namespace reupload::model
