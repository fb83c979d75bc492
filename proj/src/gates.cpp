// Copyright 2026 The cohqec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cohqec/gates.hpp"

#include <algorithm>
#include <cmath>

#include "cohqec/kernels.hpp"

namespace cohqec::gates {
namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

Matrix mat2(Complex a, Complex b, Complex c, Complex d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

void require_distinct(const Targets& targets) {
  for (std::size_t i = 0; i < targets.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (targets[i] == targets[j])
        throw Error(ErrorCode::kTargetCollision,
                    "qubit " + std::to_string(targets[i].position()) +
                        " used twice");
}

Targets cat(const Cluster& a) { return {a[0], a[1], a[2]}; }

Targets cat(const Cluster& a, const Cluster& b) {
  return {a[0], a[1], a[2], b[0], b[1], b[2]};
}

// |c t> ordering: local index = 2 * control + target.
Operator controlled(const Matrix& on_plus_or_zero, const Matrix& on_minus_or_one,
                    const Matrix& p0, const Matrix& p1) {
  Matrix m = Matrix::Zero(4, 4);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          m(2 * r + i, 2 * c + j) = p0(r, c) * on_plus_or_zero(i, j) +
                                    p1(r, c) * on_minus_or_one(i, j);
  return Operator(2, m, true);
}

}  // namespace

Operator pauli_x() { return Operator(1, mat2(0, 1, 1, 0), true); }
Operator pauli_y() {
  return Operator(1, mat2(0, Complex(0, -1), Complex(0, 1), 0), true);
}
Operator pauli_z() { return Operator(1, mat2(1, 0, 0, -1), true); }
Operator hadamard() {
  return Operator(1, mat2(kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2), true);
}

Operator pauli(char letter) {
  switch (letter) {
    case 'I': return Operator::identity(1);
    case 'X': return pauli_x();
    case 'Y': return pauli_y();
    case 'Z': return pauli_z();
    default:
      throw Error(ErrorCode::kOutOfRange,
                  std::string("unknown Pauli '") + letter + "'");
  }
}

Gate cnot(QubitIndex control, QubitIndex target) {
  require_distinct({control, target});
  const Matrix p0 = mat2(1, 0, 0, 0);
  const Matrix p1 = mat2(0, 0, 0, 1);
  return {controlled(Matrix::Identity(2, 2), pauli_x().matrix(), p0, p1),
          {control, target}};
}

Gate cz_pm(QubitIndex control, QubitIndex target) {
  require_distinct({control, target});
  const double h = 0.5;
  const Matrix plus = mat2(h, h, h, h);
  const Matrix minus = mat2(h, -h, -h, h);
  return {controlled(Matrix::Identity(2, 2), pauli_z().matrix(), plus, minus),
          {control, target}};
}

KrausSet measurement_kraus() {
  const double r = kInvSqrt2;
  return KrausSet({Operator(1, mat2(r, r, 0, 0), false),
                   Operator(1, mat2(0, 0, r, -r), false)},
                  {"0", "1"});
}

KrausSet computational_projectors() {
  return KrausSet({Operator(1, mat2(1, 0, 0, 0), false),
                   Operator(1, mat2(0, 0, 0, 1), false)},
                  {"0", "1"});
}

Gate compose(const Targets& support, const std::vector<Gate>& sequence) {
  require_distinct(support);
  const int k = static_cast<int>(support.size());
  const auto d = static_cast<Eigen::Index>(dim_of(k));
  Matrix acc = Matrix::Identity(d, d);
  bool unitary = true;
  for (const auto& g : sequence) {
    std::vector<int> local;
    for (auto q : g.targets) {
      auto it = std::find(support.begin(), support.end(), q);
      if (it == support.end())
        throw Error(ErrorCode::kOutOfRange,
                    "gate qubit " + std::to_string(q.position()) +
                        " outside composite support");
      local.push_back(static_cast<int>(it - support.begin()) + 1);
    }
    kernels::serial::apply_left(g.op.matrix(), kernels::make_embedding(k, local),
                                acc);
    unitary = unitary && g.op.is_unitary();
  }
  return {Operator(k, std::move(acc), unitary), support};
}

Gate cluster_encode_u1(const Cluster& x) {
  return compose(cat(x), {cnot(x[0], x[1]), cnot(x[2], x[1])});
}

Gate logical_x(const Cluster& x) {
  // U1 is an involution, so U1^dagger is the same circuit.
  return compose(cat(x), {cluster_encode_u1(x), {pauli_x(), {x[1]}},
                          cluster_encode_u1(x)});
}

Gate logical_z(const Cluster& x) {
  return compose(cat(x), {cluster_encode_u1(x), {pauli_z(), {x[1]}},
                          cluster_encode_u1(x)});
}

Gate cluster_cz(const Cluster& a, const Cluster& b) {
  const Gate ua = cluster_encode_u1(a);
  const Gate ub = cluster_encode_u1(b);
  const Gate ua_dag{ua.op.adjoint(), ua.targets};
  const Gate ub_dag{ub.op.adjoint(), ub.targets};
  return compose(cat(a, b), {ua_dag, ub_dag, cz_pm(a[1], b[1]), ua, ub});
}

Gate cz_132(QubitIndex q1, QubitIndex q2, QubitIndex q3) {
  require_distinct({q1, q2, q3});
  const double h = 0.5;
  const Matrix minus = mat2(h, -h, -h, h);
  Matrix sector(8, 8);  // |-><-|_1 (x) 1_2 (x) |-><-|_3, local order q1 q2 q3
  Matrix z_sector(8, 8);
  const Matrix id = Matrix::Identity(2, 2);
  const Matrix z = pauli_z().matrix();
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) {
      const Complex m1 = minus(r >> 2, c >> 2);
      const Complex m3 = minus(r & 1, c & 1);
      sector(r, c) = m1 * id((r >> 1) & 1, (c >> 1) & 1) * m3;
      z_sector(r, c) = m1 * z((r >> 1) & 1, (c >> 1) & 1) * m3;
    }
  const Matrix u = Matrix::Identity(8, 8) - sector + z_sector;
  return {Operator(3, u, true), {q1, q2, q3}};
}

// -- GateSpec ------------------------------------------------------------------

const char* to_string(GateKind kind) {
  switch (kind) {
    case GateKind::kX: return "X";
    case GateKind::kY: return "Y";
    case GateKind::kZ: return "Z";
    case GateKind::kCnot: return "CNOT";
    case GateKind::kCzPm: return "CZ_PM";
    case GateKind::kMeas: return "MEAS";
    case GateKind::kU1Cluster: return "U1_CLUSTER";
    case GateKind::kU2Cluster: return "U2_CLUSTER";
    case GateKind::kLogicalX: return "LOGICAL_X";
    case GateKind::kLogicalZ: return "LOGICAL_Z";
    case GateKind::kCz132: return "CZ_132";
  }
  return "?";
}

int arity_of(GateKind kind) {
  switch (kind) {
    case GateKind::kX:
    case GateKind::kY:
    case GateKind::kZ:
    case GateKind::kMeas:
      return 1;
    case GateKind::kCnot:
    case GateKind::kCzPm:
      return 2;
    case GateKind::kU1Cluster:
    case GateKind::kLogicalX:
    case GateKind::kLogicalZ:
    case GateKind::kCz132:
      return 3;
    case GateKind::kU2Cluster:
      return 6;
  }
  return 0;
}

void validate(const GateSpec& spec) {
  if (static_cast<int>(spec.targets.size()) != arity_of(spec.kind)) {
    throw Error(ErrorCode::kArityMismatch,
                std::string(to_string(spec.kind)) + " takes " +
                    std::to_string(arity_of(spec.kind)) + " targets");
  }
  require_distinct(spec.targets);
}

Gate materialize(const GateSpec& spec) {
  validate(spec);
  const auto& t = spec.targets;
  switch (spec.kind) {
    case GateKind::kX: return {pauli_x(), t};
    case GateKind::kY: return {pauli_y(), t};
    case GateKind::kZ: return {pauli_z(), t};
    case GateKind::kCnot: return cnot(t[0], t[1]);
    case GateKind::kCzPm: return cz_pm(t[0], t[1]);
    case GateKind::kU1Cluster: return cluster_encode_u1({t[0], t[1], t[2]});
    case GateKind::kU2Cluster:
      return cluster_cz({t[0], t[1], t[2]}, {t[3], t[4], t[5]});
    case GateKind::kLogicalX: return logical_x({t[0], t[1], t[2]});
    case GateKind::kLogicalZ: return logical_z({t[0], t[1], t[2]});
    case GateKind::kCz132: return cz_132(t[0], t[1], t[2]);
    case GateKind::kMeas: break;
  }
  throw Error(ErrorCode::kUnsupportedError,
              "MEAS is a Kraus set, not a single gate");
}

KrausSet to_kraus(const GateSpec& spec) {
  if (spec.kind == GateKind::kMeas) {
    validate(spec);
    return measurement_kraus();
  }
  return KrausSet::unitary(materialize(spec).op, to_string(spec.kind));
}

}  // namespace cohqec::gates
