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

// Every operator the codes use, in the conventions of the protocol:
// CNOT_{mn} has control m; CZ_{mn} is controlled on the +/- basis of m.
// Composite cluster operators are always assembled from the one- and
// two-qubit primitives on their support, never written down directly.

#ifndef COHQEC_GATES_HPP_
#define COHQEC_GATES_HPP_

#include <array>
#include <string>
#include <vector>

#include "cohqec/qstate.hpp"

namespace cohqec::gates {

Operator pauli_x();
Operator pauli_y();
Operator pauli_z();
Operator hadamard();
// 'I', 'X', 'Y' or 'Z'.
Operator pauli(char letter);

// Throws kTargetCollision if control == target.
Gate cnot(QubitIndex control, QubitIndex target);
Gate cz_pm(QubitIndex control, QubitIndex target);

// {K0 = |0><+|, K1 = |1><->}, labels "0" and "1".
KrausSet measurement_kraus();
// {|0><0|, |1><1|}, labels "0" and "1".
KrausSet computational_projectors();

using Cluster = std::array<QubitIndex, 3>;

// CNOT_{x3 x2} CNOT_{x1 x2}: |j>_{x1}|i>_{x2}|k>_{x3} -> |i^(jk)>.
Gate cluster_encode_u1(const Cluster& cluster);
// U1 X_{x2} U1^dagger and U1 Z_{x2} U1^dagger.
Gate logical_x(const Cluster& cluster);
Gate logical_z(const Cluster& cluster);
// U1_a U1_b CZ_{a2 b2} U1_a^dagger U1_b^dagger on the six qubits of a then b.
Gate cluster_cz(const Cluster& a, const Cluster& b);
// Phase flip on q2 only in the |->|->  sector of (q1, q3). Not incoherent.
Gate cz_132(QubitIndex q1, QubitIndex q2, QubitIndex q3);

// Multiplies gates (applied left to right: sequence[0] first) into one
// operator on the given support.
Gate compose(const Targets& support, const std::vector<Gate>& sequence);

enum class GateKind {
  kX,
  kY,
  kZ,
  kCnot,
  kCzPm,
  kMeas,
  kU1Cluster,
  kU2Cluster,
  kLogicalX,
  kLogicalZ,
  kCz132,
};

const char* to_string(GateKind kind);
int arity_of(GateKind kind);

struct GateSpec {
  GateKind kind;
  Targets targets;
};

// Throws kArityMismatch if the target count does not match the kind.
void validate(const GateSpec& spec);
// Every kind as a Kraus set on spec.targets (unitaries as one-element sets).
// kU2Cluster takes six targets (a1 a2 a3 b1 b2 b3) and yields CZ_{ab}.
KrausSet to_kraus(const GateSpec& spec);
// Unitary kinds only; kMeas throws kUnsupportedError.
Gate materialize(const GateSpec& spec);

}  // namespace cohqec::gates

#endif  // COHQEC_GATES_HPP_
