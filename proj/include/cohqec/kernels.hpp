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

// Dense gate-embedding and partial-trace kernels.
//
// Two implementations share one interface. `serial` is the straightforward
// reference: generic index arithmetic, no threading, no special cases. It is
// kept for testing and benchmarking. `parallel` is what the library uses:
// OpenMP over independent columns or index blocks, plus a fast path for
// phase-permutation operators (one nonzero per row and column), which covers
// every Pauli, CNOT and cluster operator of the codes.
//
// Both write each output element from a single thread in a fixed summation
// order, so results do not depend on the thread count.

#ifndef COHQEC_KERNELS_HPP_
#define COHQEC_KERNELS_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cohqec/types.hpp"

namespace cohqec::kernels {

// Placement of a k-qubit operator inside an n-qubit register. Local index bit
// (k-1-t) of the operator corresponds to target t, so target 0 is the most
// significant local bit.
struct Embedding {
  int n_qubits = 0;
  std::uint64_t target_mask = 0;
  std::vector<std::uint64_t> offsets;  // register offset of each local index

  std::uint64_t dim() const { return dim_of(n_qubits); }
  std::uint64_t local_dim() const { return offsets.size(); }
};

// positions are 1-based; validated by the caller.
Embedding make_embedding(int n_qubits, std::span<const int> positions);

// Operator as a phase permutation: column t maps to phase[t] * |row[t]>.
struct PhasePermutation {
  std::vector<std::uint64_t> row;
  std::vector<Complex> phase;
};

// Empty if some column has more or fewer than one nonzero, or two columns
// share a row.
std::optional<PhasePermutation> as_phase_permutation(const Matrix& op);

namespace serial {

// In place: state <- op * state on the embedded targets.
void apply_to_vector(const Matrix& op, const Embedding& emb, Vector& state);

// In place: rho <- op * rho.
void apply_left(const Matrix& op, const Embedding& emb, Matrix& rho);

// In place: rho <- rho * op^dagger.
void apply_right_adjoint(const Matrix& op, const Embedding& emb, Matrix& rho);

// In place: rho <- op * rho * op^dagger.
void conjugate(const Matrix& op, const Embedding& emb, Matrix& rho);

// keep: 1-based, distinct, in range; output in the listed order.
Matrix partial_trace(const Matrix& rho, int n_qubits,
                     std::span<const int> keep);

}  // namespace serial

namespace parallel {

void apply_to_vector(const Matrix& op, const Embedding& emb, Vector& state);
void apply_left(const Matrix& op, const Embedding& emb, Matrix& rho);
void apply_right_adjoint(const Matrix& op, const Embedding& emb, Matrix& rho);
void conjugate(const Matrix& op, const Embedding& emb, Matrix& rho);
Matrix partial_trace(const Matrix& rho, int n_qubits,
                     std::span<const int> keep);

}  // namespace parallel

}  // namespace cohqec::kernels

#endif  // COHQEC_KERNELS_HPP_
