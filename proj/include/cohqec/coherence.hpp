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

// l1 coherence and incoherence checks for states and Kraus sets.

#ifndef COHQEC_COHERENCE_HPP_
#define COHQEC_COHERENCE_HPP_

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "cohqec/qstate.hpp"

namespace cohqec::coherence {

// Sum of |rho_ij| over i != j in the computational basis.
double l1_coherence(const DensityMatrix& rho);
double l1_coherence(const Matrix& rho);

bool is_incoherent_state(const DensityMatrix& rho, double tol = 1e-12);

struct IncoherenceDiagnostic {
  bool incoherent = true;
  // (operator index, column) pairs whose column spreads over several
  // basis states.
  std::vector<std::pair<std::size_t, std::uint64_t>> offending;
};

// Structural test: every Kraus column has at most one entry above tol, so
// each K sends each basis state to a single basis ray.
IncoherenceDiagnostic is_incoherent_kraus_set(const KrausSet& channel,
                                              double tol = 1e-12);

// Cross-check only: the channel maps every |i><i| to a diagonal state.
bool maps_basis_to_diagonal(const KrausSet& channel, double tol = 1e-12);

// G G^dagger / tr(G G^dagger) with G complex Gaussian.
DensityMatrix random_density_matrix(int n_qubits, std::mt19937_64& rng);

struct MonotonicityReport {
  int samples = 0;
  double max_increase = 0.0;  // max of C(out) - C(in)
  int violations = 0;         // samples with increase > tol
  // max of sum_n p_n C(rho_n) - C(rho) over the selective outcomes
  double max_selective_increase = 0.0;
  int selective_violations = 0;
  // Set when the channel fails the structural test; the audit then proves
  // nothing.
  bool vacuous = false;
};

// Samples n_samples random states on n_qubits (0: the largest target
// position) and applies the channel on targets.
MonotonicityReport monotonicity_audit(const KrausSet& channel,
                                      const Targets& targets, int n_samples,
                                      std::uint64_t seed, double tol = 1e-9,
                                      int n_qubits = 0);

}  // namespace cohqec::coherence

#endif  // COHQEC_COHERENCE_HPP_
