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

// Dense exact simulation core: pure states, density matrices, operators,
// operator embedding, Kraus channels, partial trace and fidelity.

#ifndef COHQEC_QSTATE_HPP_
#define COHQEC_QSTATE_HPP_

#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cohqec/types.hpp"

namespace cohqec {

inline constexpr int kMaxQubits = 12;
inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kPositivityTolerance = -1e-10;
inline constexpr double kUnitaryTolerance = 1e-12;
inline constexpr double kCompletenessTolerance = 1e-10;

class PureState {
 public:
  // Throws kNormalizationViolation unless sum |a|^2 = 1 within 1e-12.
  PureState(int n_qubits, Vector amplitudes);

  static PureState basis(int n_qubits, std::uint64_t index);
  // Transcribes a product ket, one character per qubit from qubit 1:
  // '0', '1', '+', '-'.
  static PureState product(std::string_view kets);
  // Explicitly unnormalized state, e.g. after a non-unitary error branch.
  static PureState unnormalized(int n_qubits, Vector amplitudes);

  int n_qubits() const { return n_qubits_; }
  std::uint64_t dim() const { return dim_of(n_qubits_); }
  const Vector& amplitudes() const { return amplitudes_; }
  Complex operator[](std::uint64_t index) const {
    return amplitudes_(static_cast<Eigen::Index>(index));
  }
  double norm() const { return amplitudes_.norm(); }
  bool is_normalized() const { return normalized_; }
  PureState renormalized() const;

 private:
  struct Unchecked {};
  PureState(Unchecked, int n_qubits, Vector amplitudes, bool normalized);

  int n_qubits_;
  Vector amplitudes_;
  bool normalized_;
};

class DensityMatrix {
 public:
  // Checks shape, Hermiticity and unit trace. Positivity is checked by
  // is_valid(), which needs an eigendecomposition.
  DensityMatrix(int n_qubits, Matrix entries);

  static DensityMatrix from_pure(const PureState& psi);
  static DensityMatrix maximally_mixed(int n_qubits);
  // No checks; for kernel outputs that are valid by construction.
  static DensityMatrix trusted(int n_qubits, Matrix entries);

  int n_qubits() const { return n_qubits_; }
  std::uint64_t dim() const { return dim_of(n_qubits_); }
  const Matrix& entries() const { return entries_; }
  Complex operator()(std::uint64_t row, std::uint64_t col) const {
    return entries_(static_cast<Eigen::Index>(row),
                    static_cast<Eigen::Index>(col));
  }
  Complex trace() const { return entries_.trace(); }
  double hermiticity_defect() const;
  double min_eigenvalue() const;
  // Hermitian within 1e-12, eigenvalues >= -1e-10, trace 1 within 1e-12.
  bool is_valid() const;

 private:
  struct Unchecked {};
  DensityMatrix(Unchecked, int n_qubits, Matrix entries);

  int n_qubits_;
  Matrix entries_;
};

class Operator {
 public:
  // With unitary = true, throws kNotUnitary unless U^dagger U = 1 within
  // 1e-12.
  Operator(int arity, Matrix entries, bool unitary);

  static Operator identity(int arity);

  int arity() const { return arity_; }
  std::uint64_t dim() const { return dim_of(arity_); }
  const Matrix& matrix() const { return entries_; }
  bool is_unitary() const { return unitary_; }
  Operator adjoint() const;

  // Matrix product; the result is unitary iff both factors are.
  friend Operator operator*(const Operator& lhs, const Operator& rhs);

 private:
  int arity_;
  Matrix entries_;
  bool unitary_;
};

// Ordered Kraus operators of equal arity with outcome labels.
struct KrausSet {
  std::vector<Operator> operators;
  std::vector<std::string> labels;

  KrausSet() = default;
  KrausSet(std::vector<Operator> ops, std::vector<std::string> outcome_labels);
  static KrausSet unitary(const Operator& op, std::string label = "u");

  int arity() const;
  // Frobenius norm of sum K^dagger K - 1.
  double completeness_defect() const;
};

// Operator together with the register positions it acts on.
struct Gate {
  Operator op;
  Targets targets;
};

// -- tensor ------------------------------------------------------------------

PureState tensor(std::span<const PureState> factors);
DensityMatrix tensor(std::span<const DensityMatrix> factors);

using State = std::variant<PureState, DensityMatrix>;
// Throws kKindMismatch if the factors are not all the same kind.
State tensor(std::span<const State> factors);

// -- embedding -----------------------------------------------------------------

struct ApplyOptions {
  bool renormalize = false;
};

struct AppliedPure {
  PureState state;
  double pre_norm;  // norm right after the operator, before renormalizing
};

AppliedPure embed_and_apply(const Operator& op, const Targets& targets,
                            const PureState& psi, ApplyOptions opts = {});
// rho -> op rho op^dagger. For a non-unitary op this is a single Kraus branch
// and the trace is not restored.
DensityMatrix embed_and_apply(const Operator& op, const Targets& targets,
                              const DensityMatrix& rho);

PureState apply(const Gate& gate, const PureState& psi);
DensityMatrix apply(const Gate& gate, const DensityMatrix& rho);

// rho -> sum_l K_l rho K_l^dagger on the targets. Throws
// kCompletenessViolation if the set is not trace preserving within 1e-10.
DensityMatrix apply_kraus(const KrausSet& channel, const Targets& targets,
                          const DensityMatrix& rho);

// Reduced state on keep, in increasing qubit order.
DensityMatrix partial_trace(const DensityMatrix& rho, const Targets& keep);

// <psi| rho |psi>
double fidelity(const PureState& psi, const DensityMatrix& rho);

// Throws kTargetCollision / kOutOfRange / kArityMismatch.
void validate_targets(const Targets& targets, int n_qubits, int arity);

}  // namespace cohqec

#endif  // COHQEC_QSTATE_HPP_
