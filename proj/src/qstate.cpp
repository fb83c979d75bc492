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

#include "cohqec/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cohqec/kernels.hpp"

namespace cohqec {
namespace {

void check_qubit_count(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw Error(ErrorCode::kOutOfRange,
                "qubit count " + std::to_string(n_qubits) + " not in [1, " +
                    std::to_string(kMaxQubits) + "]");
  }
}

std::vector<int> positions_of(const Targets& targets) {
  std::vector<int> out;
  out.reserve(targets.size());
  for (auto q : targets) out.push_back(q.position());
  return out;
}

kernels::Embedding embedding_for(const Targets& targets, int n_qubits) {
  const auto pos = positions_of(targets);
  return kernels::make_embedding(n_qubits, pos);
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Vector kron(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i)
    out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

}  // namespace

void validate_targets(const Targets& targets, int n_qubits, int arity) {
  if (static_cast<int>(targets.size()) != arity) {
    throw Error(ErrorCode::kArityMismatch,
                "operator acts on " + std::to_string(arity) + " qubits, got " +
                    std::to_string(targets.size()) + " targets");
  }
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const int p = targets[i].position();
    if (p < 1 || p > n_qubits) {
      throw Error(ErrorCode::kOutOfRange,
                  "qubit " + std::to_string(p) + " outside 1.." +
                      std::to_string(n_qubits));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (targets[j] == targets[i]) {
        throw Error(ErrorCode::kTargetCollision,
                    "qubit " + std::to_string(p) + " targeted twice");
      }
    }
  }
}

// -- PureState -----------------------------------------------------------------

PureState::PureState(int n_qubits, Vector amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)), normalized_(true) {
  check_qubit_count(n_qubits);
  if (static_cast<std::uint64_t>(amplitudes_.size()) != dim_of(n_qubits)) {
    throw Error(ErrorCode::kDimensionMismatch,
                "amplitude vector length does not match 2^n");
  }
  const double n2 = amplitudes_.squaredNorm();
  if (std::abs(n2 - 1.0) > kNormTolerance) {
    std::ostringstream msg;
    msg << "squared norm " << n2 << " differs from 1";
    throw Error(ErrorCode::kNormalizationViolation, msg.str());
  }
}

PureState::PureState(Unchecked, int n_qubits, Vector amplitudes,
                     bool normalized)
    : n_qubits_(n_qubits),
      amplitudes_(std::move(amplitudes)),
      normalized_(normalized) {}

PureState PureState::basis(int n_qubits, std::uint64_t index) {
  check_qubit_count(n_qubits);
  if (index >= dim_of(n_qubits))
    throw Error(ErrorCode::kOutOfRange, "basis index too large");
  Vector v = Vector::Zero(static_cast<Eigen::Index>(dim_of(n_qubits)));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return PureState(Unchecked{}, n_qubits, std::move(v), true);
}

PureState PureState::product(std::string_view kets) {
  const int n = static_cast<int>(kets.size());
  check_qubit_count(n);
  const double r = 1.0 / std::sqrt(2.0);
  Vector v = Vector::Ones(1);
  for (char c : kets) {
    Vector f(2);
    switch (c) {
      case '0': f << 1.0, 0.0; break;
      case '1': f << 0.0, 1.0; break;
      case '+': f << r, r; break;
      case '-': f << r, -r; break;
      default:
        throw Error(ErrorCode::kOutOfRange,
                    std::string("unknown ket symbol '") + c + "'");
    }
    v = kron(v, f);
  }
  return PureState(Unchecked{}, n, std::move(v), true);
}

PureState PureState::unnormalized(int n_qubits, Vector amplitudes) {
  check_qubit_count(n_qubits);
  if (static_cast<std::uint64_t>(amplitudes.size()) != dim_of(n_qubits)) {
    throw Error(ErrorCode::kDimensionMismatch,
                "amplitude vector length does not match 2^n");
  }
  return PureState(Unchecked{}, n_qubits, std::move(amplitudes), false);
}

PureState PureState::renormalized() const {
  const double n = norm();
  if (n == 0.0)
    throw Error(ErrorCode::kNormalizationViolation, "zero vector");
  return PureState(Unchecked{}, n_qubits_, amplitudes_ / n, true);
}

// -- DensityMatrix -------------------------------------------------------------

DensityMatrix::DensityMatrix(int n_qubits, Matrix entries)
    : n_qubits_(n_qubits), entries_(std::move(entries)) {
  check_qubit_count(n_qubits);
  const auto d = static_cast<Eigen::Index>(dim_of(n_qubits));
  if (entries_.rows() != d || entries_.cols() != d) {
    throw Error(ErrorCode::kDimensionMismatch,
                "density matrix is not 2^n x 2^n");
  }
  if (hermiticity_defect() > kHermitianTolerance)
    throw Error(ErrorCode::kOutOfRange, "density matrix is not Hermitian");
  if (std::abs(trace() - Complex(1.0)) > kNormTolerance)
    throw Error(ErrorCode::kNormalizationViolation, "trace differs from 1");
}

DensityMatrix::DensityMatrix(Unchecked, int n_qubits, Matrix entries)
    : n_qubits_(n_qubits), entries_(std::move(entries)) {}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  const Vector& v = psi.amplitudes();
  return DensityMatrix(Unchecked{}, psi.n_qubits(), v * v.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int n_qubits) {
  check_qubit_count(n_qubits);
  const auto d = static_cast<Eigen::Index>(dim_of(n_qubits));
  return DensityMatrix(Unchecked{}, n_qubits,
                       Matrix::Identity(d, d) / static_cast<double>(d));
}

DensityMatrix DensityMatrix::trusted(int n_qubits, Matrix entries) {
  return DensityMatrix(Unchecked{}, n_qubits, std::move(entries));
}

double DensityMatrix::hermiticity_defect() const {
  return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix::min_eigenvalue() const {
  const Matrix h = 0.5 * (entries_ + entries_.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

bool DensityMatrix::is_valid() const {
  return hermiticity_defect() <= kHermitianTolerance &&
         std::abs(trace() - Complex(1.0)) <= kNormTolerance &&
         min_eigenvalue() >= kPositivityTolerance;
}

// -- Operator ------------------------------------------------------------------

Operator::Operator(int arity, Matrix entries, bool unitary)
    : arity_(arity), entries_(std::move(entries)), unitary_(unitary) {
  check_qubit_count(arity);
  const auto d = static_cast<Eigen::Index>(dim_of(arity));
  if (entries_.rows() != d || entries_.cols() != d)
    throw Error(ErrorCode::kDimensionMismatch, "operator is not 2^k x 2^k");
  if (unitary_) {
    const double defect =
        (entries_.adjoint() * entries_ - Matrix::Identity(d, d))
            .cwiseAbs()
            .maxCoeff();
    if (defect > kUnitaryTolerance) {
      std::ostringstream msg;
      msg << "max |U^dagger U - 1| = " << defect;
      throw Error(ErrorCode::kNotUnitary, msg.str());
    }
  }
}

Operator Operator::identity(int arity) {
  const auto d = static_cast<Eigen::Index>(dim_of(arity));
  return Operator(arity, Matrix::Identity(d, d), true);
}

Operator Operator::adjoint() const {
  return Operator(arity_, entries_.adjoint(), unitary_);
}

Operator operator*(const Operator& lhs, const Operator& rhs) {
  if (lhs.arity_ != rhs.arity_)
    throw Error(ErrorCode::kArityMismatch, "operator product arity");
  return Operator(lhs.arity_, lhs.entries_ * rhs.entries_,
                  lhs.unitary_ && rhs.unitary_);
}

// -- KrausSet ------------------------------------------------------------------

KrausSet::KrausSet(std::vector<Operator> ops,
                   std::vector<std::string> outcome_labels)
    : operators(std::move(ops)), labels(std::move(outcome_labels)) {
  if (operators.empty())
    throw Error(ErrorCode::kArityMismatch, "empty Kraus set");
  for (const auto& k : operators)
    if (k.arity() != operators.front().arity())
      throw Error(ErrorCode::kArityMismatch, "Kraus operators differ in arity");
  if (labels.empty()) {
    for (std::size_t i = 0; i < operators.size(); ++i)
      labels.push_back(std::to_string(i));
  }
  if (labels.size() != operators.size())
    throw Error(ErrorCode::kArityMismatch, "one label per Kraus operator");
}

KrausSet KrausSet::unitary(const Operator& op, std::string label) {
  return KrausSet({op}, {std::move(label)});
}

int KrausSet::arity() const {
  return operators.empty() ? 0 : operators.front().arity();
}

double KrausSet::completeness_defect() const {
  const auto d = static_cast<Eigen::Index>(dim_of(arity()));
  Matrix sum = Matrix::Zero(d, d);
  for (const auto& k : operators) sum += k.matrix().adjoint() * k.matrix();
  return (sum - Matrix::Identity(d, d)).norm();
}

// -- tensor --------------------------------------------------------------------

PureState tensor(std::span<const PureState> factors) {
  if (factors.empty())
    throw Error(ErrorCode::kArityMismatch, "tensor of zero factors");
  Vector v = factors.front().amplitudes();
  int n = factors.front().n_qubits();
  bool normalized = factors.front().is_normalized();
  for (const auto& f : factors.subspan(1)) {
    v = kron(v, f.amplitudes());
    n += f.n_qubits();
    normalized = normalized && f.is_normalized();
  }
  check_qubit_count(n);
  return normalized ? PureState(n, std::move(v))
                    : PureState::unnormalized(n, std::move(v));
}

DensityMatrix tensor(std::span<const DensityMatrix> factors) {
  if (factors.empty())
    throw Error(ErrorCode::kArityMismatch, "tensor of zero factors");
  Matrix m = factors.front().entries();
  int n = factors.front().n_qubits();
  for (const auto& f : factors.subspan(1)) {
    m = kron(m, f.entries());
    n += f.n_qubits();
  }
  check_qubit_count(n);
  return DensityMatrix::trusted(n, std::move(m));
}

State tensor(std::span<const State> factors) {
  if (factors.empty())
    throw Error(ErrorCode::kArityMismatch, "tensor of zero factors");
  if (std::holds_alternative<PureState>(factors.front())) {
    std::vector<PureState> pure;
    for (const auto& f : factors) {
      if (!std::holds_alternative<PureState>(f))
        throw Error(ErrorCode::kKindMismatch,
                    "cannot mix pure states and density matrices");
      pure.push_back(std::get<PureState>(f));
    }
    return tensor(std::span<const PureState>(pure));
  }
  std::vector<DensityMatrix> mixed;
  for (const auto& f : factors) {
    if (!std::holds_alternative<DensityMatrix>(f))
      throw Error(ErrorCode::kKindMismatch,
                  "cannot mix pure states and density matrices");
    mixed.push_back(std::get<DensityMatrix>(f));
  }
  return tensor(std::span<const DensityMatrix>(mixed));
}

// -- embedding -----------------------------------------------------------------

AppliedPure embed_and_apply(const Operator& op, const Targets& targets,
                            const PureState& psi, ApplyOptions opts) {
  validate_targets(targets, psi.n_qubits(), op.arity());
  Vector v = psi.amplitudes();
  kernels::parallel::apply_to_vector(op.matrix(),
                                     embedding_for(targets, psi.n_qubits()), v);
  const double pre_norm = v.norm();
  if (opts.renormalize) {
    return {PureState::unnormalized(psi.n_qubits(), std::move(v)).renormalized(),
            pre_norm};
  }
  if (op.is_unitary() && psi.is_normalized())
    return {PureState(psi.n_qubits(), std::move(v)), pre_norm};
  return {PureState::unnormalized(psi.n_qubits(), std::move(v)), pre_norm};
}

DensityMatrix embed_and_apply(const Operator& op, const Targets& targets,
                              const DensityMatrix& rho) {
  validate_targets(targets, rho.n_qubits(), op.arity());
  Matrix m = rho.entries();
  kernels::parallel::conjugate(op.matrix(),
                               embedding_for(targets, rho.n_qubits()), m);
  return DensityMatrix::trusted(rho.n_qubits(), std::move(m));
}

PureState apply(const Gate& gate, const PureState& psi) {
  return embed_and_apply(gate.op, gate.targets, psi).state;
}

DensityMatrix apply(const Gate& gate, const DensityMatrix& rho) {
  return embed_and_apply(gate.op, gate.targets, rho);
}

DensityMatrix apply_kraus(const KrausSet& channel, const Targets& targets,
                          const DensityMatrix& rho) {
  const double defect = channel.completeness_defect();
  if (defect > kCompletenessTolerance) {
    std::ostringstream msg;
    msg << "||sum K^dagger K - 1|| = " << defect;
    throw Error(ErrorCode::kCompletenessViolation, msg.str());
  }
  validate_targets(targets, rho.n_qubits(), channel.arity());
  const auto emb = embedding_for(targets, rho.n_qubits());
  Matrix out = Matrix::Zero(rho.entries().rows(), rho.entries().cols());
  for (const auto& k : channel.operators) {
    Matrix branch = rho.entries();
    kernels::parallel::conjugate(k.matrix(), emb, branch);
    out += branch;
  }
  return DensityMatrix::trusted(rho.n_qubits(), std::move(out));
}

DensityMatrix partial_trace(const DensityMatrix& rho, const Targets& keep) {
  if (keep.empty()) throw Error(ErrorCode::kEmptyKeep, "nothing to keep");
  Targets sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  validate_targets(sorted, rho.n_qubits(), static_cast<int>(sorted.size()));
  const auto pos = positions_of(sorted);
  return DensityMatrix::trusted(
      static_cast<int>(pos.size()),
      kernels::parallel::partial_trace(rho.entries(), rho.n_qubits(), pos));
}

double fidelity(const PureState& psi, const DensityMatrix& rho) {
  if (psi.n_qubits() != rho.n_qubits())
    throw Error(ErrorCode::kDimensionMismatch,
                "fidelity between states of different size");
  const Vector& v = psi.amplitudes();
  return (v.adjoint() * rho.entries() * v)(0, 0).real();
}

}  // namespace cohqec
