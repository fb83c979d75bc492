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

#include <cmath>
#include <random>

#include "cohqec/channels.hpp"
#include "cohqec/coherence.hpp"
#include "cohqec/gates.hpp"
#include "gtest/gtest.h"

namespace cohqec {
namespace {

using coherence::random_density_matrix;

constexpr double kTol = 1e-12;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

PureState random_pure(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Vector v(static_cast<Eigen::Index>(dim_of(n)));
  for (auto& a : v) a = {normal(rng), normal(rng)};
  return PureState(n, v / v.norm());
}

Matrix random_unitary(int arity, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  const auto d = static_cast<Eigen::Index>(dim_of(arity));
  Matrix g(d, d);
  for (Eigen::Index j = 0; j < d; ++j)
    for (Eigen::Index i = 0; i < d; ++i) g(i, j) = {normal(rng), normal(rng)};
  Eigen::HouseholderQR<Matrix> qr(g);
  return qr.householderQ() * Matrix::Identity(d, d);
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kIo;
}

// -- construction --------------------------------------------------------------

TEST(PureState, RejectsUnnormalizedAmplitudes) {
  Vector v(2);
  v << 1.0, 1.0;
  EXPECT_EQ(code_of([&] { PureState(1, v); }), ErrorCode::kNormalizationViolation);
  const PureState loose = PureState::unnormalized(1, v);
  EXPECT_FALSE(loose.is_normalized());
  EXPECT_NEAR(loose.renormalized()[1].real(), kInvSqrt2, kTol);
}

TEST(PureState, ProductTranscribesKets) {
  const PureState s = PureState::product("+0");
  EXPECT_NEAR(s[0b00].real(), kInvSqrt2, kTol);
  EXPECT_NEAR(s[0b10].real(), kInvSqrt2, kTol);
  EXPECT_NEAR(std::abs(s[0b01]) + std::abs(s[0b11]), 0.0, kTol);
  const PureState m = PureState::product("-");
  EXPECT_NEAR(m[1].real(), -kInvSqrt2, kTol);
}

TEST(DensityMatrix, RejectsBadShapeTraceAndHermiticity) {
  EXPECT_EQ(code_of([] { DensityMatrix(1, Matrix::Identity(4, 4) / 4.0); }),
            ErrorCode::kDimensionMismatch);
  EXPECT_EQ(code_of([] { DensityMatrix(1, Matrix::Identity(2, 2)); }),
            ErrorCode::kNormalizationViolation);
  Matrix m = Matrix::Identity(2, 2) / 2.0;
  m(0, 1) = 0.1;
  EXPECT_THROW(DensityMatrix(1, m), Error);
}

TEST(DensityMatrix, NonPositiveMatrixIsInvalid) {
  Matrix m(2, 2);
  m << 1.5, 0.0, 0.0, -0.5;
  const DensityMatrix rho(1, m);
  EXPECT_FALSE(rho.is_valid());
  EXPECT_TRUE(DensityMatrix::maximally_mixed(3).is_valid());
}

TEST(Operator, UnitaryFlagIsChecked) {
  Matrix m(2, 2);
  m << 1, 1, 0, 1;
  EXPECT_EQ(code_of([&] { Operator(1, m, true); }), ErrorCode::kNotUnitary);
  EXPECT_NO_THROW(Operator(1, m, false));
  EXPECT_EQ(code_of([&] { Operator(2, m, false); }), ErrorCode::kDimensionMismatch);
}

// -- tensor ----------------------------------------------------------------------

TEST(Tensor, PlusTimesZero) {
  const std::vector<PureState> f{PureState::product("+"), PureState::product("0")};
  const PureState s = tensor(f);
  EXPECT_LT((s.amplitudes() - PureState::product("+0").amplitudes()).norm(), kTol);
}

TEST(Tensor, MixedKindsAreRejected) {
  const std::vector<State> f{PureState::product("0"), DensityMatrix::maximally_mixed(1)};
  EXPECT_EQ(code_of([&] { tensor(f); }), ErrorCode::kKindMismatch);
}

TEST(Tensor, DensityFactorsKeepOrder) {
  const std::vector<DensityMatrix> f{DensityMatrix::from_pure(PureState::product("1")),
                                     DensityMatrix::from_pure(PureState::product("0"))};
  const DensityMatrix rho = tensor(f);
  EXPECT_NEAR(rho(0b10, 0b10).real(), 1.0, kTol);
}

// -- embed_and_apply -------------------------------------------------------------

TEST(EmbedAndApply, CnotMakesBellState) {
  const PureState out = apply(gates::cnot(QubitIndex(1), QubitIndex(2)),
                              PureState::product("+0"));
  EXPECT_NEAR(out[0b00].real(), kInvSqrt2, kTol);
  EXPECT_NEAR(out[0b11].real(), kInvSqrt2, kTol);
  EXPECT_NEAR(std::abs(out[0b01]) + std::abs(out[0b10]), 0.0, kTol);
}

TEST(EmbedAndApply, IdentityAndPauliX) {
  std::mt19937_64 rng(3);
  const PureState psi = random_pure(3, rng);
  const auto same = embed_and_apply(Operator::identity(2), qubits({1, 3}), psi);
  EXPECT_LT((same.state.amplitudes() - psi.amplitudes()).norm(), kTol);
  const auto flipped =
      embed_and_apply(gates::pauli_x(), qubits({1}), PureState::product("0"));
  EXPECT_NEAR(flipped.state[1].real(), 1.0, kTol);
}

TEST(EmbedAndApply, TargetErrors) {
  const PureState psi = PureState::product("00");
  EXPECT_EQ(code_of([&] { embed_and_apply(Operator::identity(2), qubits({1, 1}), psi); }),
            ErrorCode::kTargetCollision);
  EXPECT_EQ(code_of([&] { embed_and_apply(Operator::identity(2), qubits({1}), psi); }),
            ErrorCode::kArityMismatch);
  EXPECT_EQ(code_of([&] { embed_and_apply(gates::pauli_x(), qubits({3}), psi); }),
            ErrorCode::kOutOfRange);
}

TEST(EmbedAndApply, NonUnitaryRecordsNormAndRenormalizesOnRequest) {
  Matrix e(2, 2);
  e << 0.8, 0, 0, 0.2;  // a + bZ with a = 0.5, b = 0.3
  const Operator op(1, e, false);
  const PureState plus = PureState::product("+");
  const auto raw = embed_and_apply(op, qubits({1}), plus);
  const double expect = std::sqrt((0.64 + 0.04) / 2.0);
  EXPECT_NEAR(raw.pre_norm, expect, kTol);
  EXPECT_FALSE(raw.state.is_normalized());
  const auto fixed = embed_and_apply(op, qubits({1}), plus, {.renormalize = true});
  EXPECT_NEAR(fixed.state.norm(), 1.0, kTol);
  EXPECT_NEAR(fixed.pre_norm, expect, kTol);
}

// -- apply_kraus -----------------------------------------------------------------

TEST(ApplyKraus, IdentityChannelLeavesStateUnchanged) {
  std::mt19937_64 rng(5);
  const DensityMatrix rho = random_density_matrix(2, rng);
  const DensityMatrix out =
      apply_kraus(KrausSet::unitary(Operator::identity(1)), qubits({2}), rho);
  EXPECT_LT(max_abs(out.entries() - rho.entries()), kTol);
}

TEST(ApplyKraus, MeasurementOnZeroGivesWhiteNoise) {
  const DensityMatrix out = apply_kraus(gates::measurement_kraus(), qubits({1}),
                                        DensityMatrix::from_pure(PureState::product("0")));
  EXPECT_LT(max_abs(out.entries() - Matrix::Identity(2, 2) / 2.0), kTol);
}

TEST(ApplyKraus, ThreeQuarterDepolarizingIsFullyMixing) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 10; ++i) {
    const DensityMatrix out =
        apply_kraus(channels::depolarizing(0.75), qubits({1}), random_density_matrix(1, rng));
    EXPECT_LT(max_abs(out.entries() - Matrix::Identity(2, 2) / 2.0), kTol);
  }
}

TEST(ApplyKraus, IncompleteSetReportsDefect) {
  const KrausSet half({Operator(1, Matrix::Identity(2, 2) * 0.5, false)}, {"h"});
  try {
    apply_kraus(half, qubits({1}), DensityMatrix::maximally_mixed(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCompletenessViolation);
    EXPECT_NE(std::string(e.what()).find("1.06"), std::string::npos) << e.what();
  }
}

// -- partial_trace ---------------------------------------------------------------

TEST(PartialTrace, BellStateReducesToWhiteNoise) {
  const DensityMatrix bell = DensityMatrix::from_pure(
      apply(gates::cnot(QubitIndex(1), QubitIndex(2)), PureState::product("+0")));
  const DensityMatrix r = partial_trace(bell, qubits({1}));
  EXPECT_LT(max_abs(r.entries() - Matrix::Identity(2, 2) / 2.0), kTol);
}

TEST(PartialTrace, NoisyPlusTimesZeroKeepsZero) {
  for (double e : {0.0, 0.3, 1.0}) {
    const std::vector<DensityMatrix> f{channels::noisy_plus(e),
                                       DensityMatrix::from_pure(PureState::product("0"))};
    const DensityMatrix r = partial_trace(tensor(f), qubits({2}));
    EXPECT_NEAR(r(0, 0).real(), 1.0, kTol);
    EXPECT_NEAR(std::abs(r(1, 1)) + std::abs(r(0, 1)), 0.0, kTol);
  }
}

TEST(PartialTrace, KeepOrderIsIncreasing) {
  const DensityMatrix rho = DensityMatrix::from_pure(PureState::product("01+"));
  const DensityMatrix a = partial_trace(rho, qubits({3, 1}));
  const DensityMatrix b = partial_trace(rho, qubits({1, 3}));
  EXPECT_LT(max_abs(a.entries() - b.entries()), kTol);
  EXPECT_LT(max_abs(a.entries() -
                    DensityMatrix::from_pure(PureState::product("0+")).entries()),
            kTol);
}

TEST(PartialTrace, EmptyKeepIsRejected) {
  EXPECT_EQ(code_of([] { partial_trace(DensityMatrix::maximally_mixed(2), Targets{}); }),
            ErrorCode::kEmptyKeep);
}

// -- fidelity --------------------------------------------------------------------

TEST(Fidelity, Examples) {
  std::mt19937_64 rng(13);
  const PureState psi = random_pure(3, rng);
  EXPECT_NEAR(fidelity(psi, DensityMatrix::from_pure(psi)), 1.0, kTol);
  EXPECT_NEAR(fidelity(PureState::product("0"),
                       DensityMatrix::from_pure(PureState::product("1"))),
              0.0, kTol);
  for (double e = 0.0; e <= 1.0; e += 0.125)
    EXPECT_NEAR(fidelity(PureState::product("+"), channels::noisy_plus(e)), 1.0 - e / 2.0,
                kTol);
  EXPECT_EQ(code_of([&] { fidelity(psi, DensityMatrix::maximally_mixed(2)); }),
            ErrorCode::kDimensionMismatch);
}

// -- invariants ------------------------------------------------------------------

TEST(Invariants, UnitariesPreserveNormTraceAndPositivity) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 4;
    const Operator u(2, random_unitary(2, rng), true);
    const Targets t = qubits({n, 1 + trial % (n - 1)});
    const auto out = embed_and_apply(u, t, random_pure(n, rng));
    EXPECT_NEAR(out.state.norm(), 1.0, kTol);
    const DensityMatrix rho = embed_and_apply(u, t, random_density_matrix(n, rng));
    EXPECT_NEAR(std::abs(rho.trace() - 1.0), 0.0, kTol);
    EXPECT_LT(rho.hermiticity_defect(), kTol);
    EXPECT_GT(rho.min_eigenvalue(), kPositivityTolerance);
  }
}

TEST(Invariants, KrausChannelsPreserveTrace) {
  std::mt19937_64 rng(19);
  const std::vector<KrausSet> sets{gates::measurement_kraus(),
                                   gates::computational_projectors(),
                                   channels::depolarizing(0.37),
                                   channels::depolarizing(1.0)};
  for (const auto& set : sets) {
    for (int trial = 0; trial < 10; ++trial) {
      const DensityMatrix out =
          apply_kraus(set, qubits({1 + trial % 3}), random_density_matrix(3, rng));
      EXPECT_NEAR(std::abs(out.trace() - 1.0), 0.0, kTol);
    }
  }
}

TEST(Invariants, PartialTraceOfProductRecoversFirstFactor) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const int n1 = 1 + trial % 3, n2 = 1 + (trial / 3) % 3;
    const std::vector<DensityMatrix> f{random_density_matrix(n1, rng),
                                       random_density_matrix(n2, rng)};
    Targets keep;
    for (int q = 1; q <= n1; ++q) keep.emplace_back(q);
    const DensityMatrix r = partial_trace(tensor(f), keep);
    EXPECT_LT(max_abs(r.entries() - f[0].entries()), kTol);
  }
}

TEST(Invariants, FidelitySurvivesEmbeddingAndTracingBack) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + trial % 3;
    const PureState psi = random_pure(n, rng);
    const DensityMatrix rho = random_density_matrix(n, rng);
    const std::vector<DensityMatrix> f{random_density_matrix(1, rng), rho,
                                       random_density_matrix(1, rng)};
    Targets keep;
    for (int q = 2; q <= n + 1; ++q) keep.emplace_back(q);
    const DensityMatrix back = partial_trace(tensor(f), keep);
    EXPECT_NEAR(fidelity(psi, rho), fidelity(psi, back), kTol);
  }
}

}  // namespace
}  // namespace cohqec
