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

#include "cohqec/codes.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "cohqec/coherence.hpp"
#include "gtest/gtest.h"

namespace cohqec::codes {
namespace {

constexpr double kTol = 1e-12;
constexpr double kPi = std::numbers::pi;

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

Matrix projector(const PureState& s) { return DensityMatrix::from_pure(s).entries(); }

PureState random_qubit(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Vector v(2);
  v << Complex{normal(rng), normal(rng)}, Complex{normal(rng), normal(rng)};
  return PureState(1, v / v.norm());
}

std::vector<double> theta_grid() {
  std::vector<double> g;
  for (int k = 0; k <= 8; ++k) g.push_back(k * kPi / 8.0);
  return g;
}

// -- protocol descriptions -------------------------------------------------------

TEST(CodeProtocol, CoherentAncillaCounts) {
  EXPECT_EQ(two_qubit_code().coherent_ancillas(), 1);
  EXPECT_EQ(three_qubit_code().coherent_ancillas(), 2);
  const CodeProtocol nine = nine_qubit_code();
  EXPECT_EQ(nine.coherent_ancillas(), 6);
  EXPECT_EQ(nine.ancillas.size(), 8u);
  EXPECT_EQ(nine.data_qubit, layout::b2);
  int classical = 0;
  for (const auto& a : nine.ancillas)
    if (a.init == AncillaInit::kZero) {
      ++classical;
      EXPECT_TRUE(a.position == layout::a2 || a.position == layout::c2);
    }
  EXPECT_EQ(classical, 2);
}

// -- two-qubit primitive ---------------------------------------------------------

TEST(TwoQubit, PhaseFlipOnDataIsCorrected) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 10; ++i) {
    const PureState psi = random_qubit(rng);
    const auto r = two_qubit_pipeline(psi, ErrorModel::pauli('Z', QubitIndex(2)));
    EXPECT_LT(max_abs(r.recovered.entries() - projector(psi)), kTol);
    EXPECT_LT(max_abs(r.absorbed.entries() - projector(PureState::product("-"))), kTol);
  }
}

TEST(TwoQubit, NoErrorRoundTrips) {
  std::mt19937_64 rng(2);
  const PureState psi = random_qubit(rng);
  const auto r = two_qubit_pipeline(psi, ErrorModel::none());
  EXPECT_LT(max_abs(r.recovered.entries() - projector(psi)), kTol);
  EXPECT_LT(max_abs(r.absorbed.entries() - projector(PureState::product("+"))), kTol);
}

TEST(TwoQubit, AncillaFlipPropagatesToData) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 10; ++i) {
    const PureState psi = random_qubit(rng);
    Vector flipped = psi.amplitudes();
    flipped(1) = -flipped(1);
    const auto r = two_qubit_pipeline(psi, ErrorModel::pauli('Z', QubitIndex(1)));
    EXPECT_LT(max_abs(r.recovered.entries() - projector(PureState(1, flipped))), kTol);
  }
}

TEST(TwoQubit, SuperposedErrorIsAbsorbedByAncilla) {
  std::mt19937_64 rng(4);
  std::normal_distribution<double> normal;
  for (int i = 0; i < 20; ++i) {
    Complex a{normal(rng), normal(rng)}, b{normal(rng), normal(rng)};
    const double n = std::sqrt(std::norm(a) + std::norm(b));
    a /= n;
    b /= n;
    const PureState psi = random_qubit(rng);
    const auto r = two_qubit_pipeline(psi, ErrorModel::superposed_phase(a, b, QubitIndex(2)));
    const Vector absorbed =
        a * PureState::product("+").amplitudes() + b * PureState::product("-").amplitudes();
    EXPECT_LT(max_abs(r.recovered.entries() - projector(psi)), kTol);
    EXPECT_LT(max_abs(r.absorbed.entries() - projector(PureState(1, absorbed))), kTol);
  }
}

TEST(TwoQubit, EqualSuperpositionLeavesAncillaInZero) {
  const double h = 1.0 / std::sqrt(2.0);
  const auto r = two_qubit_pipeline(bloch_state(1.0),
                                    ErrorModel::superposed_phase(h, h, QubitIndex(2)));
  EXPECT_LT(max_abs(r.absorbed.entries() - projector(PureState::product("0"))), kTol);
}

TEST(TwoQubit, RejectsOtherErrors) {
  try {
    two_qubit_pipeline(bloch_state(1.0), ErrorModel::pauli('X', QubitIndex(2)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnsupportedError);
  }
  EXPECT_THROW(two_qubit_pipeline(bloch_state(1.0), ErrorModel::depolarizing_averaged(0.1)),
               Error);
}

// -- three-qubit code ------------------------------------------------------------

TEST(ThreeQubit, EveryAllowedErrorIsCorrected) {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> normal;
  for (int i = 0; i < 10; ++i) {
    const PureState psi = random_qubit(rng);
    std::vector<ErrorModel> errors{ErrorModel::none()};
    for (int q = 1; q <= 3; ++q) {
      errors.push_back(ErrorModel::pauli('Z', QubitIndex(q)));
      Complex a{normal(rng), normal(rng)}, b{normal(rng), normal(rng)};
      const double n = std::sqrt(std::norm(a) + std::norm(b));
      errors.push_back(ErrorModel::superposed_phase(a / n, b / n, QubitIndex(q)));
    }
    for (const auto& err : errors)
      EXPECT_LT(max_abs(three_qubit_pipeline(psi, err).entries() - projector(psi)), 1e-10)
          << err.label();
  }
}

TEST(ThreeQubit, DecodedStatesCarryTheSyndrome) {
  // |1> input isolates the |1_l> column of the table.
  const PureState one = PureState::product("1");
  const DensityMatrix z2 = three_qubit_decoded(one, ErrorModel::pauli('Z', QubitIndex(2)));
  EXPECT_LT(max_abs(z2.entries() - projector(PureState::product("-1-"))), kTol);
  const DensityMatrix z3 = three_qubit_decoded(one, ErrorModel::pauli('Z', QubitIndex(3)));
  EXPECT_LT(max_abs(z3.entries() - projector(PureState::product("+1-"))), kTol);
  // Without an error the ancillas come back as |+>.
  std::mt19937_64 rng(6);
  const PureState psi = random_qubit(rng);
  const DensityMatrix clean = three_qubit_decoded(psi, ErrorModel::none());
  const std::vector<PureState> f{PureState::product("+"), psi, PureState::product("+")};
  EXPECT_LT(max_abs(clean.entries() - projector(tensor(f))), kTol);
}

TEST(ThreeQubit, RejectsBitFlips) {
  EXPECT_THROW(three_qubit_pipeline(bloch_state(1.0), ErrorModel::pauli('X', QubitIndex(2))),
               Error);
}

// -- tables ----------------------------------------------------------------------

TEST(ErrorTables, ThreeQubitMatchesReference) {
  const auto computed = error_table_three();
  const auto reference = reference_table_three();
  ASSERT_EQ(computed.size(), 4u);
  EXPECT_LT(table_difference(computed, reference), kTol);
  EXPECT_EQ(format_three(computed[0].on_first), "|+>_1|0>_2|+>_3");
  EXPECT_EQ(format_three(computed[1].on_second), "|->_1|1>_2|+>_3");
  EXPECT_EQ(format_three(computed[2].on_second), "-|->_1|1>_2|->_3");
  EXPECT_EQ(computed[2].sign, -1);
  for (std::size_t r = 0; r < 4; ++r)
    if (r != 2) EXPECT_EQ(computed[r].sign, 1) << r;
}

TEST(ErrorTables, NineQubitMatchesReferenceForEveryPosition) {
  const NineErrorTable table = error_table_nine();
  ASSERT_EQ(table.rows.size(), 4u);
  EXPECT_LT(table.max_position_spread, kTol);
  EXPECT_LT(table_difference(table.rows, reference_table_nine()), kTol);
  EXPECT_EQ(format_nine(table.rows[0].on_first), "|0^(++)>_a|+^(++)>_b|0^(++)>_c");
  EXPECT_EQ(format_nine(table.rows[1].on_first), "|1^(++)>_a|+^(++)>_b|0^(++)>_c");
  EXPECT_EQ(format_nine(table.rows[2].on_second), "-|1^(++)>_a|-^(++)>_b|1^(++)>_c");
  EXPECT_EQ(table.rows[2].sign, -1);
}

TEST(ErrorTables, DifferenceChecksShape) {
  auto three = error_table_three();
  three.pop_back();
  EXPECT_THROW(table_difference(three, reference_table_three()), Error);
}

// -- nine-qubit code -------------------------------------------------------------

TEST(NineQubit, NoErrorNoNoiseIsPerfect) {
  for (double theta : theta_grid())
    EXPECT_NEAR(nine_qubit_protocol(theta, 0.0, ErrorModel::none()), 1.0, 1e-12);
}

TEST(NineQubit, CorrectsEverySingleQubitPauli) {
  const std::vector<double> thetas{0.0, kPi / 4, kPi / 2, 5 * kPi / 8, kPi};
  for (const QubitIndex q : layout::all())
    for (char p : {'X', 'Y', 'Z'})
      for (double theta : thetas)
        EXPECT_NEAR(nine_qubit_protocol(theta, 0.0, ErrorModel::pauli(p, q)), 1.0, 1e-9)
            << p << q.position() << " theta " << theta;
}

TEST(NineQubit, CorrectsPhaseFlipsOnTwoClusters) {
  const gates::Cluster& a = layout::a;
  const gates::Cluster& b = layout::b;
  for (const QubitIndex qa : a)
    for (const QubitIndex qb : b) {
      const auto err = ErrorModel::pauli_string({{'Z', qa}, {'Z', qb}});
      EXPECT_NEAR(nine_qubit_protocol(kPi / 3, 0.0, err), 1.0, 1e-9) << err.label();
    }
}

TEST(NineQubit, ClassicalInputsNeedNoCoherence) {
  for (double theta : {0.0, kPi})
    for (double e : {0.0, 0.5, 1.0})
      for (double d : {0.0, 0.5, 1.0})
        EXPECT_NEAR(nine_qubit_protocol(theta, e, ErrorModel::depolarizing_averaged(d)), 1.0,
                    1e-9);
}

TEST(NineQubit, MeasuredAncillasLoseAllCoherence) {
  NineQubitOptions opts;
  opts.ancilla_coherence = true;
  for (double e : {0.0, 0.4}) {
    const auto out = run_nine_qubit(kPi / 4, e, ErrorModel::depolarizing_averaged(0.3), opts);
    for (double c : out.ancilla_l1) EXPECT_LE(c, 1e-10);
    EXPECT_TRUE(out.recovered.is_valid());
  }
}

TEST(NineQubit, RangeChecks) {
  EXPECT_THROW(nine_qubit_protocol(-0.1, 0.0, ErrorModel::none()), Error);
  EXPECT_THROW(nine_qubit_protocol(4.0, 0.0, ErrorModel::none()), Error);
  EXPECT_THROW(nine_qubit_protocol(1.0, 1.2, ErrorModel::none()), Error);
}

TEST(NineQubit, BranchSumEqualsCoherentFeedForward) {
  // Replace measurement + classical control by controlled gates, then trace
  // out: the data-qubit state must be the same.
  for (double e : {0.0, 0.35}) {
    const double theta = 1.1;
    const auto err = ErrorModel::depolarizing_fixed(0.6, layout::a3);
    const DensityMatrix direct = run_nine_qubit(theta, e, err).recovered;

    std::vector<DensityMatrix> init;
    for (const QubitIndex q : layout::all()) {
      if (q == layout::b2)
        init.push_back(DensityMatrix::from_pure(bloch_state(theta)));
      else if (q == layout::a2 || q == layout::c2)
        init.push_back(DensityMatrix::from_pure(PureState::product("0")));
      else
        init.push_back(channels::noisy_plus(e));
    }
    DensityMatrix rho = tensor(init);
    const std::vector<Gate> encode{gates::cluster_encode_u1(layout::a),
                                   gates::cluster_encode_u1(layout::b),
                                   gates::cluster_encode_u1(layout::c),
                                   gates::cluster_cz(layout::a, layout::b),
                                   gates::cluster_cz(layout::c, layout::b)};
    for (const Gate& g : encode) rho = apply(g, rho);
    rho = channels::apply_error_model(err, rho, layout::all());
    for (auto it = encode.rbegin(); it != encode.rend(); ++it)
      rho = embed_and_apply(it->op.adjoint(), it->targets, rho);
    for (const QubitIndex q : {layout::a1, layout::a3, layout::b1, layout::b3, layout::c1,
                               layout::c3})
      rho = apply(Gate{gates::hadamard(), {q}}, rho);
    for (const Gate& g : nine_qubit_feed_forward_gates()) rho = apply(g, rho);
    const DensityMatrix reduced = partial_trace(rho, {layout::b2});
    EXPECT_LT(max_abs(reduced.entries() - direct.entries()), 1e-12) << e;
  }
}

TEST(MeasureAndReduce, RecordOrderIsMostSignificantFirst) {
  // |1>_1 |0>_2 |psi>_3: record "10" on (1, 2) triggers X on the data.
  const std::vector<PureState> f{PureState::product("1"), PureState::product("0"),
                                 bloch_state(0.7)};
  const DensityMatrix rho = DensityMatrix::from_pure(tensor(f));
  const auto out = measure_and_reduce(
      rho, QubitIndex(3), qubits({1, 2}), [](std::uint64_t record) -> Matrix {
        return record == 0b10 ? gates::pauli_x().matrix() : Matrix::Identity(2, 2);
      });
  Vector flipped = bloch_state(0.7).amplitudes().reverse();
  EXPECT_LT(max_abs(out.entries() - projector(PureState(1, flipped))), kTol);
}

// -- inventory -------------------------------------------------------------------

TEST(AuditInventory, OnlyCz132IsCoherent) {
  const auto items = audit_inventory();
  ASSERT_FALSE(items.empty());
  int coherent = 0;
  for (const auto& item : items) {
    const bool incoherent = coherence::is_incoherent_kraus_set(item.channel).incoherent;
    EXPECT_EQ(incoherent, item.expected_incoherent) << item.name;
    EXPECT_EQ(item.channel.arity(), static_cast<int>(item.targets.size())) << item.name;
    if (!incoherent) ++coherent;
  }
  EXPECT_EQ(coherent, 1);
  EXPECT_FALSE(items.back().expected_incoherent);
}

}  // namespace
}  // namespace cohqec::codes
