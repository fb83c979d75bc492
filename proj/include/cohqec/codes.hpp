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

// The two-, three- and nine-qubit coherence-driven codes as explicit
// encode / error / decode / measure / correct pipelines, and the error
// tables they produce.
//
// Measurement plus feed-forward is evaluated as a deterministic sum over all
// outcome records, each branch corrected before the branches are added, so
// results are exact expectations rather than sampled trajectories.

#ifndef COHQEC_CODES_HPP_
#define COHQEC_CODES_HPP_

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "cohqec/channels.hpp"
#include "cohqec/gates.hpp"
#include "cohqec/qstate.hpp"

namespace cohqec::codes {

using channels::ErrorModel;

enum class CodeName { kTwo, kThree, kNine };

enum class AncillaInit { kZero, kPlus, kNoisyPlus };

struct AncillaSpec {
  QubitIndex position;
  AncillaInit init;
};

struct CodeProtocol {
  CodeName name;
  QubitIndex data_qubit;
  std::vector<AncillaSpec> ancillas;

  int coherent_ancillas() const;
};

CodeProtocol two_qubit_code();
CodeProtocol three_qubit_code();
CodeProtocol nine_qubit_code();

// Register a1 a2 a3 b1 b2 b3 c1 c2 c3 = positions 1..9. Data lives on b2.
namespace layout {
inline constexpr QubitIndex a1{1}, a2{2}, a3{3};
inline constexpr QubitIndex b1{4}, b2{5}, b3{6};
inline constexpr QubitIndex c1{7}, c2{8}, c3{9};
inline constexpr gates::Cluster a{a1, a2, a3};
inline constexpr gates::Cluster b{b1, b2, b3};
inline constexpr gates::Cluster c{c1, c2, c3};
inline constexpr int kQubits = 9;
Targets all();
}  // namespace layout

// cos(theta/2)|0> + sin(theta/2)|1>
PureState bloch_state(double theta);

// -- two-qubit primitive -------------------------------------------------------

struct TwoQubitResult {
  DensityMatrix recovered;  // qubit 2
  DensityMatrix absorbed;   // qubit 1
};

// |+>_1|psi>_2, CNOT_12, error, CNOT_12, CZ_12. Accepts NONE, a single Z
// Pauli, or a superposed phase error; anything else is kUnsupportedError.
TwoQubitResult two_qubit_pipeline(const PureState& psi,
                                  const ErrorModel& error);

// -- three-qubit phase-flip code -------------------------------------------------

// State after U1^dagger, before the measurement.
DensityMatrix three_qubit_decoded(const PureState& psi,
                                  const ErrorModel& error);
// Full pipeline; returns the reduced state of qubit 2.
DensityMatrix three_qubit_pipeline(const PureState& psi,
                                   const ErrorModel& error);

// -- error tables ----------------------------------------------------------------

struct ErrorTableRow {
  std::string error_label;
  PureState on_first;   // decoded |0_l> (three) or |+_L> (nine)
  PureState on_second;  // decoded |1_l> (three) or |-_L> (nine)
  // Sign of the leading nonzero amplitude of on_second; every unsigned
  // product in the tables has a positive leading amplitude.
  int sign;
};

struct NineErrorTable {
  std::vector<ErrorTableRow> rows;
  // Largest entrywise difference between the rows obtained from X_{x1},
  // X_{x2} and X_{x3} of the same cluster.
  double max_position_spread;
};

// CNOT_12 CNOT_32 E |i_l> for E in {1, Z1, Z2, Z3}.
std::vector<ErrorTableRow> error_table_three();
// CZ_ab CZ_cb X_{x_i} |+-_L> for x in {a, b, c}, all i.
NineErrorTable error_table_nine();

// Tables as transcribed product states, for diffing.
std::vector<ErrorTableRow> reference_table_three();
std::vector<ErrorTableRow> reference_table_nine();

// Largest entrywise amplitude difference; kDimensionMismatch on shape
// mismatch.
double table_difference(const std::vector<ErrorTableRow>& lhs,
                        const std::vector<ErrorTableRow>& rhs);

// Product-form rendering, e.g. "-|->_1|1>_2|->_3" or
// "|1^(++)>_a|-^(++)>_b|1^(++)>_c". Falls back to a
// placeholder when the state is not such a product.
std::string format_three(const PureState& s);
std::string format_nine(const PureState& s);

// -- nine-qubit code -----------------------------------------------------------------

struct NineQubitOptions {
  bool ancilla_coherence = false;
};

struct NineQubitOutcome {
  double fidelity;
  DensityMatrix recovered;  // b2 after correction
  // l1 coherence of each measured ancilla after the measurement, in
  // register order a1 a2 a3 b1 b3 c1 c2 c3. Filled on request.
  std::array<double, 8> ancilla_l1{};
};

// Prepare, encode, error, decode, measure, feed-forward, reduce to b2.
// theta in [0, pi], e in [0, 1].
NineQubitOutcome run_nine_qubit(double theta, double e,
                                const ErrorModel& error,
                                NineQubitOptions opts = {});
double nine_qubit_protocol(double theta, double e, const ErrorModel& error);

// Branch sum over every record of the measured qubits: for each record r,
// the data-qubit block is corrected with correction(r) and accumulated.
// Record bit t (MSB first) belongs to measured[t].
DensityMatrix measure_and_reduce(
    const DensityMatrix& rho, QubitIndex data, const Targets& measured,
    const std::function<Matrix(std::uint64_t record)>& correction);

// Feed-forward of the nine-qubit code as coherent classically-controlled
// gates: Z_{b2} controlled on each (x1, x3) pair and X_{b2} on (a2, c2).
std::vector<Gate> nine_qubit_feed_forward_gates();

// -- incoherence inventory --------------------------------------------------------

struct AuditItem {
  std::string name;
  KrausSet channel;
  Targets targets;  // in the nine-qubit register
  bool expected_incoherent;
};

// Every gate, channel and measurement used by the protocols (plus the
// cluster logical operators), followed by the CZ_(13)2 counterexample.
std::vector<AuditItem> audit_inventory();

}  // namespace cohqec::codes

#endif  // COHQEC_CODES_HPP_
