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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "cohqec/coherence.hpp"

namespace cohqec::codes {
namespace {

using channels::ErrorModel;
using Kind = ErrorModel::Kind;

const Matrix& pauli_x2() {
  static const Matrix m = gates::pauli_x().matrix();
  return m;
}

const Matrix& pauli_z2() {
  static const Matrix m = gates::pauli_z().matrix();
  return m;
}

Gate adjoint(const Gate& g) { return {g.op.adjoint(), g.targets}; }

Vector kron(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i)
    out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

int leading_sign(const PureState& s) {
  for (Eigen::Index i = 0; i < s.amplitudes().size(); ++i) {
    const Complex a = s.amplitudes()(i);
    if (std::abs(a) > 1e-9) return a.real() < 0.0 ? -1 : 1;
  }
  return 1;
}

// Cluster kets |i^(++)>, transcribed from their bit-string expansions.
Vector cluster_ket(char logical) {
  Vector v = Vector::Zero(8);
  const auto set = [&](std::initializer_list<int> idx) {
    for (int i : idx) v(i) = 0.5;
  };
  const double r = 1.0 / std::sqrt(2.0);
  switch (logical) {
    case '0': set({0b000, 0b011, 0b101, 0b110}); break;
    case '1': set({0b111, 0b100, 0b010, 0b001}); break;
    case '+': return r * (cluster_ket('0') + cluster_ket('1'));
    case '-': return r * (cluster_ket('0') - cluster_ket('1'));
    default: throw Error(ErrorCode::kOutOfRange, "unknown cluster ket");
  }
  return v;
}

PureState cluster_product(std::string_view logicals, int sign = 1) {
  Vector v = Vector::Ones(1);
  for (char c : logicals) v = kron(v, cluster_ket(c));
  return PureState(static_cast<int>(3 * logicals.size()),
                   static_cast<double>(sign) * v);
}

PureState signed_product(std::string_view kets, int sign) {
  const PureState p = PureState::product(kets);
  return PureState(p.n_qubits(), static_cast<double>(sign) * p.amplitudes());
}

// Returns the candidate label if s = +-candidate, else empty.
std::string match_product(const PureState& s, int width,
                          const std::function<Vector(char)>& factor,
                          int* sign) {
  static constexpr char kSymbols[] = {'0', '1', '+', '-'};
  std::string label(static_cast<std::size_t>(width), '0');
  const int total = 1 << (2 * width);
  for (int code = 0; code < total; ++code) {
    Vector v = Vector::Ones(1);
    for (int k = 0; k < width; ++k) {
      label[k] = kSymbols[(code >> (2 * (width - 1 - k))) & 3];
      v = kron(v, factor(label[k]));
    }
    if (v.size() != s.amplitudes().size()) return {};
    for (int sg : {1, -1}) {
      if ((s.amplitudes() - static_cast<double>(sg) * v).cwiseAbs().maxCoeff() <
          1e-9) {
        *sign = sg;
        return label;
      }
    }
  }
  return {};
}

void check_range(double theta, double e) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    std::ostringstream msg;
    msg << "theta = " << theta << " not in [0, pi]";
    throw Error(ErrorCode::kOutOfRange, msg.str());
  }
  if (!(e >= 0.0 && e <= 1.0)) {
    std::ostringstream msg;
    msg << "e = " << e << " not in [0, 1]";
    throw Error(ErrorCode::kOutOfRange, msg.str());
  }
}

bool is_single_z(const ErrorModel& error) {
  return error.kind() == Kind::kPauli && error.paulis().size() == 1 &&
         error.paulis().front().pauli == 'Z';
}

DensityMatrix pure_dm(std::string_view kets) {
  return DensityMatrix::from_pure(PureState::product(kets));
}

struct NineGates {
  std::array<Gate, 3> u1;
  Gate cz_ab;
  Gate cz_cb;
};

const NineGates& nine_gates() {
  static const NineGates g{
      {gates::cluster_encode_u1(layout::a), gates::cluster_encode_u1(layout::b),
       gates::cluster_encode_u1(layout::c)},
      gates::cluster_cz(layout::a, layout::b),
      gates::cluster_cz(layout::c, layout::b)};
  return g;
}

// U2 U1 on a pure nine-qubit state.
PureState encode_nine(const PureState& s) {
  const auto& g = nine_gates();
  PureState out = s;
  for (const auto& u : g.u1) out = apply(u, out);
  out = apply(g.cz_ab, out);
  return apply(g.cz_cb, out);
}

}  // namespace

// -- protocols -------------------------------------------------------------------

int CodeProtocol::coherent_ancillas() const {
  return static_cast<int>(std::count_if(
      ancillas.begin(), ancillas.end(),
      [](const AncillaSpec& a) { return a.init != AncillaInit::kZero; }));
}

CodeProtocol two_qubit_code() {
  return {CodeName::kTwo, QubitIndex{2}, {{QubitIndex{1}, AncillaInit::kPlus}}};
}

CodeProtocol three_qubit_code() {
  return {CodeName::kThree,
          QubitIndex{2},
          {{QubitIndex{1}, AncillaInit::kPlus},
           {QubitIndex{3}, AncillaInit::kPlus}}};
}

CodeProtocol nine_qubit_code() {
  using namespace layout;
  const auto noisy = AncillaInit::kNoisyPlus;
  return {CodeName::kNine,
          b2,
          {{a1, noisy},
           {a2, AncillaInit::kZero},
           {a3, noisy},
           {b1, noisy},
           {b3, noisy},
           {c1, noisy},
           {c2, AncillaInit::kZero},
           {c3, noisy}}};
}

Targets layout::all() { return qubits({1, 2, 3, 4, 5, 6, 7, 8, 9}); }

PureState bloch_state(double theta) {
  Vector v(2);
  v << std::cos(theta / 2.0), std::sin(theta / 2.0);
  return PureState::unnormalized(1, std::move(v)).renormalized();
}

// -- branch sum ------------------------------------------------------------------

DensityMatrix measure_and_reduce(
    const DensityMatrix& rho, QubitIndex data, const Targets& measured,
    const std::function<Matrix(std::uint64_t record)>& correction) {
  Targets kept = measured;
  kept.push_back(data);
  validate_targets(kept, rho.n_qubits(), static_cast<int>(kept.size()));

  // Everything other than data and the measured qubits is traced out first.
  Targets sorted = kept;
  std::sort(sorted.begin(), sorted.end());
  const DensityMatrix sub = sorted.size() == static_cast<std::size_t>(rho.n_qubits())
                                ? rho
                                : partial_trace(rho, sorted);
  const int n = sub.n_qubits();
  const auto shift = [&](QubitIndex q) {
    const auto rank = std::find(sorted.begin(), sorted.end(), q) - sorted.begin();
    return n - 1 - static_cast<int>(rank);
  };
  const std::uint64_t data_bit = std::uint64_t{1} << shift(data);
  const std::size_t m = measured.size();

  Matrix out = Matrix::Zero(2, 2);
  for (std::uint64_t record = 0; record < (std::uint64_t{1} << m); ++record) {
    std::uint64_t base = 0;
    for (std::size_t t = 0; t < m; ++t)
      if ((record >> (m - 1 - t)) & 1u)
        base |= std::uint64_t{1} << shift(measured[t]);
    Matrix block(2, 2);
    block << sub(base, base), sub(base, base | data_bit),
        sub(base | data_bit, base), sub(base | data_bit, base | data_bit);
    const Matrix c = correction(record);
    out += c * block * c.adjoint();
  }
  return DensityMatrix::trusted(1, std::move(out));
}

// -- two-qubit -------------------------------------------------------------------

TwoQubitResult two_qubit_pipeline(const PureState& psi,
                                  const ErrorModel& error) {
  if (psi.n_qubits() != 1)
    throw Error(ErrorCode::kDimensionMismatch, "data state must be one qubit");
  if (!(error.kind() == Kind::kNone || error.kind() == Kind::kSuperposedPhase ||
        is_single_z(error))) {
    throw Error(ErrorCode::kUnsupportedError,
                "two-qubit pipeline takes none, Z_q or a 1 + b Z_q; got " +
                    error.label());
  }
  const DensityMatrix parts[] = {pure_dm("+"), DensityMatrix::from_pure(psi)};
  DensityMatrix rho = tensor(std::span<const DensityMatrix>(parts));
  const Gate encode = gates::cnot(QubitIndex{1}, QubitIndex{2});
  rho = apply(encode, rho);
  rho = channels::apply_error_model(error, rho, qubits({1, 2}));
  rho = apply(encode, rho);
  rho = apply(gates::cz_pm(QubitIndex{1}, QubitIndex{2}), rho);
  return {partial_trace(rho, qubits({2})), partial_trace(rho, qubits({1}))};
}

// -- three-qubit -----------------------------------------------------------------

DensityMatrix three_qubit_decoded(const PureState& psi,
                                  const ErrorModel& error) {
  if (psi.n_qubits() != 1)
    throw Error(ErrorCode::kDimensionMismatch, "data state must be one qubit");
  if (!(error.kind() == Kind::kNone || error.kind() == Kind::kSuperposedPhase ||
        is_single_z(error))) {
    throw Error(ErrorCode::kUnsupportedError,
                "three-qubit pipeline takes none, Z_q or a 1 + b Z_q; got " +
                    error.label());
  }
  const DensityMatrix parts[] = {pure_dm("+"), DensityMatrix::from_pure(psi),
                                 pure_dm("+")};
  DensityMatrix rho = tensor(std::span<const DensityMatrix>(parts));
  const Gate u1 = gates::cluster_encode_u1(
      {QubitIndex{1}, QubitIndex{2}, QubitIndex{3}});
  rho = apply(u1, rho);
  rho = channels::apply_error_model(error, rho, qubits({1, 2, 3}));
  return apply(adjoint(u1), rho);
}

DensityMatrix three_qubit_pipeline(const PureState& psi,
                                   const ErrorModel& error) {
  DensityMatrix rho = three_qubit_decoded(psi, error);
  const KrausSet meas = gates::measurement_kraus();
  rho = apply_kraus(meas, qubits({1}), rho);
  rho = apply_kraus(meas, qubits({3}), rho);
  return measure_and_reduce(rho, QubitIndex{2}, qubits({1, 3}),
                            [](std::uint64_t record) -> Matrix {
                              return record == 0b11 ? pauli_z2()
                                                    : Matrix::Identity(2, 2);
                            });
}

// -- tables ------------------------------------------------------------------------

std::vector<ErrorTableRow> error_table_three() {
  const Targets cluster = qubits({1, 2, 3});
  const Gate u1 = gates::cluster_encode_u1(
      {QubitIndex{1}, QubitIndex{2}, QubitIndex{3}});
  // CNOT_12 CNOT_32, built independently of u1's gate order.
  const Gate decode = gates::compose(
      cluster, {gates::cnot(QubitIndex{3}, QubitIndex{2}),
                gates::cnot(QubitIndex{1}, QubitIndex{2})});
  const PureState logical[] = {apply(u1, PureState::product("+0+")),
                               apply(u1, PureState::product("+1+"))};

  std::vector<ErrorTableRow> rows;
  const std::pair<const char*, int> errors[] = {
      {"1", 0}, {"Z_1", 1}, {"Z_2", 2}, {"Z_3", 3}};
  for (const auto& [label, pos] : errors) {
    std::array<PureState, 2> out = {logical[0], logical[1]};
    for (auto& s : out) {
      if (pos != 0) s = apply({gates::pauli_z(), {QubitIndex{pos}}}, s);
      s = apply(decode, s);
    }
    rows.push_back({label, out[0], out[1], leading_sign(out[1])});
  }
  return rows;
}

NineErrorTable error_table_nine() {
  using namespace layout;
  const auto& g = nine_gates();
  const PureState logical[] = {encode_nine(PureState::product("+0+++++0+")),
                               encode_nine(PureState::product("+0++-++0+"))};
  // CZ_ab CZ_cb: CZ_cb acts first.
  const auto decode = [&](PureState s) {
    s = apply(g.cz_cb, s);
    return apply(g.cz_ab, s);
  };

  NineErrorTable table{{}, 0.0};
  table.rows.push_back({"1", decode(logical[0]), decode(logical[1]), 1});
  table.rows.back().sign = leading_sign(table.rows.back().on_second);

  const std::pair<const char*, gates::Cluster> clusters[] = {
      {"X_{a_i}", a}, {"X_{b_i}", b}, {"X_{c_i}", c}};
  for (const auto& [label, cluster] : clusters) {
    std::vector<std::array<PureState, 2>> per_position;
    for (QubitIndex q : cluster) {
      const Gate x{gates::pauli_x(), {q}};
      per_position.push_back(
          {decode(apply(x, logical[0])), decode(apply(x, logical[1]))});
    }
    for (const auto& other : per_position) {
      for (int col = 0; col < 2; ++col) {
        const double spread = (other[col].amplitudes() -
                               per_position.front()[col].amplitudes())
                                  .cwiseAbs()
                                  .maxCoeff();
        table.max_position_spread = std::max(table.max_position_spread, spread);
      }
    }
    const auto& first = per_position.front();
    table.rows.push_back({label, first[0], first[1], leading_sign(first[1])});
  }
  return table;
}

std::vector<ErrorTableRow> reference_table_three() {
  return {
      {"1", signed_product("+0+", 1), signed_product("+1+", 1), 1},
      {"Z_1", signed_product("-0+", 1), signed_product("-1+", 1), 1},
      {"Z_2", signed_product("-0-", 1), signed_product("-1-", -1), -1},
      {"Z_3", signed_product("+0-", 1), signed_product("+1-", 1), 1},
  };
}

std::vector<ErrorTableRow> reference_table_nine() {
  return {
      {"1", cluster_product("0+0"), cluster_product("0-0"), 1},
      {"X_{a_i}", cluster_product("1+0"), cluster_product("1-0"), 1},
      {"X_{b_i}", cluster_product("1+1"), cluster_product("1-1", -1), -1},
      {"X_{c_i}", cluster_product("0+1"), cluster_product("0-1"), 1},
  };
}

double table_difference(const std::vector<ErrorTableRow>& lhs,
                        const std::vector<ErrorTableRow>& rhs) {
  if (lhs.size() != rhs.size())
    throw Error(ErrorCode::kDimensionMismatch, "tables differ in row count");
  double diff = 0.0;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    const auto cmp = [&](const PureState& x, const PureState& y) {
      if (x.n_qubits() != y.n_qubits())
        throw Error(ErrorCode::kDimensionMismatch, "table entries differ in size");
      diff = std::max(diff,
                      (x.amplitudes() - y.amplitudes()).cwiseAbs().maxCoeff());
    };
    cmp(lhs[i].on_first, rhs[i].on_first);
    cmp(lhs[i].on_second, rhs[i].on_second);
  }
  return diff;
}

std::string format_three(const PureState& s) {
  int sign = 1;
  const std::string label = match_product(
      s, s.n_qubits(),
      [](char c) { return PureState::product(std::string(1, c)).amplitudes(); },
      &sign);
  if (label.empty()) return "<not a product of basis kets>";
  std::ostringstream out;
  if (sign < 0) out << '-';
  for (std::size_t k = 0; k < label.size(); ++k)
    out << '|' << label[k] << ">_" << (k + 1);
  return out.str();
}

std::string format_nine(const PureState& s) {
  if (s.n_qubits() != 9) return "<not nine qubits>";
  int sign = 1;
  const std::string label = match_product(s, 3, cluster_ket, &sign);
  if (label.empty()) return "<not a product of basis kets>";
  std::ostringstream out;
  if (sign < 0) out << '-';
  const char names[] = {'a', 'b', 'c'};
  for (std::size_t k = 0; k < 3; ++k)
    out << '|' << label[k] << "^(++)>_" << names[k];
  return out.str();
}

// -- nine-qubit --------------------------------------------------------------------

NineQubitOutcome run_nine_qubit(double theta, double e, const ErrorModel& error,
                                NineQubitOptions opts) {
  using namespace layout;
  check_range(theta, e);
  const auto& g = nine_gates();
  const PureState psi = bloch_state(theta);

  // Prepare |+>|0>|+> |+>|psi>|+> |+>|0>|+>, with every |+> noisy.
  const DensityMatrix noisy = channels::noisy_plus(e);
  const DensityMatrix zero = pure_dm("0");
  const DensityMatrix data = DensityMatrix::from_pure(psi);
  const DensityMatrix parts[] = {noisy, zero, noisy, noisy, data,
                                 noisy, noisy, zero, noisy};
  DensityMatrix rho = tensor(std::span<const DensityMatrix>(parts));

  // Encode: U1 per cluster, then U2 = CZ_cb CZ_ab.
  for (const auto& u : g.u1) rho = apply(u, rho);
  rho = apply(g.cz_ab, rho);
  rho = apply(g.cz_cb, rho);

  // Error.
  rho = channels::apply_error_model(error, rho, layout::all());

  // Decode: U1^dagger U2^dagger.
  rho = apply(adjoint(g.cz_cb), rho);
  rho = apply(adjoint(g.cz_ab), rho);
  for (const auto& u : g.u1) rho = apply(adjoint(u), rho);

  // Measure.
  const KrausSet meas = gates::measurement_kraus();
  const KrausSet proj = gates::computational_projectors();
  for (QubitIndex q : {a1, a3, b1, b3, c1, c3}) rho = apply_kraus(meas, {q}, rho);
  for (QubitIndex q : {a2, c2}) rho = apply_kraus(proj, {q}, rho);

  NineQubitOutcome outcome{0.0, DensityMatrix::maximally_mixed(1), {}};
  if (opts.ancilla_coherence) {
    const QubitIndex ancillas[] = {a1, a2, a3, b1, b3, c1, c2, c3};
    for (std::size_t k = 0; k < 8; ++k)
      outcome.ancilla_l1[k] =
          coherence::l1_coherence(partial_trace(rho, {ancillas[k]}));
  }

  // Feed-forward, then reduce to b2. Record bits, MSB first: a1 a3 b1 b3 c1 c3 a2 c2.
  outcome.recovered = measure_and_reduce(
      rho, b2, {a1, a3, b1, b3, c1, c3, a2, c2},
      [](std::uint64_t r) -> Matrix {
        const auto bit = [r](int t) { return (r >> (7 - t)) & 1u; };
        int z_flips = 0;
        for (int pair = 0; pair < 3; ++pair)
          if (bit(2 * pair) && bit(2 * pair + 1)) ++z_flips;
        Matrix c = Matrix::Identity(2, 2);
        if (z_flips % 2 == 1) c = pauli_z2() * c;
        if (bit(6) && bit(7)) c = pauli_x2() * c;
        return c;
      });
  outcome.fidelity = fidelity(psi, outcome.recovered);
  return outcome;
}

double nine_qubit_protocol(double theta, double e, const ErrorModel& error) {
  return run_nine_qubit(theta, e, error).fidelity;
}

std::vector<Gate> nine_qubit_feed_forward_gates() {
  using namespace layout;
  // diag over |x1 x3 b2>: -1 on |1 1 1>
  Matrix ccz = Matrix::Identity(8, 8);
  ccz(7, 7) = -1.0;
  // X on the last qubit when the first two are both 1
  Matrix ccx = Matrix::Identity(8, 8);
  ccx(6, 6) = ccx(7, 7) = 0.0;
  ccx(6, 7) = ccx(7, 6) = 1.0;
  return {{Operator(3, ccz, true), {a1, a3, b2}},
          {Operator(3, ccz, true), {b1, b3, b2}},
          {Operator(3, ccz, true), {c1, c3, b2}},
          {Operator(3, ccx, true), {a2, c2, b2}}};
}

// -- audit inventory ---------------------------------------------------------------

std::vector<AuditItem> audit_inventory() {
  using namespace layout;
  using gates::GateKind;
  std::vector<AuditItem> items;
  const auto add_spec = [&](const std::string& name, GateKind kind,
                            Targets targets) {
    items.push_back({name, gates::to_kraus({kind, targets}), targets, true});
  };

  add_spec("X", GateKind::kX, {b2});
  add_spec("Y", GateKind::kY, {b2});
  add_spec("Z", GateKind::kZ, {b2});
  add_spec("CNOT_{a1 a2}", GateKind::kCnot, {a1, a2});
  add_spec("CZ_{12} (+/- control)", GateKind::kCzPm, {a2, b2});
  add_spec("U1_a", GateKind::kU1Cluster, {a1, a2, a3});
  add_spec("U1_b", GateKind::kU1Cluster, {b1, b2, b3});
  add_spec("U1_c", GateKind::kU1Cluster, {c1, c2, c3});
  add_spec("CZ_ab", GateKind::kU2Cluster, {a1, a2, a3, b1, b2, b3});
  add_spec("CZ_cb", GateKind::kU2Cluster, {c1, c2, c3, b1, b2, b3});
  add_spec("X_(123)", GateKind::kLogicalX, {b1, b2, b3});
  add_spec("Z_(123)", GateKind::kLogicalZ, {b1, b2, b3});
  add_spec("MEAS {|0><+|, |1><-|}", GateKind::kMeas, {a1});

  items.push_back({"projective {|0><0|, |1><1|}",
                   gates::computational_projectors(), {a2}, true});
  items.push_back({"depolarizing(d=0.5)", channels::depolarizing(0.5), {b2}, true});
  items.push_back({"depolarizing(d=1)", channels::depolarizing(1.0), {b2}, true});

  const char* ff_names[] = {"feed-forward Z_{b2} | (a1,a3)",
                            "feed-forward Z_{b2} | (b1,b3)",
                            "feed-forward Z_{b2} | (c1,c3)",
                            "feed-forward X_{b2} | (a2,c2)"};
  const auto ff = nine_qubit_feed_forward_gates();
  for (std::size_t i = 0; i < ff.size(); ++i)
    items.push_back({ff_names[i], KrausSet::unitary(ff[i].op), ff[i].targets, true});

  add_spec("CZ_(13)2", GateKind::kCz132, {a1, a2, a3});
  items.back().expected_incoherent = false;
  return items;
}

}  // namespace cohqec::codes
