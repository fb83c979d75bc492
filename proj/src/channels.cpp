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

#include "cohqec/channels.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "cohqec/gates.hpp"

namespace cohqec::channels {
namespace {

void check_unit_interval(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    std::ostringstream msg;
    msg << name << " = " << v << " not in [0, 1]";
    throw Error(ErrorCode::kOutOfRange, msg.str());
  }
}

void check_member(QubitIndex q, const Targets& code_qubits) {
  if (std::find(code_qubits.begin(), code_qubits.end(), q) == code_qubits.end())
    throw Error(ErrorCode::kOutOfRange,
                "error position " + std::to_string(q.position()) +
                    " is not a code qubit");
}

}  // namespace

DensityMatrix noisy_plus(double e) {
  check_unit_interval(e, "e");
  Matrix m(2, 2);
  const double off = (1.0 - e) / 2.0;
  m << 0.5, off, off, 0.5;
  return DensityMatrix(1, std::move(m));
}

KrausSet depolarizing(double d) {
  check_unit_interval(d, "d");
  const double s = std::sqrt(d / 3.0);
  return KrausSet(
      {Operator(1, std::sqrt(1.0 - d) * Matrix::Identity(2, 2), false),
       Operator(1, s * gates::pauli_x().matrix(), false),
       Operator(1, s * gates::pauli_y().matrix(), false),
       Operator(1, s * gates::pauli_z().matrix(), false)},
      {"I", "X", "Y", "Z"});
}

Operator superposed_phase_error(Complex a, Complex b) {
  const double n2 = std::norm(a) + std::norm(b);
  if (std::abs(n2 - 1.0) > 1e-10) {
    std::ostringstream msg;
    msg << "|a|^2 + |b|^2 = " << n2;
    throw Error(ErrorCode::kNormalizationViolation, msg.str());
  }
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = a + b;
  m(1, 1) = a - b;
  // Unitary only when the error is a global phase times 1 or Z.
  const bool unitary = std::abs(std::abs(a + b) - 1.0) < 1e-12 &&
                       std::abs(std::abs(a - b) - 1.0) < 1e-12;
  return Operator(1, std::move(m), unitary);
}

// -- ErrorModel ----------------------------------------------------------------

ErrorModel ErrorModel::none() { return ErrorModel(); }

ErrorModel ErrorModel::pauli(char p, QubitIndex position) {
  return pauli_string({{p, position}});
}

ErrorModel ErrorModel::pauli_string(std::vector<PauliTerm> terms) {
  for (const auto& t : terms) {
    if (t.pauli != 'X' && t.pauli != 'Y' && t.pauli != 'Z')
      throw Error(ErrorCode::kOutOfRange,
                  std::string("unknown Pauli '") + t.pauli + "'");
  }
  ErrorModel m;
  m.kind_ = Kind::kPauli;
  m.paulis_ = std::move(terms);
  return m;
}

ErrorModel ErrorModel::superposed_phase(Complex a, Complex b,
                                        QubitIndex position) {
  const double n2 = std::norm(a) + std::norm(b);
  if (std::abs(n2 - 1.0) > 1e-12) {
    std::ostringstream msg;
    msg << "|a|^2 + |b|^2 = " << n2;
    throw Error(ErrorCode::kNormalizationViolation, msg.str());
  }
  ErrorModel m;
  m.kind_ = Kind::kSuperposedPhase;
  m.a_ = a;
  m.b_ = b;
  m.position_ = position;
  return m;
}

ErrorModel ErrorModel::depolarizing_fixed(double d, QubitIndex position) {
  check_unit_interval(d, "d");
  ErrorModel m;
  m.kind_ = Kind::kDepolarizing;
  m.placement_ = Placement::kFixed;
  m.d_ = d;
  m.position_ = position;
  return m;
}

ErrorModel ErrorModel::depolarizing_averaged(double d) {
  check_unit_interval(d, "d");
  ErrorModel m;
  m.kind_ = Kind::kDepolarizing;
  m.placement_ = Placement::kAveraged;
  m.d_ = d;
  return m;
}

ErrorModel ErrorModel::depolarizing_sampled(double d, std::uint64_t seed) {
  check_unit_interval(d, "d");
  ErrorModel m;
  m.kind_ = Kind::kDepolarizing;
  m.placement_ = Placement::kSampled;
  m.d_ = d;
  m.seed_ = seed;
  return m;
}

std::string ErrorModel::label() const {
  std::ostringstream out;
  switch (kind_) {
    case Kind::kNone:
      out << "none";
      break;
    case Kind::kPauli:
      for (std::size_t i = 0; i < paulis_.size(); ++i) {
        if (i) out << ' ';
        out << paulis_[i].pauli << '_' << paulis_[i].position.position();
      }
      break;
    case Kind::kSuperposedPhase:
      out << "(" << a_ << ")1 + (" << b_ << ")Z_" << position_.position();
      break;
    case Kind::kDepolarizing:
      out << "dep(d=" << d_ << ", ";
      switch (placement_) {
        case Placement::kFixed: out << "q" << position_.position(); break;
        case Placement::kAveraged: out << "averaged"; break;
        case Placement::kSampled: out << "sampled seed " << seed_; break;
      }
      out << ")";
      break;
  }
  return out.str();
}

// -- application ---------------------------------------------------------------

DensityMatrix apply_error_model(const ErrorModel& model,
                                const DensityMatrix& rho,
                                const Targets& code_qubits) {
  using Kind = ErrorModel::Kind;
  for (auto q : code_qubits) {
    if (q.position() < 1 || q.position() > rho.n_qubits())
      throw Error(ErrorCode::kOutOfRange, "code qubit outside register");
  }
  switch (model.kind()) {
    case Kind::kNone:
      return rho;
    case Kind::kPauli: {
      DensityMatrix out = rho;
      for (const auto& t : model.paulis()) {
        check_member(t.position, code_qubits);
        out = embed_and_apply(gates::pauli(t.pauli), {t.position}, out);
      }
      return out;
    }
    case Kind::kSuperposedPhase:
      check_member(model.position(), code_qubits);
      return embed_and_apply(superposed_phase_error(model.a(), model.b()),
                             {model.position()}, rho);
    case Kind::kDepolarizing:
      break;
  }

  const KrausSet channel = depolarizing(model.d());
  switch (model.placement()) {
    case Placement::kFixed:
      check_member(model.position(), code_qubits);
      return apply_kraus(channel, {model.position()}, rho);
    case Placement::kSampled: {
      if (code_qubits.empty())
        throw Error(ErrorCode::kOutOfRange, "no code qubits to sample from");
      std::mt19937_64 rng(model.seed());
      std::uniform_int_distribution<std::size_t> pick(0, code_qubits.size() - 1);
      return apply_kraus(channel, {code_qubits[pick(rng)]}, rho);
    }
    case Placement::kAveraged:
      break;
  }
  if (code_qubits.empty())
    throw Error(ErrorCode::kOutOfRange, "no code qubits to average over");
  Matrix mean = Matrix::Zero(rho.entries().rows(), rho.entries().cols());
  for (auto q : code_qubits) mean += apply_kraus(channel, {q}, rho).entries();
  mean /= static_cast<double>(code_qubits.size());
  return DensityMatrix::trusted(rho.n_qubits(), std::move(mean));
}

}  // namespace cohqec::channels
