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

// Error models and noisy resource states.

#ifndef COHQEC_CHANNELS_HPP_
#define COHQEC_CHANNELS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "cohqec/qstate.hpp"

namespace cohqec::channels {

// (1 - e)|+><+| + e 1/2, e in [0, 1].
DensityMatrix noisy_plus(double e);

// {sqrt(1-d) 1, sqrt(d/3) X, sqrt(d/3) Y, sqrt(d/3) Z}, d in [0, 1].
KrausSet depolarizing(double d);

// a 1 + b Z = diag(a + b, a - b). Requires |a|^2 + |b|^2 = 1 within 1e-10.
Operator superposed_phase_error(Complex a, Complex b);

struct PauliTerm {
  char pauli;  // 'X', 'Y' or 'Z'
  QubitIndex position;
};

enum class Placement {
  kFixed,     // at one position
  kAveraged,  // uniform mixture over all code qubits (exact expectation)
  kSampled,   // one position drawn from a seeded RNG (Monte Carlo mode)
};

class ErrorModel {
 public:
  enum class Kind { kNone, kPauli, kSuperposedPhase, kDepolarizing };

  static ErrorModel none();
  static ErrorModel pauli(char pauli, QubitIndex position);
  // Simultaneous Paulis, e.g. Z_{a1} Z_{b2}.
  static ErrorModel pauli_string(std::vector<PauliTerm> terms);
  static ErrorModel superposed_phase(Complex a, Complex b, QubitIndex position);
  static ErrorModel depolarizing_fixed(double d, QubitIndex position);
  static ErrorModel depolarizing_averaged(double d);
  static ErrorModel depolarizing_sampled(double d, std::uint64_t seed);

  Kind kind() const { return kind_; }
  Placement placement() const { return placement_; }
  const std::vector<PauliTerm>& paulis() const { return paulis_; }
  Complex a() const { return a_; }
  Complex b() const { return b_; }
  double d() const { return d_; }
  QubitIndex position() const { return position_; }
  std::uint64_t seed() const { return seed_; }

  // Short human-readable form, e.g. "Z_2", "dep(d=0.5, averaged)".
  std::string label() const;

 private:
  ErrorModel() = default;

  Kind kind_ = Kind::kNone;
  Placement placement_ = Placement::kFixed;
  std::vector<PauliTerm> paulis_;
  Complex a_ = 1.0;
  Complex b_ = 0.0;
  double d_ = 0.0;
  QubitIndex position_{1};
  std::uint64_t seed_ = 0;
};

// Applies the model to rho. Fixed positions must be members of code_qubits
// (kOutOfRange otherwise); averaged placement mixes uniformly over them.
DensityMatrix apply_error_model(const ErrorModel& model,
                                const DensityMatrix& rho,
                                const Targets& code_qubits);

}  // namespace cohqec::channels

#endif  // COHQEC_CHANNELS_HPP_
