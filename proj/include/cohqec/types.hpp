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

#ifndef COHQEC_TYPES_HPP_
#define COHQEC_TYPES_HPP_

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace cohqec {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

enum class ErrorCode {
  kKindMismatch,
  kTargetCollision,
  kArityMismatch,
  kOutOfRange,
  kCompletenessViolation,
  kEmptyKeep,
  kDimensionMismatch,
  kNormalizationViolation,
  kNotUnitary,
  kUnsupportedError,
  kInvalidGrid,
  kOrderViolation,
  kIo,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// 1-based qubit position. Qubit 1 is the leftmost ket factor and the most
// significant bit of a basis index.
class QubitIndex {
 public:
  constexpr explicit QubitIndex(int position) : position_(position) {}
  constexpr int position() const { return position_; }
  friend constexpr bool operator==(QubitIndex, QubitIndex) = default;
  friend constexpr auto operator<=>(QubitIndex, QubitIndex) = default;

 private:
  int position_;
};

using Targets = std::vector<QubitIndex>;

inline Targets qubits(std::initializer_list<int> positions) {
  Targets out;
  out.reserve(positions.size());
  for (int p : positions) out.emplace_back(p);
  return out;
}

constexpr std::uint64_t dim_of(int n_qubits) {
  return std::uint64_t{1} << n_qubits;
}

}  // namespace cohqec

#endif  // COHQEC_TYPES_HPP_
