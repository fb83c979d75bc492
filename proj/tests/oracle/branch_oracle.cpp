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

#include "branch_oracle.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace oracle {
namespace {

using cplx = std::complex<double>;
using Ket = std::vector<cplx>;

constexpr int kQubits = 9;
constexpr std::size_t kDim = std::size_t{1} << kQubits;

constexpr std::size_t bit(int pos) { return std::size_t{1} << (kQubits - pos); }

void x(Ket& s, int p) {
  for (std::size_t i = 0; i < kDim; ++i)
    if (!(i & bit(p))) std::swap(s[i], s[i | bit(p)]);
}

void z(Ket& s, int p) {
  for (std::size_t i = 0; i < kDim; ++i)
    if (i & bit(p)) s[i] = -s[i];
}

void y(Ket& s, int p) {
  // Y = i X Z
  z(s, p);
  x(s, p);
  for (auto& a : s) a *= cplx(0.0, 1.0);
}

void h(Ket& s, int p) {
  const double r = 1.0 / std::sqrt(2.0);
  for (std::size_t i = 0; i < kDim; ++i) {
    if (i & bit(p)) continue;
    const cplx a0 = s[i], a1 = s[i | bit(p)];
    s[i] = r * (a0 + a1);
    s[i | bit(p)] = r * (a0 - a1);
  }
}

void cnot(Ket& s, int c, int t) {
  for (std::size_t i = 0; i < kDim; ++i)
    if ((i & bit(c)) && !(i & bit(t))) std::swap(s[i], s[i | bit(t)]);
}

// Standard computational-basis controlled-Z.
void cz_std(Ket& s, int c, int t) {
  for (std::size_t i = 0; i < kDim; ++i)
    if ((i & bit(c)) && (i & bit(t))) s[i] = -s[i];
}

// Controlled-Z whose control is read in the +/- basis.
void cz_pm(Ket& s, int c, int t) {
  h(s, c);
  cz_std(s, c, t);
  h(s, c);
}

void pauli(Ket& s, char p, int pos) {
  switch (p) {
    case 'X': x(s, pos); break;
    case 'Y': y(s, pos); break;
    case 'Z': z(s, pos); break;
    case 'I': break;
    default: throw std::invalid_argument("oracle: bad pauli");
  }
}

// Cluster k in {0,1,2} occupies positions 3k+1, 3k+2, 3k+3.
void first_layer(Ket& s, int k) {
  const int base = 3 * k;
  cnot(s, base + 1, base + 2);
  cnot(s, base + 3, base + 2);
}

// The cluster CZ is built from its definition: undo the first layer on both
// clusters, act on the middle qubits, redo the first layer. The first layer
// is an involution so "undo" and "redo" are the same circuit.
void cluster_cz(Ket& s, int ctrl, int tgt) {
  first_layer(s, ctrl);
  first_layer(s, tgt);
  cz_pm(s, 3 * ctrl + 2, 3 * tgt + 2);
  first_layer(s, ctrl);
  first_layer(s, tgt);
}

constexpr int kA = 0, kB = 1, kC = 2;

void encode(Ket& s) {
  for (int k = 0; k < 3; ++k) first_layer(s, k);
  cluster_cz(s, kA, kB);
  cluster_cz(s, kC, kB);
}

void decode(Ket& s) {
  cluster_cz(s, kC, kB);
  cluster_cz(s, kA, kB);
  for (int k = 0; k < 3; ++k) first_layer(s, k);
}

struct Branch {
  double weight;
  std::vector<std::pair<char, int>> paulis;
};

std::vector<Branch> error_branches(const ErrorSpec& err) {
  using K = ErrorSpec::Kind;
  std::vector<Branch> out;
  switch (err.kind) {
    case K::kNone:
      out.push_back({1.0, {}});
      break;
    case K::kPaulis:
      out.push_back({1.0, err.paulis});
      break;
    case K::kDepolarizingAveraged:
      out.push_back({1.0 - err.d, {}});
      for (int pos = 1; pos <= kQubits; ++pos)
        for (char p : {'X', 'Y', 'Z'})
          out.push_back({err.d / 27.0, {{p, pos}}});
      break;
    case K::kDepolarizingFixed:
      out.push_back({1.0 - err.d, {}});
      for (char p : {'X', 'Y', 'Z'})
        out.push_back({err.d / 3.0, {{p, err.position}}});
      break;
  }
  return out;
}

// Sum over all 2^8 measurement records of |<psi| C_record v_record>|^2, where
// v_record is the (unnormalized) b2 amplitude pair left by the record.
double measured_fidelity(Ket s, cplx psi0, cplx psi1) {
  // K0 = |0><+| = |0><0| H and K1 = |1><-| = |1><1| H.
  for (int p : {1, 3, 4, 6, 7, 9}) h(s, p);

  double total = 0.0;
  const std::size_t b2 = bit(5);
  for (std::size_t i = 0; i < kDim; ++i) {
    if (i & b2) continue;
    auto one = [&](int p) { return (i & bit(p)) != 0; };
    cplx v0 = s[i], v1 = s[i | b2];
    int z_flips = 0;
    if (one(1) && one(3)) ++z_flips;
    if (one(4) && one(6)) ++z_flips;
    if (one(7) && one(9)) ++z_flips;
    if (z_flips % 2 == 1) v1 = -v1;
    if (one(2) && one(8)) std::swap(v0, v1);
    total += std::norm(std::conj(psi0) * v0 + std::conj(psi1) * v1);
  }
  return total;
}

}  // namespace

double nine_qubit_fidelity(double theta, double e, const ErrorSpec& error) {
  const cplx psi0 = std::cos(theta / 2.0);
  const cplx psi1 = std::sin(theta / 2.0);
  const double r = 1.0 / std::sqrt(2.0);

  // noisy_plus(e) = (1 - e/2)|+><+| + (e/2)|-><-|
  const std::array<double, 2> sign_weight = {1.0 - e / 2.0, e / 2.0};
  const std::array<int, 6> noisy = {1, 3, 4, 6, 7, 9};
  const auto branches = error_branches(error);

  double fidelity = 0.0;
  for (unsigned mask = 0; mask < 64; ++mask) {
    double w_in = 1.0;
    for (int k = 0; k < 6; ++k) w_in *= sign_weight[(mask >> k) & 1u];
    if (w_in == 0.0) continue;

    // Per-position single-qubit amplitudes, then the product ket.
    std::array<std::array<cplx, 2>, kQubits + 1> local{};
    for (int p = 1; p <= kQubits; ++p) local[p] = {1.0, 0.0};
    local[5] = {psi0, psi1};
    for (int k = 0; k < 6; ++k) {
      const bool minus = (mask >> k) & 1u;
      local[noisy[k]] = {r, minus ? -r : r};
    }
    Ket s(kDim);
    for (std::size_t i = 0; i < kDim; ++i) {
      cplx a = 1.0;
      for (int p = 1; p <= kQubits; ++p) a *= local[p][(i & bit(p)) ? 1 : 0];
      s[i] = a;
    }

    encode(s);
    for (const auto& br : branches) {
      if (br.weight == 0.0) continue;
      Ket t = s;
      for (const auto& [p, pos] : br.paulis) pauli(t, p, pos);
      decode(t);
      fidelity += w_in * br.weight * measured_fidelity(std::move(t), psi0, psi1);
    }
  }
  return fidelity;
}

}  // namespace oracle
