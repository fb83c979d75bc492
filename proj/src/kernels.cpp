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

#include "cohqec/kernels.hpp"

#include <algorithm>
#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cohqec::kernels {
namespace {

// Below this register dimension the fork/join overhead dominates.
constexpr std::uint64_t kParallelThreshold = 64;

int shift_of(int n_qubits, int position) { return n_qubits - position; }

// Register offsets for every local index over an ordered list of positions.
std::vector<std::uint64_t> offsets_for(int n_qubits,
                                       std::span<const int> positions) {
  const std::size_t k = positions.size();
  std::vector<std::uint64_t> offsets(std::size_t{1} << k, 0);
  for (std::size_t local = 0; local < offsets.size(); ++local) {
    std::uint64_t off = 0;
    for (std::size_t t = 0; t < k; ++t) {
      if ((local >> (k - 1 - t)) & 1u)
        off |= std::uint64_t{1} << shift_of(n_qubits, positions[t]);
    }
    offsets[local] = off;
  }
  return offsets;
}

// Every register index with all target bits cleared, in increasing order.
std::vector<std::uint64_t> bases_for(const Embedding& emb) {
  std::vector<std::uint64_t> bases;
  bases.reserve(emb.dim() / emb.local_dim());
  for (std::uint64_t i = 0; i < emb.dim(); ++i)
    if (!(i & emb.target_mask)) bases.push_back(i);
  return bases;
}

// Local index of register index i under the embedding.
std::uint64_t local_index(const Embedding& emb, std::uint64_t i) {
  const std::uint64_t masked = i & emb.target_mask;
  // offsets is a bijection onto the masked patterns; k <= 12 keeps this cheap
  for (std::uint64_t t = 0; t < emb.local_dim(); ++t)
    if (emb.offsets[t] == masked) return t;
  return 0;
}

// Full-register image of a phase permutation: |i> -> phase[i] |row[i]>.
PhasePermutation lift(const PhasePermutation& local, const Embedding& emb) {
  const std::uint64_t dim = emb.dim();
  PhasePermutation full;
  full.row.resize(dim);
  full.phase.resize(dim);
  for (std::uint64_t i = 0; i < dim; ++i) {
    const std::uint64_t t = local_index(emb, i);
    full.row[i] = (i & ~emb.target_mask) | emb.offsets[local.row[t]];
    full.phase[i] = local.phase[t];
  }
  return full;
}

void generic_block(const Matrix& op, const std::uint64_t* offsets,
                   std::uint64_t k, Complex* data, std::uint64_t base,
                   Complex* buf) {
  for (std::uint64_t t = 0; t < k; ++t) buf[t] = data[base | offsets[t]];
  for (std::uint64_t s = 0; s < k; ++s) {
    Complex acc = 0.0;
    for (std::uint64_t t = 0; t < k; ++t) acc += op(s, t) * buf[t];
    data[base | offsets[s]] = acc;
  }
}

}  // namespace

Embedding make_embedding(int n_qubits, std::span<const int> positions) {
  Embedding emb;
  emb.n_qubits = n_qubits;
  for (int p : positions)
    emb.target_mask |= std::uint64_t{1} << shift_of(n_qubits, p);
  emb.offsets = offsets_for(n_qubits, positions);
  return emb;
}

std::optional<PhasePermutation> as_phase_permutation(const Matrix& op) {
  const auto k = static_cast<std::uint64_t>(op.cols());
  PhasePermutation perm;
  perm.row.resize(k);
  perm.phase.resize(k);
  std::vector<bool> hit(k, false);
  for (std::uint64_t t = 0; t < k; ++t) {
    int found = 0;
    for (std::uint64_t s = 0; s < k; ++s) {
      if (op(s, t) != Complex(0.0)) {
        ++found;
        perm.row[t] = s;
        perm.phase[t] = op(s, t);
      }
    }
    if (found != 1 || hit[perm.row[t]]) return std::nullopt;
    hit[perm.row[t]] = true;
  }
  return perm;
}

// ---------------------------------------------------------------------------

namespace serial {

void apply_to_vector(const Matrix& op, const Embedding& emb, Vector& state) {
  const std::uint64_t k = emb.local_dim();
  std::vector<Complex> buf(k);
  for (std::uint64_t base = 0; base < emb.dim(); ++base) {
    if (base & emb.target_mask) continue;
    generic_block(op, emb.offsets.data(), k, state.data(), base, buf.data());
  }
}

void apply_left(const Matrix& op, const Embedding& emb, Matrix& rho) {
  const std::uint64_t k = emb.local_dim();
  const std::uint64_t dim = emb.dim();
  std::vector<Complex> buf(k);
  for (Eigen::Index c = 0; c < rho.cols(); ++c) {
    Complex* col = rho.data() + c * static_cast<Eigen::Index>(dim);
    for (std::uint64_t base = 0; base < dim; ++base) {
      if (base & emb.target_mask) continue;
      generic_block(op, emb.offsets.data(), k, col, base, buf.data());
    }
  }
}

void apply_right_adjoint(const Matrix& op, const Embedding& emb, Matrix& rho) {
  const std::uint64_t k = emb.local_dim();
  std::vector<Complex> buf(k);
  for (std::uint64_t base = 0; base < emb.dim(); ++base) {
    if (base & emb.target_mask) continue;
    for (Eigen::Index r = 0; r < rho.rows(); ++r) {
      for (std::uint64_t t = 0; t < k; ++t)
        buf[t] = rho(r, static_cast<Eigen::Index>(base | emb.offsets[t]));
      for (std::uint64_t s = 0; s < k; ++s) {
        Complex acc = 0.0;
        for (std::uint64_t t = 0; t < k; ++t)
          acc += buf[t] * std::conj(op(s, t));
        rho(r, static_cast<Eigen::Index>(base | emb.offsets[s])) = acc;
      }
    }
  }
}

void conjugate(const Matrix& op, const Embedding& emb, Matrix& rho) {
  apply_left(op, emb, rho);
  apply_right_adjoint(op, emb, rho);
}

Matrix partial_trace(const Matrix& rho, int n_qubits,
                     std::span<const int> keep) {
  std::vector<int> traced;
  for (int p = 1; p <= n_qubits; ++p)
    if (std::find(keep.begin(), keep.end(), p) == keep.end())
      traced.push_back(p);
  const auto kept_off = offsets_for(n_qubits, keep);
  const auto traced_off = offsets_for(n_qubits, traced);
  const auto out_dim = static_cast<Eigen::Index>(kept_off.size());
  Matrix out = Matrix::Zero(out_dim, out_dim);
  for (Eigen::Index a = 0; a < out_dim; ++a)
    for (Eigen::Index b = 0; b < out_dim; ++b) {
      Complex acc = 0.0;
      for (std::uint64_t t : traced_off)
        acc += rho(static_cast<Eigen::Index>(kept_off[a] | t),
                   static_cast<Eigen::Index>(kept_off[b] | t));
      out(a, b) = acc;
    }
  return out;
}

}  // namespace serial

// ---------------------------------------------------------------------------

namespace parallel {
namespace {

void permute_vector(const PhasePermutation& local, const Embedding& emb,
                    const std::vector<std::uint64_t>& bases, Complex* data) {
  const std::uint64_t k = emb.local_dim();
  std::vector<Complex> buf(k);
  for (std::uint64_t base : bases) {
    for (std::uint64_t t = 0; t < k; ++t) buf[t] = data[base | emb.offsets[t]];
    for (std::uint64_t t = 0; t < k; ++t)
      data[base | emb.offsets[local.row[t]]] = local.phase[t] * buf[t];
  }
}

// Single-qubit operator on every (i, i | bit) pair of a column.
void pair_update(const Matrix& op, std::uint64_t bit, std::uint64_t dim,
                 Complex* col) {
  const Complex m00 = op(0, 0), m01 = op(0, 1), m10 = op(1, 0), m11 = op(1, 1);
  for (std::uint64_t hi = 0; hi < dim; hi += 2 * bit)
    for (std::uint64_t i = hi; i < hi + bit; ++i) {
      const Complex a = col[i], b = col[i | bit];
      col[i] = m00 * a + m01 * b;
      col[i | bit] = m10 * a + m11 * b;
    }
}

}  // namespace

void apply_to_vector(const Matrix& op, const Embedding& emb, Vector& state) {
  const auto bases = bases_for(emb);
  const auto n_bases = static_cast<std::int64_t>(bases.size());
  const std::uint64_t k = emb.local_dim();
  if (auto perm = as_phase_permutation(op)) {
    permute_vector(*perm, emb, bases, state.data());
    return;
  }
#pragma omp parallel if (emb.dim() >= kParallelThreshold)
  {
    std::vector<Complex> buf(k);
#pragma omp for schedule(static)
    for (std::int64_t b = 0; b < n_bases; ++b)
      generic_block(op, emb.offsets.data(), k, state.data(), bases[b],
                    buf.data());
  }
}

void apply_left(const Matrix& op, const Embedding& emb, Matrix& rho) {
  const std::uint64_t k = emb.local_dim();
  const auto dim = static_cast<Eigen::Index>(emb.dim());
  const Eigen::Index cols = rho.cols();
  if (k == 2) {
#pragma omp parallel for schedule(static) if (emb.dim() >= kParallelThreshold)
    for (Eigen::Index c = 0; c < cols; ++c)
      pair_update(op, emb.target_mask, emb.dim(), rho.data() + c * dim);
    return;
  }
  const auto bases = bases_for(emb);
  const auto perm = as_phase_permutation(op);
#pragma omp parallel if (emb.dim() >= kParallelThreshold)
  {
    std::vector<Complex> buf(k);
#pragma omp for schedule(static)
    for (Eigen::Index c = 0; c < cols; ++c) {
      Complex* col = rho.data() + c * dim;
      if (perm) {
        for (std::uint64_t base : bases) {
          for (std::uint64_t t = 0; t < k; ++t)
            buf[t] = col[base | emb.offsets[t]];
          for (std::uint64_t t = 0; t < k; ++t)
            col[base | emb.offsets[perm->row[t]]] = perm->phase[t] * buf[t];
        }
      } else {
        for (std::uint64_t base : bases)
          generic_block(op, emb.offsets.data(), k, col, base, buf.data());
      }
    }
  }
}

void apply_right_adjoint(const Matrix& op, const Embedding& emb, Matrix& rho) {
  const Eigen::Index rows = rho.rows();
  const std::uint64_t k = emb.local_dim();
  if (k == 2) {
    // Columns i and i | bit mix with conj(op); rows stay independent.
    const std::uint64_t bit = emb.target_mask;
    const auto n_pairs = static_cast<std::int64_t>(emb.dim() / 2);
    const Complex m00 = std::conj(op(0, 0)), m01 = std::conj(op(0, 1)),
                  m10 = std::conj(op(1, 0)), m11 = std::conj(op(1, 1));
#pragma omp parallel for schedule(static) if (emb.dim() >= kParallelThreshold)
    for (std::int64_t p = 0; p < n_pairs; ++p) {
      const auto u = static_cast<std::uint64_t>(p);
      const std::uint64_t i = ((u & ~(bit - 1)) << 1) | (u & (bit - 1));
      Complex* lo = rho.data() + static_cast<Eigen::Index>(i) * rows;
      Complex* hi = rho.data() + static_cast<Eigen::Index>(i | bit) * rows;
      for (Eigen::Index r = 0; r < rows; ++r) {
        const Complex a = lo[r], b = hi[r];
        lo[r] = a * m00 + b * m01;
        hi[r] = a * m10 + b * m11;
      }
    }
    return;
  }
  if (auto perm = as_phase_permutation(op)) {
    // (rho U^dagger)(r, row(j)) = rho(r, j) * conj(phase(j))
    const PhasePermutation full = lift(*perm, emb);
    const auto dim = static_cast<std::int64_t>(emb.dim());
    Matrix out(rows, rho.cols());
#pragma omp parallel for schedule(static) if (emb.dim() >= kParallelThreshold)
    for (std::int64_t j = 0; j < dim; ++j) {
      const Complex ph = std::conj(full.phase[j]);
      const auto dst = static_cast<Eigen::Index>(full.row[j]);
      for (Eigen::Index r = 0; r < rows; ++r) out(r, dst) = rho(r, j) * ph;
    }
    rho = std::move(out);
    return;
  }
  const auto bases = bases_for(emb);
  const auto n_bases = static_cast<std::int64_t>(bases.size());
#pragma omp parallel if (emb.dim() >= kParallelThreshold)
  {
    std::vector<Complex> buf(k);
    std::vector<Complex*> cols(k);
#pragma omp for schedule(static)
    for (std::int64_t b = 0; b < n_bases; ++b) {
      for (std::uint64_t t = 0; t < k; ++t)
        cols[t] = rho.data() +
                  static_cast<Eigen::Index>(bases[b] | emb.offsets[t]) * rows;
      for (Eigen::Index r = 0; r < rows; ++r) {
        for (std::uint64_t t = 0; t < k; ++t) buf[t] = cols[t][r];
        for (std::uint64_t s = 0; s < k; ++s) {
          Complex acc = 0.0;
          for (std::uint64_t t = 0; t < k; ++t)
            acc += buf[t] * std::conj(op(s, t));
          cols[s][r] = acc;
        }
      }
    }
  }
}

void conjugate(const Matrix& op, const Embedding& emb, Matrix& rho) {
  if (emb.local_dim() == 2) {
    apply_left(op, emb, rho);
    apply_right_adjoint(op, emb, rho);
    return;
  }
  if (auto perm = as_phase_permutation(op)) {
    const PhasePermutation full = lift(*perm, emb);
    const auto dim = static_cast<std::int64_t>(emb.dim());
    Matrix out(rho.rows(), rho.cols());
#pragma omp parallel for schedule(static) if (emb.dim() >= kParallelThreshold)
    for (std::int64_t j = 0; j < dim; ++j) {
      const Complex cj = std::conj(full.phase[j]);
      const auto dst_col = static_cast<Eigen::Index>(full.row[j]);
      for (std::int64_t i = 0; i < dim; ++i)
        out(static_cast<Eigen::Index>(full.row[i]), dst_col) =
            full.phase[i] * rho(i, j) * cj;
    }
    rho = std::move(out);
    return;
  }
  apply_left(op, emb, rho);
  apply_right_adjoint(op, emb, rho);
}

Matrix partial_trace(const Matrix& rho, int n_qubits,
                     std::span<const int> keep) {
  std::vector<int> traced;
  for (int p = 1; p <= n_qubits; ++p)
    if (std::find(keep.begin(), keep.end(), p) == keep.end())
      traced.push_back(p);
  const auto kept_off = offsets_for(n_qubits, keep);
  const auto traced_off = offsets_for(n_qubits, traced);
  const auto out_dim = static_cast<Eigen::Index>(kept_off.size());
  Matrix out(out_dim, out_dim);
#pragma omp parallel for schedule(static) if (rho.rows() >= static_cast<Eigen::Index>(kParallelThreshold))
  for (Eigen::Index b = 0; b < out_dim; ++b) {
    for (Eigen::Index a = 0; a < out_dim; ++a) {
      Complex acc = 0.0;
      for (std::uint64_t t : traced_off)
        acc += rho(static_cast<Eigen::Index>(kept_off[a] | t),
                   static_cast<Eigen::Index>(kept_off[b] | t));
      out(a, b) = acc;
    }
  }
  return out;
}

}  // namespace parallel

}  // namespace cohqec::kernels
