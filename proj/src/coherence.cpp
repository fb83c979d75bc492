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

#include "cohqec/coherence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace cohqec::coherence {

double l1_coherence(const Matrix& rho) {
  double sum = 0.0;
  for (Eigen::Index j = 0; j < rho.cols(); ++j)
    for (Eigen::Index i = 0; i < rho.rows(); ++i)
      if (i != j) sum += std::abs(rho(i, j));
  return sum;
}

double l1_coherence(const DensityMatrix& rho) {
  return l1_coherence(rho.entries());
}

bool is_incoherent_state(const DensityMatrix& rho, double tol) {
  const Matrix& m = rho.entries();
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (i != j && std::abs(m(i, j)) > tol) return false;
  return true;
}

IncoherenceDiagnostic is_incoherent_kraus_set(const KrausSet& channel,
                                              double tol) {
  IncoherenceDiagnostic diag;
  for (std::size_t k = 0; k < channel.operators.size(); ++k) {
    const Matrix& m = channel.operators[k].matrix();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      int significant = 0;
      for (Eigen::Index r = 0; r < m.rows(); ++r)
        if (std::abs(m(r, c)) > tol) ++significant;
      if (significant > 1)
        diag.offending.emplace_back(k, static_cast<std::uint64_t>(c));
    }
  }
  diag.incoherent = diag.offending.empty();
  return diag;
}

bool maps_basis_to_diagonal(const KrausSet& channel, double tol) {
  const int n = channel.arity();
  const auto d = static_cast<Eigen::Index>(dim_of(n));
  for (Eigen::Index i = 0; i < d; ++i) {
    Matrix out = Matrix::Zero(d, d);
    for (const auto& k : channel.operators) {
      const Vector col = k.matrix().col(i);
      out += col * col.adjoint();
    }
    if (l1_coherence(out) > tol) return false;
  }
  return true;
}

DensityMatrix random_density_matrix(int n_qubits, std::mt19937_64& rng) {
  const auto d = static_cast<Eigen::Index>(dim_of(n_qubits));
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(d, d);
  for (Eigen::Index j = 0; j < d; ++j)
    for (Eigen::Index i = 0; i < d; ++i) g(i, j) = Complex(normal(rng), normal(rng));
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = 0.5 * (rho + rho.adjoint());
  return DensityMatrix::trusted(n_qubits, std::move(rho));
}

MonotonicityReport monotonicity_audit(const KrausSet& channel,
                                      const Targets& targets, int n_samples,
                                      std::uint64_t seed, double tol,
                                      int n_qubits) {
  MonotonicityReport report;
  report.vacuous = !is_incoherent_kraus_set(channel).incoherent;
  if (n_qubits == 0) {
    for (auto q : targets) n_qubits = std::max(n_qubits, q.position());
  }
  std::mt19937_64 rng(seed);
  report.max_increase = -std::numeric_limits<double>::infinity();
  report.max_selective_increase = -std::numeric_limits<double>::infinity();
  for (int s = 0; s < n_samples; ++s) {
    const DensityMatrix rho = random_density_matrix(n_qubits, rng);
    const double before = l1_coherence(rho);

    const double after = l1_coherence(apply_kraus(channel, targets, rho));
    report.max_increase = std::max(report.max_increase, after - before);
    if (after - before > tol) ++report.violations;

    // sum_n p_n C(rho_n) = sum_n C(K_n rho K_n^dagger) since C is
    // homogeneous of degree one.
    double selective = 0.0;
    for (const auto& k : channel.operators)
      selective += l1_coherence(embed_and_apply(k, targets, rho));
    report.max_selective_increase =
        std::max(report.max_selective_increase, selective - before);
    if (selective - before > tol) ++report.selective_violations;
  }
  report.samples = n_samples;
  if (n_samples == 0) {
    report.max_increase = 0.0;
    report.max_selective_increase = 0.0;
  }
  return report;
}

}  // namespace cohqec::coherence
