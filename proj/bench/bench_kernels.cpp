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

// Serial reference kernels against the OpenMP kernels on the nine-qubit
// register.

#include <random>

#include "benchmark/benchmark.h"
#include "cohqec/codes.hpp"
#include "cohqec/coherence.hpp"
#include "cohqec/gates.hpp"
#include "cohqec/kernels.hpp"

namespace {

using namespace cohqec;

constexpr int kQubits = 9;

const Matrix& nine_qubit_state() {
  static const Matrix rho = [] {
    std::mt19937_64 rng(1);
    return coherence::random_density_matrix(kQubits, rng).entries();
  }();
  return rho;
}

kernels::Embedding embedding(const Targets& t) {
  std::vector<int> pos;
  for (const auto& q : t) pos.push_back(q.position());
  return kernels::make_embedding(kQubits, pos);
}

template <void (*Conjugate)(const Matrix&, const kernels::Embedding&, Matrix&)>
void run_conjugate(benchmark::State& state, const Gate& gate) {
  const auto emb = embedding(gate.targets);
  Matrix rho = nine_qubit_state();
  for (auto _ : state) {
    Conjugate(gate.op.matrix(), emb, rho);
    benchmark::DoNotOptimize(rho.data());
  }
}

void BM_SerialCnot(benchmark::State& s) {
  run_conjugate<kernels::serial::conjugate>(s, gates::cnot(QubitIndex(1), QubitIndex(2)));
}
void BM_ParallelCnot(benchmark::State& s) {
  run_conjugate<kernels::parallel::conjugate>(s, gates::cnot(QubitIndex(1), QubitIndex(2)));
}
void BM_SerialClusterCz(benchmark::State& s) {
  run_conjugate<kernels::serial::conjugate>(s, gates::cluster_cz(codes::layout::a,
                                                                 codes::layout::b));
}
void BM_ParallelClusterCz(benchmark::State& s) {
  run_conjugate<kernels::parallel::conjugate>(s, gates::cluster_cz(codes::layout::a,
                                                                   codes::layout::b));
}

// Non-permutation operator, so the parallel path takes its generic branch.
template <void (*Conjugate)(const Matrix&, const kernels::Embedding&, Matrix&)>
void run_measurement(benchmark::State& state) {
  const auto kraus = gates::measurement_kraus();
  const auto emb = embedding(qubits({4}));
  const Matrix& rho = nine_qubit_state();
  for (auto _ : state) {
    Matrix acc = Matrix::Zero(rho.rows(), rho.cols());
    for (const auto& k : kraus.operators) {
      Matrix branch = rho;
      Conjugate(k.matrix(), emb, branch);
      acc += branch;
    }
    benchmark::DoNotOptimize(acc.data());
  }
}
void BM_SerialMeasurement(benchmark::State& s) {
  run_measurement<kernels::serial::conjugate>(s);
}
void BM_ParallelMeasurement(benchmark::State& s) {
  run_measurement<kernels::parallel::conjugate>(s);
}

void BM_SerialPartialTrace(benchmark::State& state) {
  const std::vector<int> keep{1, 3, 4, 5, 6, 7, 9};
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::serial::partial_trace(nine_qubit_state(), kQubits, keep));
}
void BM_ParallelPartialTrace(benchmark::State& state) {
  const std::vector<int> keep{1, 3, 4, 5, 6, 7, 9};
  for (auto _ : state)
    benchmark::DoNotOptimize(
        kernels::parallel::partial_trace(nine_qubit_state(), kQubits, keep));
}

void BM_NineQubitProtocolPoint(benchmark::State& state) {
  const auto error = channels::ErrorModel::depolarizing_averaged(0.5);
  for (auto _ : state)
    benchmark::DoNotOptimize(codes::nine_qubit_protocol(0.785, 0.5, error));
}

BENCHMARK(BM_SerialCnot);
BENCHMARK(BM_ParallelCnot);
BENCHMARK(BM_SerialClusterCz);
BENCHMARK(BM_ParallelClusterCz);
BENCHMARK(BM_SerialMeasurement);
BENCHMARK(BM_ParallelMeasurement);
BENCHMARK(BM_SerialPartialTrace);
BENCHMARK(BM_ParallelPartialTrace);
BENCHMARK(BM_NineQubitProtocolPoint)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
