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

// Fidelity sweeps of the nine-qubit code over (theta, e, d) grids, CSV
// output, and the command-line front end.

#ifndef COHQEC_EXPERIMENTS_HPP_
#define COHQEC_EXPERIMENTS_HPP_

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cohqec/channels.hpp"

namespace cohqec::experiments {

struct SweepConfig {
  std::vector<double> theta_grid;  // within [0, pi]
  std::vector<double> e_grid;      // within [0, 1]
  std::vector<double> d_grid;      // within [0, 1]
  // kAveraged (default) or kFixed at fixed_position.
  channels::Placement placement = channels::Placement::kAveraged;
  QubitIndex fixed_position{5};
  std::string output_path;
};

struct SweepRecord {
  double theta;
  double e;
  double d;
  double fidelity;
};

// Grids nonempty, strictly increasing, in range; kInvalidGrid otherwise.
void validate(const SweepConfig& config);

// Number of sweep workers: COHERE_QEC_THREADS when set to a positive
// integer, else the OpenMP default. Throws kInvalidGrid on a malformed value.
int worker_count();

// One record per grid point in (theta, e, d) lexicographic order. Output is
// bit-identical for any worker count. workers <= 0 means worker_count().
std::vector<SweepRecord> run_sweep(const SweepConfig& config, int workers = 0);

// Header "theta,e,d,fidelity", then one row per record with 12 significant
// digits. Records must be nonempty and strictly increasing in (theta, e, d).
void write_csv(std::span<const SweepRecord> records, std::ostream& out);
// As write_csv, into a file; kIo if the path cannot be written.
void emit_csv(std::span<const SweepRecord> records, const std::string& path);

// "0.25", "pi", "pi/4", "3pi/4", "3*pi/4", "-pi/2".
double parse_value(std::string_view text);
// "start:stop:count" (count evenly spaced points, both ends included) or a
// single value.
std::vector<double> parse_grid(std::string_view text);

// Entry point behind the cohqec executable. Exit codes: 0 success,
// 1 contract failure, 2 usage error.
int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace cohqec::experiments

#endif  // COHQEC_EXPERIMENTS_HPP_
