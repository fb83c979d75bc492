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

#include "cohqec/experiments.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <tuple>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cohqec/codes.hpp"

namespace cohqec::experiments {
namespace {

void check_grid(const std::vector<double>& grid, const char* name, double lo,
                double hi) {
  if (grid.empty())
    throw Error(ErrorCode::kInvalidGrid, std::string(name) + " grid is empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] >= lo && grid[i] <= hi)) {
      std::ostringstream msg;
      msg << name << " value " << grid[i] << " outside [" << lo << ", " << hi
          << "]";
      throw Error(ErrorCode::kInvalidGrid, msg.str());
    }
    if (i > 0 && !(grid[i] > grid[i - 1]))
      throw Error(ErrorCode::kInvalidGrid,
                  std::string(name) + " grid is not strictly increasing");
  }
}

double parse_number(std::string_view text) {
  double v = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || text.empty())
    throw Error(ErrorCode::kInvalidGrid,
                "cannot parse number '" + std::string(text) + "'");
  return v;
}

std::string format_g12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

void validate(const SweepConfig& config) {
  check_grid(config.theta_grid, "theta", 0.0, std::numbers::pi);
  check_grid(config.e_grid, "e", 0.0, 1.0);
  check_grid(config.d_grid, "d", 0.0, 1.0);
  if (config.placement == channels::Placement::kSampled)
    throw Error(ErrorCode::kInvalidGrid,
                "sweeps use averaged or fixed placement");
  if (config.placement == channels::Placement::kFixed &&
      (config.fixed_position.position() < 1 ||
       config.fixed_position.position() > codes::layout::kQubits))
    throw Error(ErrorCode::kInvalidGrid, "fixed position outside 1..9");
}

int worker_count() {
  if (const char* env = std::getenv("COHERE_QEC_THREADS")) {
    int n = 0;
    const std::string_view s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
    if (ec != std::errc() || ptr != s.data() + s.size() || n < 1)
      throw Error(ErrorCode::kInvalidGrid,
                  "COHERE_QEC_THREADS must be a positive integer, got '" +
                      std::string(s) + "'");
    return n;
  }
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<SweepRecord> run_sweep(const SweepConfig& config, int workers) {
  validate(config);
  if (workers <= 0) workers = worker_count();

  std::vector<SweepRecord> records;
  records.reserve(config.theta_grid.size() * config.e_grid.size() *
                  config.d_grid.size());
  for (double theta : config.theta_grid)
    for (double e : config.e_grid)
      for (double d : config.d_grid) records.push_back({theta, e, d, 0.0});

  const auto n = static_cast<std::int64_t>(records.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic) num_threads(workers) if (workers > 1)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      auto& r = records[static_cast<std::size_t>(i)];
      const auto model =
          config.placement == channels::Placement::kFixed
              ? channels::ErrorModel::depolarizing_fixed(r.d, config.fixed_position)
              : channels::ErrorModel::depolarizing_averaged(r.d);
      r.fidelity = codes::nine_qubit_protocol(r.theta, r.e, model);
      if (!(r.fidelity >= -1e-10 && r.fidelity <= 1.0 + 1e-10)) {
        std::ostringstream msg;
        msg << "fidelity " << r.fidelity << " outside [0, 1] at theta="
            << r.theta << " e=" << r.e << " d=" << r.d;
        throw Error(ErrorCode::kOutOfRange, msg.str());
      }
    } catch (...) {
#pragma omp critical(cohqec_sweep_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return records;
}

void write_csv(std::span<const SweepRecord> records, std::ostream& out) {
  if (records.empty())
    throw Error(ErrorCode::kOrderViolation, "no records to write");
  for (std::size_t i = 1; i < records.size(); ++i) {
    const auto& p = records[i - 1];
    const auto& q = records[i];
    if (!(std::tie(p.theta, p.e, p.d) < std::tie(q.theta, q.e, q.d)))
      throw Error(ErrorCode::kOrderViolation,
                  "record " + std::to_string(i) +
                      " is not after its predecessor in (theta, e, d) order");
  }
  out << "theta,e,d,fidelity\n";
  for (const auto& r : records) {
    out << format_g12(r.theta) << ',' << format_g12(r.e) << ','
        << format_g12(r.d) << ',' << format_g12(r.fidelity) << '\n';
  }
}

void emit_csv(std::span<const SweepRecord> records, const std::string& path) {
  std::ostringstream buffer;
  write_csv(records, buffer);
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  file << buffer.str();
  file.flush();
  if (!file) throw Error(ErrorCode::kIo, "write to '" + path + "' failed");
}

double parse_value(std::string_view text) {
  const auto pi_at = text.find("pi");
  if (pi_at == std::string_view::npos) return parse_number(text);

  // [sign][coef][*]pi[/den]
  std::string_view head = text.substr(0, pi_at);
  std::string_view tail = text.substr(pi_at + 2);
  double sign = 1.0;
  if (!head.empty() && (head.front() == '-' || head.front() == '+')) {
    if (head.front() == '-') sign = -1.0;
    head.remove_prefix(1);
  }
  if (!head.empty() && head.back() == '*') head.remove_suffix(1);
  const double coef = head.empty() ? 1.0 : parse_number(head);
  double den = 1.0;
  if (!tail.empty()) {
    if (tail.front() != '/')
      throw Error(ErrorCode::kInvalidGrid,
                  "cannot parse value '" + std::string(text) + "'");
    den = parse_number(tail.substr(1));
    if (den == 0.0)
      throw Error(ErrorCode::kInvalidGrid, "division by zero in '" +
                                               std::string(text) + "'");
  }
  return sign * coef * std::numbers::pi / den;
}

std::vector<double> parse_grid(std::string_view text) {
  const auto first = text.find(':');
  if (first == std::string_view::npos) return {parse_value(text)};
  const auto second = text.find(':', first + 1);
  if (second == std::string_view::npos)
    throw Error(ErrorCode::kInvalidGrid,
                "grid must be start:stop:count, got '" + std::string(text) + "'");
  const double start = parse_value(text.substr(0, first));
  const double stop = parse_value(text.substr(first + 1, second - first - 1));
  const std::string_view count_text = text.substr(second + 1);
  int count = 0;
  const auto [ptr, ec] = std::from_chars(
      count_text.data(), count_text.data() + count_text.size(), count);
  if (ec != std::errc() || ptr != count_text.data() + count_text.size() ||
      count < 1)
    throw Error(ErrorCode::kInvalidGrid,
                "grid count must be a positive integer, got '" +
                    std::string(count_text) + "'");
  if (count == 1) return {start};
  std::vector<double> grid(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i)
    grid[i] = start + (stop - start) * i / (count - 1);
  grid.back() = stop;
  return grid;
}

}  // namespace cohqec::experiments
