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

#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "cohqec/codes.hpp"
#include "cohqec/coherence.hpp"
#include "cohqec/experiments.hpp"
#include "cohqec/gates.hpp"

namespace cohqec::experiments {
namespace {

using channels::ErrorModel;

constexpr double kTableTolerance = 1e-12;

std::string amplitudes(const PureState& s) {
  std::ostringstream out;
  out << '[';
  for (Eigen::Index i = 0; i < s.amplitudes().size(); ++i) {
    const Complex a = s.amplitudes()(i);
    if (i) out << ", ";
    char buf[64];
    if (std::abs(a.imag()) < 1e-15)
      std::snprintf(buf, sizeof(buf), "%.6g", a.real());
    else
      std::snprintf(buf, sizeof(buf), "%.6g%+.6gi", a.real(), a.imag());
    out << buf;
  }
  out << ']';
  return out.str();
}

std::string matrix2(const DensityMatrix& rho) {
  std::ostringstream out;
  char buf[160];
  for (int r = 0; r < 2; ++r) {
    std::snprintf(buf, sizeof(buf), "  [% .6f%+.6fi  % .6f%+.6fi]\n",
                  rho(r, 0).real(), rho(r, 0).imag(), rho(r, 1).real(),
                  rho(r, 1).imag());
    out << buf;
  }
  return out.str();
}

// "none", "Z<q>", or "S<q>" (a 1 + b Z_q with the given a, b).
ErrorModel parse_demo_error(const std::string& text, double a, double b,
                            int n_qubits) {
  if (text == "none") return ErrorModel::none();
  if (text.size() == 2 && (text[0] == 'Z' || text[0] == 'S') &&
      text[1] >= '1' && text[1] <= '0' + n_qubits) {
    const QubitIndex q{text[1] - '0'};
    if (text[0] == 'Z') return ErrorModel::pauli('Z', q);
    return ErrorModel::superposed_phase(a, b, q);
  }
  throw CLI::ValidationError("--error",
                             "expected none, Z<q> or S<q> with q in 1.." +
                                 std::to_string(n_qubits));
}

void print_stage(std::ostream& out, const char* name, const PureState& s) {
  out << "  " << name << ": " << codes::format_three(s) << "\n      "
      << amplitudes(s) << '\n';
}

int run_demo(const std::string& code, const std::string& error_text,
             double theta, double a, double b, std::ostream& out) {
  const int n = code == "two" ? 2 : 3;
  const ErrorModel error = parse_demo_error(error_text, a, b, n);
  const PureState psi = codes::bloch_state(theta);
  out << "code: " << code << "-qubit, psi = cos(theta/2)|0> + sin(theta/2)|1>,"
      << " theta = " << theta << ", error: " << error.label() << "\n";

  // Pure-state walkthrough; every allowed error is a single linear branch.
  const Targets all = n == 2 ? qubits({1, 2}) : qubits({1, 2, 3});
  const PureState plus = PureState::product("+");
  std::vector<PureState> parts = {plus, psi};
  if (n == 3) parts.push_back(plus);
  PureState s = tensor(std::span<const PureState>(parts));
  print_stage(out, "initial", s);
  const Gate encode =
      n == 2 ? gates::cnot(QubitIndex{1}, QubitIndex{2})
             : gates::cluster_encode_u1(
                   {QubitIndex{1}, QubitIndex{2}, QubitIndex{3}});
  s = apply(encode, s);
  print_stage(out, "encoded", s);
  if (error.kind() == ErrorModel::Kind::kPauli) {
    s = apply({gates::pauli_z(), {error.paulis().front().position}}, s);
  } else if (error.kind() == ErrorModel::Kind::kSuperposedPhase) {
    s = embed_and_apply(channels::superposed_phase_error(error.a(), error.b()),
                        {error.position()}, s)
            .state;
  }
  print_stage(out, "after error", s);

  if (n == 2) {
    s = apply(encode, s);
    s = apply(gates::cz_pm(QubitIndex{1}, QubitIndex{2}), s);
    print_stage(out, "decoded (CZ_12 CNOT_12)", s);
    const auto result = codes::two_qubit_pipeline(psi, error);
    out << "  recovered qubit 2:\n" << matrix2(result.recovered);
    out << "  absorbed qubit 1:\n" << matrix2(result.absorbed);
    out << "  fidelity(psi, recovered) = " << fidelity(psi, result.recovered)
        << '\n';
    return 0;
  }
  s = apply({encode.op.adjoint(), encode.targets}, s);
  print_stage(out, "decoded (U1^dagger)", s);
  const DensityMatrix recovered = codes::three_qubit_pipeline(psi, error);
  out << "  after measuring qubits 1,3 with {|0><+|, |1><-|} and Z_2 on (1,1):\n"
      << matrix2(recovered);
  const double f = fidelity(psi, recovered);
  out << "  fidelity(psi, recovered) = " << f << '\n';
  return std::abs(f - 1.0) <= 1e-10 ? 0 : 1;
}

void print_table(std::ostream& out, const std::vector<codes::ErrorTableRow>& rows,
                 bool nine) {
  for (const auto& r : rows) {
    const auto fmt = nine ? codes::format_nine : codes::format_three;
    out << "  " << r.error_label << " | " << fmt(r.on_first) << " | "
        << fmt(r.on_second) << '\n';
  }
}

int run_table(const std::string& which, std::ostream& out) {
  if (which == "three") {
    const auto rows = codes::error_table_three();
    out << "three-qubit error table: CNOT_12 CNOT_32 E |i_l>\n";
    out << "  E | on |0_l> | on |1_l>\n";
    print_table(out, rows, false);
    const double diff = codes::table_difference(rows, codes::reference_table_three());
    out << "max entrywise difference from reference: " << diff << '\n';
    const bool ok = diff <= kTableTolerance;
    out << (ok ? "MATCH" : "MISMATCH") << '\n';
    return ok ? 0 : 1;
  }
  const auto table = codes::error_table_nine();
  out << "nine-qubit error table: CZ_ab CZ_cb E |+-_L>\n";
  out << "  E | on |+_L> | on |-_L>\n";
  print_table(out, table.rows, true);
  const double diff =
      codes::table_difference(table.rows, codes::reference_table_nine());
  out << "max entrywise difference from reference: " << diff << '\n';
  out << "max spread across i = 1,2,3 within a cluster: "
      << table.max_position_spread << '\n';
  const bool ok = diff <= kTableTolerance && table.max_position_spread <= kTableTolerance;
  out << (ok ? "MATCH" : "MISMATCH") << '\n';
  return ok ? 0 : 1;
}

int run_check(std::ostream& out) {
  constexpr int kSamples = 100;
  constexpr std::uint64_t kSeed = 20170101;
  bool as_expected = true;
  std::vector<std::string> failures;
  out << "operation | structural | basis->diagonal | max dC (C2a) | "
         "max dC selective (C2b)\n";
  for (const auto& item : codes::audit_inventory()) {
    const auto diag = coherence::is_incoherent_kraus_set(item.channel);
    const bool behavioral = coherence::maps_basis_to_diagonal(item.channel);
    // Audit on the operator's own support plus one spectator qubit.
    const int k = item.channel.arity();
    Targets local;
    for (int i = 1; i <= k; ++i) local.emplace_back(i);
    const auto report = coherence::monotonicity_audit(
        item.channel, local, kSamples, kSeed, 1e-9, std::min(k + 1, 7));
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%-32s | %-10s | %-15s | %+.3e | %+.3e%s\n",
                  item.name.c_str(), diag.incoherent ? "incoherent" : "COHERENT",
                  behavioral ? "yes" : "no", report.max_increase,
                  report.max_selective_increase,
                  report.vacuous ? " (audit vacuous)" : "");
    out << buf;
    if (!diag.incoherent) failures.push_back(item.name);
    if (diag.incoherent != item.expected_incoherent) as_expected = false;
    if (diag.incoherent &&
        (report.violations > 0 || report.selective_violations > 0 || !behavioral))
      as_expected = false;
  }
  out << "structural failures:";
  for (const auto& f : failures) out << ' ' << f;
  out << '\n';

  const Gate cz = gates::cz_132(QubitIndex{1}, QubitIndex{2}, QubitIndex{3});
  const PureState image = apply(cz, PureState::product("010"));
  out << "CZ_(13)2 |0>|1>|0> = " << amplitudes(image) << '\n';
  out << (as_expected ? "OK: CZ_(13)2 is the only non-incoherent operation\n"
                      : "UNEXPECTED audit result\n");
  return as_expected ? 0 : 1;
}

int run_sweep_command(const std::string& theta, const std::string& theta_grid,
                      const std::string& e_grid, const std::string& d_grid,
                      const std::string& placement, const std::string& path,
                      std::ostream& out) {
  SweepConfig config;
  config.theta_grid = parse_grid(theta_grid.empty() ? theta : theta_grid);
  config.e_grid = parse_grid(e_grid);
  config.d_grid = parse_grid(d_grid);
  config.output_path = path;
  if (placement != "averaged") {
    int q = 0;
    const char* first = placement.data() + 1;
    const char* last = placement.data() + placement.size();
    const auto [end, ec] = std::from_chars(first, last, q);
    if (placement.size() < 2 || placement[0] != 'q' || ec != std::errc{} ||
        end != last || q < 1 || q > codes::layout::kQubits)
      throw CLI::ValidationError("--placement", "expected averaged or q<1..9>");
    config.placement = channels::Placement::kFixed;
    config.fixed_position = QubitIndex{q};
  }
  const auto records = run_sweep(config);
  emit_csv(records, config.output_path);
  out << "wrote " << records.size() << " records to " << config.output_path
      << '\n';
  return 0;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Coherence-resource quantum error correction simulator", "cohqec"};
  app.require_subcommand(1);

  std::string demo_code, demo_error = "Z2";
  double demo_theta = std::numbers::pi / 3, demo_a = 1 / std::sqrt(2.0),
         demo_b = 1 / std::sqrt(2.0);
  auto* demo = app.add_subcommand("demo", "walk through the two- or three-qubit code");
  demo->add_option("code", demo_code, "two | three")
      ->required()
      ->check(CLI::IsMember({"two", "three"}));
  demo->add_option("--error", demo_error, "none | Z<q> | S<q> (a 1 + b Z_q)");
  demo->add_option("--theta", demo_theta, "data state polar angle");
  demo->add_option("--a", demo_a, "identity amplitude of S<q>");
  demo->add_option("--b", demo_b, "Z amplitude of S<q>");

  std::string table_which;
  auto* table = app.add_subcommand("table", "print and verify an error table");
  table->add_option("code", table_which, "three | nine")
      ->required()
      ->check(CLI::IsMember({"three", "nine"}));

  auto* check = app.add_subcommand("check", "incoherence audit of every protocol operation");

  std::string theta = "pi/4", theta_grid, e_grid = "0:1:21", d_grid = "0:1:21",
              placement = "averaged", path;
  auto* sweep = app.add_subcommand("sweep", "nine-qubit fidelity sweep to CSV");
  sweep->add_option("--theta", theta, "single theta value (pi allowed)");
  sweep->add_option("--theta-grid", theta_grid, "start:stop:count");
  sweep->add_option("--e-grid", e_grid, "start:stop:count");
  sweep->add_option("--d-grid", d_grid, "start:stop:count");
  sweep->add_option("--placement", placement, "averaged | q<1..9>");
  sweep->add_option("--out", path, "output CSV path")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (demo->parsed())
      return run_demo(demo_code, demo_error, demo_theta, demo_a, demo_b, out);
    if (table->parsed()) return run_table(table_which, out);
    if (check->parsed()) return run_check(out);
    if (sweep->parsed())
      return run_sweep_command(theta, theta_grid, e_grid, d_grid, placement,
                               path, out);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace cohqec::experiments
