// Copyright 2026 The ionc Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include "ionc/formats.hpp"
#include "ionc/gatelib.hpp"

namespace ionc {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDiag = 1;
constexpr int kExitVerify = 2;

// Errors that should surface as "path:line:col: msg".
struct FileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError(path + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FileError(path + ": cannot write");
  out << text;
}

template <class F>
auto with_path(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw FileError(path + ":" + e.what());
  }
}

double tolerance() {
  if (const char* s = std::getenv("ION_COMPILE_TOL")) {
    char* end = nullptr;
    const double t = std::strtod(s, &end);
    if (end && *end == '\0' && t > 0) return t;
    throw FileError(std::string("ION_COMPILE_TOL: not a positive number: ") + s);
  }
  return 1e-8;
}

MachineConfig load_machine(const std::string& path) {
  if (path.empty()) return default_machine();
  return with_path(path, [&] { return parse_machine(read_file(path)); });
}

RewritePlan parse_objective(const std::string& s, const std::string& rx) {
  RewritePlan plan;
  if (s == "time") {
    plan.objective = Objective::time;
  } else if (s == "error") {
    plan.objective = Objective::error;
  } else if (s.rfind("balanced", 0) == 0) {
    plan.objective = Objective::balanced;
    if (s.size() > 8) {
      if (s[8] != '=') throw FileError("--objective: expected balanced=<lambda>");
      char* end = nullptr;
      plan.lambda = std::strtod(s.c_str() + 9, &end);
      if (!end || *end != '\0' || !(plan.lambda >= 0 && plan.lambda <= 1)) throw FileError("--objective: lambda must lie in [0, 1]");
    }
  } else {
    throw FileError("--objective: expected time, error or balanced=<lambda>");
  }
  if (rx == "left") plan.rx_direction = RxDirection::left;
  else if (rx == "right") plan.rx_direction = RxDirection::right;
  else throw FileError("--rx-direction: expected left or right");
  return plan;
}

// A file is a schedule when every gate is a native pulse.
Program load_program(const std::string& path, const std::string& text) {
  Program p;
  p.circuit = with_path(path, [&] { return parse_circuit(text); });
  const bool physical = std::all_of(p.circuit.gates.begin(), p.circuit.gates.end(), [](const Gate& g) { return g.is_physical(); });
  if (physical && !p.circuit.gates.empty()) p = with_path(path, [&] { return parse_schedule(text); });
  if (p.mapping.empty()) {
    p.mapping.resize(static_cast<std::size_t>(p.circuit.n));
    std::iota(p.mapping.begin(), p.mapping.end(), 0);
  }
  if (p.perm.empty()) {
    p.perm.resize(p.mapping.size());
    std::iota(p.perm.begin(), p.perm.end(), 0);
  }
  return p;
}

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

int run_compile(const std::string& in, const std::string& machine, const std::string& objective, const std::string& rx,
                bool no_verify, const std::string& sched_out, const std::string& report_out, const std::string& format,
                const std::vector<int>& ions, const std::vector<int>& clean) {
  const MachineConfig m = load_machine(machine);
  const Circuit c = with_path(in, [&] { return parse_circuit(read_file(in)); });
  CompileOptions opt;
  opt.plan = parse_objective(objective, rx);
  opt.verify = !no_verify;
  opt.tol = tolerance();
  opt.clean_ancillas = clean;
  if (!ions.empty()) {
    std::vector<int> z;
    for (int i : ions) z.push_back(i - 1);
    opt.forced_mapping = z;
  }
  if (format != "text" && format != "structured") throw FileError("--format: expected text or structured");

  CompileResult r = compile(c, m, opt);
  r.report.name = in.substr(in.find_last_of('/') == std::string::npos ? 0 : in.find_last_of('/') + 1);
  const std::string sched = emit_schedule(r.program, &m);
  const std::string rep = emit_report(r.report, format == "structured" ? ReportFormat::structured : ReportFormat::text);
  if (sched_out.empty()) std::cout << sched;
  else write_file(sched_out, sched);
  if (report_out.empty()) std::cout << rep;
  else write_file(report_out, rep);
  return kExitOk;
}

int run_verify(const std::string& logical, const std::string& schedule, const std::vector<int>& clean) {
  const Circuit c = with_path(logical, [&] { return parse_circuit(read_file(logical)); });
  const std::string text = read_file(schedule);
  Program p = with_path(schedule, [&] { return parse_schedule(text); });
  if (p.mapping.empty()) {
    if (p.circuit.n < c.n) throw FileError(schedule + ": schedule is narrower than the logical circuit");
    p.mapping.resize(static_cast<std::size_t>(c.n));
    std::iota(p.mapping.begin(), p.mapping.end(), 0);
  }
  const Verdict v = verify(c, p, tolerance(), clean);
  std::cout << "verified: " << v.str() << "\n";
  if (v.status == Verdict::Status::no) return kExitVerify;
  return kExitOk;
}

int run_simulate(const std::string& in, const std::string& state, bool probs, const std::vector<int>& keep) {
  const Program p = load_program(in, read_file(in));
  const int n = p.circuit.n;
  const int k = static_cast<int>(p.mapping.size());
  if (n > kMaxDenseQubits) throw FileError(in + ": " + std::to_string(n) + " qubits exceeds the simulation limit");

  // Logical input bits go onto their ions; other ions start in |0>.
  std::uint64_t index = 0;
  if (!state.empty()) {
    if (static_cast<int>(state.size()) != k || state.find_first_not_of("01") != std::string::npos)
      throw FileError("--state: expected " + std::to_string(k) + " binary digits");
    for (int q = 0; q < k; ++q)
      if (state[static_cast<std::size_t>(q)] == '1') index |= std::uint64_t{1} << (n - 1 - p.mapping[static_cast<std::size_t>(q)]);
  }
  const StateVector out = simulate(expand_oracles(p.circuit), basis_state(n, index));

  std::vector<int> shown = keep;
  if (shown.empty()) {
    shown.resize(static_cast<std::size_t>(k));
    std::iota(shown.begin(), shown.end(), 0);
  }
  for (int q : shown)
    if (q < 0 || q >= k) throw FileError("--qubits: qubit " + std::to_string(q) + " out of range");

  // Logical output q sits on ion mapping[perm[q]].
  auto label = [&](Eigen::Index idx) {
    std::string s;
    for (int q : shown) {
      const int ion = p.mapping[static_cast<std::size_t>(p.perm[static_cast<std::size_t>(q)])];
      s += ((static_cast<std::uint64_t>(idx) >> (n - 1 - ion)) & 1U) ? '1' : '0';
    }
    return s;
  };

  const bool full = static_cast<int>(shown.size()) == n;
  if (probs || !full) {
    std::map<std::string, double> acc;
    for (Eigen::Index i = 0; i < out.size(); ++i) acc[label(i)] += std::norm(out[i]);
    for (const auto& [lab, pr] : acc)
      if (pr > 1e-12) std::cout << lab << ' ' << fmt("%.9f", pr) << "\n";
    return kExitOk;
  }
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    if (std::abs(out[i]) <= 1e-12) continue;
    std::cout << label(i) << ' ' << fmt("%+.9f", out[i].real()) << ' ' << fmt("%+.9f", out[i].imag()) << "i\n";
  }
  return kExitOk;
}

int run_bench(const std::string& which, const std::string& machine) {
  const MachineConfig m = load_machine(machine);
  std::vector<BenchRow> rows;
  for (const BenchRow& r : bench_table())
    if (which == "all" || r.name == which) rows.push_back(r);
  if (rows.empty()) throw FileError("bench: unknown benchmark '" + which + "'");
  int failed = 0;
  for (const BenchRow& r : rows) {
    const BenchOutcome o = ionc::run_bench(r, m);
    const CompilationReport& rep = o.result.report;
    std::cout << (o.pass ? "PASS " : "FAIL ") << r.name << ": " << rep.n_logical << " qubits, " << rep.pulses_1q << "/" << rep.pulses_2q
              << " (1q/2q), " << fmt("%.6g", rep.cost.duration) << " μs\n";
    std::cout << "  e1: " << rep.cost.e1.render_e1() << "\n";
    for (const std::string& note : o.notes) std::cout << "  " << note << "\n";
    if (!o.pass) ++failed;
  }
  std::cout << (rows.size() - static_cast<std::size_t>(failed)) << "/" << rows.size() << " passed\n";
  return failed ? kExitDiag : kExitOk;
}

int run_lemma_bounds(const std::string& in, const std::string& machine, const std::string& objective) {
  const MachineConfig m = load_machine(machine);
  const Circuit c = with_path(in, [&] { return parse_circuit(read_file(in)); });
  CompileOptions opt;
  opt.plan = parse_objective(objective, "left");
  opt.tol = tolerance();
  const CompileResult r = compile(c, m, opt);
  const CompilationReport& rep = r.report;
  const Lemma1Bound b = lemma1_bound(c.n, rep.pulses_2q, m.tau1q);
  std::cout << "n = " << c.n << ", G = " << rep.pulses_2q << "\n";
  std::cout << "single-qubit pulses: " << rep.pulses_1q << " <= " << b.gate_bound << (rep.lemma1_ok ? " ok" : " VIOLATED") << "\n";
  std::cout << "total gates: " << rep.pulses_1q + rep.pulses_2q << " <= " << b.total_bound << "\n";
  std::cout << "single-qubit time: " << fmt("%.6g", b.time_bound) << " us, error: " << b.error_bound << " epsilon\n";
  if (rep.lemma3_checked)
    std::cout << "RX-form pulses: " << rep.rx_form << (rep.lemma3_ok ? " ok" : " VIOLATED") << "\n";
  return rep.lemma1_ok && rep.lemma3_ok ? kExitOk : kExitDiag;
}

}  // namespace

int cli_main(int argc, char** argv) {
  CLI::App app{"trapped-ion circuit compiler"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "ionc 0.1.0");

  std::string in, machine, objective = "time", rx = "left", sched_out, report_out, format = "text";
  bool no_verify = false;
  std::vector<int> ions, clean;
  auto* cc = app.add_subcommand("compile", "compile a logical circuit to a pulse schedule");
  cc->add_option("circuit", in, "logical circuit file")->required();
  cc->add_option("--machine", machine, "machine config (default: built-in 5-ion machine)");
  cc->add_option("--objective", objective, "time, error or balanced=<lambda>");
  cc->add_option("--rx-direction", rx, "side RX pulses are pushed to: left or right");
  cc->add_flag("--no-verify", no_verify, "skip unitary verification");
  cc->add_option("--schedule", sched_out, "write the schedule here instead of stdout");
  cc->add_option("--report", report_out, "write the report here instead of stdout");
  cc->add_option("--format", format, "report format: text or structured");
  cc->add_option("--mapping", ions, "ion for each logical qubit, numbered from 1");
  cc->add_option("--clean-ancilla", clean, "qubits that start and end in |0>");

  std::string logical, schedule;
  std::vector<int> vclean;
  auto* vc = app.add_subcommand("verify", "check a schedule against a logical circuit");
  vc->add_option("logical", logical)->required();
  vc->add_option("schedule", schedule)->required();
  vc->add_option("--clean-ancilla", vclean, "qubits that start and end in |0>");

  std::string sim_in, state;
  bool probs = false;
  std::vector<int> keep;
  auto* sc = app.add_subcommand("simulate", "run a circuit or schedule on a basis state");
  sc->add_option("circuit", sim_in)->required();
  sc->add_option("--state", state, "input bits, one per logical qubit");
  sc->add_flag("--probs", probs, "print outcome probabilities");
  sc->add_option("--qubits", keep, "logical qubits to report (marginal)");

  std::string which = "all", bench_machine;
  auto* bc = app.add_subcommand("bench", "compile the bundled benchmarks and compare with expected figures");
  bc->add_option("name", which, "benchmark name or all");
  bc->add_option("--machine", bench_machine);

  std::string lb_in, lb_machine, lb_objective = "error";
  auto* lc = app.add_subcommand("lemma-bounds", "compile and check the pulse-count bounds");
  lc->add_option("circuit", lb_in)->required();
  lc->add_option("--machine", lb_machine);
  lc->add_option("--objective", lb_objective);

  std::string ex_name;
  auto* ec = app.add_subcommand("export", "print a bundled benchmark as a logical circuit");
  ec->add_option("name", ex_name)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitDiag;
  }

  try {
    if (*cc) return run_compile(in, machine, objective, rx, no_verify, sched_out, report_out, format, ions, clean);
    if (*vc) return run_verify(logical, schedule, vclean);
    if (*sc) return run_simulate(sim_in, state, probs, keep);
    if (*bc) return run_bench(which, bench_machine);
    if (*lc) return run_lemma_bounds(lb_in, lb_machine, lb_objective);
    if (*ec) {
      std::cout << emit_circuit(build_benchmark(ex_name));
      return kExitOk;
    }
  } catch (const VerificationError& e) {
    std::cerr << "error: verification failed: " << e.what() << "\n";
    return kExitVerify;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDiag;
  }
  return kExitDiag;
}

}  // namespace ionc
