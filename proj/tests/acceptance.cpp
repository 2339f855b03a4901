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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <unsupported/Eigen/MatrixFunctions>

#include "ionc/formats.hpp"
#include "ionc/gatelib.hpp"
#include "ionc/pipeline.hpp"

namespace ionc {
namespace {

const cplx I{0.0, 1.0};
const char* kBits[] = {"000", "001", "010", "011", "100", "101", "110", "111"};

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

ComplexMatrix pauli(char p) {
  ComplexMatrix m(2, 2);
  if (p == 'X') m << 0, 1, 1, 0;
  if (p == 'Y') m << 0, -I, I, 0;
  if (p == 'Z') m << 1, 0, 0, -1;
  return m;
}

ComplexMatrix r_ref(double theta, double phi) {
  return (-I * (theta / 2) * (std::cos(phi) * pauli('X') + std::sin(phi) * pauli('Y'))).exp();
}

ComplexMatrix rz_ref(double theta) { return (-I * (theta / 2) * pauli('Z')).exp(); }

ComplexMatrix ctrl_ref(const ComplexMatrix& u) {
  ComplexMatrix m = ComplexMatrix::Identity(4, 4);
  m.bottomRightCorner(2, 2) = u;
  return m;
}

ComplexMatrix xpow_ref(double a) {
  ComplexMatrix plus(2, 2), minus(2, 2);
  plus << 0.5, 0.5, 0.5, 0.5;
  minus << 0.5, -0.5, -0.5, 0.5;
  return plus + std::exp(I * kPi * a) * minus;
}

ComplexMatrix zpow_ref(double a) {
  ComplexMatrix m = ComplexMatrix::Identity(2, 2);
  m(1, 1) = std::exp(I * kPi * a);
  return m;
}

Check decompositions() {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto eq = [&](const ComplexMatrix& got, const ComplexMatrix& want, const char* what) {
    c.require(equiv_global_phase(got, want, 1e-9), what);
  };
  ComplexMatrix s = ComplexMatrix::Identity(2, 2);
  s(1, 1) = I;
  int checks = 0;
  for (int draw = 0; draw < 200; ++draw) {
    const double th = (2 * u(rng) - 1) * 2 * kPi, x = (2 * u(rng) - 1) * kPi;
    const double a = draw % 10 == 0 ? (draw % 20 == 0 ? 1.0 : -1.0) : 2 * u(rng) - 1;
    eq(dec_rx(th).matrix(), r_ref(th, 0), "rx");
    eq(dec_ry(th).matrix(), r_ref(th, kPi / 2), "ry");
    for (int v : {1, -1}) eq(dec_rz_3pulse(th, v).matrix(), rz_ref(th), "rz 3-pulse");
    eq(dec_rz_2pulse(th, x).matrix(), rz_ref(th), "rz 2-pulse");
    for (int hv : {1, 2}) eq(dec_h(hv).matrix(), (pauli('X') + pauli('Z')) / std::sqrt(2.0), "h");
    const ComplexMatrix w = rz_ref(2 * kPi * u(rng)) * r_ref(2 * kPi * u(rng), kPi / 2) * rz_ref(2 * kPi * u(rng));
    eq(dec_u2(w).matrix(), w, "u2");
    checks += 7;
    for (int sh : {1, -1}) {
      for (int v : {1, -1}) eq(dec_cnot(sh, v).matrix(), ctrl_ref(pauli('X')), "cnot");
      eq(dec_cxpow(a, sh).matrix(), ctrl_ref(xpow_ref(a)), "cxpow");
      for (int hv : {1, 2}) eq(dec_czpow(a, sh, hv).matrix(), ctrl_ref(zpow_ref(a)), "czpow");
      for (int v1 : {1, -1})
        for (int v2 : {1, -1}) {
          eq(dec_cz(sh, v1, v2).matrix(), ctrl_ref(pauli('Z')), "cz");
          eq(dec_cypow(a, sh, v1, v2).matrix(), ctrl_ref(s * xpow_ref(a) * s.adjoint()), "cypow");
          const bool tied = std::abs(std::abs(a) - 1.0) > 1e-12;
          if (!tied || v2 == czpow_sym_partner(a, sh, v1))
            eq(dec_czpow_sym(a, sh, v1, v2).matrix(), ctrl_ref(zpow_ref(a)), "czpow sym");
          checks += 3;
        }
      checks += 5;
    }
  }
  const MachineConfig m = default_machine();
  c.require(equiv_global_phase(circuit_unitary(expand_composites(Circuit(3).add(GateKind::Toffoli, {0, 1, 2}))),
                               circuit_unitary(Circuit(3).add(GateKind::Toffoli, {0, 1, 2})), 1e-9),
            "toffoli");
  c.require(equiv_global_phase(circuit_unitary(dec_toffoli4()),
                               circuit_unitary(Circuit(4).add(GateKind::Toffoli4, {0, 1, 2, 3})), 1e-9),
            "toffoli4");
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.require(secs < 10, "runtime over 10 s");
  std::ostringstream d;
  d << checks << " equivalences, 200 draws, all sign choices, " << std::fixed;
  d.precision(2);
  d << secs << " s";
  if (c.ok) c.detail = d.str();
  (void)m;
  return c;
}

Check templates() {
  Check c;
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-2 * kPi, 2 * kPi);
  int skipped = 0;
  for (int i = 0; i < 10000; ++i) {
    const double a = u(rng), b = u(rng);
    std::pair<double, double> cd;
    try {
      cd = template_cd(a, b);
    } catch (const std::domain_error&) {
      ++skipped;
      continue;
    }
    const ComplexMatrix lhs = r_ref(a, 0) * r_ref(b, kPi / 2) * r_ref(a, 0);
    c.require(equiv_global_phase(lhs * r_ref(cd.first, cd.second - kPi), ComplexMatrix::Identity(2, 2), 1e-9),
              "random draw");
  }
  const auto [c0, d0] = template_cd(kPi / 2, -kPi / 2);
  c.require(std::abs(c0 - kPi) < 1e-12 && std::abs(d0 + kPi / 4) < 1e-12, "instance (pi/2, -pi/2)");
  if (c.ok) c.detail = "10^4 draws (" + std::to_string(skipped) + " degenerate), (pi/2,-pi/2) -> (pi,-pi/4)";
  return c;
}

Check cnot() {
  Check c;
  const CompilationReport r = compile(Circuit(2).add(GateKind::CNOT, {0, 1}), default_machine()).report;
  c.require(r.pulses_2q == 1, "XX count");
  c.require(r.pulses_1q <= 4, "pulse count");
  c.require(std::abs(r.cost.duration - 275.0) < 1e-9, "duration");
  c.require(r.cost.e1.render_e1() == "4 × ε + 1 × E", "ledger " + r.cost.e1.render_e1());
  c.require(r.verification.ok(), "verification");
  if (c.ok) c.detail = std::to_string(r.pulses_1q) + "/1 pulses, 275 us, " + r.cost.e1.render_e1();
  return c;
}

Check toffoli() {
  Check c;
  CompileOptions opt;
  opt.forced_mapping = std::vector<int>{1, 3, 4};
  const Circuit t = Circuit(3).add(GateKind::Toffoli, {0, 1, 2});
  const CompilationReport time = compile(t, default_machine(), opt).report;
  opt.plan.objective = Objective::error;
  const CompilationReport err = compile(t, default_machine(), opt).report;
  c.require(time.pulses_2q == 5 && err.pulses_2q == 5, "XX count");
  c.require(std::abs(time.cost.duration - 1285.0) < 1e-9, "time duration");
  c.require(time.cost.e1.render_e1() == "4 × 0.707107ε + 4 × ε + 3 × 0.707107E + 2 × E", "ledger " + time.cost.e1.render_e1());
  c.require(err.pulses_1q == 9, "error objective pulses " + std::to_string(err.pulses_1q));
  c.require(err.cost.duration <= 1295.0 + 1e-9, "error objective duration");
  c.require(time.verification.ok() && err.verification.ok(), "verification");
  if (c.ok) {
    std::ostringstream d;
    d << "time 10/5 1285 us; error " << err.pulses_1q << "/5 " << err.cost.duration << " us";
    c.detail = d.str();
  }
  return c;
}

Check bounds() {
  Check c;
  const MachineConfig m = default_machine();
  const Lemma1Bound q5 = lemma1_bound(5, 10, m.tau1q);
  c.require(q5.total_bound == 60, "QFT5 instance total bound " + std::to_string(q5.total_bound));
  int compiled = 0;
  std::vector<std::string> over;
  bool regions_ok = true;
  for (const BenchRow& row : bench_table()) {
    for (Objective o : {Objective::time, Objective::error}) {
      BenchRow r = row;
      r.plan.objective = o;
      const BenchOutcome out = run_bench(r, m);
      const CompilationReport& rep = out.result.report;
      const Lemma1Bound b = lemma1_bound(rep.n_logical, rep.pulses_2q, m.tau1q);
      c.require(rep.pulses_1q <= b.gate_bound, row.name + " exceeds 2(n+2G)");
      if (o == Objective::error && rep.rx_form > rep.n_logical) {
        over.push_back(row.name + " " + std::to_string(rep.rx_form) + ">" + std::to_string(rep.n_logical));
        regions_ok = regions_ok && rep.lemma3_ok;
      }
      ++compiled;
    }
  }
  if (!over.empty()) {
    // Oracle boundaries stop RX pulses from gathering, so each optimized region keeps its own.
    std::string list;
    for (const std::string& s : over) list += (list.empty() ? "" : ", ") + s;
    c.ok = false;
    c.detail = "RX-form > n on " + std::to_string(over.size()) + " oracle benchmarks (" + list + "); " +
               (regions_ok ? "every row is within n per black-box-separated region" : "some row exceeds n per region") +
               "; 2(n+2G) holds on all " + std::to_string(compiled) + " compilations";
  }
  if (c.ok) c.detail = std::to_string(compiled) + " compilations within 2(n+2G) and RX-form <= n; QFT5 bound 60";
  return c;
}

bool qft_matches(const Program& p, int n) {
  std::vector<int> back(static_cast<std::size_t>(p.circuit.n), -1);
  for (int q = 0; q < n; ++q) back[static_cast<std::size_t>(p.mapping[static_cast<std::size_t>(q)])] = q;
  Circuit local(n);
  for (Gate g : p.circuit.gates) {
    for (int& q : g.qubits) q = back[static_cast<std::size_t>(q)];
    local.add(g);
  }
  const ComplexMatrix u = circuit_unitary(local);
  // Logical output q is read from wire perm[q].
  const Eigen::Index dim = u.rows();
  ComplexMatrix g(dim, dim);
  for (Eigen::Index x = 0; x < dim; ++x) {
    Eigen::Index y = 0;
    for (int q = 0; q < n; ++q)
      if ((x >> (n - 1 - p.perm[static_cast<std::size_t>(q)])) & 1) y |= Eigen::Index{1} << (n - 1 - q);
    g.row(y) = u.row(x);
  }
  return equiv_global_phase(g, qft_matrix(n), 1e-9);
}

Check qft() {
  Check c;
  std::ostringstream d;
  const struct {
    int n, xx, q1;
    double dur;
  } rows[] = {{5, 10, 22, 2669}, {4, 6, 13, 1582}};
  for (const auto& row : rows) {
    const CompileResult r = compile(qft_circuit(row.n), default_machine());
    const CompilationReport& rep = r.report;
    const std::string tag = "QFT" + std::to_string(row.n);
    c.require(rep.pulses_2q == row.xx, tag + " XX count");
    c.require(rep.pulses_1q <= row.q1, tag + " pulse count");
    c.require(rep.cost.duration <= row.dur + 1e-9, tag + " duration");
    c.require(qft_matches(r.program, row.n), tag + " unitary");
    d << tag << " " << rep.pulses_1q << "/" << rep.pulses_2q << " " << rep.cost.duration << " us";
    if (rep.pulses_1q < row.q1) d << " (below " << row.q1 << ")";
    d << "; ";
  }
  if (c.ok) c.detail = d.str() + "bit reversal recorded";
  return c;
}

Check toffoli4() {
  Check c;
  const MachineConfig m = default_machine();
  const CompilationReport plain = compile(build_benchmark("toffoli4"), m).report;
  CompileOptions opt;
  opt.clean_ancillas = {4};
  const CompilationReport anc = compile(build_benchmark("toffoli4-anc"), m, opt).report;
  c.require(plain.verification.ok() && anc.verification.ok(), "verification");
  c.require(plain.pulses_2q <= 14, "XX count " + std::to_string(plain.pulses_2q));
  if (c.ok)
    c.detail = std::to_string(plain.pulses_2q) + " XX; 11-XX target " + (plain.pulses_2q <= 11 ? "met" : "not met") +
               " without ancilla, " + (anc.pulses_2q <= 11 ? "met" : "not met") + " with a clean ancilla (" +
               std::to_string(anc.pulses_2q) + " XX)";
  return c;
}

Check grover() {
  Check c;
  const MachineConfig m = default_machine();
  double worst = 0;
  for (const char* s : kBits) {
    CompileOptions opt;
    opt.clean_ancillas = {4};
    const CompileResult r = compile(grover_bitflip({s}), m, opt);
    const StateVector out = simulate(r.program.circuit, basis_state(m.n, 0));
    const int want = std::stoi(s, nullptr, 2);
    double p = 0;
    for (Eigen::Index i = 0; i < out.size(); ++i) {
      int x = 0;
      for (int q = 0; q < 3; ++q)
        if ((i >> (m.n - 1 - r.program.mapping[static_cast<std::size_t>(q)])) & 1) x |= 1 << (2 - q);
      if (x == want) p += std::norm(out[i]);
    }
    worst = std::max(worst, std::abs(p - 0.78125));
  }
  c.require(worst <= 1e-9, "marked probability off by " + std::to_string(worst));
  int lo = 99, hi = 0;
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) {
      const int xx = compile(grover_phase({kBits[i], kBits[j]}), m).report.pulses_2q;
      lo = std::min(lo, xx);
      hi = std::max(hi, xx);
    }
  c.require(lo >= 6 && hi <= 8, "phase-oracle XX range " + std::to_string(lo) + ".." + std::to_string(hi));
  std::string table;
  for (const char* name : {"grover-011-111", "grover-011-101", "grover-010-100", "grover-000-111"}) {
    for (const BenchRow& row : bench_table())
      if (row.name == name) {
        const BenchOutcome o = run_bench(row, m);
        c.require(o.pass, std::string(name) + " above published XX count");
        table += std::to_string(o.result.report.pulses_2q) + "/";
      }
  }
  table.pop_back();
  if (c.ok)
    c.detail = "P(marked) = 0.78125 for all 8 items; phase 2-of-8 XX " + std::to_string(lo) + ".." + std::to_string(hi) +
               " over 28 pairs; table rows " + table + " XX";
  return c;
}

Check zcz() {
  Check c;
  std::mt19937_64 rng(3);
  const MachineConfig m = default_machine();
  auto pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
  const GateKind diag[] = {GateKind::Z, GateKind::S, GateKind::Sdg, GateKind::T, GateKind::Tdg, GateKind::RZ};
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + pick(4);
    Circuit circ(n);
    const int len = 1 + pick(10);
    for (int i = 0; i < len; ++i) {
      if (n >= 2 && pick(2) == 0) {
        const int a = pick(n);
        int b = pick(n - 1);
        if (b >= a) ++b;
        circ.add(GateKind::CZ, {a, b});
      } else {
        const GateKind k = diag[pick(6)];
        std::vector<double> ps;
        if (k == GateKind::RZ) ps.push_back(std::uniform_real_distribution<double>(-kPi, kPi)(rng));
        circ.add(k, {pick(n)}, ps);
      }
    }
    int cz = 0;
    std::vector<bool> active(static_cast<std::size_t>(n), false);
    for (const Gate& g : circ.gates) {
      cz += g.kind == GateKind::CZ;
      for (int q : g.qubits) active[static_cast<std::size_t>(q)] = true;
    }
    const int n_active = static_cast<int>(std::count(active.begin(), active.end(), true));
    std::vector<int> ident(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) ident[static_cast<std::size_t>(q)] = q;
    CompileOptions generic;
    generic.forced_mapping = ident;
    generic.zcz_fast_path = false;
    const CompileResult slow = compile(circ, m, generic);
    Circuit wide(m.n);
    wide.gates = circ.gates;
    const Circuit fast = compile_zcz(wide, std::vector<int>(static_cast<std::size_t>(m.n), 1), m).circuit();
    c.require(equiv_global_phase(circuit_unitary(fast), circuit_unitary(slow.program.circuit), 1e-9),
              "trial " + std::to_string(trial) + " not equivalent");
    c.require(count_2q(fast) == cz, "trial " + std::to_string(trial) + " XX count");
    c.require(count_1q(fast) <= 2 * n + n_active, "trial " + std::to_string(trial) + " pulse count");
  }
  if (c.ok) c.detail = "100 random Z/CZ circuits match the generic pipeline";
  return c;
}

std::string run_cli(const std::string& args, int& code) {
  std::string out;
  FILE* p = popen(("'" IONC_CLI "' " + args + " 2>&1").c_str(), "r");
  if (!p) {
    code = -1;
    return out;
  }
  std::array<char, 4096> buf;
  for (std::size_t n; (n = std::fread(buf.data(), 1, buf.size(), p)) > 0;) out.append(buf.data(), n);
  const int st = pclose(p);
  code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return out;
}

Check round_trip() {
  Check c;
  const MachineConfig m = default_machine();
  int n = 0;
  for (const BenchRow& row : bench_table()) {
    const CompileResult r = run_bench(row, m).result;
    const std::string text = emit_schedule(r.program, &m);
    const Program back = parse_schedule(text);
    c.require(back.mapping == r.program.mapping && back.perm == r.program.perm, row.name + " metadata");
    c.require(max_abs_diff(circuit_unitary(back.circuit), circuit_unitary(r.program.circuit)) <= 1e-9,
              row.name + " unitary");
    ++n;
  }
  int c1 = 0, c2 = 0;
  const std::string a = run_cli("bench all", c1), b = run_cli("bench all", c2);
  c.require(c1 == 0 && c2 == 0, "bench all exit code");
  c.require(!a.empty() && a == b, "bench all output differs between runs");
  if (c.ok) c.detail = std::to_string(n) + " schedules round-trip at 1e-9; bench all byte-identical (" + std::to_string(a.size()) + " bytes)";
  return c;
}

}  // namespace
}  // namespace ionc

int main() {
  using namespace ionc;
  const std::pair<const char*, std::function<Check()>> criteria[] = {
      {"decomposition equivalence", decompositions},
      {"template formulas", templates},
      {"CNOT cost", cnot},
      {"Toffoli objectives", toffoli},
      {"pulse-count bounds", bounds},
      {"QFT", qft},
      {"Toffoli-4", toffoli4},
      {"Grover", grover},
      {"Z/CZ fast path", zcz},
      {"round trip and determinism", round_trip},
  };
  int failed = 0, i = 0;
  for (const auto& [name, fn] : criteria) {
    ++i;
    Check c;
    try {
      c = fn();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = std::string("exception: ") + e.what();
    }
    failed += !c.ok;
    std::printf("%s %2d %s: %s\n", c.ok ? "PASS" : "FAIL", i, name, c.detail.c_str());
  }
  std::printf("%d/%d criteria passed\n", i - failed, i);
  return failed ? 1 : 0;
}
