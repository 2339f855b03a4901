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

#include "ionc/formats.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <map>
#include <memory>
#include <set>
#include <sstream>

namespace ionc {

ParseError::ParseError(int line, int column, const std::string& msg)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg), line_(line), column_(column) {}

namespace {

struct Token {
  std::string text;
  int column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t end = line.find('#') == std::string::npos ? line.size() : line.find('#');
  while (i < end) {
    while (i < end && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= end) break;
    const std::size_t start = i;
    while (i < end && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '=') ++i;
    if (i == start) {  // a lone '='
      out.push_back({"=", static_cast<int>(start) + 1});
      ++i;
      continue;
    }
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::stringstream ss(text);
  for (std::string l; std::getline(ss, l);) {
    if (!l.empty() && l.back() == '\r') l.pop_back();
    lines.push_back(l);
  }
  return lines;
}

bool parse_double(const std::string& s, double& out) {
  if (s.empty()) return false;
  char* endp = nullptr;
  out = std::strtod(s.c_str(), &endp);
  return endp && *endp == '\0' && std::isfinite(out);
}

int parse_int(const Token& t, int line) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(t.text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != t.text.size() || t.text.empty()) throw ParseError(line, t.column, "expected an integer, got '" + t.text + "'");
  return v;
}

// Plain number or p/q fraction, used for controlled-root powers.
double parse_alpha(const Token& t, int line) {
  double v = 0;
  if (parse_double(t.text, v)) return v;
  const auto slash = t.text.find('/');
  double p = 0, q = 0;
  if (slash != std::string::npos && parse_double(t.text.substr(0, slash), p) && parse_double(t.text.substr(slash + 1), q) && q != 0)
    return p / q;
  throw ParseError(line, t.column, "expected a number, got '" + t.text + "'");
}

double angle_token(const Token& t, int line) {
  try {
    return parse_angle(t.text);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line, t.column, e.what());
  }
}

struct Parsed {
  Circuit circuit;
  std::optional<std::vector<int>> map;
  std::optional<std::vector<int>> perm;
};

Parsed parse_text(const std::string& text) {
  Parsed out;
  bool have_n = false;
  std::map<std::string, std::shared_ptr<Circuit>> bodies;
  std::shared_ptr<Circuit> block;  // oracle body being defined
  std::string block_tag;
  int block_line = 0;
  const auto lines = split_lines(text);

  for (std::size_t li = 0; li < lines.size(); ++li) {
    const int ln = static_cast<int>(li) + 1;
    const auto toks = tokenize(lines[li]);
    if (toks.empty()) continue;
    const std::string head = toks[0].text;
    std::string low = head;
    for (char& ch : low) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));

    if (low == "qubits") {
      if (have_n) throw ParseError(ln, toks[0].column, "qubit count given twice");
      if (toks.size() != 2) throw ParseError(ln, toks[0].column, "usage: qubits N");
      const int n = parse_int(toks[1], ln);
      if (n < 1 || n > 64) throw ParseError(ln, toks[1].column, "qubit count must be between 1 and 64");
      out.circuit = Circuit(n);
      have_n = true;
      continue;
    }
    if (low == "map" || low == "perm") {
      std::vector<int> v;
      for (std::size_t k = 1; k < toks.size(); ++k) v.push_back(parse_int(toks[k], ln));
      (low == "map" ? out.map : out.perm) = v;
      continue;
    }
    if (low == "begin") {
      if (block) throw ParseError(ln, toks[0].column, "nested oracle definition");
      if (toks.size() != 3) throw ParseError(ln, toks[0].column, "usage: begin <tag> <arity>");
      const int k = parse_int(toks[2], ln);
      if (k < 1) throw ParseError(ln, toks[2].column, "oracle arity must be positive");
      if (bodies.count(toks[1].text)) throw ParseError(ln, toks[1].column, "oracle '" + toks[1].text + "' defined twice");
      block = std::make_shared<Circuit>(k);
      block_tag = toks[1].text;
      block_line = ln;
      continue;
    }
    if (low == "end") {
      if (!block) throw ParseError(ln, toks[0].column, "'end' without 'begin'");
      bodies[block_tag] = block;
      block.reset();
      continue;
    }

    Circuit* target = block ? block.get() : &out.circuit;
    if (!block && !have_n) throw ParseError(ln, toks[0].column, "'qubits N' must come before the first gate");

    const auto kind = kind_from_mnemonic(head);
    if (!kind) throw ParseError(ln, toks[0].column, "unknown mnemonic '" + head + "'");

    if (*kind == GateKind::Oracle) {
      if (toks.size() < 3) throw ParseError(ln, toks[0].column, "usage: oracle <tag> <qubit>...");
      auto it = bodies.find(toks[1].text);
      if (it == bodies.end()) throw ParseError(ln, toks[1].column, "undefined oracle '" + toks[1].text + "'");
      std::vector<int> qs;
      for (std::size_t k = 2; k < toks.size(); ++k) {
        const int q = parse_int(toks[k], ln);
        if (q < 0 || q >= target->n) throw ParseError(ln, toks[k].column, "qubit " + toks[k].text + " out of range");
        qs.push_back(q);
      }
      if (static_cast<int>(qs.size()) != it->second->n)
        throw ParseError(ln, toks[0].column, "oracle '" + toks[1].text + "' takes " + std::to_string(it->second->n) + " qubits");
      target->add(Gate::oracle(toks[1].text, qs, it->second));
      continue;
    }

    const int ar = arity(*kind), np = param_count(*kind);
    if (static_cast<int>(toks.size()) != 1 + ar + np)
      throw ParseError(ln, toks[0].column,
                       std::string(mnemonic(*kind)) + " takes " + std::to_string(ar) + " qubit(s) and " + std::to_string(np) + " parameter(s)");
    std::vector<int> qs;
    std::set<int> seen;
    for (int k = 0; k < ar; ++k) {
      const Token& t = toks[static_cast<std::size_t>(1 + k)];
      const int q = parse_int(t, ln);
      if (q < 0 || q >= target->n) throw ParseError(ln, t.column, "qubit " + t.text + " out of range");
      if (!seen.insert(q).second) throw ParseError(ln, t.column, "qubit " + t.text + " repeated");
      qs.push_back(q);
    }
    std::vector<double> ps;
    const bool is_power = *kind == GateKind::CXpow || *kind == GateKind::CYpow || *kind == GateKind::CZpow;
    for (int k = 0; k < np; ++k) {
      const Token& t = toks[static_cast<std::size_t>(1 + ar + k)];
      ps.push_back(is_power ? parse_alpha(t, ln) : angle_token(t, ln));
    }
    target->add(*kind, qs, ps);
  }
  if (block) throw ParseError(block_line, 1, "oracle '" + block_tag + "' is missing 'end'");
  if (!have_n) throw ParseError(static_cast<int>(lines.size()) + 1, 1, "missing 'qubits N'");
  return out;
}

std::string fmt_us(double d) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", d);
  std::string s = buf;
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

std::string fmt_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

std::string join_ints(const std::vector<int>& v, int offset = 0) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(v[i] + offset);
  }
  return s;
}

}  // namespace

double parse_angle(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (s.empty()) throw std::invalid_argument("empty angle");
  double v = 0;
  if (parse_double(s, v)) return v;

  const auto pi = s.find("pi");
  if (pi == std::string::npos) throw std::invalid_argument("bad angle '" + text + "'");
  std::string coef = s.substr(0, pi);
  std::string rest = s.substr(pi + 2);
  double c = 1;
  if (coef == "-") c = -1;
  else if (coef == "+" || coef.empty()) c = 1;
  else {
    if (coef.back() == '*') coef.pop_back();
    if (!parse_double(coef, c)) throw std::invalid_argument("bad angle '" + text + "'");
  }
  double den = 1;
  if (!rest.empty()) {
    if (rest[0] != '/' || !parse_double(rest.substr(1), den) || den == 0) throw std::invalid_argument("bad angle '" + text + "'");
  }
  return c * kPi / den;
}

Circuit parse_circuit(const std::string& text) { return parse_text(text).circuit; }

namespace {

std::string exact_param(double x, bool angle) {
  if (angle && pi_fraction(x)) return format_angle(x);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void emit_gates(const Circuit& c, std::ostringstream& os, std::set<std::string>& done, std::ostringstream& defs) {
  for (const Gate& g : c.gates) {
    if (g.kind == GateKind::Oracle) {
      if (!g.body) throw std::invalid_argument("emit_circuit: oracle '" + g.tag + "' has no body");
      if (done.insert(g.tag).second) {
        std::ostringstream body;
        emit_gates(*g.body, body, done, defs);
        defs << "begin " << g.tag << ' ' << g.body->n << "\n" << body.str() << "end\n";
      }
      os << "oracle " << g.tag;
      for (int q : g.qubits) os << ' ' << q;
      os << "\n";
      continue;
    }
    const bool is_power = g.kind == GateKind::CXpow || g.kind == GateKind::CYpow || g.kind == GateKind::CZpow;
    os << mnemonic(g.kind);
    for (int q : g.qubits) os << ' ' << q;
    for (double p : g.params) os << ' ' << exact_param(p, !is_power);
    os << "\n";
  }
}

}  // namespace

std::string emit_circuit(const Circuit& c) {
  std::ostringstream body, defs;
  std::set<std::string> done;
  emit_gates(c, body, done, defs);
  return "qubits " + std::to_string(c.n) + "\n" + defs.str() + body.str();
}

MachineConfig parse_machine(const std::string& text) {
  std::map<std::string, double> vals;
  std::string model = "e1";
  std::vector<std::tuple<int, int, int, int>> signs;  // i j s line
  std::vector<std::tuple<int, int, double, int>> pair_e;
  const auto lines = split_lines(text);
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const int ln = static_cast<int>(li) + 1;
    auto toks = tokenize(lines[li]);
    if (toks.empty()) continue;
    const std::string key = toks[0].text;
    if (key == "sign") {
      if (toks.size() != 4) throw ParseError(ln, toks[0].column, "usage: sign i j +|-");
      const int i = parse_int(toks[1], ln), j = parse_int(toks[2], ln);
      const std::string s = toks[3].text;
      if (s != "+" && s != "-" && s != "+1" && s != "-1") throw ParseError(ln, toks[3].column, "sign must be + or -");
      signs.emplace_back(i, j, s[0] == '-' ? -1 : 1, ln);
      continue;
    }
    if (key == "E" && toks.size() == 4) {
      double e = 0;
      if (!parse_double(toks[3].text, e)) throw ParseError(ln, toks[3].column, "expected a number");
      pair_e.emplace_back(parse_int(toks[1], ln), parse_int(toks[2], ln), e, ln);
      continue;
    }
    // key = value or key value
    std::size_t vi = 1;
    if (toks.size() == 3 && toks[1].text == "=") vi = 2;
    else if (toks.size() != 2) throw ParseError(ln, toks[0].column, "expected 'key = value'");
    const Token& vt = toks[vi];
    if (key == "error_model") {
      if (vt.text != "e1" && vt.text != "e2") throw ParseError(ln, vt.column, "error_model must be e1 or e2");
      model = vt.text;
      continue;
    }
    static const std::set<std::string> known = {"n", "tau1q_us", "tau2q_us", "epsilon", "E"};
    if (!known.count(key)) throw ParseError(ln, toks[0].column, "unknown key '" + key + "'");
    double v = 0;
    if (!parse_double(vt.text, v)) throw ParseError(ln, vt.column, "expected a number");
    vals[key] = v;
  }
  for (const char* k : {"n", "tau1q_us", "tau2q_us", "epsilon", "E"})
    if (!vals.count(k)) throw ParseError(static_cast<int>(lines.size()) + 1, 1, std::string("missing key '") + k + "'");
  const int n = static_cast<int>(vals["n"]);
  if (n < 1 || vals["n"] != n) throw ParseError(1, 1, "n must be a positive integer");
  MachineConfig m(n);
  m.tau1q = vals["tau1q_us"];
  m.tau2q = vals["tau2q_us"];
  m.epsilon = vals["epsilon"];
  m.bigE = vals["E"];
  m.error_model = model == "e2" ? ErrorModel::e2 : ErrorModel::e1;
  if (m.tau1q <= 0 || m.tau2q <= 0) throw ParseError(1, 1, "durations must be positive");
  if (m.epsilon < 0 || m.epsilon >= 1 || m.bigE < 0 || m.bigE >= 1) throw ParseError(1, 1, "error magnitudes must lie in [0, 1)");
  for (auto [i, j, s, ln] : signs) {
    if (i < 1 || j < 1 || i > n || j > n || i == j) throw ParseError(ln, 1, "bad ion pair in sign entry");
    m.set_sign(i - 1, j - 1, s);
  }
  for (auto [i, j, e, ln] : pair_e) {
    if (i < 1 || j < 1 || i > n || j > n || i == j) throw ParseError(ln, 1, "bad ion pair in E entry");
    if (e < 0 || e >= 1) throw ParseError(ln, 1, "E must lie in [0, 1)");
    m.pair_error[{std::min(i, j) - 1, std::max(i, j) - 1}] = e;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (m.signs[static_cast<std::size_t>(i) * n + j] == 0)
        throw ParseError(static_cast<int>(lines.size()) + 1, 1, "sign table has no entry for pair " + std::to_string(i + 1) + " " + std::to_string(j + 1));
  return m;
}

std::string emit_machine(const MachineConfig& m) {
  std::ostringstream os;
  os << "# trapped-ion machine; ions are numbered from 1\n";
  os << "n = " << m.n << "\n";
  os << "tau1q_us = " << fmt_us(m.tau1q) << "\n";
  os << "tau2q_us = " << fmt_us(m.tau2q) << "\n";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", m.epsilon);
  os << "epsilon = " << buf << "\n";
  std::snprintf(buf, sizeof buf, "%g", m.bigE);
  os << "E = " << buf << "\n";
  os << "error_model = " << (m.error_model == ErrorModel::e2 ? "e2" : "e1") << "\n";
  for (int i = 0; i < m.n; ++i)
    for (int j = i + 1; j < m.n; ++j) {
      const int s = m.signs[static_cast<std::size_t>(i) * m.n + j];
      if (s) os << "sign " << i + 1 << ' ' << j + 1 << ' ' << (s > 0 ? '+' : '-') << "\n";
    }
  for (const auto& [pr, e] : m.pair_error) {
    std::snprintf(buf, sizeof buf, "%g", e);
    os << "E " << pr.first + 1 << ' ' << pr.second + 1 << ' ' << buf << "\n";
  }
  return os.str();
}

std::string emit_schedule(const Program& p, const MachineConfig* m) {
  const Circuit& c = p.circuit;
  std::ostringstream os;
  os << "# pulse schedule: " << count_1q(c) << " single-qubit, " << count_2q(c) << " two-qubit\n";
  if (m) os << "# duration " << fmt_us(circuit_cost(c, *m).duration) << " us\n";
  os << "qubits " << c.n << "\n";
  for (const Gate& g : c.gates) {
    if (g.kind == GateKind::R) {
      os << "R " << g.qubits[0] << ' ' << format_angle(g.params[0]) << ' ' << format_angle(g.params[1]) << "\n";
    } else if (g.kind == GateKind::XX) {
      os << "XX " << g.qubits[0] << ' ' << g.qubits[1] << ' ' << format_angle(g.params[0]) << "\n";
    } else {
      throw std::invalid_argument(std::string("emit_schedule: non-physical gate ") + mnemonic(g.kind));
    }
  }
  if (!p.mapping.empty()) os << "MAP " << join_ints(p.mapping) << "\n";
  if (!p.perm.empty()) os << "PERM " << join_ints(p.perm) << "\n";
  return os.str();
}

Program parse_schedule(const std::string& text) {
  Parsed ps = parse_text(text);
  Program p;
  p.circuit = ps.circuit;
  for (const Gate& g : p.circuit.gates)
    if (!g.is_physical()) throw ParseError(0, 0, std::string("schedule contains a logical gate: ") + mnemonic(g.kind));
  p.circuit.level = Level::Physical;
  if (ps.map) p.mapping = *ps.map;
  if (ps.perm) p.perm = *ps.perm;
  return p;
}

std::string emit_report(const CompilationReport& rep, ReportFormat fmt) {
  std::ostringstream os;
  const std::string e1 = rep.cost.e1.render_e1();
  const std::string e2 = rep.cost.e2.render_e2();
  if (fmt == ReportFormat::structured) {
    auto kv = [&](const std::string& k, const std::string& v) { os << k << " = " << v << "\n"; };
    kv("name", rep.name.empty() ? "-" : rep.name);
    kv("qubits", std::to_string(rep.n_logical));
    for (const auto& [k, v] : rep.logical_counts) kv("logical." + k, std::to_string(v));
    kv("mapping", join_ints(rep.mapping, 1));
    kv("output_perm", join_ints(rep.output_perm));
    kv("pulses.1q", std::to_string(rep.pulses_1q));
    kv("pulses.2q", std::to_string(rep.pulses_2q));
    kv("pulses.rx_form", std::to_string(rep.rx_form));
    kv("cancellations", std::to_string(rep.cancellations));
    kv("duration_us", fmt_us(rep.cost.duration));
    kv("e1", e1);
    kv("e2", e2);
    kv("fidelity.e1", fmt_real(rep.fidelity_e1));
    kv("fidelity.e2", fmt_real(rep.fidelity_e2));
    kv("lemma1.bound", std::to_string(rep.lemma1_gate_bound));
    kv("lemma1.ok", rep.lemma1_ok ? "true" : "false");
    kv("lemma3.checked", rep.lemma3_checked ? "true" : "false");
    kv("lemma3.ok", rep.lemma3_ok ? "true" : "false");
    kv("zcz_fast_path", rep.zcz_fast_path ? "true" : "false");
    kv("verification", rep.verification.str());
    for (std::size_t i = 0; i < rep.passes.size(); ++i) {
      const PassStats& s = rep.passes[i];
      const std::string k = "pass." + std::to_string(i) + ".";
      kv(k + "name", s.name);
      kv(k + "pulses", std::to_string(s.pulses_before) + " -> " + std::to_string(s.pulses_after));
      kv(k + "rewrites", std::to_string(s.rewrites));
      kv(k + "duration_us", fmt_us(s.duration_before) + " -> " + fmt_us(s.duration_after));
      kv(k + "eps", fmt_real(s.eps_before) + " -> " + fmt_real(s.eps_after));
      kv(k + "reverted", s.reverted ? "true" : "false");
    }
    for (std::size_t i = 0; i < rep.notes.size(); ++i) kv("note." + std::to_string(i), rep.notes[i]);
    return os.str();
  }
  os << (rep.name.empty() ? "circuit" : rep.name) << ": " << rep.n_logical << " qubits, " << rep.pulses_1q << "/" << rep.pulses_2q
     << " (1q/2q), " << fmt_us(rep.cost.duration) << " μs\n";
  os << "  e1: " << e1 << "\n";
  os << "  e2: " << e2 << "\n";
  os << "  fidelity: " << fmt_real(rep.fidelity_e1) << " (e1), " << fmt_real(rep.fidelity_e2) << " (e2)\n";
  os << "  ions: " << join_ints(rep.mapping, 1) << "; output permutation: " << join_ints(rep.output_perm) << "\n";
  os << "  sign choices saved " << rep.cancellations << " pulses" << (rep.zcz_fast_path ? "; Z/CZ fast path used" : "") << "\n";
  os << "  per-wire bound: " << rep.pulses_1q << " <= " << rep.lemma1_gate_bound << (rep.lemma1_ok ? " ok" : " VIOLATED") << "\n";
  if (rep.lemma3_checked) os << "  RX-form pulses: " << rep.rx_form << (rep.lemma3_ok ? " ok" : " VIOLATED") << "\n";
  os << "  verified: " << rep.verification.str() << "\n";
  for (const PassStats& s : rep.passes) {
    os << "  pass " << s.name << ": " << s.pulses_before << " -> " << s.pulses_after << " pulses, " << fmt_us(s.duration_before) << " -> "
       << fmt_us(s.duration_after) << " μs, " << s.rewrites << " rewrites" << (s.reverted ? " (reverted)" : "") << "\n";
  }
  for (const std::string& n : rep.notes) os << "  note: " << n << "\n";
  return os.str();
}

}  // namespace ionc
