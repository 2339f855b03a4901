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

#include "ionc/cost.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace ionc {

namespace {

constexpr double kCoefTol = 1e-9;

std::string six_decimals(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  std::string s = buf;
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

std::string unit_suffix(Unit u) { return u == Unit::eps ? "ε" : "E"; }

std::string join(const std::vector<std::string>& parts) {
  if (parts.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += " + ";
    out += parts[i];
  }
  return out;
}

void add_pulse(CostVector& cv, double theta, const MachineConfig& m) {
  const double a = std::abs(theta);
  cv.duration += a * m.tau1q / kPi;
  const double s = std::abs(std::sin(theta));
  if (s > kCoefTol) cv.e1.add(s, Unit::eps);
  double r = std::fmod(std::fmod(a, 2 * kPi), kPi);
  if (r > kPi - kCoefTol) r = 0.0;
  if (r > kCoefTol) cv.e2.add(r, Unit::eps);
}

}  // namespace

void Ledger::add(double coefficient, Unit unit, int q0, int q1) {
  if (coefficient < 0) throw std::invalid_argument("ledger coefficient must be nonnegative");
  entries_.push_back({coefficient, unit, q0, q1});
}

void Ledger::merge(const Ledger& other) {
  entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
}

std::vector<ErrorTerm> Ledger::terms() const {
  std::vector<ErrorTerm> out;
  for (const Entry& e : entries_) {
    auto it = std::find_if(out.begin(), out.end(), [&](const ErrorTerm& t) {
      return t.unit == e.unit && std::abs(t.coefficient - e.coefficient) < kCoefTol;
    });
    if (it == out.end()) out.push_back({e.coefficient, e.unit, 1});
    else ++it->multiplicity;
  }
  std::sort(out.begin(), out.end(), [](const ErrorTerm& a, const ErrorTerm& b) {
    if (a.unit != b.unit) return a.unit == Unit::eps;
    return a.coefficient < b.coefficient;
  });
  return out;
}

double Ledger::sum(Unit u) const {
  double s = 0;
  for (const Entry& e : entries_)
    if (e.unit == u) s += e.coefficient;
  return s;
}

std::string Ledger::render_e1() const {
  std::vector<std::string> parts;
  for (const ErrorTerm& t : terms()) {
    std::string coef = std::abs(t.coefficient - 1.0) < kCoefTol ? "" : six_decimals(t.coefficient);
    parts.push_back(std::to_string(t.multiplicity) + " × " + coef + unit_suffix(t.unit));
  }
  return join(parts);
}

std::string Ledger::render_e2() const {
  std::vector<std::string> parts;
  for (const ErrorTerm& t : terms()) {
    std::string body;
    if (t.unit == Unit::E) {
      body = std::abs(t.coefficient - 1.0) < kCoefTol ? "E" : six_decimals(t.coefficient) + "E";
    } else if (auto f = pi_fraction(t.coefficient, 64, 1e-9)) {
      const auto [p, q] = *f;
      body = (p == 1 ? std::string() : std::to_string(p)) + "πε" + (q == 1 ? std::string() : "/" + std::to_string(q));
    } else {
      body = six_decimals(t.coefficient / kPi) + "πε";
    }
    parts.push_back(std::to_string(t.multiplicity) + " × " + body);
  }
  return join(parts);
}

CostVector& CostVector::operator+=(const CostVector& o) {
  duration += o.duration;
  e1.merge(o.e1);
  e2.merge(o.e2);
  return *this;
}

CostVector gate_cost(const Gate& g, const MachineConfig& m) {
  CostVector cv;
  switch (g.kind) {
    case GateKind::R:
    case GateKind::RX:
    case GateKind::RY:
      add_pulse(cv, g.params.at(0), m);
      return cv;
    case GateKind::XX: {
      const double chi = g.params.at(0);
      cv.duration = m.tau2q;
      const double s = std::abs(std::sin(2 * chi));
      const int a = g.qubits.at(0), b = g.qubits.at(1);
      if (s > kCoefTol) cv.e1.add(s, Unit::E, a, b);
      cv.e2.add(1.0, Unit::E, a, b);
      return cv;
    }
    default:
      break;
  }
  throw std::invalid_argument(std::string("gate_cost: not a physical gate: ") + mnemonic(g.kind));
}

CostVector circuit_cost(const Circuit& c, const MachineConfig& m) {
  CostVector total;
  for (const Gate& g : c.gates) total += gate_cost(g, m);
  return total;
}

double fidelity(const CostVector& v, ErrorModel model, const MachineConfig& m) {
  double f = 1.0;
  for (const auto& e : v.ledger(model).entries()) {
    const double unit = e.unit == Unit::eps ? m.epsilon : (e.q0 >= 0 ? m.two_qubit_error(e.q0, e.q1) : m.bigE);
    const double factor = 1.0 - e.coefficient * unit;
    if (factor <= 0) throw std::domain_error("fidelity: error factor is not positive");
    f *= factor;
  }
  return f;
}

Lemma1Bound lemma1_bound(int n, int G, double tau1q) {
  if (n < 0 || G < 0) throw std::invalid_argument("lemma1_bound: negative size");
  Lemma1Bound b;
  const int pieces = n + 2 * G;
  b.gate_bound = 2 * pieces;
  b.total_bound = b.gate_bound + G;
  b.time_bound = 2 * tau1q * pieces;
  b.error_bound = pieces;
  return b;
}

}  // namespace ionc
