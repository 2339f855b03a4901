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

#include "ionc/ir.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ionc {

namespace {

struct KindInfo {
  GateKind kind;
  const char* name;
  int arity;
  int params;
};

constexpr KindInfo kKinds[] = {
    {GateKind::H, "h", 1, 0},          {GateKind::X, "x", 1, 0},
    {GateKind::Y, "y", 1, 0},          {GateKind::Z, "z", 1, 0},
    {GateKind::S, "s", 1, 0},          {GateKind::Sdg, "sdg", 1, 0},
    {GateKind::T, "t", 1, 0},          {GateKind::Tdg, "tdg", 1, 0},
    {GateKind::V, "v", 1, 0},          {GateKind::RX, "rx", 1, 1},
    {GateKind::RY, "ry", 1, 1},        {GateKind::RZ, "rz", 1, 1},
    {GateKind::U2, "u2", 1, 4},        {GateKind::CNOT, "cnot", 2, 0},
    {GateKind::CZ, "cz", 2, 0},        {GateKind::CXpow, "cxp", 2, 1},
    {GateKind::CYpow, "cyp", 2, 1},    {GateKind::CZpow, "czp", 2, 1},
    {GateKind::Toffoli, "toffoli", 3, 0}, {GateKind::Toffoli4, "toffoli4", 4, 0},
    {GateKind::Swap, "swap", 2, 0},    {GateKind::R, "r", 1, 2},
    {GateKind::XX, "xx", 2, 1},        {GateKind::Oracle, "oracle", -1, 0},
};

const KindInfo& info(GateKind k) {
  for (const auto& ki : kKinds)
    if (ki.kind == k) return ki;
  throw std::logic_error("unknown gate kind");
}

}  // namespace

Gate Gate::make(GateKind k, std::vector<int> qs, std::vector<double> ps) {
  Gate g;
  g.kind = k;
  g.qubits = std::move(qs);
  g.params = std::move(ps);
  return g;
}

Gate Gate::oracle(std::string tag, std::vector<int> qs, std::shared_ptr<const Circuit> body) {
  Gate g;
  g.kind = GateKind::Oracle;
  g.qubits = std::move(qs);
  g.tag = std::move(tag);
  g.body = std::move(body);
  return g;
}

Circuit& Circuit::add(GateKind k, std::vector<int> qs, std::vector<double> ps) {
  gates.push_back(Gate::make(k, std::move(qs), std::move(ps)));
  return *this;
}

Circuit& Circuit::add(Gate g) {
  gates.push_back(std::move(g));
  return *this;
}

void Circuit::append(const Circuit& other) {
  gates.insert(gates.end(), other.gates.begin(), other.gates.end());
}

int arity(GateKind k) { return info(k).arity; }
int param_count(GateKind k) { return info(k).params; }
const char* mnemonic(GateKind k) { return info(k).name; }

std::optional<GateKind> kind_from_mnemonic(const std::string& m) {
  std::string low = m;
  std::transform(low.begin(), low.end(), low.begin(), [](unsigned char ch) { return std::tolower(ch); });
  for (const auto& ki : kKinds)
    if (low == ki.name) return ki.kind;
  return std::nullopt;
}

std::string describe(const Gate& g) {
  std::ostringstream os;
  os << mnemonic(g.kind);
  if (g.kind == GateKind::Oracle) os << ' ' << g.tag;
  for (int q : g.qubits) os << ' ' << q;
  for (double p : g.params) os << ' ' << format_angle(p);
  return os.str();
}

MachineConfig::MachineConfig(int nq) : n(nq), signs(static_cast<std::size_t>(nq) * nq, 0) {}

int MachineConfig::chi_sign(int i, int j) const {
  if (i < 0 || j < 0 || i >= n || j >= n || i == j) throw std::out_of_range("chi_sign: bad pair");
  int s = signs[static_cast<std::size_t>(i) * n + j];
  if (s == 0) throw std::out_of_range("chi_sign: pair has no sign");
  return s;
}

void MachineConfig::set_sign(int i, int j, int s) {
  if (i < 0 || j < 0 || i >= n || j >= n || i == j) throw std::out_of_range("set_sign: bad pair");
  if (s != 1 && s != -1) throw std::invalid_argument("set_sign: sign must be +1 or -1");
  signs[static_cast<std::size_t>(i) * n + j] = s;
  signs[static_cast<std::size_t>(j) * n + i] = s;
}

double MachineConfig::two_qubit_error(int i, int j) const {
  auto it = pair_error.find({std::min(i, j), std::max(i, j)});
  return it == pair_error.end() ? bigE : it->second;
}

bool MachineConfig::sign_table_complete() const {
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (signs[static_cast<std::size_t>(i) * n + j] == 0) return false;
  return true;
}

MachineConfig default_machine() {
  MachineConfig m(5);
  m.tau1q = 20.0;
  m.tau2q = 235.0;
  m.epsilon = 0.01;
  m.bigE = 0.04;
  // Ion names are 1-based.
  const int plus[][2] = {{1, 2}, {1, 4}, {2, 3}, {2, 5}, {3, 4}, {3, 5}, {4, 5}};
  const int minus[][2] = {{1, 3}, {1, 5}, {2, 4}};
  for (auto& p : plus) m.set_sign(p[0] - 1, p[1] - 1, +1);
  for (auto& p : minus) m.set_sign(p[0] - 1, p[1] - 1, -1);
  return m;
}

std::vector<Diagnostic> validate(const Circuit& c, const MachineConfig& m) {
  std::vector<Diagnostic> out;
  auto diag = [&](int i, std::string msg) { out.push_back({i, std::move(msg)}); };
  const bool physical = c.level == Level::Physical;
  if (physical && c.n > m.n) diag(-1, "circuit uses more qubits than the machine has");
  for (std::size_t gi = 0; gi < c.gates.size(); ++gi) {
    const Gate& g = c.gates[gi];
    const int i = static_cast<int>(gi);
    const int ar = arity(g.kind);
    if (g.kind == GateKind::Oracle) {
      if (!g.body) {
        diag(i, "oracle '" + g.tag + "' has no body");
      } else if (g.body->n != static_cast<int>(g.qubits.size())) {
        diag(i, "oracle '" + g.tag + "' arity mismatch");
      }
    } else if (static_cast<int>(g.qubits.size()) != ar) {
      diag(i, std::string("arity mismatch for ") + mnemonic(g.kind));
    }
    if (static_cast<int>(g.params.size()) != param_count(g.kind))
      diag(i, std::string("parameter count mismatch for ") + mnemonic(g.kind));
    std::set<int> seen;
    bool bounds_ok = true;
    for (int q : g.qubits) {
      if (q < 0 || q >= c.n) {
        diag(i, "qubit " + std::to_string(q) + " out of range");
        bounds_ok = false;
      }
      if (!seen.insert(q).second) diag(i, "duplicate qubit " + std::to_string(q));
    }
    if (physical && !g.is_physical()) diag(i, std::string("logical gate in physical circuit: ") + mnemonic(g.kind));
    if (g.params.size() == static_cast<std::size_t>(param_count(g.kind))) {
      if (g.kind == GateKind::XX) {
        const double chi = g.params[0];
        if (std::abs(chi) > kPi / 2 + 1e-12) diag(i, "χ out of range");
        if (physical && bounds_ok && g.qubits.size() == 2 && std::abs(chi) > 1e-12 && g.qubits[0] < m.n &&
            g.qubits[1] < m.n && g.qubits[0] != g.qubits[1]) {
          int s = 0;
          try {
            s = m.chi_sign(g.qubits[0], g.qubits[1]);
          } catch (const std::exception&) {
            diag(i, "no χ sign for pair");
          }
          if (s != 0 && (chi > 0 ? 1 : -1) != s) diag(i, "χ sign mismatch");
        }
      }
      if (g.kind == GateKind::CXpow || g.kind == GateKind::CYpow || g.kind == GateKind::CZpow) {
        if (std::abs(g.params[0]) > 1.0 + 1e-12) diag(i, "α out of range [-1, 1]");
      }
      for (double p : g.params)
        if (!std::isfinite(p)) diag(i, "non-finite parameter");
    }
  }
  return out;
}

Gate inverse(const Gate& g) {
  Gate r = g;
  switch (g.kind) {
    case GateKind::H: case GateKind::X: case GateKind::Y: case GateKind::Z:
    case GateKind::CNOT: case GateKind::CZ: case GateKind::Toffoli:
    case GateKind::Toffoli4: case GateKind::Swap:
      return r;
    case GateKind::S: r.kind = GateKind::Sdg; return r;
    case GateKind::Sdg: r.kind = GateKind::S; return r;
    case GateKind::T: r.kind = GateKind::Tdg; return r;
    case GateKind::Tdg: r.kind = GateKind::T; return r;
    case GateKind::V: return Gate::make(GateKind::RX, g.qubits, {-kPi / 2});
    case GateKind::RX: case GateKind::RY: case GateKind::RZ:
    case GateKind::CXpow: case GateKind::CYpow: case GateKind::CZpow: case GateKind::XX:
      r.params[0] = -g.params[0];
      return r;
    case GateKind::U2:
      r.params = {-g.params[0], g.params[1], g.params[2] + kPi, -g.params[3]};
      return r;
    case GateKind::R:
      r.params[1] = g.params[1] - kPi;
      return r;
    case GateKind::Oracle:
      break;
  }
  throw std::invalid_argument("inverse: oracle gates are not invertible here");
}

Gate normalize_r(const Gate& g) {
  if (g.kind != GateKind::R) throw std::invalid_argument("normalize_r: not an R gate");
  Gate r = g;
  r.params[0] = wrap_pi(g.params[0]);
  return r;
}

double wrap_pi(double t) {
  const double two_pi = 2 * kPi;
  double r = std::fmod(t + kPi, two_pi);
  if (r <= 0) r += two_pi;
  double out = r - kPi;
  if (std::abs(out + kPi) < 1e-12) out = kPi;
  return out;
}

bool angle_is_zero(double t, double tol) { return std::abs(wrap_pi(t)) < tol; }

std::optional<std::pair<long, long>> pi_fraction(double t, long max_den, double tol) {
  const double x = t / kPi;
  for (long q = 1; q <= max_den; ++q) {
    const double pq = x * static_cast<double>(q);
    const double p = std::round(pq);
    if (std::abs(pq - p) < tol * static_cast<double>(q)) {
      long pi = static_cast<long>(p);
      long g = std::gcd(std::abs(pi), q);
      if (g == 0) g = 1;
      return std::make_pair(pi / g, q / g);
    }
  }
  return std::nullopt;
}

std::string format_angle(double t) {
  if (std::abs(t) < 1e-12) return "0";
  if (auto f = pi_fraction(t)) {
    const auto [p, q] = *f;
    if (p == 0) return "0";
    std::string s;
    if (p == 1) s = "pi";
    else if (p == -1) s = "-pi";
    else s = std::to_string(p) + "pi";
    if (q != 1) s += "/" + std::to_string(q);
    return s;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", t);
  return buf;
}

}  // namespace ionc
