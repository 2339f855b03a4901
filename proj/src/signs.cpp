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

// Sign selection. Every logical gate lowers to RX/RY/XX pulses with a few free
// +/-1 choices; the choices are picked to let the most pulses cancel or merge
// once everything is laid out per wire.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "ionc/gatelib.hpp"
#include "ionc/optimizer.hpp"
#include "wireform.hpp"

namespace ionc {

namespace {

constexpr int kExhaustiveVars = 22;
constexpr int kTableVars = 16;

int var_count(const Gate& g) {
  switch (g.kind) {
    case GateKind::H: case GateKind::Z: case GateKind::S: case GateKind::Sdg:
    case GateKind::T: case GateKind::Tdg: case GateKind::RZ: case GateKind::CNOT:
      return 1;
    case GateKind::CZ:
      return 2;
    case GateKind::CXpow:
      return std::abs(std::abs(g.params[0]) - 1.0) < 1e-12 ? 1 : 0;
    case GateKind::CZpow:
      if (std::abs(g.params[0]) < 1e-12) return 0;
      return std::abs(std::abs(g.params[0]) - 1.0) < 1e-12 ? 2 : 1;
    case GateKind::CYpow:
      return std::abs(g.params[0]) < 1e-12 ? 0 : 2;
    default:
      return 0;
  }
}

double rz_angle(const Gate& g) {
  switch (g.kind) {
    case GateKind::Z: return kPi;
    case GateKind::S: return kPi / 2;
    case GateKind::Sdg: return -kPi / 2;
    case GateKind::T: return kPi / 4;
    case GateKind::Tdg: return -kPi / 4;
    default: return g.params.at(0);
  }
}

std::vector<Gate> remap(const Decomposition& d, const std::vector<int>& qs) {
  std::vector<Gate> out;
  out.reserve(d.gates.size());
  for (Gate g : d.gates) {
    for (int& q : g.qubits) q = qs.at(static_cast<std::size_t>(q));
    out.push_back(std::move(g));
  }
  return out;
}

// Pulse-level lowering of one gate under the given sign values.
std::vector<Gate> option_gates(const Gate& g, const std::vector<int>& v, const MachineConfig& m) {
  const auto& q = g.qubits;
  auto one = [&](GateKind k, double t) { return std::vector<Gate>{Gate::make(k, {q[0]}, {t})}; };
  switch (g.kind) {
    case GateKind::H:
      return remap(dec_h(v[0] > 0 ? 2 : 1), q);
    case GateKind::X: return one(GateKind::RX, kPi);
    case GateKind::Y: return one(GateKind::RY, kPi);
    case GateKind::V: return one(GateKind::RX, kPi / 2);
    case GateKind::RX: return one(GateKind::RX, g.params[0]);
    case GateKind::RY: return one(GateKind::RY, g.params[0]);
    case GateKind::R: return {g};
    case GateKind::Z: case GateKind::S: case GateKind::Sdg:
    case GateKind::T: case GateKind::Tdg: case GateKind::RZ:
      return remap(dec_rz_3pulse(rz_angle(g), v[0]), q);
    case GateKind::U2: {
      Gate local = g;
      local.qubits = {0};
      const XYX e = xyx_angles(gate_matrix(local));
      std::vector<Gate> out;
      if (!angle_is_zero(e.c)) out.push_back(Gate::make(GateKind::RX, {q[0]}, {e.c}));
      if (!angle_is_zero(e.b)) out.push_back(Gate::make(GateKind::RY, {q[0]}, {e.b}));
      if (!angle_is_zero(e.a)) out.push_back(Gate::make(GateKind::RX, {q[0]}, {e.a}));
      return out;
    }
    case GateKind::CNOT:
      return remap(dec_cnot(m.chi_sign(q[0], q[1]), v[0]), q);
    case GateKind::CZ:
      return remap(dec_cz(m.chi_sign(q[0], q[1]), v[0], v[1]), q);
    case GateKind::CXpow: {
      const double a = g.params[0];
      if (std::abs(a) < 1e-12) return {};
      if (v.size() == 1) return remap(dec_cnot(m.chi_sign(q[0], q[1]), v[0]), q);
      return remap(dec_cxpow(a, m.chi_sign(q[0], q[1])), q);
    }
    case GateKind::CYpow: {
      const double a = g.params[0];
      if (std::abs(a) < 1e-12) return {};
      return remap(dec_cypow(a, m.chi_sign(q[0], q[1]), v[0], v[1]), q);
    }
    case GateKind::CZpow: {
      const double a = g.params[0];
      const int s = m.chi_sign(q[0], q[1]);
      if (std::abs(a) < 1e-12) return {};
      if (v.size() == 2) return remap(dec_cz(s, v[0], v[1]), q);
      return remap(dec_czpow_sym(a, s, v[0], czpow_sym_partner(a, s, v[0])), q);
    }
    case GateKind::XX: {
      const double chi = g.params[0];
      const int s = m.chi_sign(q[0], q[1]);
      if (std::abs(chi) < 1e-12 || (chi > 0 ? 1 : -1) == s) return {g};
      // XX(chi) = XX(chi + s pi/2) (X tensor X) up to phase.
      return {Gate::make(GateKind::RX, {q[0]}, {kPi}), Gate::make(GateKind::RX, {q[1]}, {kPi}),
              Gate::make(GateKind::XX, q, {chi + s * kPi / 2})};
    }
    default:
      break;
  }
  throw std::invalid_argument(std::string("choose_signs: cannot lower ") + mnemonic(g.kind));
}

Circuit expand_for_signs(const Circuit& logical) {
  Circuit c = expand_composites(logical);
  Circuit out(c.n, c.level);
  for (const Gate& g : c.gates) {
    if (g.kind == GateKind::Swap) {
      const int a = g.qubits[0], b = g.qubits[1];
      out.add(GateKind::CNOT, {a, b}).add(GateKind::CNOT, {b, a}).add(GateKind::CNOT, {a, b});
    } else {
      out.gates.push_back(g);
    }
  }
  return out;
}

struct Item {
  enum Kind { pulse, xx, barrier } kind;
  double theta = 0, phi = 0;
};

struct Instance {
  std::vector<int> vars;                                // global ids
  std::vector<std::vector<std::vector<Item>>> options;  // [option][wire slot] items
  std::vector<int> wires;                               // machine wires touched
  std::vector<int> raw_pulses;                          // per option
};

struct Cost {
  int pulses = 0;
  double duration = 0;  // units of pi
};

bool cost_less(const Cost& a, const Cost& b) {
  if (a.pulses != b.pulses) return a.pulses < b.pulses;
  return a.duration < b.duration - 1e-9;
}

bool cost_equal(const Cost& a, const Cost& b) { return a.pulses == b.pulses && std::abs(a.duration - b.duration) <= 1e-9; }

Cost& operator+=(Cost& a, const Cost& b) {
  a.pulses += b.pulses;
  a.duration += b.duration;
  return a;
}

Cost& operator-=(Cost& a, const Cost& b) {
  a.pulses -= b.pulses;
  a.duration -= b.duration;
  return a;
}

std::vector<int> option_values(int nv, unsigned mask) {
  std::vector<int> v(static_cast<std::size_t>(nv));
  for (int i = 0; i < nv; ++i) v[static_cast<std::size_t>(i)] = (mask >> i) & 1U ? -1 : 1;
  return v;
}

struct Problem {
  int n = 0;
  int nvars = 0;
  std::vector<Instance> inst;
  std::vector<std::vector<int>> wire_inst;  // instance ids per wire, in order
  std::vector<std::vector<int>> wire_vars;  // global var ids per wire

  // Merged cost of one wire under a global assignment (bit i set means var i = -1).
  Cost eval_wire(int w, const std::vector<std::uint8_t>& neg) const {
    Cost total;
    detail::Wire cur;
    auto close = [&] {
      detail::merge_wire(cur);
      total.pulses += cur.pulses();
      total.duration += cur.duration_pi();
      cur = detail::Wire{};
    };
    for (int id : wire_inst[static_cast<std::size_t>(w)]) {
      const Instance& in = inst[static_cast<std::size_t>(id)];
      unsigned opt = 0;
      for (std::size_t j = 0; j < in.vars.size(); ++j)
        if (neg[static_cast<std::size_t>(in.vars[j])]) opt |= 1U << j;
      const auto pos = static_cast<std::size_t>(std::find(in.wires.begin(), in.wires.end(), w) - in.wires.begin());
      for (const Item& it : in.options[opt][pos]) {
        switch (it.kind) {
          case Item::pulse: cur.add_pulse(it.theta, it.phi); break;
          case Item::xx: cur.add_xx(); break;
          case Item::barrier: close(); break;
        }
      }
    }
    close();
    return total;
  }
};

Problem build(const Circuit& c, const MachineConfig& m) {
  Problem p;
  p.n = c.n;
  p.wire_inst.resize(static_cast<std::size_t>(c.n));
  p.wire_vars.resize(static_cast<std::size_t>(c.n));
  for (const Gate& g : c.gates) {
    Instance in;
    in.wires = g.qubits;
    const int nv = g.kind == GateKind::Oracle ? 0 : var_count(g);
    for (int j = 0; j < nv; ++j) in.vars.push_back(p.nvars++);
    for (unsigned opt = 0; opt < (1U << nv); ++opt) {
      std::vector<std::vector<Item>> per(in.wires.size());
      int raw = 0;
      if (g.kind == GateKind::Oracle) {
        for (auto& items : per) items.push_back({Item::barrier});
      } else {
        for (const Gate& pg : option_gates(g, option_values(nv, opt), m)) {
          if (pg.kind == GateKind::XX) {
            for (int q : pg.qubits) {
              const auto pos = static_cast<std::size_t>(std::find(in.wires.begin(), in.wires.end(), q) - in.wires.begin());
              per.at(pos).push_back({Item::xx});
            }
            continue;
          }
          ++raw;
          const auto pos = static_cast<std::size_t>(std::find(in.wires.begin(), in.wires.end(), pg.qubits[0]) - in.wires.begin());
          const double phi = pg.kind == GateKind::RX ? 0.0 : pg.kind == GateKind::RY ? kPi / 2 : pg.params.at(1);
          per.at(pos).push_back({Item::pulse, pg.params.at(0), phi});
        }
      }
      in.options.push_back(std::move(per));
      in.raw_pulses.push_back(raw);
    }
    const int id = static_cast<int>(p.inst.size());
    for (int q : in.wires) {
      p.wire_inst[static_cast<std::size_t>(q)].push_back(id);
      for (int v : in.vars) p.wire_vars[static_cast<std::size_t>(q)].push_back(v);
    }
    p.inst.push_back(std::move(in));
  }
  for (auto& vs : p.wire_vars) {
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  }
  return p;
}

// True when assignment a precedes b: the first differing variable is +1 in a.
bool lex_less(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t d = a ^ b;
  if (!d) return false;
  return (a & (d & (~d + 1))) == 0;
}

std::vector<std::uint8_t> to_neg(std::uint64_t mask, int nvars) {
  std::vector<std::uint8_t> neg(static_cast<std::size_t>(nvars));
  for (int i = 0; i < nvars; ++i) neg[static_cast<std::size_t>(i)] = (mask >> i) & 1U;
  return neg;
}

std::vector<std::uint8_t> search_exhaustive(const Problem& p) {
  const std::size_t W = static_cast<std::size_t>(p.n);
  // Per-wire tables over the wire's own variables.
  std::vector<std::vector<Cost>> table(W);
  for (std::size_t w = 0; w < W; ++w) {
    const auto& vs = p.wire_vars[w];
    table[w].resize(std::size_t{1} << vs.size());
    std::vector<std::uint8_t> neg(static_cast<std::size_t>(p.nvars), 0);
    for (std::size_t local = 0; local < table[w].size(); ++local) {
      for (std::size_t j = 0; j < vs.size(); ++j) neg[static_cast<std::size_t>(vs[j])] = (local >> j) & 1U;
      table[w][local] = p.eval_wire(static_cast<int>(w), neg);
    }
  }
  // var -> (wire, local bit) incidences.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> inc(static_cast<std::size_t>(p.nvars));
  for (std::size_t w = 0; w < W; ++w)
    for (std::size_t j = 0; j < p.wire_vars[w].size(); ++j) inc[static_cast<std::size_t>(p.wire_vars[w][j])].push_back({w, j});

  std::vector<std::size_t> idx(W, 0);
  Cost cur;
  for (std::size_t w = 0; w < W; ++w) cur += table[w][0];
  Cost best = cur;
  std::uint64_t mask = 0, best_mask = 0;
  const std::uint64_t total = std::uint64_t{1} << p.nvars;
  for (std::uint64_t i = 1; i < total; ++i) {
    const int j = __builtin_ctzll(i);
    mask ^= std::uint64_t{1} << j;
    for (auto [w, bit] : inc[static_cast<std::size_t>(j)]) {
      cur -= table[w][idx[w]];
      idx[w] ^= std::size_t{1} << bit;
      cur += table[w][idx[w]];
    }
    if (cost_less(cur, best) || (cost_equal(cur, best) && lex_less(mask, best_mask))) {
      best = cur;
      best_mask = mask;
    }
  }
  return to_neg(best_mask, p.nvars);
}

std::vector<std::uint8_t> search_local(const Problem& p) {
  std::vector<std::uint8_t> neg(static_cast<std::size_t>(p.nvars), 0);
  std::vector<std::vector<int>> var_wires(static_cast<std::size_t>(p.nvars));
  for (int w = 0; w < p.n; ++w)
    for (int v : p.wire_vars[static_cast<std::size_t>(w)]) var_wires[static_cast<std::size_t>(v)].push_back(w);
  for (bool improved = true; improved;) {
    improved = false;
    for (int v = 0; v < p.nvars; ++v) {
      Cost before, after;
      for (int w : var_wires[static_cast<std::size_t>(v)]) before += p.eval_wire(w, neg);
      neg[static_cast<std::size_t>(v)] ^= 1;
      for (int w : var_wires[static_cast<std::size_t>(v)]) after += p.eval_wire(w, neg);
      if (cost_less(after, before)) improved = true;
      else neg[static_cast<std::size_t>(v)] ^= 1;
    }
  }
  return neg;
}

}  // namespace

SignVars choose_signs(const Circuit& logical, const MachineConfig& m) {
  SignVars sv;
  sv.expanded = expand_for_signs(logical);
  const Problem p = build(sv.expanded, m);

  std::size_t widest = 0;
  for (const auto& vs : p.wire_vars) widest = std::max(widest, vs.size());
  std::vector<std::uint8_t> neg;
  if (p.nvars <= kExhaustiveVars && widest <= static_cast<std::size_t>(kTableVars)) {
    neg = search_exhaustive(p);
  } else {
    neg = search_local(p);
    sv.exact = false;
  }

  int raw = 0;
  for (const Instance& in : p.inst) {
    std::vector<int> vals;
    unsigned opt = 0;
    for (std::size_t j = 0; j < in.vars.size(); ++j) {
      const bool n = neg[static_cast<std::size_t>(in.vars[j])];
      vals.push_back(n ? -1 : 1);
      if (n) opt |= 1U << j;
    }
    raw += in.raw_pulses[opt];
    sv.values.push_back(std::move(vals));
  }
  int merged = 0;
  for (int w = 0; w < p.n; ++w) merged += p.eval_wire(w, neg).pulses;
  sv.savings = raw - merged;
  return sv;
}

Circuit lower_with_signs(const SignVars& sv, const MachineConfig& m) {
  if (sv.values.size() != sv.expanded.gates.size()) throw std::invalid_argument("lower_with_signs: sign table does not match circuit");
  Circuit out(sv.expanded.n, Level::Logical);
  for (std::size_t i = 0; i < sv.expanded.gates.size(); ++i) {
    const Gate& g = sv.expanded.gates[i];
    if (g.kind == GateKind::Oracle) {
      out.gates.push_back(g);
      continue;
    }
    if (static_cast<int>(sv.values[i].size()) != var_count(g)) throw std::invalid_argument("lower_with_signs: wrong number of signs");
    for (Gate& pg : option_gates(g, sv.values[i], m)) out.gates.push_back(std::move(pg));
  }
  return out;
}

}  // namespace ionc
