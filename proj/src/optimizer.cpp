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

#include "ionc/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

#include "ionc/gatelib.hpp"
#include "ionc/linalg.hpp"
#include "wireform.hpp"

namespace ionc {

namespace detail {

void canon_axis(double& theta, double& phi) {
  const double k = std::floor(phi / kPi);
  double p = phi - k * kPi;
  if (static_cast<long long>(k) % 2 != 0) theta = -theta;
  if (p > kPi - 1e-10) {
    p = 0.0;
    theta = -theta;
  }
  if (p < 1e-10) p = 0.0;
  phi = p;
}

bool is_x_axis(double phi) { return phi < 1e-9; }
bool is_y_axis(double phi) { return std::abs(phi - kPi / 2) < 1e-9; }

void Wire::add_pulse(double theta, double phi) {
  canon_axis(theta, phi);
  if (is_x_axis(phi)) {
    add_rx(theta);
    return;
  }
  if (is_y_axis(phi)) phi = kPi / 2;
  anchors.push_back({theta, phi, nseg - 1});
  slots.push_back(0.0);
}

int Wire::pulses() const {
  int p = static_cast<int>(anchors.size());
  for (double s : slots)
    if (!angle_is_zero(s, kAngleTol)) ++p;
  return p;
}

double Wire::duration_pi() const {
  double d = 0;
  for (const Anchor& a : anchors) d += std::abs(wrap_pi(a.theta));
  for (double s : slots) d += std::abs(wrap_pi(s));
  return d / kPi;
}

double Wire::eps() const {
  double e = 0;
  for (const Anchor& a : anchors) e += std::abs(std::sin(a.theta));
  for (double s : slots) e += std::abs(std::sin(s));
  return e;
}

int merge_wire(Wire& w) {
  int rewrites = 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (double& s : w.slots) {
      s = wrap_pi(s);
      if (std::abs(s) < kAngleTol) s = 0.0;
    }
    for (Anchor& a : w.anchors) a.theta = wrap_pi(a.theta);
    for (std::size_t k = 0; k < w.anchors.size(); ++k) {
      const Anchor& a = w.anchors[k];
      const bool zero = std::abs(a.theta) < kAngleTol;
      if (zero || is_x_axis(a.phi)) {
        w.slots[k] += (zero ? 0.0 : a.theta) + w.slots[k + 1];
        w.slots.erase(w.slots.begin() + static_cast<long>(k) + 1);
        w.anchors.erase(w.anchors.begin() + static_cast<long>(k));
        ++rewrites;
        changed = true;
        break;
      }
    }
    if (changed) continue;
    for (std::size_t k = 0; k + 1 < w.anchors.size(); ++k) {
      Anchor& a = w.anchors[k];
      const Anchor& b = w.anchors[k + 1];
      if (a.seg == b.seg && w.slots[k + 1] == 0.0 && std::abs(a.phi - b.phi) < 1e-9) {
        a.theta += b.theta;
        w.slots.erase(w.slots.begin() + static_cast<long>(k) + 1);
        w.anchors.erase(w.anchors.begin() + static_cast<long>(k) + 1);
        ++rewrites;
        changed = true;
        break;
      }
    }
  }
  return rewrites;
}

Form to_form(const Circuit& c) {
  Form f;
  f.n = c.n;
  f.level = c.level;
  f.wires.resize(static_cast<std::size_t>(c.n));
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::RX:
        f.wires.at(g.qubits.at(0)).add_rx(g.params.at(0));
        break;
      case GateKind::RY:
        f.wires.at(g.qubits.at(0)).add_pulse(g.params.at(0), kPi / 2);
        break;
      case GateKind::R:
        f.wires.at(g.qubits.at(0)).add_pulse(g.params.at(0), g.params.at(1));
        break;
      case GateKind::XX:
        f.xx.push_back(g);
        f.wires.at(g.qubits.at(0)).add_xx();
        f.wires.at(g.qubits.at(1)).add_xx();
        break;
      default:
        throw std::invalid_argument(std::string("pulse optimizer: unsupported gate ") + mnemonic(g.kind));
    }
  }
  return f;
}

Circuit from_form(const Form& f) {
  Circuit out(f.n, f.level);
  std::vector<std::vector<std::vector<Gate>>> segs(f.wires.size());
  for (std::size_t q = 0; q < f.wires.size(); ++q) {
    const Wire& w = f.wires[q];
    const int qi = static_cast<int>(q);
    auto& lists = segs[q];
    lists.resize(static_cast<std::size_t>(w.nseg));
    auto push_slot = [&](double s, int seg) {
      if (!angle_is_zero(s, kAngleTol)) lists[static_cast<std::size_t>(seg)].push_back(Gate::make(GateKind::RX, {qi}, {wrap_pi(s)}));
    };
    push_slot(w.slots[0], 0);
    for (std::size_t k = 0; k < w.anchors.size(); ++k) {
      const Anchor& a = w.anchors[k];
      const double th = wrap_pi(a.theta);
      if (is_y_axis(a.phi)) lists[static_cast<std::size_t>(a.seg)].push_back(Gate::make(GateKind::RY, {qi}, {th}));
      else lists[static_cast<std::size_t>(a.seg)].push_back(Gate::make(GateKind::R, {qi}, {th, a.phi}));
      push_slot(w.slots[k + 1], a.seg);
    }
  }
  std::vector<std::size_t> cur(f.wires.size(), 0);
  auto flush = [&](int q) {
    auto& lists = segs[static_cast<std::size_t>(q)];
    auto& at = cur[static_cast<std::size_t>(q)];
    for (const Gate& g : lists.at(at)) out.gates.push_back(g);
    ++at;
  };
  for (const Gate& x : f.xx) {
    flush(x.qubits[0]);
    flush(x.qubits[1]);
    out.gates.push_back(x);
  }
  for (std::size_t q = 0; q < f.wires.size(); ++q) flush(static_cast<int>(q));
  return out;
}

}  // namespace detail

using detail::Anchor;
using detail::Form;
using detail::Wire;

namespace {

int merge_form(Form& f) {
  int r = 0;
  for (Wire& w : f.wires) r += detail::merge_wire(w);
  return r;
}

double abs_wrapped(double t) { return std::abs(wrap_pi(t)); }

// Rewrites anchor k (an RY) into R(c,d) = RX(a) RY(b) RX(a). Slots must already
// be adjusted by the caller. An identity result removes the anchor.
void apply_template(Wire& w, std::size_t k, double a) {
  const double b = w.anchors[k].theta;
  try {
    auto [c, d] = template_cd(a, b);
    detail::canon_axis(c, d);
    if (detail::is_y_axis(d)) d = kPi / 2;
    w.anchors[k].theta = wrap_pi(c);
    w.anchors[k].phi = d;
  } catch (const std::domain_error&) {
    w.slots[k] += w.slots[k + 1];
    w.slots.erase(w.slots.begin() + static_cast<long>(k) + 1);
    w.anchors.erase(w.anchors.begin() + static_cast<long>(k));
  }
}

// Moves on a single RY anchor and the two slots around it.
enum class Move { left, right };  // which slot supplies the RX angle

struct Local {
  double dur = 0;  // units of pi
  double eps = 0;
};

Local local_cost(double theta, double left, double right) {
  Local l;
  l.dur = (abs_wrapped(theta) + abs_wrapped(left) + abs_wrapped(right)) / kPi;
  l.eps = std::abs(std::sin(theta)) + std::abs(std::sin(left)) + std::abs(std::sin(right));
  return l;
}

// Cost after a move, without touching the wire. Returns false if not applicable.
bool preview(const Wire& w, std::size_t k, Move mv, Local& out) {
  const double b = w.anchors[k].theta;
  const double L = w.slots[k], R = w.slots[k + 1];
  double a = 0, nl = L, nr = R;
  switch (mv) {
    case Move::left: a = L; nl = 0; nr = R - L; break;
    case Move::right: a = R; nr = 0; nl = L - R; break;
  }
  if (angle_is_zero(a, detail::kAngleTol)) return false;
  double c = 0;
  try {
    c = template_cd(a, b).first;
  } catch (const std::domain_error&) {
    c = 0;
  }
  // RX(a) RY(b) = R(c,d) RX(-a): a pair move is a triple that leaves -a in
  // the far slot, so both share the same bookkeeping.
  out = local_cost(c, nl, nr);
  return true;
}

void apply_move(Wire& w, std::size_t k, Move mv) {
  const double L = w.slots[k], R = w.slots[k + 1];
  double a = 0;
  switch (mv) {
    case Move::left:
      a = L;
      w.slots[k] = 0;
      w.slots[k + 1] = R - L;
      break;
    case Move::right:
      a = R;
      w.slots[k + 1] = 0;
      w.slots[k] = L - R;
      break;
  }
  apply_template(w, k, a);
}

int fold_triples_form(Form& f) {
  int rewrites = 0;
  for (Wire& w : f.wires) {
    for (std::size_t k = 0; k < w.anchors.size(); ++k) {
      if (!detail::is_y_axis(w.anchors[k].phi)) continue;
      const Local now = local_cost(w.anchors[k].theta, w.slots[k], w.slots[k + 1]);
      bool found = false;
      Move best = Move::left;
      double best_de = 0, best_dd = 0;
      for (Move mv : {Move::left, Move::right}) {
        Local nx;
        if (!preview(w, k, mv, nx)) continue;
        const double dd = nx.dur - now.dur, de = nx.eps - now.eps;
        if (dd > 1e-12) continue;
        if (dd > -1e-12 && de > -1e-12) continue;
        const bool better = !found || de < best_de - 1e-12 || (std::abs(de - best_de) <= 1e-12 && dd < best_dd - 1e-12);
        if (better) {
          found = true;
          best = mv;
          best_de = de;
          best_dd = dd;
        }
      }
      if (found) {
        const std::size_t before = w.anchors.size();
        apply_move(w, k, best);
        ++rewrites;
        if (w.anchors.size() < before && k > 0) --k;
      }
    }
  }
  return rewrites;
}

int commute_form(Form& f, RxDirection dir) {
  int rewrites = 0;
  for (Wire& w : f.wires) {
    if (dir == RxDirection::left) {
      for (std::size_t k = w.anchors.size(); k-- > 0;) {
        if (k >= w.anchors.size()) continue;
        const double a = w.slots[k + 1];
        if (angle_is_zero(a, detail::kAngleTol) || !detail::is_y_axis(w.anchors[k].phi)) continue;
        apply_move(w, k, Move::right);
        ++rewrites;
      }
    } else {
      for (std::size_t k = 0; k < w.anchors.size();) {
        const double a = w.slots[k];
        if (angle_is_zero(a, detail::kAngleTol) || !detail::is_y_axis(w.anchors[k].phi)) {
          ++k;
          continue;
        }
        const std::size_t before = w.anchors.size();
        apply_move(w, k, Move::left);
        ++rewrites;
        if (w.anchors.size() == before) ++k;
      }
    }
  }
  return rewrites;
}

int rewrite_pair_form(Form& f, PairMode mode) {
  int rewrites = 0;
  for (Wire& w : f.wires) {
    if (mode == PairMode::fold_left) {
      for (std::size_t k = w.anchors.size(); k-- > 0;) {
        if (k >= w.anchors.size()) continue;
        if (angle_is_zero(w.slots[k], detail::kAngleTol) || !detail::is_y_axis(w.anchors[k].phi)) continue;
        // Consumes only the slot on the left; the pushed remainder lands in a
        // slot that has already been processed.
        apply_move(w, k, Move::left);
        ++rewrites;
      }
    } else {
      for (std::size_t k = 0; k < w.anchors.size();) {
        if (angle_is_zero(w.slots[k + 1], detail::kAngleTol) || !detail::is_y_axis(w.anchors[k].phi)) {
          ++k;
          continue;
        }
        const std::size_t before = w.anchors.size();
        apply_move(w, k, Move::right);
        ++rewrites;
        if (w.anchors.size() == before) ++k;
      }
    }
  }
  return rewrites;
}

int balance_form(Form& f, double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw std::invalid_argument("balance: lambda must lie in [0, 1]");
  int rewrites = 0;
  for (;;) {
    double best = -1e-12;
    Wire* bw = nullptr;
    std::size_t bk = 0;
    Move bm = Move::left;
    for (Wire& w : f.wires) {
      for (std::size_t k = 0; k < w.anchors.size(); ++k) {
        if (!detail::is_y_axis(w.anchors[k].phi)) continue;
        const Local now = local_cost(w.anchors[k].theta, w.slots[k], w.slots[k + 1]);
        for (Move mv : {Move::left, Move::right}) {
          Local nx;
          if (!preview(w, k, mv, nx)) continue;
          const double delta = lambda * (nx.dur - now.dur) + (1 - lambda) * (nx.eps - now.eps);
          if (delta < best) {
            best = delta;
            bw = &w;
            bk = k;
            bm = mv;
          }
        }
      }
    }
    if (!bw) break;
    apply_move(*bw, bk, bm);
    ++rewrites;
  }
  return rewrites;
}

template <typename Fn>
Circuit on_form(const Circuit& c, Fn&& fn) {
  Form f = detail::to_form(c);
  fn(f);
  merge_form(f);
  return detail::from_form(f);
}

ComplexMatrix run_matrix(const std::vector<Gate>& run) {
  ComplexMatrix u = identity(2);
  for (const Gate& g : run) {
    Gate local = g;
    local.qubits = {0};
    u = gate_matrix(local) * u;
  }
  return u;
}

// Single equatorial pulse equal to u up to phase, if there is one.
std::optional<Gate> single_pulse(const ComplexMatrix& u, int q) {
  const double tol = 1e-9;
  if (std::abs(u(0, 0) - u(1, 1)) > tol) return std::nullopt;
  double theta = 0, phi = 0;
  const double c = std::abs(u(0, 0));
  if (c > 1e-6) {
    const cplx ph = u(0, 0) / c;
    theta = 2 * std::acos(std::min(1.0, c));
    phi = std::arg(cplx(0, 1) * u(1, 0) / ph);
  } else {
    theta = kPi;
    phi = std::arg(u(1, 0) / u(0, 1)) / 2;
  }
  Gate g = Gate::make(GateKind::R, {q}, {wrap_pi(theta), phi});
  Gate local = g;
  local.qubits = {0};
  if (!equiv_global_phase(gate_matrix(local), u, 1e-8)) return std::nullopt;
  return g;
}

bool is_identity_up_to_phase(const ComplexMatrix& u) {
  return std::abs(u(0, 1)) < 1e-9 && std::abs(u(1, 0)) < 1e-9 && std::abs(u(0, 0) - u(1, 1)) < 1e-9;
}

using RunAccept = std::function<bool(const std::vector<Gate>&, const std::vector<Gate>&)>;

Circuit resynth(const Circuit& c, const RunAccept& accept, int* rewrites) {
  std::vector<std::vector<std::size_t>> runs(static_cast<std::size_t>(c.n));
  std::vector<bool> dropped(c.gates.size(), false);
  std::map<std::size_t, std::vector<Gate>> inserts;
  int count = 0;

  auto flush = [&](int q) {
    auto& run = runs[static_cast<std::size_t>(q)];
    if (run.size() >= 2) {
      std::vector<Gate> old;
      for (std::size_t i : run) old.push_back(c.gates[i]);
      const ComplexMatrix u = run_matrix(old);
      std::vector<Gate> repl;
      if (!is_identity_up_to_phase(u)) {
        if (auto p = single_pulse(u, q)) {
          repl.push_back(*p);
        } else {
          for (Gate g : dec_u2(u).gates) {
            g.qubits = {q};
            repl.push_back(g);
          }
        }
      }
      if (repl.size() < old.size() && accept(old, repl)) {
        for (std::size_t i : run) dropped[i] = true;
        inserts[run.back()] = repl;
        ++count;
      }
    }
    run.clear();
  };

  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    if (g.qubits.size() == 1 && (g.kind == GateKind::RX || g.kind == GateKind::RY || g.kind == GateKind::R)) {
      runs[static_cast<std::size_t>(g.qubits[0])].push_back(i);
    } else {
      for (int q : g.qubits) flush(q);
    }
  }
  for (int q = 0; q < c.n; ++q) flush(q);

  Circuit out(c.n, c.level);
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    if (!dropped[i]) out.gates.push_back(c.gates[i]);
    if (auto it = inserts.find(i); it != inserts.end())
      for (const Gate& g : it->second) out.gates.push_back(g);
  }
  if (rewrites) *rewrites = count;
  return out;
}

double eps_sum(const Circuit& c, const MachineConfig& m) { return circuit_cost(c, m).e1.sum(Unit::eps); }

}  // namespace

std::pair<double, double> template_cd(double a, double b) {
  const double ar = wrap_pi(a);
  const double br = wrap_pi(b);
  const long long shifts = std::llround((b - br) / (2 * kPi));
  // RX(a) RY(b) RX(a) = cos(b/2)cos(a) I - i (cos(b/2)sin(a) X + sin(b/2) Y).
  const double cx = std::cos(br / 2) * std::sin(ar);
  const double cy = std::sin(br / 2);
  const double s = std::hypot(cx, cy);
  if (s < 1e-12) throw std::domain_error("template_cd: product is the identity");
  double c = 2 * std::atan2(s, std::cos(br / 2) * std::cos(ar));
  const double d = std::atan2(cy, cx);
  if (shifts % 2 != 0) c -= 2 * kPi;
  return {c, d};
}

Circuit cancel_merge(const Circuit& c) {
  return on_form(c, [](Form&) {});
}

Circuit rewrite_pair(const Circuit& c, PairMode mode) {
  return on_form(c, [&](Form& f) {
    merge_form(f);
    rewrite_pair_form(f, mode);
  });
}

Circuit commute_rx(const Circuit& c, RxDirection dir) {
  return on_form(c, [&](Form& f) {
    merge_form(f);
    commute_form(f, dir);
  });
}

Circuit fold_triples(const Circuit& c) {
  return on_form(c, [](Form& f) {
    merge_form(f);
    fold_triples_form(f);
  });
}

Circuit balance(const Circuit& c, double lambda) {
  return on_form(c, [&](Form& f) {
    merge_form(f);
    balance_form(f, lambda);
  });
}

Circuit resynthesize_runs(const Circuit& c) {
  return resynth(c, [](const std::vector<Gate>&, const std::vector<Gate>&) { return true; }, nullptr);
}

Circuit lower_pulses(const Circuit& c) {
  Circuit out(c.n, Level::Physical);
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::RX:
      case GateKind::RY:
      case GateKind::R: {
        double theta = g.params.at(0);
        double phi = g.kind == GateKind::RX ? 0.0 : g.kind == GateKind::RY ? kPi / 2 : g.params.at(1);
        theta = wrap_pi(theta);
        if (std::abs(theta) < detail::kAngleTol) break;
        phi = wrap_pi(phi);
        if (std::abs(phi) < 1e-12) phi = 0.0;
        out.gates.push_back(Gate::make(GateKind::R, g.qubits, {theta, phi}));
        break;
      }
      case GateKind::XX:
        out.gates.push_back(g);
        break;
      default:
        throw std::invalid_argument(std::string("lower_pulses: residual logical gate ") + mnemonic(g.kind));
    }
  }
  return out;
}

Circuit schedule_layers(const Circuit& c) {
  Circuit out(c.n, c.level);
  std::size_t i = 0;
  while (i < c.gates.size()) {
    if (c.gates[i].qubits.size() != 1) {
      out.gates.push_back(c.gates[i++]);
      continue;
    }
    std::vector<std::vector<Gate>> queues(static_cast<std::size_t>(c.n));
    for (; i < c.gates.size() && c.gates[i].qubits.size() == 1; ++i)
      queues[static_cast<std::size_t>(c.gates[i].qubits[0])].push_back(c.gates[i]);
    std::vector<std::size_t> head(queues.size(), 0);
    for (;;) {
      // Group the current heads by duration and emit the largest group.
      std::vector<std::pair<double, std::vector<std::size_t>>> groups;
      for (std::size_t q = 0; q < queues.size(); ++q) {
        if (head[q] >= queues[q].size()) continue;
        const double d = std::abs(queues[q][head[q]].params.at(0));
        auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& gr) { return std::abs(gr.first - d) < 1e-9; });
        if (it == groups.end()) groups.push_back({d, {q}});
        else it->second.push_back(q);
      }
      if (groups.empty()) break;
      auto best = std::max_element(groups.begin(), groups.end(), [](const auto& x, const auto& y) {
        if (x.second.size() != y.second.size()) return x.second.size() < y.second.size();
        return x.first < y.first;  // prefer the longer pulse on ties
      });
      for (std::size_t q : best->second) out.gates.push_back(queues[q][head[q]++]);
    }
  }
  return out;
}

double objective_score(const Circuit& c, const RewritePlan& plan, const MachineConfig& m) {
  const CostVector cv = circuit_cost(c, m);
  switch (plan.objective) {
    case Objective::time:
      return cv.duration;
    case Objective::error:
      return cv.e1.sum(Unit::eps) * m.epsilon + cv.e1.sum(Unit::E) * m.bigE;
    case Objective::balanced:
      return plan.lambda * cv.duration / m.tau1q + (1 - plan.lambda) * cv.e1.sum(Unit::eps);
  }
  return 0.0;
}

int count_1q(const Circuit& c) {
  return static_cast<int>(std::count_if(c.gates.begin(), c.gates.end(), [](const Gate& g) { return g.qubits.size() == 1; }));
}

int count_2q(const Circuit& c) {
  return static_cast<int>(std::count_if(c.gates.begin(), c.gates.end(), [](const Gate& g) { return g.qubits.size() == 2; }));
}

int count_rx_form(const Circuit& c) {
  int n = 0;
  for (const Gate& g : c.gates) {
    if (g.kind == GateKind::RX) ++n;
    if (g.kind == GateKind::R) {
      double th = g.params[0], ph = g.params[1];
      detail::canon_axis(th, ph);
      if (detail::is_x_axis(ph)) ++n;
    }
  }
  return n;
}

namespace {

OptimizeResult optimize_segment(const Circuit& c, const RewritePlan& plan, const MachineConfig& m) {
  OptimizeResult res;
  Circuit cur = c;
  auto score = [&](const Circuit& x) { return objective_score(x, plan, m); };

  auto record = [&](const std::string& name, const Circuit& before, Circuit after, int rewrites, bool guarded) {
    PassStats st;
    st.name = name;
    st.pulses_before = count_1q(before);
    st.duration_before = circuit_cost(before, m).duration;
    st.eps_before = eps_sum(before, m);
    st.rewrites = rewrites;
    if (guarded && score(after) > score(before) + 1e-9) {
      st.reverted = true;
      after = before;
    }
    st.pulses_after = count_1q(after);
    st.duration_after = circuit_cost(after, m).duration;
    st.eps_after = eps_sum(after, m);
    res.stats.push_back(st);
    return after;
  };

  {
    Form f = detail::to_form(cur);
    const int r = merge_form(f);
    cur = record("cancel_merge", cur, detail::from_form(f), r, false);
  }
  {
    Form f = detail::to_form(cur);
    int r = 0;
    std::string name;
    switch (plan.objective) {
      case Objective::time:
        name = "fold_triples";
        r = fold_triples_form(f);
        break;
      case Objective::error:
        name = "commute_rx";
        r = commute_form(f, plan.rx_direction);
        break;
      case Objective::balanced:
        name = "balance";
        r = balance_form(f, plan.lambda);
        break;
    }
    merge_form(f);
    cur = record(name, cur, detail::from_form(f), r, true);
  }
  {
    auto accept = [&](const std::vector<Gate>& old, const std::vector<Gate>& repl) {
      Circuit a(c.n), b(c.n);
      a.gates = old;
      b.gates = repl;
      // Keep the RX pulses commute_rx gathered; a new X-axis pulse mid-wire cannot move.
      if (plan.objective == Objective::error && count_rx_form(b) > count_rx_form(a)) return false;
      return score(b) <= score(a) + 1e-12;
    };
    int r = 0;
    Circuit after = resynth(cur, accept, &r);
    cur = record("resynthesize", cur, after, r, true);
  }
  cur = record("lower_pulses", cur, lower_pulses(cur), 0, false);
  cur = record("schedule_layers", cur, schedule_layers(cur), 0, false);
  res.circuit = cur;
  return res;
}

void merge_stats(std::vector<PassStats>& into, const std::vector<PassStats>& from) {
  for (const PassStats& s : from) {
    auto it = std::find_if(into.begin(), into.end(), [&](const PassStats& x) { return x.name == s.name; });
    if (it == into.end()) {
      into.push_back(s);
      continue;
    }
    it->pulses_before += s.pulses_before;
    it->pulses_after += s.pulses_after;
    it->rewrites += s.rewrites;
    it->duration_before += s.duration_before;
    it->duration_after += s.duration_after;
    it->eps_before += s.eps_before;
    it->eps_after += s.eps_after;
    it->reverted = it->reverted || s.reverted;
  }
}

}  // namespace

OptimizeResult optimize(const Circuit& c, const RewritePlan& plan, const MachineConfig& m) {
  OptimizeResult res;
  res.circuit = Circuit(c.n, Level::Physical);
  Circuit seg(c.n, c.level);
  auto run_seg = [&] {
    if (seg.empty()) return;
    OptimizeResult r = optimize_segment(seg, plan, m);
    res.circuit.append(r.circuit);
    merge_stats(res.stats, r.stats);
    seg.gates.clear();
  };
  for (const Gate& g : c.gates) {
    if (g.kind == GateKind::Oracle) {
      run_seg();
      res.circuit.gates.push_back(g);
      res.circuit.level = Level::Logical;
    } else {
      seg.gates.push_back(g);
    }
  }
  run_seg();
  return res;
}

}  // namespace ionc
