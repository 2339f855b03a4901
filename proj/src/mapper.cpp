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

#include "ionc/mapper.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "ionc/gatelib.hpp"
#include "ionc/optimizer.hpp"

namespace ionc {

namespace {

constexpr int kExhaustiveLimit = 7;

// Two-qubit interactions that survive lowering, as logical pairs.
std::vector<std::pair<int, int>> interactions(const Circuit& c) {
  std::vector<std::pair<int, int>> out;
  for (const Gate& g : expand_composites(expand_oracles(c)).gates) {
    if (g.qubits.size() != 2) continue;
    if (g.kind == GateKind::Swap) {
      for (int k = 0; k < 3; ++k) out.push_back({g.qubits[0], g.qubits[1]});
      continue;
    }
    if ((g.kind == GateKind::CXpow || g.kind == GateKind::CYpow || g.kind == GateKind::CZpow ||
         g.kind == GateKind::XX) &&
        std::abs(g.params[0]) < 1e-12)
      continue;
    out.push_back({g.qubits[0], g.qubits[1]});
  }
  return out;
}

double pair_cost(const std::vector<std::pair<int, int>>& uses, const std::vector<int>& perm, const MachineConfig& m) {
  double s = 0;
  for (auto [a, b] : uses) s += m.two_qubit_error(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
  return s;
}

// Cancellations depend on the mapping only through the chi signs of used pairs.
std::vector<int> sign_pattern(const std::vector<std::pair<int, int>>& pairs, const std::vector<int>& perm,
                              const MachineConfig& m) {
  std::vector<int> key;
  key.reserve(pairs.size());
  for (auto [a, b] : pairs) key.push_back(m.chi_sign(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]));
  return key;
}

void check_perm(const std::vector<int>& perm, int n_logical, int machine_n) {
  if (static_cast<int>(perm.size()) != n_logical) throw std::invalid_argument("mapping size does not match circuit width");
  std::set<int> seen;
  for (int p : perm) {
    if (p < 0 || p >= machine_n) throw std::invalid_argument("mapping targets an ion outside the machine");
    if (!seen.insert(p).second) throw std::invalid_argument("mapping is not injective");
  }
}

class Scorer {
 public:
  Scorer(const Circuit& c, const MachineConfig& m) : c_(c), m_(m), uses_(interactions(c)) {
    std::set<std::pair<int, int>> ps;
    for (auto [a, b] : uses_) ps.insert({std::min(a, b), std::max(a, b)});
    pairs_.assign(ps.begin(), ps.end());
  }

  MappingScore operator()(const std::vector<int>& perm) {
    MappingScore s;
    s.pair_cost = pair_cost(uses_, perm, m_);
    const auto key = sign_pattern(pairs_, perm, m_);
    auto it = memo_.find(key);
    if (it == memo_.end()) {
      const int saved = choose_signs(apply_mapping(c_, perm, m_.n), m_).savings;
      it = memo_.emplace(key, saved).first;
    }
    s.cancellations = it->second;
    return s;
  }

  const std::vector<std::pair<int, int>>& uses() const { return uses_; }

 private:
  const Circuit& c_;
  const MachineConfig& m_;
  std::vector<std::pair<int, int>> uses_;
  std::vector<std::pair<int, int>> pairs_;
  std::map<std::vector<int>, int> memo_;
};

Mapping exhaustive(const Circuit& c, const MachineConfig& m) {
  Scorer score(c, m);
  const int k = c.n;
  Mapping best;
  bool have = false;
  // Injections in lexicographic order: choose k ions, then permute.
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::vector<bool> used(static_cast<std::size_t>(m.n), false);
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == k) {
      const MappingScore s = score(perm);
      if (!have || s.better_than(best.score)) {
        best.perm = perm;
        best.score = s;
        have = true;
      }
      return;
    }
    for (int ion = 0; ion < m.n; ++ion) {
      if (used[static_cast<std::size_t>(ion)]) continue;
      used[static_cast<std::size_t>(ion)] = true;
      perm[static_cast<std::size_t>(depth)] = ion;
      self(self, depth + 1);
      used[static_cast<std::size_t>(ion)] = false;
    }
  };
  rec(rec, 0);
  return best;
}

Mapping greedy(const Circuit& c, const MachineConfig& m) {
  Scorer score(c, m);
  const int k = c.n;
  std::vector<int> degree(static_cast<std::size_t>(k), 0);
  for (auto [a, b] : score.uses()) {
    ++degree[static_cast<std::size_t>(a)];
    ++degree[static_cast<std::size_t>(b)];
  }
  std::vector<int> order(static_cast<std::size_t>(k));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return degree[static_cast<std::size_t>(a)] > degree[static_cast<std::size_t>(b)]; });

  Mapping best;
  bool have = false;
  auto consider = [&](const std::vector<int>& perm, const MappingScore& s) {
    if (!have || s.better_than(best.score) || (s.ties(best.score) && perm < best.perm)) {
      best.perm = perm;
      best.score = s;
      have = true;
    }
  };

  for (int start = 0; start < m.n; ++start) {
    std::vector<int> perm(static_cast<std::size_t>(k), -1);
    std::vector<bool> used(static_cast<std::size_t>(m.n), false);
    for (std::size_t i = 0; i < order.size(); ++i) {
      const int q = order[i];
      int pick = -1;
      double pick_cost = 0;
      for (int ion = 0; ion < m.n; ++ion) {
        if (used[static_cast<std::size_t>(ion)]) continue;
        if (i == 0 && ion != start) continue;
        double cost = 0;
        for (auto [a, b] : score.uses()) {
          const int other = a == q ? b : b == q ? a : -1;
          if (other < 0 || perm[static_cast<std::size_t>(other)] < 0) continue;
          cost += m.two_qubit_error(ion, perm[static_cast<std::size_t>(other)]);
        }
        if (pick < 0 || cost < pick_cost - 1e-12) {
          pick = ion;
          pick_cost = cost;
        }
      }
      if (pick < 0) break;
      perm[static_cast<std::size_t>(q)] = pick;
      used[static_cast<std::size_t>(pick)] = true;
    }
    if (std::find(perm.begin(), perm.end(), -1) != perm.end()) continue;

    // 2-opt: swap two logical qubits' ions, or move one onto a free ion.
    MappingScore cur = score(perm);
    for (bool improved = true; improved;) {
      improved = false;
      for (int a = 0; a < k && !improved; ++a) {
        for (int b = a + 1; b < k && !improved; ++b) {
          std::vector<int> nx = perm;
          std::swap(nx[static_cast<std::size_t>(a)], nx[static_cast<std::size_t>(b)]);
          const MappingScore s = score(nx);
          if (s.better_than(cur)) {
            perm = nx;
            cur = s;
            improved = true;
          }
        }
        for (int ion = 0; ion < m.n && !improved; ++ion) {
          if (std::find(perm.begin(), perm.end(), ion) != perm.end()) continue;
          std::vector<int> nx = perm;
          nx[static_cast<std::size_t>(a)] = ion;
          const MappingScore s = score(nx);
          if (s.better_than(cur)) {
            perm = nx;
            cur = s;
            improved = true;
          }
        }
      }
    }
    consider(perm, cur);
  }
  return best;
}

}  // namespace

bool MappingScore::better_than(const MappingScore& o) const {
  if (pair_cost < o.pair_cost - 1e-12) return true;
  if (pair_cost > o.pair_cost + 1e-12) return false;
  return cancellations > o.cancellations;
}

bool MappingScore::ties(const MappingScore& o) const {
  return std::abs(pair_cost - o.pair_cost) <= 1e-12 && cancellations == o.cancellations;
}

Circuit apply_mapping(const Circuit& c, const std::vector<int>& perm, int machine_n) {
  check_perm(perm, c.n, machine_n);
  Circuit out(machine_n, c.level);
  for (Gate g : c.gates) {
    for (int& q : g.qubits) q = perm.at(static_cast<std::size_t>(q));
    out.gates.push_back(std::move(g));
  }
  return out;
}

MappingScore score_mapping(const Circuit& c, const std::vector<int>& perm, const MachineConfig& m) {
  check_perm(perm, c.n, m.n);
  Scorer s(c, m);
  return s(perm);
}

Mapping find_mapping(const Circuit& c, const MachineConfig& m, MapStrategy strategy) {
  if (c.n > m.n) throw std::invalid_argument("circuit needs " + std::to_string(c.n) + " qubits but the machine has " + std::to_string(m.n));
  if (c.n == 0) return {};
  if (strategy == MapStrategy::exhaustive && c.n <= kExhaustiveLimit) return exhaustive(c, m);
  return greedy(c, m);
}

SwapFree eliminate_swaps(const Circuit& c) {
  SwapFree out;
  out.circuit = Circuit(c.n, c.level);
  std::vector<int> w(static_cast<std::size_t>(c.n));
  std::iota(w.begin(), w.end(), 0);
  for (const Gate& g : c.gates) {
    if (g.kind == GateKind::Swap) {
      std::swap(w[static_cast<std::size_t>(g.qubits[0])], w[static_cast<std::size_t>(g.qubits[1])]);
      continue;
    }
    Gate r = g;
    for (int& q : r.qubits) q = w.at(static_cast<std::size_t>(q));
    out.circuit.gates.push_back(std::move(r));
  }
  out.perm = w;
  return out;
}

}  // namespace ionc
