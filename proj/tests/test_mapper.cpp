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

#include <gtest/gtest.h>

#include <functional>
#include <numeric>

#include "ionc/mapper.hpp"
#include "ionc/optimizer.hpp"
#include "test_util.hpp"

namespace ionc {
namespace {

std::vector<std::vector<int>> all_injections(int k, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::function<void()> rec = [&] {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = 0; i < n; ++i) {
      if (used[static_cast<std::size_t>(i)]) continue;
      used[static_cast<std::size_t>(i)] = true;
      cur.push_back(i);
      rec();
      cur.pop_back();
      used[static_cast<std::size_t>(i)] = false;
    }
  };
  rec();
  return out;
}

TEST(Mapper, ApplyMappingRelabels) {
  Circuit c(2);
  c.add(GateKind::CNOT, {0, 1});
  const Circuit out = apply_mapping(c, {3, 1}, 5);
  EXPECT_EQ(out.n, 5);
  EXPECT_EQ(out.gates[0].qubits, (std::vector<int>{3, 1}));
  EXPECT_THROW(apply_mapping(c, {1, 1}, 5), std::invalid_argument);
  EXPECT_THROW(apply_mapping(c, {0, 5}, 5), std::invalid_argument);
  EXPECT_THROW(apply_mapping(c, {0}, 5), std::invalid_argument);
}

TEST(Mapper, SingleQubitGoesToFirstIon) {
  Circuit c(1);
  c.add(GateKind::H, {0});
  EXPECT_EQ(find_mapping(c, default_machine()).perm, std::vector<int>{0});
}

TEST(Mapper, OneGateCircuitTiesOnCancellations) {
  const MachineConfig m = default_machine();
  Circuit c(2);
  c.add(GateKind::CNOT, {0, 1});
  const MappingScore first = score_mapping(c, {0, 1}, m);
  for (const auto& p : all_injections(2, 5)) EXPECT_TRUE(score_mapping(c, p, m).ties(first));
}

TEST(Mapper, ToffoliMappingIsOptimalAmongAllInjections) {
  const MachineConfig m = default_machine();
  Circuit t(3);
  t.add(GateKind::Toffoli, {0, 1, 2});
  const auto inj = all_injections(3, 5);
  ASSERT_EQ(inj.size(), 60u);
  const Mapping best = find_mapping(t, m);
  for (const auto& p : inj) EXPECT_FALSE(score_mapping(t, p, m).better_than(best.score));
  // The published ion choice is among the optimal ones.
  EXPECT_TRUE(score_mapping(t, {1, 3, 4}, m).ties(best.score));
}

TEST(Mapper, AvoidsBadPairWhenErrorsDiffer) {
  MachineConfig m = default_machine();
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) m.pair_error[{i, j}] = (i == 0 ? 0.2 : 0.01);
  Circuit c(2);
  c.add(GateKind::CNOT, {0, 1}).add(GateKind::CNOT, {1, 0});
  const Mapping mp = find_mapping(c, m);
  EXPECT_NE(mp.perm[0], 0);
  EXPECT_NE(mp.perm[1], 0);
  EXPECT_EQ(find_mapping(c, m, MapStrategy::greedy).score.pair_cost, mp.score.pair_cost);
}

TEST(Mapper, TooWideCircuitIsRejected) {
  EXPECT_THROW(find_mapping(Circuit(6), default_machine()), std::invalid_argument);
}

TEST(Mapper, Qft5UsesEveryIonReproducibly) {
  const MachineConfig m = default_machine();
  Circuit c(5);
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) c.add(GateKind::CZpow, {j, i}, {std::ldexp(1.0, i - j)});
  const Mapping a = find_mapping(c, m), b = find_mapping(c, m);
  EXPECT_EQ(a.perm, b.perm);
  std::vector<int> sorted = a.perm;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(sorted, (std::vector<int>{0, 1, 2, 3, 4}));
}

TEST(SwapElimination, RelabelsLaterGates) {
  Circuit c(3);
  c.add(GateKind::Swap, {0, 1}).add(GateKind::CNOT, {0, 2});
  const SwapFree sf = eliminate_swaps(c);
  ASSERT_EQ(sf.circuit.gates.size(), 1u);
  EXPECT_EQ(sf.circuit.gates[0].qubits, (std::vector<int>{1, 2}));
  EXPECT_EQ(sf.perm, (std::vector<int>{1, 0, 2}));
  Circuit plain(2);
  plain.add(GateKind::H, {0});
  EXPECT_EQ(eliminate_swaps(plain).perm, (std::vector<int>{0, 1}));
}

// Wire perm[q] of the swap-free output carries logical output q.
TEST(SwapEliminationProperty, SimulationAgreesAfterRelabeling) {
  std::mt19937_64 rng(515);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + testing::pick(rng, 3);
    const Circuit c = testing::random_logical(rng, n, 12);
    const SwapFree sf = eliminate_swaps(c);
    for (const Gate& g : sf.circuit.gates) ASSERT_NE(g.kind, GateKind::Swap);
    for (std::uint64_t b = 0; b < (1ULL << n); ++b) {
      const StateVector want = simulate(c, basis_state(n, b));
      const StateVector got = simulate(sf.circuit, basis_state(n, b));
      for (std::uint64_t x = 0; x < (1ULL << n); ++x) {
        std::uint64_t y = 0;  // index of x in the relabeled register
        for (int q = 0; q < n; ++q)
          if ((x >> (n - 1 - q)) & 1U) y |= 1ULL << (n - 1 - sf.perm[static_cast<std::size_t>(q)]);
        ASSERT_LT(std::abs(want[static_cast<Eigen::Index>(x)] - got[static_cast<Eigen::Index>(y)]), 1e-12);
      }
    }
  }
}

TEST(MapperProperty, ScoreInvariantUnderJointRelabeling) {
  std::mt19937_64 rng(99);
  const MachineConfig m = default_machine();
  for (int trial = 0; trial < 20; ++trial) {
    const Circuit c = testing::random_logical(rng, 3, 8, false);
    const std::vector<int> p = testing::distinct(rng, 5, 3);
    const std::vector<int> sigma = testing::distinct(rng, 3, 3);
    Circuit relabeled(3);
    for (Gate g : c.gates) {
      for (int& q : g.qubits) q = sigma[static_cast<std::size_t>(q)];
      relabeled.add(g);
    }
    std::vector<int> p2(3);
    for (int q = 0; q < 3; ++q) p2[static_cast<std::size_t>(sigma[static_cast<std::size_t>(q)])] = p[static_cast<std::size_t>(q)];
    EXPECT_TRUE(score_mapping(c, p, m).ties(score_mapping(relabeled, p2, m)));
  }
}

TEST(MapperProperty, GreedyFindsUniqueOptimum) {
  std::mt19937_64 rng(1234);
  MachineConfig m = default_machine();
  int unique = 0;
  for (int trial = 0; trial < 40; ++trial) {
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) m.pair_error[{i, j}] = testing::uniform(rng, 0.01, 0.1);
    const Circuit c = testing::random_logical(rng, 3, 6, false);
    std::vector<MappingScore> scores;
    for (const auto& p : all_injections(3, 5)) scores.push_back(score_mapping(c, p, m));
    int best = 0;
    for (std::size_t i = 1; i < scores.size(); ++i)
      if (scores[i].better_than(scores[static_cast<std::size_t>(best)])) best = static_cast<int>(i);
    int ties = 0;
    for (const auto& s : scores) ties += s.ties(scores[static_cast<std::size_t>(best)]);
    if (ties != 1) continue;
    ++unique;
    const auto inj = all_injections(3, 5);
    EXPECT_EQ(find_mapping(c, m).perm, inj[static_cast<std::size_t>(best)]);
    EXPECT_EQ(find_mapping(c, m, MapStrategy::greedy).perm, inj[static_cast<std::size_t>(best)]);
  }
  EXPECT_GT(unique, 0);
}

// The sign search is exact: no assignment merges to fewer pulses.
TEST(SignSearchProperty, MatchesBruteForce) {
  std::mt19937_64 rng(2718);
  const MachineConfig m = default_machine();
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + testing::pick(rng, 2);
    const Circuit c = apply_mapping(testing::random_logical(rng, n, 4, false), testing::distinct(rng, 5, n), 5);
    SignVars sv = choose_signs(c, m);
    ASSERT_TRUE(sv.exact);
    const int chosen = count_1q(cancel_merge(lower_with_signs(sv, m)));
    std::vector<int*> vars;
    for (auto& v : sv.values)
      for (int& x : v) vars.push_back(&x);
    if (vars.size() > 12) continue;
    int best = 1 << 30;
    for (std::uint64_t mask = 0; mask < (1ULL << vars.size()); ++mask) {
      for (std::size_t i = 0; i < vars.size(); ++i) *vars[i] = (mask >> i) & 1U ? -1 : 1;
      best = std::min(best, count_1q(cancel_merge(lower_with_signs(sv, m))));
    }
    EXPECT_EQ(chosen, best);
  }
}

}  // namespace
}  // namespace ionc
