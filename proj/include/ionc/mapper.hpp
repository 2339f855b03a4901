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

#pragma once

#include <utility>
#include <vector>

#include "ionc/ir.hpp"

namespace ionc {

struct MappingScore {
  double pair_cost = 0.0;  // sum of E over two-qubit uses, lower is better
  int cancellations = 0;   // pulses removed by sign-aware merging, higher is better

  bool better_than(const MappingScore& o) const;
  bool ties(const MappingScore& o) const;
};

struct Mapping {
  std::vector<int> perm;  // logical -> ion
  MappingScore score;
};

enum class MapStrategy { exhaustive, greedy };

// Relabel a logical circuit onto machine ions.
Circuit apply_mapping(const Circuit& c, const std::vector<int>& perm, int machine_n);

MappingScore score_mapping(const Circuit& c, const std::vector<int>& perm, const MachineConfig& m);
Mapping find_mapping(const Circuit& c, const MachineConfig& m, MapStrategy strategy = MapStrategy::exhaustive);

struct SwapFree {
  Circuit circuit;
  // Output qubit q of the original circuit is read from wire perm[q].
  std::vector<int> perm;
};

SwapFree eliminate_swaps(const Circuit& c);

}  // namespace ionc
