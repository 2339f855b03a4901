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

#include <string>
#include <utility>
#include <vector>

#include "ionc/cost.hpp"
#include "ionc/ir.hpp"

namespace ionc {

enum class Objective { time, error, balanced };
enum class RxDirection { left, right };
enum class PairMode { fold_left, fold_right };

struct RewritePlan {
  Objective objective = Objective::time;
  double lambda = 0.5;  // balanced only
  RxDirection rx_direction = RxDirection::left;
};

struct PassStats {
  std::string name;
  int pulses_before = 0;
  int pulses_after = 0;
  int rewrites = 0;
  double duration_before = 0.0;
  double duration_after = 0.0;
  double eps_before = 0.0;  // summed e1 epsilon coefficients
  double eps_after = 0.0;
  bool reverted = false;
};

// Sign choices for a logical circuit after composite expansion.
struct SignVars {
  Circuit expanded;
  std::vector<std::vector<int>> values;  // per expanded gate
  int savings = 0;                        // pulses removed by merging
  bool exact = true;                      // false when local search was used
};

SignVars choose_signs(const Circuit& logical, const MachineConfig& m);
// Decompose with the given signs into RX/RY/XX gates (machine indices).
Circuit lower_with_signs(const SignVars& sv, const MachineConfig& m);

Circuit cancel_merge(const Circuit& c);
// Throws std::domain_error when RX(a)RY(b)RX(a) is the identity up to phase.
std::pair<double, double> template_cd(double a, double b);
Circuit rewrite_pair(const Circuit& c, PairMode mode);
Circuit commute_rx(const Circuit& c, RxDirection dir);
Circuit fold_triples(const Circuit& c);
Circuit balance(const Circuit& c, double lambda);
Circuit resynthesize_runs(const Circuit& c);
Circuit lower_pulses(const Circuit& c);
Circuit schedule_layers(const Circuit& c);

double objective_score(const Circuit& c, const RewritePlan& plan, const MachineConfig& m);

struct OptimizeResult {
  Circuit circuit;
  std::vector<PassStats> stats;
};

OptimizeResult optimize(const Circuit& c, const RewritePlan& plan, const MachineConfig& m);

int count_1q(const Circuit& c);
int count_2q(const Circuit& c);
// R pulses whose axis is X (phi = 0 mod pi) plus RX gates.
int count_rx_form(const Circuit& c);

}  // namespace ionc
