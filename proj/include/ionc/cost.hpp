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
#include <vector>

#include "ionc/ir.hpp"

namespace ionc {

enum class Unit { eps, E };

struct ErrorTerm {
  double coefficient = 0.0;
  Unit unit = Unit::eps;
  int multiplicity = 0;
};

// Raw per-gate entries are kept so a per-pair E can be applied in fidelity();
// terms() merges them for reporting.
class Ledger {
 public:
  struct Entry {
    double coefficient;
    Unit unit;
    int q0 = -1, q1 = -1;
  };

  void add(double coefficient, Unit unit, int q0 = -1, int q1 = -1);
  void merge(const Ledger& other);
  const std::vector<Entry>& entries() const { return entries_; }
  std::vector<ErrorTerm> terms() const;
  double sum(Unit u) const;
  bool empty() const { return entries_.empty(); }

  // "4 × 0.707107ε + 4 × ε + 2 × E"
  std::string render_e1() const;
  // "4 × πε/4 + 10 × πε + 10 × E"
  std::string render_e2() const;

 private:
  std::vector<Entry> entries_;
};

struct CostVector {
  double duration = 0.0;  // us
  Ledger e1;
  Ledger e2;

  CostVector& operator+=(const CostVector& o);
  const Ledger& ledger(ErrorModel m) const { return m == ErrorModel::e1 ? e1 : e2; }
};

// Accepts R and XX, plus RX/RY which cost as R(theta,0) and R(theta,pi/2).
CostVector gate_cost(const Gate& g, const MachineConfig& m);
CostVector circuit_cost(const Circuit& c, const MachineConfig& m);
double fidelity(const CostVector& v, ErrorModel model, const MachineConfig& m);

struct Lemma1Bound {
  int gate_bound = 0;      // single-qubit pulses
  int total_bound = 0;     // pulses plus XX gates
  double time_bound = 0.0; // us of single-qubit time
  int error_bound = 0;     // multiples of epsilon
};

Lemma1Bound lemma1_bound(int n, int G, double tau1q = 20.0);

}  // namespace ionc
