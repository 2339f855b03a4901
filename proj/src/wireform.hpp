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

// Per-wire view of an RX/RY/R/XX circuit.
//
// Each wire is a list of anchors (pulses whose axis is not X) separated by
// slots holding the summed RX angle between consecutive anchors. RX commutes
// with XX, so a slot may sit anywhere between its two anchors; anchors keep the
// XX segment they were found in.

#pragma once

#include <vector>

#include "ionc/ir.hpp"

namespace ionc::detail {

inline constexpr double kAngleTol = 1e-9;

struct Anchor {
  double theta;
  double phi;  // in [0, pi)
  int seg;
};

struct Wire {
  std::vector<Anchor> anchors;
  std::vector<double> slots{0.0};  // slots.size() == anchors.size() + 1
  int nseg = 1;

  void add_rx(double theta) { slots.back() += theta; }
  void add_pulse(double theta, double phi);
  void add_xx() { ++nseg; }

  int pulses() const;
  double duration_pi() const;  // total |angle| in units of pi
  double eps() const;          // summed |sin angle|
};

// R(theta, phi + pi) = R(-theta, phi): bring phi into [0, pi).
void canon_axis(double& theta, double& phi);
bool is_x_axis(double phi);
bool is_y_axis(double phi);

// Fixpoint of zero removal and same-axis merging; returns rewrites applied.
int merge_wire(Wire& w);

struct Form {
  int n = 0;
  Level level = Level::Logical;
  std::vector<Gate> xx;
  std::vector<Wire> wires;
};

Form to_form(const Circuit& c);
Circuit from_form(const Form& f);

}  // namespace ionc::detail
