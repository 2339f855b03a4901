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

#include "ionc/cost.hpp"
#include "ionc/ir.hpp"
#include "ionc/linalg.hpp"

namespace ionc {

ComplexMatrix r_matrix(double theta, double phi);
ComplexMatrix rx_matrix(double theta);
ComplexMatrix ry_matrix(double theta);
ComplexMatrix rz_matrix(double theta);
ComplexMatrix xx_matrix(double chi);
// Principal power: X^a = e^{i pi a/2} RX(a pi).
ComplexMatrix xpow_matrix(double alpha);
ComplexMatrix controlled(const ComplexMatrix& u, int controls = 1);
// Throws for Oracle gates.
ComplexMatrix gate_matrix(const Gate& g);

struct SignVar {
  std::string name;
  int value = 1;
};

// Gates are in circuit order on local qubits 0..n-1.
struct Decomposition {
  int n = 1;
  std::vector<Gate> gates;
  cplx global_phase{1.0, 0.0};
  std::vector<SignVar> free_vars;
  CostVector cost_hint;

  Circuit circuit() const;
  ComplexMatrix matrix() const;
};

Decomposition dec_rx(double theta);
Decomposition dec_ry(double theta);
Decomposition dec_rz_3pulse(double theta, int v);
Decomposition dec_rz_2pulse(double theta, double x);
Decomposition dec_h(int variant);

struct U2Params {
  double a = 0, b = 0, c = 0, d = 0;
};
U2Params u2_params(const ComplexMatrix& u);
ComplexMatrix u2_matrix(const U2Params& p);
Decomposition dec_u2(const ComplexMatrix& u);
// X-Y-X Euler angles (a,b,c): u ~ RX(a) RY(b) RX(c) as a matrix product.
struct XYX {
  double a = 0, b = 0, c = 0;
};
XYX xyx_angles(const ComplexMatrix& u);

Decomposition dec_cnot(int s, int v);
Decomposition dec_cxpow(double alpha, int s_hw);
Decomposition dec_cypow(double alpha, int s_hw, int v_pre = 1, int v_post = 1);
Decomposition dec_czpow(double alpha, int s_hw, int h_variant = 1);
Decomposition dec_cz(int s, int v1, int v2);
// One-XX controlled-Z^alpha; the second wire's sign is tied to v1 unless |alpha| = 1.
Decomposition dec_czpow_sym(double alpha, int s_hw, int v1, int v2);
int czpow_sym_partner(double alpha, int s_hw, int v1);

Circuit dec_toffoli();
Circuit dec_toffoli4();
// Inline Toffoli/Toffoli-4 gates; oracles stay opaque.
Circuit expand_composites(const Circuit& c);
// Replace every oracle by its body.
Circuit expand_oracles(const Circuit& c);

bool is_zcz_circuit(const Circuit& c);
// v holds one sign per qubit of c; qubit indices are machine indices.
Decomposition compile_zcz(const Circuit& c, const std::vector<int>& v, const MachineConfig& m);

}  // namespace ionc
