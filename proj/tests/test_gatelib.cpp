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

#include <unsupported/Eigen/MatrixFunctions>

#include "ionc/gatelib.hpp"
#include "test_util.hpp"

namespace ionc {
namespace {

const cplx I{0.0, 1.0};

ComplexMatrix pauli(char p) {
  ComplexMatrix m(2, 2);
  if (p == 'X') m << 0, 1, 1, 0;
  if (p == 'Y') m << 0, -I, I, 0;
  if (p == 'Z') m << 1, 0, 0, -1;
  return m;
}

// Reference generators, exponentiated numerically.
ComplexMatrix r_ref(double theta, double phi) {
  const ComplexMatrix gen = std::cos(phi) * pauli('X') + std::sin(phi) * pauli('Y');
  return (-I * (theta / 2) * gen).exp();
}

ComplexMatrix xx_ref(double chi) { return (-I * chi * kron(pauli('X'), pauli('X'))).exp(); }

ComplexMatrix ctrl_ref(const ComplexMatrix& u) {
  ComplexMatrix m = ComplexMatrix::Identity(4, 4);
  m.bottomRightCorner(2, 2) = u;
  return m;
}

// X^alpha via its spectral decomposition: eigenvalues 1 and e^{i pi alpha}.
ComplexMatrix xpow_ref(double a) {
  ComplexMatrix plus(2, 2), minus(2, 2);
  plus << 0.5, 0.5, 0.5, 0.5;
  minus << 0.5, -0.5, -0.5, 0.5;
  return plus + std::exp(I * kPi * a) * minus;
}

void expect_equiv(const ComplexMatrix& got, const ComplexMatrix& want, const std::string& what) {
  EXPECT_TRUE(equiv_global_phase(got, want, 1e-9)) << what << "\n" << got << "\nvs\n" << want;
}

TEST(GateMatrices, PulsesMatchExponentials) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 50; ++i) {
    const double t = testing::uniform(rng, -2 * kPi, 2 * kPi), p = testing::uniform(rng, -kPi, kPi);
    EXPECT_LT(max_abs_diff(r_matrix(t, p), r_ref(t, p)), 1e-12);
    const double chi = testing::uniform(rng, -kPi / 2, kPi / 2);
    EXPECT_LT(max_abs_diff(xx_matrix(chi), xx_ref(chi)), 1e-12);
  }
  EXPECT_LT(max_abs_diff(rx_matrix(0.3), (-I * 0.15 * pauli('X')).exp()), 1e-14);
  EXPECT_LT(max_abs_diff(ry_matrix(0.3), (-I * 0.15 * pauli('Y')).exp()), 1e-14);
  EXPECT_LT(max_abs_diff(rz_matrix(0.3), (-I * 0.15 * pauli('Z')).exp()), 1e-14);
  EXPECT_THROW(xx_matrix(2.0), std::invalid_argument);
}

TEST(GateMatrices, NamedGates) {
  const auto m = [](GateKind k, std::vector<double> p = {}) {
    std::vector<int> q(static_cast<std::size_t>(arity(k)));
    for (std::size_t i = 0; i < q.size(); ++i) q[i] = static_cast<int>(i);
    return gate_matrix(Gate::make(k, q, p));
  };
  ComplexMatrix h(2, 2);
  h << 1, 1, 1, -1;
  h /= std::sqrt(2.0);
  EXPECT_LT(max_abs_diff(m(GateKind::H), h), 1e-15);
  expect_equiv(m(GateKind::T), rz_matrix(kPi / 4), "T = RZ(pi/4)");
  expect_equiv(m(GateKind::S), rz_matrix(kPi / 2), "S = RZ(pi/2)");
  EXPECT_LT(max_abs_diff(m(GateKind::V) * m(GateKind::V), pauli('X')), 1e-14);
  EXPECT_LT(max_abs_diff(m(GateKind::CNOT), ctrl_ref(pauli('X'))), 1e-15);
  EXPECT_LT(max_abs_diff(m(GateKind::CZ), ctrl_ref(pauli('Z'))), 1e-15);
  const ComplexMatrix sqrt_cnot = m(GateKind::CXpow, {0.5});
  EXPECT_LT(max_abs_diff(sqrt_cnot * sqrt_cnot, m(GateKind::CNOT)), 1e-14);
  EXPECT_LT(max_abs_diff(m(GateKind::CYpow, {1.0}), ctrl_ref(pauli('Y'))), 1e-14);
  for (double a : {-0.7, 0.25, 1.0}) {
    EXPECT_LT(max_abs_diff(m(GateKind::CXpow, {a}), ctrl_ref(xpow_ref(a))), 1e-14);
    ComplexMatrix zp = ComplexMatrix::Identity(2, 2);
    zp(1, 1) = std::exp(I * kPi * a);
    EXPECT_LT(max_abs_diff(m(GateKind::CZpow, {a}), ctrl_ref(zp)), 1e-14);
  }
  ComplexMatrix tof = ComplexMatrix::Identity(8, 8);
  tof.bottomRightCorner(2, 2) = pauli('X');
  EXPECT_LT(max_abs_diff(m(GateKind::Toffoli), tof), 1e-15);
}

TEST(Decompositions, CnotUsesOneXx) {
  for (int s : {1, -1})
    for (int v : {1, -1}) {
      const Decomposition d = dec_cnot(s, v);
      int xx = 0;
      for (const Gate& g : d.gates) xx += g.kind == GateKind::XX;
      EXPECT_EQ(xx, 1);
      EXPECT_EQ(d.gates.size(), 5u);
      EXPECT_NEAR(d.cost_hint.duration, 275.0, 1e-9);
      EXPECT_EQ(d.cost_hint.e1.render_e1(), "4 × ε + 1 × E");
    }
}

TEST(Decompositions, GlobalPhaseIsRecorded) {
  const Decomposition d = dec_cnot(-1, 1);
  EXPECT_LT(max_abs_diff(d.matrix(), d.global_phase * ctrl_ref(pauli('X'))), 1e-12);
}

TEST(Decompositions, HadamardVariants) {
  ComplexMatrix h(2, 2);
  h << 1, 1, 1, -1;
  h /= std::sqrt(2.0);
  expect_equiv(dec_h(1).matrix(), h, "H variant 1");
  expect_equiv(dec_h(2).matrix(), h, "H variant 2");
  EXPECT_THROW(dec_h(3), std::invalid_argument);
}

// Equivalence over random parameters and every free-sign assignment.
TEST(DecompositionProperty, AllFamiliesAllSigns) {
  std::mt19937_64 rng(20260101);
  for (int draw = 0; draw < 200; ++draw) {
    const double th = testing::uniform(rng, -2 * kPi, 2 * kPi);
    const double x = testing::uniform(rng, -kPi, kPi);
    const double a = draw % 10 == 0 ? (draw % 20 == 0 ? 1.0 : -1.0) : testing::uniform(rng, -1, 1);
    expect_equiv(dec_rx(th).matrix(), r_ref(th, 0), "rx");
    expect_equiv(dec_ry(th).matrix(), r_ref(th, kPi / 2), "ry");
    for (int v : {1, -1}) expect_equiv(dec_rz_3pulse(th, v).matrix(), rz_matrix(th), "rz 3-pulse");
    expect_equiv(dec_rz_2pulse(th, x).matrix(), rz_matrix(th), "rz 2-pulse");

    const ComplexMatrix u = testing::random_unitary2(rng) * std::exp(I * x);
    expect_equiv(dec_u2(u).matrix(), u, "u2");
    EXPECT_LE(dec_u2(u).gates.size(), 2u);
    const XYX e = xyx_angles(u);
    expect_equiv(rx_matrix(e.a) * ry_matrix(e.b) * rx_matrix(e.c), u, "xyx");

    for (int s : {1, -1}) {
      for (int v : {1, -1}) expect_equiv(dec_cnot(s, v).matrix(), ctrl_ref(pauli('X')), "cnot");
      for (int v1 : {1, -1})
        for (int v2 : {1, -1}) {
          expect_equiv(dec_cz(s, v1, v2).matrix(), ctrl_ref(pauli('Z')), "cz");
          expect_equiv(dec_cypow(a, s, v1, v2).matrix(),
                       ctrl_ref(gate_matrix(Gate::make(GateKind::S, {0})) * xpow_ref(a) *
                                gate_matrix(Gate::make(GateKind::Sdg, {0}))),
                       "cypow");
        }
      expect_equiv(dec_cxpow(a, s).matrix(), ctrl_ref(xpow_ref(a)), "cxpow");
      ComplexMatrix zp = ComplexMatrix::Identity(2, 2);
      zp(1, 1) = std::exp(I * kPi * a);
      for (int hv : {1, 2}) expect_equiv(dec_czpow(a, s, hv).matrix(), ctrl_ref(zp), "czpow");
      for (int v1 : {1, -1}) {
        const bool whole = std::abs(std::abs(a) - 1.0) < 1e-12;
        for (int v2 : {1, -1}) {
          if (!whole && v2 != czpow_sym_partner(a, s, v1)) {
            EXPECT_THROW(dec_czpow_sym(a, s, v1, v2), std::invalid_argument);
            continue;
          }
          expect_equiv(dec_czpow_sym(a, s, v1, v2).matrix(), ctrl_ref(zp), "czpow sym");
        }
      }
    }
  }
}

TEST(Decompositions, XxSignFollowsMachine) {
  for (int s : {1, -1}) {
    for (const Gate& g : dec_cxpow(0.5, s).gates)
      if (g.kind == GateKind::XX) EXPECT_GT(g.params[0] * s, 0);
    for (const Gate& g : dec_cxpow(-0.5, s).gates)
      if (g.kind == GateKind::XX) EXPECT_GT(g.params[0] * s, 0);
  }
}

TEST(Composites, ToffoliFamilies) {
  expect_equiv(circuit_unitary(dec_toffoli()), controlled(pauli('X'), 2), "toffoli");
  expect_equiv(circuit_unitary(dec_toffoli4()), controlled(pauli('X'), 3), "toffoli4");
  int two = 0;
  for (const Gate& g : dec_toffoli().gates) two += g.qubits.size() == 2;
  EXPECT_EQ(two, 5);
}

TEST(Composites, ExpandKeepsUnitary) {
  std::mt19937_64 rng(9);
  const Circuit c = testing::random_logical(rng, 4, 20);
  Circuit with4 = c;
  with4.add(GateKind::Toffoli4, {3, 1, 0, 2});
  expect_equiv(circuit_unitary(expand_composites(with4)), circuit_unitary(with4), "expand");
}

TEST(Oracles, ExpandInlinesBodies) {
  auto body = std::make_shared<Circuit>(2);
  body->add(GateKind::CNOT, {0, 1}).add(GateKind::T, {1});
  Circuit c(3);
  c.add(Gate::oracle("f", {2, 0}, body));
  Circuit want(3);
  want.add(GateKind::CNOT, {2, 0}).add(GateKind::T, {0});
  EXPECT_LT(max_abs_diff(circuit_unitary(expand_oracles(c)), circuit_unitary(want)), 1e-15);
  EXPECT_THROW(circuit_unitary(c), std::invalid_argument);
}

TEST(ZczFastPath, MatchesCircuit) {
  const MachineConfig m = default_machine();
  Circuit c(3);
  c.add(GateKind::CZ, {0, 2}).add(GateKind::T, {1}).add(GateKind::CZ, {1, 2}).add(GateKind::S, {0});
  ASSERT_TRUE(is_zcz_circuit(c));
  for (int mask = 0; mask < 8; ++mask) {
    const std::vector<int> v = {mask & 1 ? -1 : 1, mask & 2 ? -1 : 1, mask & 4 ? -1 : 1};
    const Decomposition d = compile_zcz(c, v, m);
    expect_equiv(d.matrix(), circuit_unitary(c), "zcz");
    int xx = 0;
    for (const Gate& g : d.gates) xx += g.kind == GateKind::XX;
    EXPECT_EQ(xx, 2);
    EXPECT_LE(static_cast<int>(d.gates.size()) - xx, 2 * 3 + 3);
  }
  Circuit h(1);
  h.add(GateKind::H, {0});
  EXPECT_FALSE(is_zcz_circuit(h));
}

}  // namespace
}  // namespace ionc
