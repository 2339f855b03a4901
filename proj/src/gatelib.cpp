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

#include "ionc/gatelib.hpp"

#include <cmath>
#include <stdexcept>

namespace ionc {

namespace {

const cplx I(0.0, 1.0);

ComplexMatrix mat2(cplx a, cplx b, cplx c, cplx d) {
  ComplexMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

Gate rx(int q, double t) { return Gate::make(GateKind::RX, {q}, {t}); }
Gate ry(int q, double t) { return Gate::make(GateKind::RY, {q}, {t}); }
Gate rr(int q, double t, double p) { return Gate::make(GateKind::R, {q}, {t, p}); }
Gate xxg(int a, int b, double chi) { return Gate::make(GateKind::XX, {a, b}, {chi}); }

int sgn(double a) { return a < 0 ? -1 : 1; }

Decomposition finish(int n, std::vector<Gate> gates, const ComplexMatrix& target, std::vector<SignVar> vars) {
  Decomposition d;
  d.n = n;
  d.gates = std::move(gates);
  d.free_vars = std::move(vars);
  const MachineConfig m = default_machine();
  for (const Gate& g : d.gates) d.cost_hint += gate_cost(g, m);
  if (n <= kMaxDenseQubits) d.global_phase = relative_phase(d.matrix(), target);
  return d;
}

void require_sign(int s, const char* what) {
  if (s != 1 && s != -1) throw std::invalid_argument(std::string(what) + " must be +1 or -1");
}

void require_alpha(double alpha) {
  if (!(std::abs(alpha) <= 1.0 + 1e-12)) throw std::invalid_argument("alpha out of range [-1, 1]");
}

}  // namespace

ComplexMatrix r_matrix(double theta, double phi) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  return mat2(c, -I * std::exp(-I * phi) * s, -I * std::exp(I * phi) * s, c);
}

ComplexMatrix rx_matrix(double theta) { return r_matrix(theta, 0.0); }
ComplexMatrix ry_matrix(double theta) { return r_matrix(theta, kPi / 2); }
ComplexMatrix rz_matrix(double theta) { return mat2(std::exp(-I * theta / 2.0), 0, 0, std::exp(I * theta / 2.0)); }

ComplexMatrix xx_matrix(double chi) {
  if (std::abs(chi) > kPi / 2 + 1e-12) throw std::invalid_argument("xx_matrix: |chi| exceeds pi/2");
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  const cplx c = std::cos(chi), s = -I * std::sin(chi);
  for (int i = 0; i < 4; ++i) {
    m(i, i) = c;
    m(i, 3 - i) = s;
  }
  return m;
}

ComplexMatrix xpow_matrix(double alpha) { return std::exp(I * kPi * alpha / 2.0) * rx_matrix(alpha * kPi); }

ComplexMatrix controlled(const ComplexMatrix& u, int controls) {
  const Eigen::Index d = u.rows();
  const Eigen::Index dim = d << controls;
  ComplexMatrix m = ComplexMatrix::Identity(dim, dim);
  m.bottomRightCorner(d, d) = u;
  return m;
}

ComplexMatrix gate_matrix(const Gate& g) {
  const double r2 = 1.0 / std::sqrt(2.0);
  const ComplexMatrix X = mat2(0, 1, 1, 0);
  const ComplexMatrix Z = mat2(1, 0, 0, -1);
  const auto p = [&](std::size_t i) { return g.params.at(i); };
  switch (g.kind) {
    case GateKind::H: return mat2(r2, r2, r2, -r2);
    case GateKind::X: return X;
    case GateKind::Y: return mat2(0, -I, I, 0);
    case GateKind::Z: return Z;
    case GateKind::S: return mat2(1, 0, 0, I);
    case GateKind::Sdg: return mat2(1, 0, 0, -I);
    case GateKind::T: return mat2(1, 0, 0, std::exp(I * kPi / 4.0));
    case GateKind::Tdg: return mat2(1, 0, 0, std::exp(-I * kPi / 4.0));
    case GateKind::V: return xpow_matrix(0.5);
    case GateKind::RX: return rx_matrix(p(0));
    case GateKind::RY: return ry_matrix(p(0));
    case GateKind::RZ: return rz_matrix(p(0));
    case GateKind::U2: return u2_matrix({p(0), p(1), p(2), p(3)});
    case GateKind::CNOT: return controlled(X);
    case GateKind::CZ: return controlled(Z);
    case GateKind::CXpow: return controlled(xpow_matrix(p(0)));
    case GateKind::CYpow: {
      const ComplexMatrix S = mat2(1, 0, 0, I);
      return controlled(S * xpow_matrix(p(0)) * S.adjoint());
    }
    case GateKind::CZpow: return controlled(mat2(1, 0, 0, std::exp(I * kPi * p(0))));
    case GateKind::Toffoli: return controlled(X, 2);
    case GateKind::Toffoli4: return controlled(X, 3);
    case GateKind::Swap: {
      ComplexMatrix m = ComplexMatrix::Zero(4, 4);
      m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1;
      return m;
    }
    case GateKind::R: return r_matrix(p(0), p(1));
    case GateKind::XX: return xx_matrix(p(0));
    case GateKind::Oracle: break;
  }
  throw std::invalid_argument("gate_matrix: oracle '" + g.tag + "' has no matrix until expanded");
}

Circuit Decomposition::circuit() const {
  Circuit c(n);
  c.gates = gates;
  return c;
}

ComplexMatrix Decomposition::matrix() const { return circuit_unitary(circuit()); }

Decomposition dec_rx(double theta) { return finish(1, {rx(0, theta)}, rx_matrix(theta), {}); }
Decomposition dec_ry(double theta) { return finish(1, {ry(0, theta)}, ry_matrix(theta), {}); }

Decomposition dec_rz_3pulse(double theta, int v) {
  require_sign(v, "v");
  return finish(1, {ry(0, v * kPi / 2), rx(0, v * theta), ry(0, -v * kPi / 2)}, rz_matrix(theta), {{"v", v}});
}

Decomposition dec_rz_2pulse(double theta, double x) {
  return finish(1, {rr(0, kPi, x - theta / 2), rr(0, kPi, x)}, rz_matrix(theta), {});
}

Decomposition dec_h(int variant) {
  const ComplexMatrix H = gate_matrix(Gate::make(GateKind::H, {0}));
  if (variant == 1) return finish(1, {rx(0, kPi), ry(0, -kPi / 2)}, H, {});
  if (variant == 2) return finish(1, {ry(0, kPi / 2), rx(0, -kPi)}, H, {});
  throw std::invalid_argument("dec_h: variant must be 1 or 2");
}

ComplexMatrix u2_matrix(const U2Params& p) {
  const double cb = std::cos(p.b), sb = std::sin(p.b);
  return std::exp(I * p.d) * mat2(std::exp(I * p.a) * cb, std::exp(I * p.c) * sb, -std::exp(-I * p.c) * sb,
                                   std::exp(-I * p.a) * cb);
}

U2Params u2_params(const ComplexMatrix& u) {
  if (u.rows() != 2 || u.cols() != 2 || !is_unitary(u, 1e-8)) throw std::invalid_argument("u2_params: not a 2x2 unitary");
  U2Params p;
  p.d = std::arg(u.determinant()) / 2.0;
  const ComplexMatrix w = std::exp(-I * p.d) * u;
  p.b = std::atan2(std::abs(w(0, 1)), std::abs(w(0, 0)));
  p.a = std::cos(p.b) > 1e-12 ? std::arg(w(0, 0)) : 0.0;
  p.c = std::sin(p.b) > 1e-12 ? std::arg(w(0, 1)) : 0.0;
  if (max_abs_diff(u2_matrix(p), u) > 1e-9) throw std::runtime_error("u2_params: reconstruction failed");
  return p;
}

Decomposition dec_u2(const ComplexMatrix& u) {
  const U2Params p = u2_params(u);
  std::vector<Gate> gates;
  const double t1 = wrap_pi(2 * p.b + kPi);
  if (!angle_is_zero(t1)) gates.push_back(rr(0, t1, p.a - p.c - kPi / 2));
  gates.push_back(rr(0, -kPi, -p.c - kPi / 2));
  return finish(1, std::move(gates), u, {});
}

XYX xyx_angles(const ComplexMatrix& u) {
  // With Q = RY(pi/2), Q RZ(t) Q^dag = RX(t); reduce to Z-Y-Z Euler angles.
  const ComplexMatrix q = ry_matrix(kPi / 2);
  const ComplexMatrix w0 = q.adjoint() * u * q;
  const double delta = std::arg(w0.determinant()) / 2.0;
  const ComplexMatrix w = std::exp(-I * delta) * w0;
  const double beta = 2.0 * std::atan2(std::abs(w(1, 0)), std::abs(w(0, 0)));
  const double sum = std::cos(beta / 2) > 1e-12 ? 2.0 * std::arg(w(1, 1)) : 0.0;
  const double diff = std::sin(beta / 2) > 1e-12 ? 2.0 * std::arg(w(1, 0)) : 0.0;
  double alpha = (sum + diff) / 2, gamma = (sum - diff) / 2;
  if (std::cos(beta / 2) <= 1e-12) alpha = diff, gamma = 0;
  if (std::sin(beta / 2) <= 1e-12) alpha = sum, gamma = 0;
  return {wrap_pi(alpha), wrap_pi(beta), wrap_pi(gamma)};
}

Decomposition dec_cnot(int s, int v) {
  require_sign(s, "s");
  require_sign(v, "v");
  std::vector<Gate> g = {ry(0, v * kPi / 2), xxg(0, 1, s * kPi / 4), rx(0, -s * kPi / 2), rx(1, -v * s * kPi / 2),
                         ry(0, -v * kPi / 2)};
  return finish(2, std::move(g), gate_matrix(Gate::make(GateKind::CNOT, {0, 1})), {{"v", v}});
}

Decomposition dec_cxpow(double alpha, int s_hw) {
  require_alpha(alpha);
  require_sign(s_hw, "s_hw");
  const int s = s_hw * sgn(alpha);
  std::vector<Gate> g = {ry(0, -s * kPi / 2), xxg(0, 1, s * alpha * kPi / 4), rx(0, -s * alpha * kPi / 2),
                         rx(1, alpha * kPi / 2), ry(0, s * kPi / 2)};
  return finish(2, std::move(g), gate_matrix(Gate::make(GateKind::CXpow, {0, 1}, {alpha})), {});
}

Decomposition dec_cypow(double alpha, int s_hw, int v_pre, int v_post) {
  // P^dag on the target, controlled-X^alpha, then P.
  std::vector<Gate> g;
  for (const Gate& x : dec_rz_3pulse(-kPi / 2, v_pre).gates) g.push_back(Gate::make(x.kind, {1}, x.params));
  for (const Gate& x : dec_cxpow(alpha, s_hw).gates) g.push_back(x);
  for (const Gate& x : dec_rz_3pulse(kPi / 2, v_post).gates) g.push_back(Gate::make(x.kind, {1}, x.params));
  return finish(2, std::move(g), gate_matrix(Gate::make(GateKind::CYpow, {0, 1}, {alpha})),
                {{"v_pre", v_pre}, {"v_post", v_post}});
}

Decomposition dec_czpow(double alpha, int s_hw, int h_variant) {
  std::vector<Gate> g;
  for (const Gate& x : dec_h(h_variant).gates) g.push_back(Gate::make(x.kind, {1}, x.params));
  for (const Gate& x : dec_cxpow(alpha, s_hw).gates) g.push_back(x);
  for (const Gate& x : dec_h(h_variant).gates) g.push_back(Gate::make(x.kind, {1}, x.params));
  return finish(2, std::move(g), gate_matrix(Gate::make(GateKind::CZpow, {0, 1}, {alpha})), {});
}

Decomposition dec_cz(int s, int v1, int v2) {
  require_sign(s, "s");
  require_sign(v1, "v1");
  require_sign(v2, "v2");
  std::vector<Gate> g = {ry(0, v1 * kPi / 2),       ry(1, v2 * kPi / 2),       xxg(0, 1, s * kPi / 4),
                         rx(0, -v2 * s * kPi / 2), rx(1, -v1 * s * kPi / 2), ry(0, -v1 * kPi / 2),
                         ry(1, -v2 * kPi / 2)};
  return finish(2, std::move(g), gate_matrix(Gate::make(GateKind::CZ, {0, 1})), {{"v1", v1}, {"v2", v2}});
}

int czpow_sym_partner(double alpha, int s_hw, int v1) {
  const int s = s_hw * sgn(alpha);
  return -s * v1;
}

Decomposition dec_czpow_sym(double alpha, int s_hw, int v1, int v2) {
  require_alpha(alpha);
  require_sign(s_hw, "s_hw");
  require_sign(v1, "v1");
  require_sign(v2, "v2");
  if (std::abs(std::abs(alpha) - 1.0) < 1e-12) {
    Decomposition d = dec_cz(s_hw, v1, v2);
    d.global_phase = relative_phase(d.matrix(), gate_matrix(Gate::make(GateKind::CZpow, {0, 1}, {alpha})));
    return d;
  }
  if (v2 != czpow_sym_partner(alpha, s_hw, v1))
    throw std::invalid_argument("dec_czpow_sym: fractional power needs v1*v2 = -s");
  const int s = s_hw * sgn(alpha);
  std::vector<Gate> g = {ry(0, v1 * kPi / 2),         ry(1, v2 * kPi / 2),         xxg(0, 1, s * alpha * kPi / 4),
                         rx(0, v1 * alpha * kPi / 2), rx(1, v2 * alpha * kPi / 2), ry(0, -v1 * kPi / 2),
                         ry(1, -v2 * kPi / 2)};
  return finish(2, std::move(g), gate_matrix(Gate::make(GateKind::CZpow, {0, 1}, {alpha})), {{"v1", v1}});
}

Circuit dec_toffoli() {
  Circuit c(3);
  c.add(GateKind::CXpow, {0, 2}, {0.5});
  c.add(GateKind::CXpow, {1, 2}, {0.5});
  c.add(GateKind::CNOT, {0, 1});
  c.add(GateKind::CXpow, {1, 2}, {-0.5});
  c.add(GateKind::CNOT, {0, 1});
  return c;
}

Circuit dec_toffoli4() {
  // Controlled-root ladder with V = X^{1/4}: 7 controlled roots and 6 CNOTs.
  const double q = 0.25;
  const struct { int c, t; double a; } steps[] = {
      {0, 3, q}, {0, 1, 1}, {1, 3, -q}, {0, 1, 1}, {1, 3, q}, {1, 2, 1}, {2, 3, -q},
      {0, 2, 1}, {2, 3, q}, {1, 2, 1}, {2, 3, -q}, {0, 2, 1}, {2, 3, q},
  };
  Circuit c(4);
  for (const auto& s : steps) {
    if (s.a == 1) c.add(GateKind::CNOT, {s.c, s.t});
    else c.add(GateKind::CXpow, {s.c, s.t}, {s.a});
  }
  return c;
}

namespace {

void inline_into(Circuit& out, const Circuit& body, const std::vector<int>& map) {
  for (Gate g : body.gates) {
    for (int& q : g.qubits) q = map.at(q);
    out.add(std::move(g));
  }
}

}  // namespace

Circuit expand_composites(const Circuit& c) {
  Circuit out(c.n, c.level);
  for (const Gate& g : c.gates) {
    if (g.kind == GateKind::Toffoli) inline_into(out, dec_toffoli(), g.qubits);
    else if (g.kind == GateKind::Toffoli4) inline_into(out, dec_toffoli4(), g.qubits);
    else out.add(g);
  }
  return out;
}

Circuit expand_oracles(const Circuit& c) {
  Circuit out(c.n, c.level);
  for (const Gate& g : c.gates) {
    if (g.kind != GateKind::Oracle) {
      out.add(g);
      continue;
    }
    if (!g.body) throw std::invalid_argument("expand_oracles: oracle '" + g.tag + "' has no body");
    inline_into(out, expand_oracles(*g.body), g.qubits);
  }
  return out;
}

bool is_zcz_circuit(const Circuit& c) {
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::Z: case GateKind::S: case GateKind::Sdg: case GateKind::T:
      case GateKind::Tdg: case GateKind::RZ: case GateKind::CZ:
        break;
      case GateKind::CZpow:
        if (std::abs(std::abs(g.params.at(0)) - 1.0) > 1e-12) return false;
        break;
      default:
        return false;
    }
  }
  return true;
}

namespace {

double z_angle(const Gate& g) {
  switch (g.kind) {
    case GateKind::Z: return kPi;
    case GateKind::S: return kPi / 2;
    case GateKind::Sdg: return -kPi / 2;
    case GateKind::T: return kPi / 4;
    case GateKind::Tdg: return -kPi / 4;
    case GateKind::RZ: return g.params.at(0);
    default: return 0.0;
  }
}

}  // namespace

Decomposition compile_zcz(const Circuit& c, const std::vector<int>& v, const MachineConfig& m) {
  if (!is_zcz_circuit(c)) throw std::invalid_argument("compile_zcz: circuit has gates other than Z rotations and CZ");
  if (static_cast<int>(v.size()) != c.n) throw std::invalid_argument("compile_zcz: need one sign per qubit");
  for (int x : v) require_sign(x, "v_i");
  std::vector<double> t(c.n, 0.0), corr(c.n, 0.0);
  std::vector<bool> active(c.n, false);
  std::vector<Gate> xx;
  for (const Gate& g : c.gates) {
    for (int q : g.qubits) active[q] = true;
    if (g.qubits.size() == 1) {
      t[g.qubits[0]] += z_angle(g);
      continue;
    }
    const int a = g.qubits[0], b = g.qubits[1];
    const int s = m.chi_sign(a, b);
    corr[a] += v[b] * s;
    corr[b] += v[a] * s;
    xx.push_back(xxg(a, b, s * kPi / 4));
  }
  std::vector<Gate> gates;
  for (int i = 0; i < c.n; ++i)
    if (active[i]) gates.push_back(ry(i, v[i] * kPi / 2));
  for (int i = 0; i < c.n; ++i) {
    const double ang = wrap_pi(v[i] * t[i] - corr[i] * kPi / 2);
    if (active[i] && !angle_is_zero(ang)) gates.push_back(rx(i, ang));
  }
  gates.insert(gates.end(), xx.begin(), xx.end());
  for (int i = 0; i < c.n; ++i)
    if (active[i]) gates.push_back(ry(i, -v[i] * kPi / 2));
  Decomposition d;
  d.n = c.n;
  d.gates = std::move(gates);
  for (int i = 0; i < c.n; ++i) d.free_vars.push_back({"v" + std::to_string(i), v[i]});
  for (const Gate& g : d.gates) d.cost_hint += gate_cost(g, m);
  if (c.n <= kMaxDenseQubits) d.global_phase = relative_phase(d.matrix(), circuit_unitary(c));
  return d;
}

}  // namespace ionc
