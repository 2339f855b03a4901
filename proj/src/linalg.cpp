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

#include "ionc/linalg.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ionc/gatelib.hpp"

namespace ionc {

namespace {

void check_targets(const std::vector<int>& targets, int n) {
  std::uint64_t seen = 0;
  for (int t : targets) {
    if (t < 0 || t >= n) throw std::invalid_argument("target " + std::to_string(t) + " out of range");
    if (seen & (1ULL << t)) throw std::invalid_argument("duplicate target " + std::to_string(t));
    seen |= 1ULL << t;
  }
}

// Bit position of qubit q inside a basis index.
inline int bitpos(int q, int n) { return n - 1 - q; }

}  // namespace

ComplexMatrix identity(int dim) { return ComplexMatrix::Identity(dim, dim); }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

void apply_gate(StateVector& psi, const ComplexMatrix& u, const std::vector<int>& targets, int n) {
  check_targets(targets, n);
  const int k = static_cast<int>(targets.size());
  const std::uint64_t sub = 1ULL << k;
  if (u.rows() != static_cast<Eigen::Index>(sub) || u.cols() != static_cast<Eigen::Index>(sub))
    throw std::invalid_argument("apply_gate: matrix size does not match target count");
  if (psi.size() != static_cast<Eigen::Index>(1ULL << n))
    throw std::invalid_argument("apply_gate: state size does not match qubit count");

  std::uint64_t mask = 0;
  std::vector<std::uint64_t> offs(sub, 0);
  for (int i = 0; i < k; ++i) mask |= 1ULL << bitpos(targets[i], n);
  for (std::uint64_t r = 0; r < sub; ++r)
    for (int i = 0; i < k; ++i)
      if (r & (1ULL << (k - 1 - i))) offs[r] |= 1ULL << bitpos(targets[i], n);

  std::vector<cplx> in(sub), out(sub);
  const std::uint64_t dim = 1ULL << n;
  for (std::uint64_t base = 0; base < dim; ++base) {
    if (base & mask) continue;
    for (std::uint64_t r = 0; r < sub; ++r) in[r] = psi[static_cast<Eigen::Index>(base | offs[r])];
    for (std::uint64_t r = 0; r < sub; ++r) {
      cplx acc = 0;
      for (std::uint64_t c = 0; c < sub; ++c) acc += u(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) * in[c];
      out[r] = acc;
    }
    for (std::uint64_t r = 0; r < sub; ++r) psi[static_cast<Eigen::Index>(base | offs[r])] = out[r];
  }
}

ComplexMatrix embed(const ComplexMatrix& u, const std::vector<int>& targets, int n) {
  check_targets(targets, n);
  const Eigen::Index dim = static_cast<Eigen::Index>(1ULL << n);
  ComplexMatrix out = ComplexMatrix::Identity(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    StateVector v = out.col(col);
    apply_gate(v, u, targets, n);
    out.col(col) = v;
  }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("dimension mismatch");
  return (a - b).cwiseAbs().maxCoeff();
}

bool is_unitary(const ComplexMatrix& u, double tol) {
  if (u.rows() != u.cols()) return false;
  return max_abs_diff(u * u.adjoint(), identity(static_cast<int>(u.rows()))) <= tol;
}

cplx relative_phase(const ComplexMatrix& u, const ComplexMatrix& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols()) throw std::invalid_argument("dimension mismatch");
  Eigen::Index r = 0, c = 0;
  v.cwiseAbs().maxCoeff(&r, &c);
  if (std::abs(v(r, c)) == 0.0) return 1.0;
  cplx lam = u(r, c) / v(r, c);
  const double mag = std::abs(lam);
  return mag == 0.0 ? cplx(1.0) : lam / mag;
}

bool equiv_global_phase(const ComplexMatrix& u, const ComplexMatrix& v, double tol) {
  if (u.rows() != v.rows() || u.cols() != v.cols()) throw std::invalid_argument("equiv_global_phase: dimension mismatch");
  const cplx lam = relative_phase(u, v);
  return max_abs_diff(u, lam * v) <= tol;
}

StateVector basis_state(int n, std::uint64_t index) {
  StateVector s = StateVector::Zero(static_cast<Eigen::Index>(1ULL << n));
  s[static_cast<Eigen::Index>(index)] = 1.0;
  return s;
}

StateVector simulate(const Circuit& c, const StateVector& input) {
  if (c.n > kMaxDenseQubits) throw std::invalid_argument("simulate: more than " + std::to_string(kMaxDenseQubits) + " qubits");
  if (input.size() != static_cast<Eigen::Index>(1ULL << c.n))
    throw std::invalid_argument("simulate: state does not match circuit width");
  StateVector psi = input;
  for (const Gate& g : c.gates) {
    if (g.kind == GateKind::Oracle) throw std::invalid_argument("simulate: unexpanded oracle '" + g.tag + "'");
    apply_gate(psi, gate_matrix(g), g.qubits, c.n);
  }
  return psi;
}

ComplexMatrix circuit_unitary(const Circuit& c) {
  if (c.n > kMaxDenseQubits) throw std::invalid_argument("circuit_unitary: more than " + std::to_string(kMaxDenseQubits) + " qubits");
  const Eigen::Index dim = static_cast<Eigen::Index>(1ULL << c.n);
  ComplexMatrix u = ComplexMatrix::Identity(dim, dim);
  std::vector<ComplexMatrix> mats;
  mats.reserve(c.gates.size());
  for (const Gate& g : c.gates) {
    if (g.kind == GateKind::Oracle) throw std::invalid_argument("circuit_unitary: unexpanded oracle '" + g.tag + "'");
    mats.push_back(gate_matrix(g));
  }
  for (Eigen::Index col = 0; col < dim; ++col) {
    StateVector v = u.col(col);
    for (std::size_t i = 0; i < c.gates.size(); ++i) apply_gate(v, mats[i], c.gates[i].qubits, c.n);
    u.col(col) = v;
  }
  return u;
}

}  // namespace ionc
