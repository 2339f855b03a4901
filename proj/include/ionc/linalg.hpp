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

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "ionc/ir.hpp"

namespace ionc {

using cplx = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

inline constexpr double kDefaultTol = 1e-9;
inline constexpr int kMaxDenseQubits = 6;

// Qubit 0 is the most significant bit of a basis index.

ComplexMatrix identity(int dim);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix embed(const ComplexMatrix& u, const std::vector<int>& targets, int n);
void apply_gate(StateVector& psi, const ComplexMatrix& u, const std::vector<int>& targets, int n);

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
bool is_unitary(const ComplexMatrix& u, double tol = kDefaultTol);

// Phase lambda with u ~ lambda * v, taken from the largest entry of v.
cplx relative_phase(const ComplexMatrix& u, const ComplexMatrix& v);
bool equiv_global_phase(const ComplexMatrix& u, const ComplexMatrix& v, double tol = kDefaultTol);

StateVector basis_state(int n, std::uint64_t index);
StateVector simulate(const Circuit& c, const StateVector& input);
ComplexMatrix circuit_unitary(const Circuit& c);

}  // namespace ionc
