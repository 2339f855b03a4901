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

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ionc {

inline constexpr double kPi = 3.14159265358979323846;

enum class GateKind {
  H, X, Y, Z, S, Sdg, T, Tdg, V,
  RX, RY, RZ, U2,
  CNOT, CZ, CXpow, CYpow, CZpow,
  Toffoli, Toffoli4, Swap,
  R, XX,
  Oracle,
};

struct Circuit;

struct Gate {
  GateKind kind = GateKind::H;
  std::vector<int> qubits;
  std::vector<double> params;
  // Oracle only: name and body acting on local qubits 0..k-1.
  std::string tag;
  std::shared_ptr<const Circuit> body;

  static Gate make(GateKind k, std::vector<int> qs, std::vector<double> ps = {});
  static Gate oracle(std::string tag, std::vector<int> qs, std::shared_ptr<const Circuit> body);

  bool is_physical() const { return kind == GateKind::R || kind == GateKind::XX; }
  bool is_two_qubit() const { return qubits.size() == 2; }
  double param(std::size_t i) const { return params.at(i); }
};

enum class Level { Logical, Physical };

struct Circuit {
  int n = 0;
  std::vector<Gate> gates;
  Level level = Level::Logical;

  Circuit() = default;
  explicit Circuit(int nq, Level lv = Level::Logical) : n(nq), level(lv) {}

  Circuit& add(GateKind k, std::vector<int> qs, std::vector<double> ps = {});
  Circuit& add(Gate g);
  void append(const Circuit& other);
  std::size_t size() const { return gates.size(); }
  bool empty() const { return gates.empty(); }
};

// Static description of a gate kind.
int arity(GateKind k);          // -1 for Oracle (variable)
int param_count(GateKind k);
const char* mnemonic(GateKind k);
std::optional<GateKind> kind_from_mnemonic(const std::string& m);
std::string describe(const Gate& g);

enum class ErrorModel { e1, e2 };

struct MachineConfig {
  int n = 0;
  double tau1q = 0.0;  // us per pi of rotation
  double tau2q = 0.0;  // us per XX gate
  double epsilon = 0.0;
  double bigE = 0.0;
  ErrorModel error_model = ErrorModel::e1;
  std::vector<int> signs;  // n*n, 0 when unset
  std::map<std::pair<int, int>, double> pair_error;

  explicit MachineConfig(int nq = 0);
  int chi_sign(int i, int j) const;
  void set_sign(int i, int j, int s);
  double two_qubit_error(int i, int j) const;
  bool sign_table_complete() const;
};

MachineConfig default_machine();

struct Diagnostic {
  int gate_index = -1;
  std::string message;
};

std::vector<Diagnostic> validate(const Circuit& c, const MachineConfig& m);

Gate inverse(const Gate& g);
Gate normalize_r(const Gate& g);

// Angle helpers.
double wrap_pi(double t);  // into (-pi, pi]
bool angle_is_zero(double t, double tol = 1e-9);  // t = 0 mod 2pi
// Exact pi multiple p/q with q <= max_den, if any.
std::optional<std::pair<long, long>> pi_fraction(double t, long max_den = 64, double tol = 1e-10);
// "pi/4", "-3pi/8", "0", or 12 significant digits.
std::string format_angle(double t);

}  // namespace ionc
