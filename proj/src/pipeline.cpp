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

#include "ionc/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "ionc/gatelib.hpp"

namespace ionc {

namespace {

void check_forced(const std::vector<int>& perm, int n, const MachineConfig& m) {
  if (static_cast<int>(perm.size()) != n) throw ValidationError("forced mapping has the wrong number of entries");
  std::set<int> seen;
  for (int p : perm) {
    if (p < 0 || p >= m.n) throw ValidationError("forced mapping names an ion outside the machine");
    if (!seen.insert(p).second) throw ValidationError("forced mapping is not injective");
  }
}

// Oracle bodies become their own chunks so nothing is optimized across them.
std::vector<Circuit> split_chunks(const Circuit& mapped) {
  std::vector<Circuit> chunks;
  Circuit cur(mapped.n);
  for (const Gate& g : mapped.gates) {
    if (g.kind != GateKind::Oracle) {
      cur.gates.push_back(g);
      continue;
    }
    if (!cur.empty()) chunks.push_back(cur);
    cur = Circuit(mapped.n);
    Circuit one(mapped.n);
    one.gates.push_back(g);
    Circuit body = expand_oracles(one);
    if (!body.empty()) chunks.push_back(body);
  }
  if (!cur.empty()) chunks.push_back(cur);
  return chunks;
}

struct ChunkOut {
  Circuit circuit;
  std::vector<PassStats> stats;
  int cancellations = 0;
  bool zcz = false;
};

ChunkOut compile_chunk(const Circuit& chunk, const MachineConfig& m, const CompileOptions& opt) {
  ChunkOut out;
  if (opt.zcz_fast_path && is_zcz_circuit(chunk)) {
    const Decomposition d = compile_zcz(chunk, std::vector<int>(static_cast<std::size_t>(chunk.n), 1), m);
    PassStats st;
    st.name = "compile_zcz";
    st.pulses_before = st.pulses_after = count_1q(d.circuit());
    st.duration_before = st.duration_after = circuit_cost(d.circuit(), m).duration;
    st.eps_before = st.eps_after = circuit_cost(d.circuit(), m).e1.sum(Unit::eps);
    out.stats.push_back(st);
    // The usual passes still apply; they never touch the XX gates.
    OptimizeResult r = optimize(d.circuit(), opt.plan, m);
    out.circuit = std::move(r.circuit);
    for (PassStats& s : r.stats) out.stats.push_back(std::move(s));
    out.zcz = true;
    return out;
  }
  const SignVars sv = choose_signs(chunk, m);
  out.cancellations = sv.savings;
  OptimizeResult r = optimize(lower_with_signs(sv, m), opt.plan, m);
  out.circuit = std::move(r.circuit);
  out.stats = std::move(r.stats);
  return out;
}

void add_stats(std::vector<PassStats>& into, const std::vector<PassStats>& from) {
  for (const PassStats& s : from) {
    auto it = std::find_if(into.begin(), into.end(), [&](const PassStats& x) { return x.name == s.name; });
    if (it == into.end()) {
      into.push_back(s);
      continue;
    }
    it->pulses_before += s.pulses_before;
    it->pulses_after += s.pulses_after;
    it->rewrites += s.rewrites;
    it->duration_before += s.duration_before;
    it->duration_after += s.duration_after;
    it->eps_before += s.eps_before;
    it->eps_after += s.eps_after;
    it->reverted = it->reverted || s.reverted;
  }
}

// Output index for basis input b when logical q is read from wire perm[q].
std::uint64_t permute_index(std::uint64_t b, const std::vector<int>& perm, int n) {
  std::uint64_t o = 0;
  for (int q = 0; q < n; ++q) {
    const int w = perm[static_cast<std::size_t>(q)];
    if ((b >> (n - 1 - w)) & 1U) o |= std::uint64_t{1} << (n - 1 - q);
  }
  return o;
}

}  // namespace

std::string Verdict::str() const {
  char buf[64];
  switch (status) {
    case Status::yes:
      std::snprintf(buf, sizeof buf, "%.1e", max_error);
      return std::string("yes (max deviation ") + buf + ")";
    case Status::no:
      return "no: " + reason;
    case Status::skipped:
      return "skipped: " + reason;
  }
  return "";
}

Verdict verify(const Circuit& logical, const Program& p, double tol, const std::vector<int>& clean_ancillas) {
  Verdict v;
  const int n = logical.n;
  if (n > kMaxDenseQubits) {
    v.reason = std::to_string(n) + " qubits exceeds the dense verification limit of " + std::to_string(kMaxDenseQubits);
    return v;
  }
  if (static_cast<int>(p.mapping.size()) != n) throw std::invalid_argument("verify: mapping does not match circuit width");
  std::vector<int> perm = p.perm;
  if (perm.empty()) {
    perm.resize(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) perm[static_cast<std::size_t>(q)] = q;
  }
  if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("verify: output permutation does not match circuit width");

  std::vector<int> ion_to_q(static_cast<std::size_t>(std::max(p.circuit.n, 0)), -1);
  for (int q = 0; q < n; ++q) {
    const int ion = p.mapping[static_cast<std::size_t>(q)];
    if (ion < 0 || ion >= p.circuit.n) throw std::invalid_argument("verify: mapping names an ion outside the program");
    ion_to_q[static_cast<std::size_t>(ion)] = q;
  }
  Circuit compact(n);
  for (Gate g : p.circuit.gates) {
    for (int& q : g.qubits) {
      const int l = ion_to_q.at(static_cast<std::size_t>(q));
      if (l < 0) {
        v.status = Verdict::Status::no;
        v.reason = "pulse on unmapped ion " + std::to_string(q + 1);
        return v;
      }
      q = l;
    }
    compact.gates.push_back(std::move(g));
  }

  const ComplexMatrix want = circuit_unitary(expand_oracles(logical));
  const ComplexMatrix raw = circuit_unitary(compact);
  const Eigen::Index dim = want.rows();
  ComplexMatrix got = ComplexMatrix::Zero(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r)
    got.row(static_cast<Eigen::Index>(permute_index(static_cast<std::uint64_t>(r), perm, n))) = raw.row(r);

  std::vector<Eigen::Index> cols;
  for (Eigen::Index c = 0; c < dim; ++c) {
    bool clean = true;
    for (int a : clean_ancillas)
      if ((static_cast<std::uint64_t>(c) >> (n - 1 - a)) & 1U) clean = false;
    if (clean) cols.push_back(c);
  }
  ComplexMatrix w(dim, static_cast<Eigen::Index>(cols.size())), g(dim, static_cast<Eigen::Index>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) {
    w.col(static_cast<Eigen::Index>(k)) = want.col(cols[k]);
    g.col(static_cast<Eigen::Index>(k)) = got.col(cols[k]);
  }
  const cplx lam = relative_phase(g, w);
  v.max_error = max_abs_diff(g, lam * w);
  if (v.max_error <= tol) {
    v.status = Verdict::Status::yes;
  } else {
    v.status = Verdict::Status::no;
    char buf[96];
    std::snprintf(buf, sizeof buf, "unitaries differ by %.3e (tolerance %.1e)", v.max_error, tol);
    v.reason = buf;
  }
  return v;
}

CompileResult compile(const Circuit& c, const MachineConfig& m, const CompileOptions& opt) {
  if (c.n > m.n) throw ValidationError("circuit uses " + std::to_string(c.n) + " qubits but the machine has " + std::to_string(m.n));
  if (!m.sign_table_complete()) throw ValidationError("machine sign table is incomplete");
  const auto diags = validate(c, m);
  if (!diags.empty()) {
    std::string msg;
    for (const Diagnostic& d : diags) {
      if (!msg.empty()) msg += "; ";
      msg += (d.gate_index >= 0 ? "gate " + std::to_string(d.gate_index) + ": " : std::string()) + d.message;
    }
    throw ValidationError(msg);
  }
  for (int a : opt.clean_ancillas)
    if (a < 0 || a >= c.n) throw ValidationError("clean ancilla index out of range");

  CompileResult res;
  CompilationReport& rep = res.report;
  rep.n_logical = c.n;
  for (const Gate& g : c.gates) ++rep.logical_counts[g.kind == GateKind::Oracle ? "oracle" : mnemonic(g.kind)];

  const SwapFree sf = eliminate_swaps(c);
  std::vector<int> mapping;
  if (opt.forced_mapping) {
    check_forced(*opt.forced_mapping, c.n, m);
    mapping = *opt.forced_mapping;
  } else {
    mapping = find_mapping(expand_oracles(sf.circuit), m, opt.strategy).perm;
  }

  const Circuit mapped = apply_mapping(sf.circuit, mapping, m.n);
  const std::vector<Circuit> chunks = split_chunks(mapped);
  Circuit phys(m.n, Level::Physical);
  int rx_chunks = 0;
  for (const Circuit& ch : chunks) {
    ChunkOut co = compile_chunk(ch, m, opt);
    phys.append(co.circuit);
    add_stats(rep.passes, co.stats);
    rep.cancellations += co.cancellations;
    rep.zcz_fast_path = rep.zcz_fast_path || co.zcz;
    ++rx_chunks;
  }

  res.program.circuit = phys;
  res.program.mapping = mapping;
  res.program.perm = sf.perm;
  rep.mapping = mapping;
  rep.output_perm = sf.perm;
  rep.pulses_1q = count_1q(phys);
  rep.pulses_2q = count_2q(phys);
  rep.rx_form = count_rx_form(phys);
  rep.cost = circuit_cost(phys, m);
  rep.fidelity_e1 = fidelity(rep.cost, ErrorModel::e1, m);
  rep.fidelity_e2 = fidelity(rep.cost, ErrorModel::e2, m);

  const Lemma1Bound b = lemma1_bound(c.n, rep.pulses_2q, m.tau1q);
  rep.lemma1_gate_bound = b.gate_bound;
  rep.lemma1_ok = rep.pulses_1q <= b.gate_bound;
  if (opt.plan.objective == Objective::error) {
    rep.lemma3_checked = true;
    // Each optimization chunk can leave up to n RX pulses.
    const int bound = c.n * std::max(rx_chunks, 1);
    rep.lemma3_ok = rep.rx_form <= bound;
    if (rx_chunks > 1) rep.notes.push_back("RX bound applied per chunk: " + std::to_string(rx_chunks) + " chunks");
  }

  const auto bad = validate(phys, m);
  if (!bad.empty()) throw std::logic_error("compiler produced an invalid physical circuit: " + bad.front().message);

  if (opt.verify) {
    rep.verification = verify(c, res.program, opt.tol, opt.clean_ancillas);
    if (rep.verification.status == Verdict::Status::no) throw VerificationError(rep.verification.str());
    if (!opt.clean_ancillas.empty()) rep.notes.push_back("verified on the clean-ancilla subspace");
  } else {
    rep.verification.reason = "disabled";
  }
  return res;
}

}  // namespace ionc
