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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ionc/formats.hpp"
#include "ionc/gatelib.hpp"
#include "ionc/pipeline.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

ionc::RewritePlan make_plan(const std::string& objective, double lambda, const std::string& rx) {
  ionc::RewritePlan plan;
  if (objective == "time") plan.objective = ionc::Objective::time;
  else if (objective == "error") plan.objective = ionc::Objective::error;
  else if (objective == "balanced") plan.objective = ionc::Objective::balanced;
  else throw py::value_error("objective must be 'time', 'error' or 'balanced'");
  if (rx == "left") plan.rx_direction = ionc::RxDirection::left;
  else if (rx == "right") plan.rx_direction = ionc::RxDirection::right;
  else throw py::value_error("rx_direction must be 'left' or 'right'");
  plan.lambda = lambda;
  return plan;
}

ionc::CompileResult compile_py(const ionc::Circuit& c, const ionc::MachineConfig* m, const std::string& objective, double lambda,
                               const std::string& rx_direction, bool verify, std::optional<std::vector<int>> mapping,
                               std::vector<int> clean_ancillas) {
  ionc::CompileOptions opt;
  opt.plan = make_plan(objective, lambda, rx_direction);
  opt.verify = verify;
  opt.forced_mapping = std::move(mapping);
  opt.clean_ancillas = std::move(clean_ancillas);
  py::gil_scoped_release release;
  return ionc::compile(c, m ? *m : ionc::default_machine(), opt);
}

}  // namespace

PYBIND11_MODULE(_ionc, m) {
  m.doc() = "Trapped-ion circuit compiler";

  py::register_exception<ionc::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ionc::ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<ionc::VerificationError>(m, "VerificationError", PyExc_RuntimeError);

  py::class_<ionc::Gate>(m, "Gate")
      .def_property_readonly("name", [](const ionc::Gate& g) { return std::string(ionc::mnemonic(g.kind)); })
      .def_readonly("qubits", &ionc::Gate::qubits)
      .def_readonly("params", &ionc::Gate::params)
      .def("__repr__", [](const ionc::Gate& g) { return "<Gate " + ionc::describe(g) + ">"; });

  py::class_<ionc::Circuit>(m, "Circuit")
      .def(py::init<int>(), "n"_a)
      .def_readonly("n", &ionc::Circuit::n)
      .def_readonly("gates", &ionc::Circuit::gates)
      .def(
          "add",
          [](ionc::Circuit& c, const std::string& name, std::vector<int> qubits, std::vector<double> params) -> ionc::Circuit& {
            const auto k = ionc::kind_from_mnemonic(name);
            if (!k || *k == ionc::GateKind::Oracle) throw py::value_error("unknown gate '" + name + "'");
            return c.add(*k, std::move(qubits), std::move(params));
          },
          "name"_a, "qubits"_a, "params"_a = std::vector<double>{}, py::return_value_policy::reference_internal)
      .def("__len__", &ionc::Circuit::size)
      .def("unitary", [](const ionc::Circuit& c) { return ionc::circuit_unitary(ionc::expand_oracles(c)); })
      .def("__str__", [](const ionc::Circuit& c) { return ionc::emit_circuit(c); });

  py::class_<ionc::MachineConfig>(m, "MachineConfig")
      .def_readonly("n", &ionc::MachineConfig::n)
      .def_readonly("tau1q", &ionc::MachineConfig::tau1q)
      .def_readonly("tau2q", &ionc::MachineConfig::tau2q)
      .def_readonly("epsilon", &ionc::MachineConfig::epsilon)
      .def_readonly("E", &ionc::MachineConfig::bigE)
      .def("chi_sign", &ionc::MachineConfig::chi_sign, "i"_a, "j"_a)
      .def("__str__", [](const ionc::MachineConfig& mc) { return ionc::emit_machine(mc); });

  py::class_<ionc::CompilationReport>(m, "Report")
      .def_readonly("pulses_1q", &ionc::CompilationReport::pulses_1q)
      .def_readonly("pulses_2q", &ionc::CompilationReport::pulses_2q)
      .def_readonly("rx_form", &ionc::CompilationReport::rx_form)
      .def_readonly("mapping", &ionc::CompilationReport::mapping)
      .def_readonly("output_perm", &ionc::CompilationReport::output_perm)
      .def_readonly("cancellations", &ionc::CompilationReport::cancellations)
      .def_property_readonly("duration_us", [](const ionc::CompilationReport& r) { return r.cost.duration; })
      .def_property_readonly("e1", [](const ionc::CompilationReport& r) { return r.cost.e1.render_e1(); })
      .def_property_readonly("e2", [](const ionc::CompilationReport& r) { return r.cost.e2.render_e2(); })
      .def_readonly("fidelity_e1", &ionc::CompilationReport::fidelity_e1)
      .def_readonly("fidelity_e2", &ionc::CompilationReport::fidelity_e2)
      .def_property_readonly("verified", [](const ionc::CompilationReport& r) { return r.verification.ok(); })
      .def("text", [](const ionc::CompilationReport& r) { return ionc::emit_report(r); })
      .def("structured", [](const ionc::CompilationReport& r) { return ionc::emit_report(r, ionc::ReportFormat::structured); });

  py::class_<ionc::CompileResult>(m, "CompileResult")
      .def_property_readonly("circuit", [](const ionc::CompileResult& r) { return r.program.circuit; })
      .def_property_readonly("report", [](const ionc::CompileResult& r) { return r.report; })
      .def("schedule", [](const ionc::CompileResult& r) { return ionc::emit_schedule(r.program); });

  m.def("default_machine", &ionc::default_machine);
  m.def("parse_machine", &ionc::parse_machine, "text"_a);
  m.def("parse_circuit", &ionc::parse_circuit, "text"_a);
  m.def("parse_angle", &ionc::parse_angle, "text"_a);
  m.def("benchmark", &ionc::build_benchmark, "name"_a);
  m.def("benchmark_names", &ionc::benchmark_names);
  m.def("compile", &compile_py, "circuit"_a, "machine"_a = nullptr, "objective"_a = "time", "lam"_a = 0.5,
        "rx_direction"_a = "left", "verify"_a = true, "mapping"_a = py::none(), "clean_ancillas"_a = std::vector<int>{});
  m.def(
      "simulate",
      [](const ionc::Circuit& c, std::uint64_t index) {
        return ionc::StateVector(ionc::simulate(ionc::expand_oracles(c), ionc::basis_state(c.n, index)));
      },
      "circuit"_a, "index"_a = 0);
  m.def("template_cd", &ionc::template_cd, "a"_a, "b"_a);
}
