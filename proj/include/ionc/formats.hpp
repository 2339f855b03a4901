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

#include <stdexcept>
#include <string>

#include "ionc/ir.hpp"
#include "ionc/pipeline.hpp"

namespace ionc {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& msg);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Accepts "pi/4", "-3pi/8", "0.25pi", "pi", or radians.
double parse_angle(const std::string& text);

Circuit parse_circuit(const std::string& text);
// Logical circuit text that parse_circuit reads back; oracle bodies come first.
std::string emit_circuit(const Circuit& c);
MachineConfig parse_machine(const std::string& text);
std::string emit_machine(const MachineConfig& m);

std::string emit_schedule(const Program& p, const MachineConfig* m = nullptr);
// Reads a schedule (or any circuit text) including MAP/PERM lines.
Program parse_schedule(const std::string& text);

enum class ReportFormat { text, structured };
std::string emit_report(const CompilationReport& rep, ReportFormat fmt = ReportFormat::text);

int cli_main(int argc, char** argv);

}  // namespace ionc
