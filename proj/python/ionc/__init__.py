# Copyright 2026 The ionc Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Trapped-ion circuit compiler: R(theta, phi) and XX(chi) pulse programs."""

from ._ionc import (
    Circuit,
    CompileResult,
    Gate,
    MachineConfig,
    ParseError,
    Report,
    ValidationError,
    VerificationError,
    benchmark,
    benchmark_names,
    compile,
    default_machine,
    parse_angle,
    parse_circuit,
    parse_machine,
    simulate,
    template_cd,
)

__all__ = [
    "Circuit",
    "CompileResult",
    "Gate",
    "MachineConfig",
    "ParseError",
    "Report",
    "ValidationError",
    "VerificationError",
    "benchmark",
    "benchmark_names",
    "compile",
    "default_machine",
    "parse_angle",
    "parse_circuit",
    "parse_machine",
    "simulate",
    "template_cd",
]
