// Copyright 2026 The qcsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

#include "qcsim/circuit.hpp"

namespace qcsim {

// Parses the line-oriented .qc circuit format:
//   qubits <n>
//   x|h|s|t <q>
//   cx <c> <t>
//   ccx <c1> <c2> <t>
//   mcx <ctrl>... <t>      controls may be negated with a '!' prefix
// '#' starts a comment; blank lines are ignored. Throws ParseError with the
// offending line and column.
Circuit parse_circuit(const std::string& text);

Circuit parse_circuit_file(const std::string& path);

// Inverse of parse_circuit: parse_circuit(serialize_circuit(c)) == c.
std::string serialize_circuit(const Circuit& circuit);

}  // namespace qcsim
