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

#include "qcsim/circuit.hpp"
#include "qcsim/cnf.hpp"

namespace qcsim {

// Builds the function-oracle circuit of a CNF formula with v variables and
// a clauses of two or more literals, on v + a + 1 qubits:
//   - qubits [0, v): formula variables, each put in superposition by H;
//   - qubits [v, v+a): one ancilla per multi-literal clause, computing the
//     clause's negation via an Mcx whose control polarities negate the
//     literal polarities;
//   - qubit v+a: the output, set by one Mcx controlled on single-literal
//     clauses directly and on each ancilla negated;
//   - ancilla Mcx gates repeated in reverse to uncompute.
// After simulation, P(output = 1) = (#models) / 2^v. Weights on the formula
// are ignored. Clauses must be non-empty and non-tautological; duplicate
// literals within a clause are collapsed.
Circuit build_cnf_oracle(const WeightedCnf& formula);

}  // namespace qcsim
