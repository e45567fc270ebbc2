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

#include <cstdint>
#include <vector>

#include "qcsim/circuit.hpp"
#include "qcsim/cnf.hpp"

namespace qcsim {

// Computational-basis encoding of a Toffoli+H circuit. Satisfying
// assignments of `cnf` correspond one-to-one to the nonzero paths of the
// circuit's path-sum expansion; the weighted count over assignments with the
// final layer fixed to basis string b equals the (real) amplitude of |b>.
struct CompEncoding {
  WeightedCnf cnf;
  int n_qubits;
  // Variable id of qubit q at the final time step.
  std::vector<int> final_vars;
  // Weight variable of each H gate, in gate order.
  std::vector<int> h_vars;
};

// Encodes a circuit over {X, H, Cnot, Ccnot, Mcx}. Gates S and T are
// rejected: their encoding in this basis needs complex weights. Qubits
// untouched by a gate keep their previous layer variable.
CompEncoding encode_circuit_comp(const Circuit& circuit);

// Weighted count of the circuit formula conjoined with final-layer unit
// literals matching b. Equals the output amplitude <b|C|0...0>, which is
// real for this gate set.
double amplitude_wmc(const Circuit& circuit, const BasisString& b);

// Unweighted model count of the circuit formula without any measurement
// constraint: the number of nonzero-amplitude paths in the path sum.
std::int64_t path_count(const Circuit& circuit);

}  // namespace qcsim
