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

#include <optional>
#include <string>
#include <vector>

#include "qcsim/circuit.hpp"

namespace qcsim {

// Gate-set capability probes used by the CLI and the cross-check harness.
// The weighted-model-counting backend handles Toffoli+H circuits; the
// Pauli-basis backend handles Clifford+T, where Ccnot and small Mcx gates
// can be rewritten first.
bool wmc_supports(const Circuit& circuit);
bool pauli_supports(const Circuit& circuit);

// Rewrites a circuit for the Pauli backend: negated controls expanded,
// Mcx canonicalized, Ccnot lowered to Clifford+T. Sets `lowered` when the
// circuit actually changed.
Circuit prepare_for_pauli(const Circuit& circuit, bool* lowered = nullptr);

struct BackendReport {
  std::string name;
  bool applicable = false;
  std::string note;
  // Full measurement distribution, when the backend provides one.
  std::vector<double> probabilities;
  // P(qubit q = 0) per qubit.
  std::vector<double> prob0;
};

struct CheckReport {
  std::vector<BackendReport> backends;
  double max_deviation = 0.0;
  bool pass = false;
};

// Runs every backend applicable to the circuit's gate set, derives
// comparable quantities, and reports the maximum pairwise deviation.
// Passes iff the deviation is at most 1e-9. The wmc backend is skipped
// above `wmc_qubit_limit` qubits (its distribution costs 2^n counts).
CheckReport cross_check(const Circuit& circuit, int wmc_qubit_limit = 12);

}  // namespace qcsim
