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

#include "qcsim/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcsim {

Circuit build_cnf_oracle(const WeightedCnf& formula) {
  const int v = formula.num_vars();

  // Normalize clauses: drop duplicate literals, reject empty and
  // tautological ones.
  std::vector<Clause> clauses;
  for (const Clause& raw : formula.clauses()) {
    if (raw.empty()) {
      throw std::invalid_argument("oracle builder rejects empty clauses");
    }
    Clause clause;
    for (const Literal& lit : raw) {
      if (lit.var < 1 || lit.var > v) {
        throw std::out_of_range("clause references undeclared variable " +
                                std::to_string(lit.var));
      }
      bool duplicate = false;
      for (const Literal& seen : clause) {
        if (seen.var == lit.var) {
          if (seen.negated != lit.negated) {
            throw std::invalid_argument(
                "oracle builder rejects tautological clauses");
          }
          duplicate = true;
        }
      }
      if (!duplicate) clause.push_back(lit);
    }
    clauses.push_back(std::move(clause));
  }

  std::vector<size_t> multi_clauses;
  for (size_t i = 0; i < clauses.size(); ++i) {
    if (clauses[i].size() >= 2) multi_clauses.push_back(i);
  }
  const int a = static_cast<int>(multi_clauses.size());
  const int output_qubit = v + a;
  const int n_qubits = v + a + 1;

  std::vector<Gate> gates;
  for (int q = 0; q < v; ++q) gates.push_back(Gate::h(q));

  // Ancilla j computes the negation of its clause: all literals false.
  std::vector<Gate> compute;
  for (int j = 0; j < a; ++j) {
    const Clause& clause = clauses[multi_clauses[static_cast<size_t>(j)]];
    std::vector<ControlBit> controls;
    for (const Literal& lit : clause) {
      controls.push_back({lit.var - 1, lit.negated});
    }
    compute.push_back(Gate::mcx(std::move(controls), v + j));
  }
  gates.insert(gates.end(), compute.begin(), compute.end());

  // Output fires when every clause holds: single-literal clauses via their
  // variable qubit, multi-literal clauses via their negated ancilla.
  std::vector<ControlBit> output_controls;
  bool contradiction = false;
  for (const Clause& clause : clauses) {
    if (clause.size() != 1) continue;
    ControlBit control{clause[0].var - 1, !clause[0].negated};
    bool duplicate = false;
    for (const ControlBit& seen : output_controls) {
      if (seen.qubit == control.qubit) {
        duplicate = true;
        // Unit clauses x and !x can never fire together.
        if (seen.positive != control.positive) contradiction = true;
      }
    }
    if (!duplicate) output_controls.push_back(control);
  }
  for (int j = 0; j < a; ++j) {
    output_controls.push_back({v + j, false});
  }
  if (contradiction) {
    // Unsatisfiable unit pair: the output stays |0>.
  } else if (output_controls.empty()) {
    // No clauses at all: the formula is a tautology.
    gates.push_back(Gate::x(output_qubit));
  } else {
    gates.push_back(Gate::mcx(std::move(output_controls), output_qubit));
  }

  std::reverse(compute.begin(), compute.end());
  gates.insert(gates.end(), compute.begin(), compute.end());

  return Circuit(n_qubits, std::move(gates));
}

}  // namespace qcsim
