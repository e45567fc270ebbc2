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

#include <vector>

#include "qcsim/circuit.hpp"
#include "qcsim/cnf.hpp"

namespace qcsim {

// Pauli-basis encoding of a Clifford+T circuit: each satisfying assignment
// is one signed Pauli string of the output density matrix's decomposition,
// identified by per-qubit (x, z) bit pairs ((0,0)=I, (0,1)=Z, (1,0)=X,
// (1,1)=Y) and a global sign bit r. T gates contribute weighted branch
// variables u with W(u) = 1/sqrt(2).
struct PauliEncoding {
  struct Layer {
    int r;
    std::vector<int> x;
    std::vector<int> z;
  };

  WeightedCnf cnf;
  int n_qubits;
  // layers[0] is the initial state; one more layer per encoded gate.
  std::vector<Layer> layers;
  // Branch variable of each T gate, in gate order (weights already set).
  std::vector<int> u_vars;

  const Layer& final_layer() const { return layers.back(); }
};

// Incremental encoder. The constructor emits the input-state constraint
// (sign and all x variables negative; z variables free). Gate methods append
// the conjugation update for one gate. Passing constrain_init = false leaves
// the first layer completely free, so callers can pin an arbitrary input
// Pauli term themselves.
class PauliEncoder {
public:
  explicit PauliEncoder(int n_qubits, bool constrain_init = true);

  void apply_h(int qubit);
  void apply_s(int qubit);
  void apply_t(int qubit);
  void apply_cnot(int control, int target);
  void apply_x(int qubit);
  void apply_z(int qubit);

  // Maps an IR gate onto the updates above. Ccnot and Mcx are rejected;
  // lower them to Clifford+T first.
  void apply_gate(const Gate& gate);

  PauliEncoding finish() &&;

private:
  void push_layer();

  int n_qubits_;
  WeightedCnf cnf_;
  PauliEncoding::Layer current_;
  std::vector<PauliEncoding::Layer> layers_;
  std::vector<int> u_vars_;
};

PauliEncoding encode_circuit_pauli(const Circuit& circuit);

// Conjoins the single-observable readout constraint for qubit q (z_q
// positive, every other final x/z negative) and sets the final sign weights
// W(r) = -1, W(!r) = +1. The weighted count of the result is Tr(Z_q rho).
WeightedCnf measured_formula(const PauliEncoding& encoding, int qubit);

// Tr(Z_q rho) for the circuit's output state, via weighted model counting.
double expectation_z_wmc(const Circuit& circuit, int qubit);

// P(measuring qubit q yields 0) = (1 + Tr(Z_q rho)) / 2, clamped to [0, 1].
double prob0_pauli(const Circuit& circuit, int qubit);

}  // namespace qcsim
