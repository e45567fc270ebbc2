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

#include "qcsim/lowering.hpp"

#include <vector>

#include "qcsim/errors.hpp"

namespace qcsim {

Circuit canonicalize_mcx(const Circuit& circuit) {
  std::vector<Gate> gates;
  for (const Gate& g : circuit.gates()) {
    if (g.controls().empty()) {
      gates.push_back(g);
      continue;
    }
    // Surround the gate with X on negated-control wires.
    std::vector<int> flipped;
    std::vector<int> positive;
    for (const ControlBit& c : g.controls()) {
      if (!c.positive) flipped.push_back(c.qubit);
      positive.push_back(c.qubit);
    }
    for (int q : flipped) gates.push_back(Gate::x(q));
    switch (positive.size()) {
      case 1:
        gates.push_back(Gate::cnot(positive[0], g.target()));
        break;
      case 2:
        gates.push_back(Gate::ccnot(positive[0], positive[1], g.target()));
        break;
      default:
        throw UnsupportedGateError(
            "mcx with more than two controls has no Clifford+T lowering here");
    }
    for (int q : flipped) gates.push_back(Gate::x(q));
  }
  return Circuit(circuit.n_qubits(), std::move(gates));
}

namespace {

void emit_t_dagger(std::vector<Gate>& out, int qubit) {
  // T^-1 = S^-1 . T with S^-1 = S.S.S (diagonals commute).
  out.push_back(Gate::s(qubit));
  out.push_back(Gate::s(qubit));
  out.push_back(Gate::s(qubit));
  out.push_back(Gate::t(qubit));
}

void emit_ccnot(std::vector<Gate>& out, int a, int b, int c) {
  out.push_back(Gate::h(c));
  out.push_back(Gate::cnot(b, c));
  emit_t_dagger(out, c);
  out.push_back(Gate::cnot(a, c));
  out.push_back(Gate::t(c));
  out.push_back(Gate::cnot(b, c));
  emit_t_dagger(out, c);
  out.push_back(Gate::cnot(a, c));
  out.push_back(Gate::t(b));
  out.push_back(Gate::t(c));
  out.push_back(Gate::h(c));
  out.push_back(Gate::cnot(a, b));
  out.push_back(Gate::t(a));
  emit_t_dagger(out, b);
  out.push_back(Gate::cnot(a, b));
}

}  // namespace

Circuit lower_ccnot(const Circuit& circuit) {
  std::vector<Gate> gates;
  for (const Gate& g : circuit.gates()) {
    if (g.has_negated_control()) {
      throw UnsupportedGateError(
          "lower_ccnot expects positive controls; run canonicalize_mcx first");
    }
    switch (g.kind()) {
      case GateKind::Ccnot:
        emit_ccnot(gates, g.controls()[0].qubit, g.controls()[1].qubit,
                   g.target());
        break;
      case GateKind::Mcx:
        throw UnsupportedGateError(
            "lower_ccnot expects no mcx gates; run canonicalize_mcx first");
      default:
        gates.push_back(g);
        break;
    }
  }
  return Circuit(circuit.n_qubits(), std::move(gates));
}

}  // namespace qcsim
