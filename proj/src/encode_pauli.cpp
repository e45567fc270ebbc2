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

#include "qcsim/encode_pauli.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>

#include "encode_util.hpp"
#include "qcsim/counter.hpp"
#include "qcsim/errors.hpp"

namespace qcsim {

PauliEncoder::PauliEncoder(int n_qubits, bool constrain_init)
    : n_qubits_(n_qubits), cnf_(0) {
  if (n_qubits < 1) {
    throw std::invalid_argument("encoder needs at least one qubit");
  }
  current_.r = cnf_.add_var();
  if (constrain_init) cnf_.add_unit(Literal::neg(current_.r));
  for (int q = 0; q < n_qubits_; ++q) {
    current_.x.push_back(cnf_.add_var());
    if (constrain_init) cnf_.add_unit(Literal::neg(current_.x.back()));
  }
  for (int q = 0; q < n_qubits_; ++q) {
    // z variables stay unconstrained: each assignment picks one Pauli string
    // of the |0...0><0...0| decomposition.
    current_.z.push_back(cnf_.add_var());
  }
  layers_.push_back(current_);
}

void PauliEncoder::push_layer() { layers_.push_back(current_); }

void PauliEncoder::apply_h(int qubit) {
  const size_t q = static_cast<size_t>(qubit);
  int x = current_.x[q];
  int z = current_.z[q];
  int x_next = cnf_.add_var();
  int z_next = cnf_.add_var();
  int r_next = cnf_.add_var();
  // X and Z swap; Y picks up a sign.
  detail::add_copy(cnf_, z, x_next);
  detail::add_copy(cnf_, x, z_next);
  detail::add_guarded_xor(cnf_, current_.r, r_next,
                          {{Literal::pos(x), Literal::pos(z)}},
                          {{Literal::neg(x)}, {Literal::neg(z)}});
  current_.x[q] = x_next;
  current_.z[q] = z_next;
  current_.r = r_next;
  push_layer();
}

void PauliEncoder::apply_s(int qubit) {
  const size_t q = static_cast<size_t>(qubit);
  int x = current_.x[q];
  int z = current_.z[q];
  int z_next = cnf_.add_var();
  int r_next = cnf_.add_var();
  // X -> Y, Y -> -X, Z -> Z: the x bit stays, z flips under x.
  detail::add_xor2(cnf_, z_next, z, x);
  detail::add_guarded_xor(cnf_, current_.r, r_next,
                          {{Literal::pos(x), Literal::pos(z)}},
                          {{Literal::neg(x)}, {Literal::neg(z)}});
  current_.z[q] = z_next;
  current_.r = r_next;
  push_layer();
}

void PauliEncoder::apply_t(int qubit) {
  const size_t q = static_cast<size_t>(qubit);
  int x = current_.x[q];
  int z = current_.z[q];
  int z_next = cnf_.add_var();
  int r_next = cnf_.add_var();
  int u = cnf_.add_var();
  // When x is set the T gate branches: z_next is left free and the branch
  // variable u carries weight 1/sqrt(2). Otherwise z is copied.
  cnf_.add_clause({Literal::pos(x), Literal::neg(z_next), Literal::pos(z)});
  cnf_.add_clause({Literal::pos(x), Literal::pos(z_next), Literal::neg(z)});
  detail::add_guarded_xor(
      cnf_, current_.r, r_next,
      {{Literal::pos(x), Literal::pos(z), Literal::neg(z_next)}},
      {{Literal::neg(x)}, {Literal::neg(z)}, {Literal::pos(z_next)}});
  detail::add_copy(cnf_, x, u);
  cnf_.set_weight(u, 1.0 / std::numbers::sqrt2, 1.0);
  u_vars_.push_back(u);
  current_.z[q] = z_next;
  current_.r = r_next;
  push_layer();
}

void PauliEncoder::apply_cnot(int control, int target) {
  const size_t c = static_cast<size_t>(control);
  const size_t t = static_cast<size_t>(target);
  int xc = current_.x[c];
  int zc = current_.z[c];
  int xt = current_.x[t];
  int zt = current_.z[t];
  int xt_next = cnf_.add_var();
  int zc_next = cnf_.add_var();
  int r_next = cnf_.add_var();
  detail::add_xor2(cnf_, xt_next, xt, xc);
  detail::add_xor2(cnf_, zc_next, zc, zt);
  // Sign flips exactly when x_c z_t (x_t xor !z_c) holds.
  detail::add_guarded_xor(
      cnf_, current_.r, r_next,
      {{Literal::pos(xc), Literal::pos(zt), Literal::pos(xt), Literal::pos(zc)},
       {Literal::pos(xc), Literal::pos(zt), Literal::neg(xt), Literal::neg(zc)}},
      {{Literal::neg(xc)},
       {Literal::neg(zt)},
       {Literal::pos(xt), Literal::neg(zc)},
       {Literal::neg(xt), Literal::pos(zc)}});
  current_.x[t] = xt_next;
  current_.z[c] = zc_next;
  current_.r = r_next;
  push_layer();
}

void PauliEncoder::apply_x(int qubit) {
  int z = current_.z[static_cast<size_t>(qubit)];
  int r_next = cnf_.add_var();
  detail::add_xor2(cnf_, r_next, current_.r, z);
  current_.r = r_next;
  push_layer();
}

void PauliEncoder::apply_z(int qubit) {
  int x = current_.x[static_cast<size_t>(qubit)];
  int r_next = cnf_.add_var();
  detail::add_xor2(cnf_, r_next, current_.r, x);
  current_.r = r_next;
  push_layer();
}

void PauliEncoder::apply_gate(const Gate& gate) {
  if (gate.max_qubit() >= n_qubits_) {
    throw std::out_of_range("gate qubit index out of range");
  }
  switch (gate.kind()) {
    case GateKind::X: apply_x(gate.target()); return;
    case GateKind::H: apply_h(gate.target()); return;
    case GateKind::S: apply_s(gate.target()); return;
    case GateKind::T: apply_t(gate.target()); return;
    case GateKind::Cnot:
      if (!gate.controls()[0].positive) {
        throw UnsupportedGateError(
            "Pauli-basis encoding needs positive controls; expand negated "
            "controls first");
      }
      apply_cnot(gate.controls()[0].qubit, gate.target());
      return;
    case GateKind::Ccnot:
    case GateKind::Mcx:
      throw UnsupportedGateError(
          "Pauli-basis encoding supports Clifford+T gates only; lower " +
          gate_kind_name(gate.kind()) + " first");
  }
}

PauliEncoding PauliEncoder::finish() && {
  return PauliEncoding{std::move(cnf_), n_qubits_, std::move(layers_),
                       std::move(u_vars_)};
}

PauliEncoding encode_circuit_pauli(const Circuit& circuit) {
  PauliEncoder encoder(circuit.n_qubits());
  for (const Gate& g : circuit.gates()) encoder.apply_gate(g);
  return std::move(encoder).finish();
}

WeightedCnf measured_formula(const PauliEncoding& encoding, int qubit) {
  if (qubit < 0 || qubit >= encoding.n_qubits) {
    throw std::out_of_range("measured qubit out of range");
  }
  WeightedCnf cnf = encoding.cnf;
  const PauliEncoding::Layer& last = encoding.final_layer();
  for (int q = 0; q < encoding.n_qubits; ++q) {
    cnf.add_unit(Literal::neg(last.x[static_cast<size_t>(q)]));
    if (q == qubit) {
      cnf.add_unit(Literal::pos(last.z[static_cast<size_t>(q)]));
    } else {
      cnf.add_unit(Literal::neg(last.z[static_cast<size_t>(q)]));
    }
  }
  cnf.set_weight(last.r, -1.0, 1.0);
  return cnf;
}

double expectation_z_wmc(const Circuit& circuit, int qubit) {
  PauliEncoding encoding = encode_circuit_pauli(circuit);
  return count_weighted(measured_formula(encoding, qubit));
}

double prob0_pauli(const Circuit& circuit, int qubit) {
  double lambda = expectation_z_wmc(circuit, qubit);
  double p0 = 0.5 * (1.0 + lambda);
  if (p0 < -1e-9 || p0 > 1.0 + 1e-9) {
    throw std::runtime_error("Pauli readout probability outside [0, 1]");
  }
  return std::clamp(p0, 0.0, 1.0);
}

}  // namespace qcsim
