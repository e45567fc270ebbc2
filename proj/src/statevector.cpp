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

#include "qcsim/statevector.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qcsim {

PauliString PauliString::from_string(const std::string& text) {
  std::vector<PauliOp> ops;
  ops.reserve(text.size());
  for (char ch : text) {
    switch (ch) {
      case 'I': ops.push_back(PauliOp::I); break;
      case 'X': ops.push_back(PauliOp::X); break;
      case 'Y': ops.push_back(PauliOp::Y); break;
      case 'Z': ops.push_back(PauliOp::Z); break;
      default:
        throw std::invalid_argument("Pauli string may contain only I, X, Y, Z");
    }
  }
  return PauliString(std::move(ops));
}

StateVector StateVector::zero(int n_qubits, int max_qubits) {
  if (n_qubits < 1 || n_qubits > max_qubits) {
    throw std::out_of_range("qubit count " + std::to_string(n_qubits) +
                            " outside [1, " + std::to_string(max_qubits) + "]");
  }
  std::vector<Complex> amps(size_t{1} << n_qubits, Complex{0.0, 0.0});
  amps[0] = Complex{1.0, 0.0};
  return StateVector(n_qubits, std::move(amps));
}

Complex StateVector::amplitude(const BasisString& b) const {
  if (b.size() != n_qubits_) {
    throw std::invalid_argument("basis string length mismatch");
  }
  return amps_[b.index()];
}

void StateVector::apply_gate(const Gate& gate) {
  if (gate.max_qubit() >= n_qubits_) {
    throw std::out_of_range("gate qubit index out of range");
  }
  const size_t dim = amps_.size();
  // Qubit q occupies bit (n-1-q) of the amplitude index.
  const size_t target_bit = size_t{1} << (n_qubits_ - 1 - gate.target());

  switch (gate.kind()) {
    case GateKind::X: {
      for (size_t i = 0; i < dim; ++i) {
        if ((i & target_bit) == 0) std::swap(amps_[i], amps_[i | target_bit]);
      }
      return;
    }
    case GateKind::H: {
      const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
      for (size_t i = 0; i < dim; ++i) {
        if ((i & target_bit) == 0) {
          Complex a0 = amps_[i];
          Complex a1 = amps_[i | target_bit];
          amps_[i] = inv_sqrt2 * (a0 + a1);
          amps_[i | target_bit] = inv_sqrt2 * (a0 - a1);
        }
      }
      return;
    }
    case GateKind::S: {
      const Complex phase{0.0, 1.0};
      for (size_t i = 0; i < dim; ++i) {
        if (i & target_bit) amps_[i] *= phase;
      }
      return;
    }
    case GateKind::T: {
      const Complex phase = std::polar(1.0, std::numbers::pi / 4.0);
      for (size_t i = 0; i < dim; ++i) {
        if (i & target_bit) amps_[i] *= phase;
      }
      return;
    }
    case GateKind::Cnot:
    case GateKind::Ccnot:
    case GateKind::Mcx: {
      size_t positive_mask = 0;
      size_t control_mask = 0;
      for (const ControlBit& c : gate.controls()) {
        size_t bit = size_t{1} << (n_qubits_ - 1 - c.qubit);
        control_mask |= bit;
        if (c.positive) positive_mask |= bit;
      }
      for (size_t i = 0; i < dim; ++i) {
        if ((i & target_bit) == 0 && (i & control_mask) == positive_mask) {
          std::swap(amps_[i], amps_[i | target_bit]);
        }
      }
      return;
    }
  }
}

double StateVector::norm_squared() const {
  double total = 0.0;
  for (const Complex& a : amps_) total += std::norm(a);
  return total;
}

double StateVector::prob(const BasisString& b) const {
  return std::norm(amplitude(b));
}

double StateVector::marginal_prob0(int qubit) const {
  if (qubit < 0 || qubit >= n_qubits_) {
    throw std::out_of_range("qubit index out of range");
  }
  const size_t bit = size_t{1} << (n_qubits_ - 1 - qubit);
  double total = 0.0;
  for (size_t i = 0; i < amps_.size(); ++i) {
    if ((i & bit) == 0) total += std::norm(amps_[i]);
  }
  return total;
}

double StateVector::expectation(const PauliString& pauli) const {
  if (pauli.size() != n_qubits_) {
    throw std::invalid_argument("Pauli string length mismatch");
  }
  // P|i> = c_i |i ^ flip_mask> with c_i a product of per-qubit phases.
  size_t flip_mask = 0;
  size_t z_mask = 0;
  size_t y_mask = 0;
  for (int q = 0; q < n_qubits_; ++q) {
    size_t bit = size_t{1} << (n_qubits_ - 1 - q);
    switch (pauli.op(q)) {
      case PauliOp::I: break;
      case PauliOp::X: flip_mask |= bit; break;
      case PauliOp::Y: flip_mask |= bit; y_mask |= bit; break;
      case PauliOp::Z: z_mask |= bit; break;
    }
  }
  const int y_count = std::popcount(y_mask);
  Complex total{0.0, 0.0};
  for (size_t i = 0; i < amps_.size(); ++i) {
    // Y|b> = i(-1)^b |1-b>, Z|b> = (-1)^b |b>.
    int sign_bits = std::popcount(i & (z_mask | y_mask));
    Complex coeff = (sign_bits & 1) ? Complex{-1.0, 0.0} : Complex{1.0, 0.0};
    switch (y_count & 3) {
      case 1: coeff *= Complex{0.0, 1.0}; break;
      case 2: coeff *= Complex{-1.0, 0.0}; break;
      case 3: coeff *= Complex{0.0, -1.0}; break;
      default: break;
    }
    total += std::conj(amps_[i ^ flip_mask]) * coeff * amps_[i];
  }
  if (std::abs(total.imag()) > 1e-10) {
    throw std::runtime_error("Pauli expectation has nonreal value");
  }
  return total.real();
}

StateVector simulate(const Circuit& circuit, int max_qubits) {
  StateVector state = StateVector::zero(circuit.n_qubits(), max_qubits);
  for (const Gate& g : circuit.gates()) state.apply_gate(g);
  return state;
}

}  // namespace qcsim
