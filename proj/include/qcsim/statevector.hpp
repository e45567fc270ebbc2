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

#include <complex>
#include <vector>

#include "qcsim/circuit.hpp"

namespace qcsim {

using Complex = std::complex<double>;

enum class PauliOp { I, X, Y, Z };

// Per-qubit Pauli symbols, e.g. "ZIX". Length must match the state it is
// evaluated against.
class PauliString {
public:
  explicit PauliString(std::vector<PauliOp> ops) : ops_(std::move(ops)) {}
  static PauliString from_string(const std::string& text);

  int size() const { return static_cast<int>(ops_.size()); }
  PauliOp op(int qubit) const { return ops_[static_cast<size_t>(qubit)]; }

private:
  std::vector<PauliOp> ops_;
};

// Dense 2^n complex amplitude array. Index i corresponds to the basis string
// given by the n-bit big-endian expansion of i (qubit 0 = most significant).
class StateVector {
public:
  // Desk-scale default cap; pass a larger max_qubits to override.
  static constexpr int kDefaultMaxQubits = 24;

  static StateVector zero(int n_qubits, int max_qubits = kDefaultMaxQubits);

  int n_qubits() const { return n_qubits_; }
  const std::vector<Complex>& amplitudes() const { return amps_; }
  Complex amplitude(const BasisString& b) const;

  void apply_gate(const Gate& gate);

  double norm_squared() const;
  // |amp_b|^2.
  double prob(const BasisString& b) const;
  // Probability that measuring qubit q yields 0.
  double marginal_prob0(int qubit) const;
  // <psi|P|psi>, real within 1e-10 for valid states.
  double expectation(const PauliString& pauli) const;

private:
  StateVector(int n_qubits, std::vector<Complex> amps)
      : n_qubits_(n_qubits), amps_(std::move(amps)) {}

  int n_qubits_ = 0;
  std::vector<Complex> amps_;
};

// Folds apply_gate over the circuit starting from the all-zeros state.
StateVector simulate(const Circuit& circuit,
                     int max_qubits = StateVector::kDefaultMaxQubits);

}  // namespace qcsim
