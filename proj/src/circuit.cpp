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

#include "qcsim/circuit.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcsim {

std::string gate_kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::X: return "x";
    case GateKind::H: return "h";
    case GateKind::S: return "s";
    case GateKind::T: return "t";
    case GateKind::Cnot: return "cx";
    case GateKind::Ccnot: return "ccx";
    case GateKind::Mcx: return "mcx";
  }
  return "?";
}

namespace {

size_t expected_controls(GateKind kind) {
  switch (kind) {
    case GateKind::Cnot: return 1;
    case GateKind::Ccnot: return 2;
    default: return 0;
  }
}

}  // namespace

Gate::Gate(GateKind kind, int target, std::vector<ControlBit> controls)
    : kind_(kind), target_(target), controls_(std::move(controls)) {
  if (target_ < 0) {
    throw std::invalid_argument("gate target must be nonnegative");
  }
  if (kind_ == GateKind::Mcx) {
    if (controls_.empty()) {
      throw std::invalid_argument("mcx needs at least one control");
    }
  } else if (controls_.size() != expected_controls(kind_)) {
    throw std::invalid_argument("wrong control count for gate " +
                                gate_kind_name(kind_));
  }
  std::vector<int> qubits{target_};
  for (const ControlBit& c : controls_) {
    if (c.qubit < 0) {
      throw std::invalid_argument("control qubit must be nonnegative");
    }
    qubits.push_back(c.qubit);
  }
  std::sort(qubits.begin(), qubits.end());
  if (std::adjacent_find(qubits.begin(), qubits.end()) != qubits.end()) {
    throw std::invalid_argument("duplicate qubit within gate " +
                                gate_kind_name(kind_));
  }
}

bool Gate::has_negated_control() const {
  return std::any_of(controls_.begin(), controls_.end(),
                     [](const ControlBit& c) { return !c.positive; });
}

int Gate::max_qubit() const {
  int m = target_;
  for (const ControlBit& c : controls_) m = std::max(m, c.qubit);
  return m;
}

Circuit::Circuit(int n_qubits, std::vector<Gate> gates)
    : n_qubits_(n_qubits), gates_(std::move(gates)) {
  if (n_qubits_ <= 0) {
    throw std::invalid_argument("circuit needs a positive qubit count");
  }
  for (const Gate& g : gates_) {
    if (g.max_qubit() >= n_qubits_) {
      throw std::out_of_range("gate qubit index " +
                              std::to_string(g.max_qubit()) +
                              " out of range for " +
                              std::to_string(n_qubits_) + " qubits");
    }
  }
}

BasisString BasisString::from_string(const std::string& text) {
  std::vector<bool> bits;
  bits.reserve(text.size());
  for (char ch : text) {
    if (ch != '0' && ch != '1') {
      throw std::invalid_argument("basis string may contain only 0 and 1");
    }
    bits.push_back(ch == '1');
  }
  return BasisString(std::move(bits));
}

BasisString BasisString::from_index(std::uint64_t index, int n_qubits) {
  std::vector<bool> bits(static_cast<size_t>(n_qubits));
  for (int q = 0; q < n_qubits; ++q) {
    bits[static_cast<size_t>(q)] = (index >> (n_qubits - 1 - q)) & 1u;
  }
  return BasisString(std::move(bits));
}

std::uint64_t BasisString::index() const {
  std::uint64_t idx = 0;
  for (bool b : bits_) idx = (idx << 1) | (b ? 1u : 0u);
  return idx;
}

std::string BasisString::str() const {
  std::string s;
  s.reserve(bits_.size());
  for (bool b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

}  // namespace qcsim
