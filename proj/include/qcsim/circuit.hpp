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
#include <string>
#include <vector>

namespace qcsim {

enum class GateKind { X, H, S, T, Cnot, Ccnot, Mcx };

std::string gate_kind_name(GateKind kind);

// One control wire of a multi-controlled gate. `positive` selects whether the
// gate fires on |1> (true) or |0> (false).
struct ControlBit {
  int qubit;
  bool positive = true;

  bool operator==(const ControlBit&) const = default;
};

// A single gate instance. X/H/S/T have no controls; Cnot has one, Ccnot two,
// Mcx at least one. All qubit indices within a gate are distinct.
class Gate {
public:
  static Gate x(int target) { return Gate(GateKind::X, target, {}); }
  static Gate h(int target) { return Gate(GateKind::H, target, {}); }
  static Gate s(int target) { return Gate(GateKind::S, target, {}); }
  static Gate t(int target) { return Gate(GateKind::T, target, {}); }
  static Gate cnot(int control, int target) {
    return Gate(GateKind::Cnot, target, {{control, true}});
  }
  static Gate ccnot(int control0, int control1, int target) {
    return Gate(GateKind::Ccnot, target, {{control0, true}, {control1, true}});
  }
  static Gate mcx(std::vector<ControlBit> controls, int target) {
    return Gate(GateKind::Mcx, target, std::move(controls));
  }

  GateKind kind() const { return kind_; }
  int target() const { return target_; }
  const std::vector<ControlBit>& controls() const { return controls_; }

  bool has_negated_control() const;
  // Largest qubit index mentioned by the gate.
  int max_qubit() const;

  bool operator==(const Gate&) const = default;

private:
  Gate(GateKind kind, int target, std::vector<ControlBit> controls);

  GateKind kind_;
  int target_;
  std::vector<ControlBit> controls_;
};

// Ordered gate list over a fixed qubit count. Gates apply left to right to
// the all-zeros input state. Immutable once built.
class Circuit {
public:
  Circuit(int n_qubits, std::vector<Gate> gates);

  int n_qubits() const { return n_qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }

  bool operator==(const Circuit&) const = default;

private:
  int n_qubits_;
  std::vector<Gate> gates_;
};

// Length-n bit sequence naming a computational-basis state. Bit 0 is qubit 0,
// the top wire, and the most significant position of the basis-state index.
class BasisString {
public:
  BasisString() = default;
  explicit BasisString(std::vector<bool> bits) : bits_(std::move(bits)) {}

  // Parses a string of '0'/'1' characters, e.g. "010".
  static BasisString from_string(const std::string& text);
  static BasisString from_index(std::uint64_t index, int n_qubits);

  int size() const { return static_cast<int>(bits_.size()); }
  bool bit(int qubit) const { return bits_[static_cast<size_t>(qubit)]; }
  std::uint64_t index() const;
  std::string str() const;

  bool operator==(const BasisString&) const = default;

private:
  std::vector<bool> bits_;
};

}  // namespace qcsim
