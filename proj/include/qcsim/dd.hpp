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

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "qcsim/circuit.hpp"
#include "qcsim/statevector.hpp"

namespace qcsim {

// Node merge rule: ADD merges equal functions (values live in terminals),
// QMDD merges functions equal up to a constant (constants live on edges,
// with the leftmost nonzero child edge normalized to weight 1).
enum class DdKind { Add, Qmdd };

struct DdEdge {
  std::uint32_t node = 0;
  // QMDD edge weight. ADD edges always carry 1; the zero function is an
  // edge to the zero terminal for ADD and a weight-0 edge for QMDD.
  Complex weight{0.0, 0.0};

  bool operator==(const DdEdge&) const = default;
};

// Shannon-decomposition diagrams for vectors (two children per node) and
// matrices (four children, indexed by row and column bit). Diagrams are
// quasi-reduced: every nonzero path visits every level, except that the
// all-zero function collapses to a distinguished zero edge. All nodes are
// hash-consed, so structural equality is pointer equality. One manager owns
// a unique table and operation caches; its operations are not thread-safe.
class DdManager {
public:
  DdManager(DdKind kind, int n_qubits);

  DdKind kind() const { return kind_; }
  int n_qubits() const { return n_qubits_; }

  DdEdge zero_edge() const;
  bool is_zero(const DdEdge& e) const;
  bool is_matrix_diagram(const DdEdge& e) const;

  // Builds the diagram of a length-2^n amplitude array.
  DdEdge from_vector(const std::vector<Complex>& amplitudes);
  std::vector<Complex> to_vector(const DdEdge& e);
  // |0...0> built structurally (no dense array).
  DdEdge zero_state();

  // Matrix diagram of the gate padded to all n qubits.
  DdEdge from_gate(const Gate& gate);
  DdEdge identity();

  // Matrix-vector product.
  DdEdge apply(const DdEdge& matrix, const DdEdge& vector);
  // Matrix-matrix product.
  DdEdge multiply(const DdEdge& lhs, const DdEdge& rhs);
  // Pointwise sum of two vectors or two matrices.
  DdEdge add(const DdEdge& a, const DdEdge& b);
  // Scales a diagram by a constant.
  DdEdge scale(const DdEdge& e, const Complex& factor);

  // Fold of apply over the circuit's gates starting from |0...0>.
  DdEdge simulate(const Circuit& circuit);

  // Amplitude along the path selected by b: the product of edge weights for
  // QMDD, the terminal value for ADD.
  Complex amplitude(const DdEdge& e, const BasisString& b) const;
  // |amplitude|^2.
  double measure_prob(const DdEdge& e, const BasisString& b) const;

  // Matrix entry at row 0, column 0.
  Complex top_left_entry(const DdEdge& e) const;

  // Distinct reachable interior nodes; terminals are not counted.
  std::size_t node_count(const DdEdge& e) const;
  // Distinct reachable terminal nodes (QMDD has at most one).
  std::size_t terminal_count(const DdEdge& e) const;

  // Checks structural invariants of every node reachable from e: child
  // levels, QMDD normalization, no all-zero nodes. Throws on violation.
  void validate(const DdEdge& e) const;

private:
  struct Node {
    std::int16_t level;  // n_qubits_ marks a terminal
    bool matrix;
    std::array<DdEdge, 4> kids{};  // vectors use kids[0] and kids[1]
    Complex value{0.0, 0.0};       // ADD terminal payload
  };

  // Exact bit patterns of a quantized complex weight; used as identity in
  // keys (hashes may collide, equality may not).
  struct WeightBits {
    std::uint64_t re = 0;
    std::uint64_t im = 0;

    bool operator==(const WeightBits&) const = default;
    bool operator<(const WeightBits& o) const {
      return re != o.re ? re < o.re : im < o.im;
    }
  };

  struct NodeKey {
    std::int16_t level;
    bool matrix;
    std::array<std::uint32_t, 4> kid_nodes;
    std::array<WeightBits, 4> kid_weights;

    bool operator==(const NodeKey&) const = default;
  };
  struct NodeKeyHash {
    std::size_t operator()(const NodeKey& k) const;
  };
  static WeightBits bits_of(const Complex& c);
  struct CacheKey {
    std::uint8_t op;
    std::uint32_t a_node, b_node;
    WeightBits a_weight, b_weight;

    bool operator==(const CacheKey&) const = default;
  };
  struct CacheKeyHash {
    std::size_t operator()(const CacheKey& k) const;
  };

  const Node& node(const DdEdge& e) const { return nodes_[e.node]; }
  bool is_terminal(std::uint32_t id) const {
    return nodes_[id].level == n_qubits_;
  }

  std::uint32_t terminal_for(const Complex& value);  // ADD terminals
  DdEdge leaf_edge(const Complex& value);
  DdEdge make_node(int level, bool matrix, std::array<DdEdge, 4> kids,
                   int arity);
  DdEdge make_vec_node(int level, DdEdge k0, DdEdge k1) {
    return make_node(level, false, {k0, k1, DdEdge{}, DdEdge{}}, 2);
  }

  DdEdge identity_from(int level);
  DdEdge controls_met_from(int level, const Gate& gate);
  DdEdge controls_unmet_from(int level, const Gate& gate);
  DdEdge gate_matrix_from(int level, const Gate& gate);

  DdEdge from_vector_rec(const std::vector<Complex>& amps, int level,
                         std::size_t base);
  void to_vector_rec(const DdEdge& e, int level, std::size_t base,
                     const Complex& acc, std::vector<Complex>& out) const;
  DdEdge apply_nodes(std::uint32_t m, std::uint32_t v);
  DdEdge multiply_nodes(std::uint32_t m, std::uint32_t n);

  DdKind kind_;
  int n_qubits_;
  std::vector<Node> nodes_;
  std::unordered_map<NodeKey, std::uint32_t, NodeKeyHash> unique_table_;
  std::map<WeightBits, std::uint32_t> add_terminals_;
  std::unordered_map<CacheKey, DdEdge, CacheKeyHash> op_cache_;
};

enum class EquivVerdict { Equal, EqualUpToGlobalFactor, NotEqual };

struct EquivResult {
  EquivVerdict verdict;
  Complex factor{1.0, 0.0};
};

// Reverses the gate order and inverts every gate (H, X and the controlled-X
// family are self-inverse; S^-1 = S^3, T^-1 = T^7).
Circuit invert_circuit(const Circuit& circuit);

// Decides whether two circuits implement the same unitary by building the
// diagram of a . b^-1 and comparing it against the identity, possibly up to
// a global factor of modulus 1 (tolerance 1e-9).
EquivResult equiv_check(const Circuit& a, const Circuit& b, DdKind kind);

}  // namespace qcsim
