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

#include "qcsim/dd.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <unordered_set>

namespace qcsim {

namespace {

// Node identity compares weights rounded to a fixed grid; stored weights
// keep full precision so numerical error does not accumulate with depth.
constexpr double kQuantum = 1e-12;

double quantize(double v) {
  double q = std::round(v / kQuantum) * kQuantum;
  return q == 0.0 ? 0.0 : q;  // normalize -0
}

// Flushes components that round to zero (cancellation residue) to exact 0.
Complex snap(const Complex& c) {
  return Complex{quantize(c.real()) == 0.0 ? 0.0 : c.real(),
                 quantize(c.imag()) == 0.0 ? 0.0 : c.imag()};
}

std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
}

constexpr std::uint8_t kOpApply = 1;
constexpr std::uint8_t kOpMultiply = 2;
constexpr std::uint8_t kOpAdd = 3;
constexpr std::uint8_t kOpScale = 4;

}  // namespace

DdManager::WeightBits DdManager::bits_of(const Complex& c) {
  return WeightBits{std::bit_cast<std::uint64_t>(quantize(c.real())),
                    std::bit_cast<std::uint64_t>(quantize(c.imag()))};
}

std::size_t DdManager::NodeKeyHash::operator()(const NodeKey& k) const {
  std::size_t h = static_cast<std::size_t>(k.level) * 31 + (k.matrix ? 17 : 3);
  for (auto n : k.kid_nodes) h = hash_combine(h, n);
  for (const auto& w : k.kid_weights) {
    h = hash_combine(h, w.re);
    h = hash_combine(h, w.im);
  }
  return h;
}

std::size_t DdManager::CacheKeyHash::operator()(const CacheKey& k) const {
  std::size_t h = k.op;
  h = hash_combine(h, k.a_node);
  h = hash_combine(h, k.b_node);
  h = hash_combine(h, k.a_weight.re);
  h = hash_combine(h, k.a_weight.im);
  h = hash_combine(h, k.b_weight.re);
  h = hash_combine(h, k.b_weight.im);
  return h;
}

DdManager::DdManager(DdKind kind, int n_qubits)
    : kind_(kind), n_qubits_(n_qubits) {
  if (n_qubits < 1) {
    throw std::invalid_argument("diagram manager needs at least one qubit");
  }
  // Node 0 is the terminal: the shared 1-terminal for QMDD, the zero
  // terminal for ADD.
  Node terminal;
  terminal.level = static_cast<std::int16_t>(n_qubits_);
  terminal.matrix = false;
  terminal.value = kind_ == DdKind::Add ? Complex{0.0, 0.0} : Complex{1.0, 0.0};
  nodes_.push_back(terminal);
  if (kind_ == DdKind::Add) {
    add_terminals_[bits_of(Complex{0.0, 0.0})] = 0;
  }
}

DdEdge DdManager::zero_edge() const {
  if (kind_ == DdKind::Qmdd) return DdEdge{0, Complex{0.0, 0.0}};
  return DdEdge{0, Complex{1.0, 0.0}};
}

bool DdManager::is_zero(const DdEdge& e) const {
  if (kind_ == DdKind::Qmdd) return e.weight == Complex{0.0, 0.0};
  return e.node == 0;
}

bool DdManager::is_matrix_diagram(const DdEdge& e) const {
  return !is_terminal(e.node) && node(e).matrix;
}

std::uint32_t DdManager::terminal_for(const Complex& value) {
  WeightBits key = bits_of(value);
  auto it = add_terminals_.find(key);
  if (it != add_terminals_.end()) return it->second;
  Node terminal;
  terminal.level = static_cast<std::int16_t>(n_qubits_);
  terminal.matrix = false;
  terminal.value = value;
  nodes_.push_back(terminal);
  std::uint32_t id = static_cast<std::uint32_t>(nodes_.size() - 1);
  add_terminals_[key] = id;
  return id;
}

DdEdge DdManager::leaf_edge(const Complex& value) {
  Complex v = snap(value);
  if (kind_ == DdKind::Qmdd) return DdEdge{0, v};
  return DdEdge{terminal_for(v), Complex{1.0, 0.0}};
}

DdEdge DdManager::make_node(int level, bool matrix, std::array<DdEdge, 4> kids,
                            int arity) {
  bool all_zero = true;
  for (int i = 0; i < arity; ++i) {
    if (!is_zero(kids[i])) all_zero = false;
  }
  if (all_zero) return zero_edge();

  Complex top_weight{1.0, 0.0};
  if (kind_ == DdKind::Qmdd) {
    int first = 0;
    while (is_zero(kids[first])) ++first;
    top_weight = kids[first].weight;
    for (int i = 0; i < arity; ++i) {
      if (is_zero(kids[i])) {
        kids[i] = zero_edge();
      } else {
        kids[i].weight = snap(kids[i].weight / top_weight);
        // A weight can underflow the grid when the magnitudes differ wildly.
        if (kids[i].weight == Complex{0.0, 0.0}) kids[i] = zero_edge();
      }
    }
    kids[first].weight = Complex{1.0, 0.0};  // exact after division
    top_weight = snap(top_weight);
  }

  NodeKey key;
  key.level = static_cast<std::int16_t>(level);
  key.matrix = matrix;
  for (int i = 0; i < 4; ++i) {
    key.kid_nodes[i] = i < arity ? kids[i].node : 0;
    key.kid_weights[i] = i < arity ? bits_of(kids[i].weight) : WeightBits{};
  }
  auto it = unique_table_.find(key);
  if (it != unique_table_.end()) return DdEdge{it->second, top_weight};

  Node n;
  n.level = static_cast<std::int16_t>(level);
  n.matrix = matrix;
  n.kids = kids;
  nodes_.push_back(n);
  std::uint32_t id = static_cast<std::uint32_t>(nodes_.size() - 1);
  unique_table_[key] = id;
  return DdEdge{id, top_weight};
}

DdEdge DdManager::from_vector(const std::vector<Complex>& amplitudes) {
  if (amplitudes.size() != (std::size_t{1} << n_qubits_)) {
    throw std::invalid_argument(
        "amplitude array length must be 2^n for this manager");
  }
  return from_vector_rec(amplitudes, 0, 0);
}

DdEdge DdManager::from_vector_rec(const std::vector<Complex>& amps, int level,
                                  std::size_t base) {
  if (level == n_qubits_) return leaf_edge(amps[base]);
  std::size_t half = std::size_t{1} << (n_qubits_ - 1 - level);
  DdEdge k0 = from_vector_rec(amps, level + 1, base);
  DdEdge k1 = from_vector_rec(amps, level + 1, base + half);
  return make_vec_node(level, k0, k1);
}

std::vector<Complex> DdManager::to_vector(const DdEdge& e) {
  if (is_matrix_diagram(e)) {
    throw std::invalid_argument("to_vector expects a vector diagram");
  }
  std::vector<Complex> out(std::size_t{1} << n_qubits_, Complex{0.0, 0.0});
  to_vector_rec(e, 0, 0, Complex{1.0, 0.0}, out);
  return out;
}

void DdManager::to_vector_rec(const DdEdge& e, int level, std::size_t base,
                              const Complex& acc,
                              std::vector<Complex>& out) const {
  if (is_zero(e)) return;
  if (level == n_qubits_) {
    out[base] = kind_ == DdKind::Qmdd ? acc * e.weight : node(e).value;
    return;
  }
  const Node& n = node(e);
  Complex next_acc = kind_ == DdKind::Qmdd ? acc * e.weight : acc;
  std::size_t half = std::size_t{1} << (n_qubits_ - 1 - level);
  to_vector_rec(n.kids[0], level + 1, base, next_acc, out);
  to_vector_rec(n.kids[1], level + 1, base + half, next_acc, out);
}

DdEdge DdManager::zero_state() {
  DdEdge e = leaf_edge(Complex{1.0, 0.0});
  for (int level = n_qubits_ - 1; level >= 0; --level) {
    e = make_vec_node(level, e, zero_edge());
  }
  return e;
}

DdEdge DdManager::identity_from(int level) {
  if (level == n_qubits_) return leaf_edge(Complex{1.0, 0.0});
  DdEdge sub = identity_from(level + 1);
  return make_node(level, true, {sub, zero_edge(), zero_edge(), sub}, 4);
}

DdEdge DdManager::identity() { return identity_from(0); }

// Diagonal 0/1 matrix selecting basis states where every control at this
// level or below matches its polarity.
DdEdge DdManager::controls_met_from(int level, const Gate& gate) {
  if (level == n_qubits_) return leaf_edge(Complex{1.0, 0.0});
  DdEdge sub = controls_met_from(level + 1, gate);
  for (const ControlBit& c : gate.controls()) {
    if (c.qubit == level) {
      DdEdge z = zero_edge();
      if (c.positive) {
        return make_node(level, true, {z, z, z, sub}, 4);
      }
      return make_node(level, true, {sub, z, z, z}, 4);
    }
  }
  return make_node(level, true, {sub, zero_edge(), zero_edge(), sub}, 4);
}

// Complement of controls_met_from on the diagonal.
DdEdge DdManager::controls_unmet_from(int level, const Gate& gate) {
  if (level == n_qubits_) return zero_edge();
  DdEdge sub = controls_unmet_from(level + 1, gate);
  for (const ControlBit& c : gate.controls()) {
    if (c.qubit == level) {
      DdEdge ident = identity_from(level + 1);
      DdEdge z = zero_edge();
      if (c.positive) {
        return make_node(level, true, {ident, z, z, sub}, 4);
      }
      return make_node(level, true, {sub, z, z, ident}, 4);
    }
  }
  return make_node(level, true, {sub, zero_edge(), zero_edge(), sub}, 4);
}

DdEdge DdManager::gate_matrix_from(int level, const Gate& gate) {
  if (level == n_qubits_) return leaf_edge(Complex{1.0, 0.0});
  const DdEdge z = zero_edge();

  if (level == gate.target()) {
    switch (gate.kind()) {
      case GateKind::X:
      case GateKind::Cnot:
      case GateKind::Ccnot:
      case GateKind::Mcx: {
        // Flip where the remaining controls hold, copy where they do not.
        DdEdge met = controls_met_from(level + 1, gate);
        DdEdge unmet = controls_unmet_from(level + 1, gate);
        return make_node(level, true, {unmet, met, met, unmet}, 4);
      }
      case GateKind::H: {
        DdEdge ident = identity_from(level + 1);
        const double s = 1.0 / std::numbers::sqrt2;
        return make_node(level, true,
                         {scale(ident, Complex{s, 0.0}),
                          scale(ident, Complex{s, 0.0}),
                          scale(ident, Complex{s, 0.0}),
                          scale(ident, Complex{-s, 0.0})},
                         4);
      }
      case GateKind::S: {
        DdEdge ident = identity_from(level + 1);
        return make_node(level, true,
                         {ident, z, z, scale(ident, Complex{0.0, 1.0})}, 4);
      }
      case GateKind::T: {
        DdEdge ident = identity_from(level + 1);
        Complex phase = std::polar(1.0, std::numbers::pi / 4.0);
        return make_node(level, true, {ident, z, z, scale(ident, phase)}, 4);
      }
    }
  }

  for (const ControlBit& c : gate.controls()) {
    if (c.qubit == level) {
      DdEdge active = gate_matrix_from(level + 1, gate);
      DdEdge ident = identity_from(level + 1);
      if (c.positive) {
        return make_node(level, true, {ident, z, z, active}, 4);
      }
      return make_node(level, true, {active, z, z, ident}, 4);
    }
  }

  DdEdge sub = gate_matrix_from(level + 1, gate);
  return make_node(level, true, {sub, z, z, sub}, 4);
}

DdEdge DdManager::from_gate(const Gate& gate) {
  if (gate.max_qubit() >= n_qubits_) {
    throw std::out_of_range("gate qubit index out of range");
  }
  return gate_matrix_from(0, gate);
}

DdEdge DdManager::scale(const DdEdge& e, const Complex& factor) {
  if (is_zero(e)) return zero_edge();
  if (snap(factor) == Complex{0.0, 0.0}) return zero_edge();
  if (kind_ == DdKind::Qmdd) {
    return DdEdge{e.node, snap(e.weight * factor)};
  }
  if (factor == Complex{1.0, 0.0}) return e;
  CacheKey key{kOpScale, e.node, 0, bits_of(factor), WeightBits{}};
  auto it = op_cache_.find(key);
  if (it != op_cache_.end()) return it->second;

  DdEdge result;
  const Node n = node(e);  // by value: recursion may grow the node pool
  if (is_terminal(e.node)) {
    result = leaf_edge(n.value * factor);
  } else {
    std::array<DdEdge, 4> kids{};
    int arity = n.matrix ? 4 : 2;
    for (int i = 0; i < arity; ++i) kids[i] = scale(n.kids[i], factor);
    result = make_node(n.level, n.matrix, kids, arity);
  }
  op_cache_[key] = result;
  return result;
}

DdEdge DdManager::add(const DdEdge& a, const DdEdge& b) {
  if (is_zero(a)) return b;
  if (is_zero(b)) return a;
  const Node& na = node(a);
  const Node& nb = node(b);
  if (na.level != nb.level || na.matrix != nb.matrix) {
    throw std::invalid_argument("add expects diagrams of identical shape");
  }

  if (kind_ == DdKind::Qmdd) {
    if (a.node == b.node) {
      Complex w = snap(a.weight + b.weight);
      if (w == Complex{0.0, 0.0}) return zero_edge();
      return DdEdge{a.node, w};
    }
  } else if (is_terminal(a.node) && is_terminal(b.node)) {
    return leaf_edge(na.value + nb.value);
  }

  DdEdge lhs = a;
  DdEdge rhs = b;
  // Addition commutes; order the cache key.
  if (rhs.node < lhs.node ||
      (rhs.node == lhs.node && bits_of(rhs.weight) < bits_of(lhs.weight))) {
    std::swap(lhs, rhs);
  }
  CacheKey key{kOpAdd, lhs.node, rhs.node, bits_of(lhs.weight),
               bits_of(rhs.weight)};
  auto it = op_cache_.find(key);
  if (it != op_cache_.end()) return it->second;

  const Node nl = node(lhs);  // by value: recursion may grow the node pool
  const Node nr = node(rhs);
  int arity = nl.matrix ? 4 : 2;
  std::array<DdEdge, 4> kids{};
  for (int i = 0; i < arity; ++i) {
    DdEdge ka = nl.kids[i];
    DdEdge kb = nr.kids[i];
    if (kind_ == DdKind::Qmdd) {
      ka.weight *= lhs.weight;
      kb.weight *= rhs.weight;
    }
    kids[i] = add(ka, kb);
  }
  DdEdge result = make_node(nl.level, nl.matrix, kids, arity);
  op_cache_[key] = result;
  return result;
}

DdEdge DdManager::apply(const DdEdge& matrix, const DdEdge& vector) {
  if (!is_zero(matrix) && !is_terminal(matrix.node) &&
      !node(matrix).matrix) {
    throw std::invalid_argument("apply expects a matrix diagram on the left");
  }
  if (!is_zero(vector) && !is_terminal(vector.node) && node(vector).matrix) {
    throw std::invalid_argument("apply expects a vector diagram on the right");
  }
  if (is_zero(matrix) || is_zero(vector)) return zero_edge();
  DdEdge result = apply_nodes(matrix.node, vector.node);
  if (kind_ == DdKind::Qmdd) {
    result = scale(result, snap(matrix.weight * vector.weight));
  }
  return result;
}

DdEdge DdManager::apply_nodes(std::uint32_t m, std::uint32_t v) {
  if (is_terminal(m)) {
    // Both sides bottomed out together (diagrams are quasi-reduced).
    if (kind_ == DdKind::Qmdd) return leaf_edge(Complex{1.0, 0.0});
    return leaf_edge(nodes_[m].value * nodes_[v].value);
  }
  CacheKey key{kOpApply, m, v, WeightBits{}, WeightBits{}};
  auto it = op_cache_.find(key);
  if (it != op_cache_.end()) return it->second;

  const Node mn = nodes_[m];  // by value: recursion may grow the node pool
  const Node vn = nodes_[v];
  DdEdge k0 = add(apply(mn.kids[0], vn.kids[0]), apply(mn.kids[1], vn.kids[1]));
  DdEdge k1 = add(apply(mn.kids[2], vn.kids[0]), apply(mn.kids[3], vn.kids[1]));
  DdEdge result = make_vec_node(mn.level, k0, k1);
  op_cache_[key] = result;
  return result;
}

DdEdge DdManager::multiply(const DdEdge& lhs, const DdEdge& rhs) {
  if ((!is_zero(lhs) && !is_terminal(lhs.node) && !node(lhs).matrix) ||
      (!is_zero(rhs) && !is_terminal(rhs.node) && !node(rhs).matrix)) {
    throw std::invalid_argument("multiply expects matrix diagrams");
  }
  if (is_zero(lhs) || is_zero(rhs)) return zero_edge();
  DdEdge result = multiply_nodes(lhs.node, rhs.node);
  if (kind_ == DdKind::Qmdd) {
    result = scale(result, snap(lhs.weight * rhs.weight));
  }
  return result;
}

DdEdge DdManager::multiply_nodes(std::uint32_t m, std::uint32_t n) {
  if (is_terminal(m)) {
    if (kind_ == DdKind::Qmdd) return leaf_edge(Complex{1.0, 0.0});
    return leaf_edge(nodes_[m].value * nodes_[n].value);
  }
  CacheKey key{kOpMultiply, m, n, WeightBits{}, WeightBits{}};
  auto it = op_cache_.find(key);
  if (it != op_cache_.end()) return it->second;

  const Node mn = nodes_[m];  // by value: recursion may grow the node pool
  const Node nn = nodes_[n];
  std::array<DdEdge, 4> kids{};
  for (int row = 0; row < 2; ++row) {
    for (int col = 0; col < 2; ++col) {
      DdEdge sum = add(multiply(mn.kids[2 * row + 0], nn.kids[0 + col]),
                       multiply(mn.kids[2 * row + 1], nn.kids[2 + col]));
      kids[2 * row + col] = sum;
    }
  }
  DdEdge result = make_node(mn.level, true, kids, 4);
  op_cache_[key] = result;
  return result;
}

DdEdge DdManager::simulate(const Circuit& circuit) {
  if (circuit.n_qubits() != n_qubits_) {
    throw std::invalid_argument("circuit qubit count does not match manager");
  }
  DdEdge state = zero_state();
  for (const Gate& g : circuit.gates()) {
    state = apply(from_gate(g), state);
  }
  return state;
}

Complex DdManager::amplitude(const DdEdge& e, const BasisString& b) const {
  if (is_matrix_diagram(e)) {
    throw std::invalid_argument("amplitude expects a vector diagram");
  }
  if (b.size() != n_qubits_) {
    throw std::invalid_argument("basis string length mismatch");
  }
  DdEdge cur = e;
  Complex amp{1.0, 0.0};
  for (int level = 0; level < n_qubits_; ++level) {
    if (is_zero(cur)) return Complex{0.0, 0.0};
    if (kind_ == DdKind::Qmdd) amp *= cur.weight;
    cur = node(cur).kids[b.bit(level) ? 1 : 0];
  }
  if (is_zero(cur)) return Complex{0.0, 0.0};
  return kind_ == DdKind::Qmdd ? amp * cur.weight : node(cur).value;
}

double DdManager::measure_prob(const DdEdge& e, const BasisString& b) const {
  return std::norm(amplitude(e, b));
}

Complex DdManager::top_left_entry(const DdEdge& e) const {
  DdEdge cur = e;
  Complex acc{1.0, 0.0};
  for (int level = 0; level < n_qubits_; ++level) {
    if (is_zero(cur)) return Complex{0.0, 0.0};
    if (kind_ == DdKind::Qmdd) acc *= cur.weight;
    cur = node(cur).kids[0];
  }
  if (is_zero(cur)) return Complex{0.0, 0.0};
  return kind_ == DdKind::Qmdd ? acc * cur.weight : node(cur).value;
}

std::size_t DdManager::node_count(const DdEdge& e) const {
  std::unordered_set<std::uint32_t> seen;
  std::vector<std::uint32_t> stack{e.node};
  std::size_t interior = 0;
  while (!stack.empty()) {
    std::uint32_t id = stack.back();
    stack.pop_back();
    if (!seen.insert(id).second) continue;
    if (is_terminal(id)) continue;
    ++interior;
    const Node& n = nodes_[id];
    int arity = n.matrix ? 4 : 2;
    for (int i = 0; i < arity; ++i) {
      if (!is_zero(n.kids[i])) stack.push_back(n.kids[i].node);
    }
  }
  return interior;
}

std::size_t DdManager::terminal_count(const DdEdge& e) const {
  std::unordered_set<std::uint32_t> seen;
  std::unordered_set<std::uint32_t> terminals;
  std::vector<std::uint32_t> stack{e.node};
  while (!stack.empty()) {
    std::uint32_t id = stack.back();
    stack.pop_back();
    if (!seen.insert(id).second) continue;
    if (is_terminal(id)) {
      terminals.insert(id);
      continue;
    }
    const Node& n = nodes_[id];
    int arity = n.matrix ? 4 : 2;
    for (int i = 0; i < arity; ++i) stack.push_back(n.kids[i].node);
  }
  return terminals.size();
}

void DdManager::validate(const DdEdge& e) const {
  if (is_zero(e)) return;
  std::unordered_set<std::uint32_t> seen;
  std::vector<std::uint32_t> stack{e.node};
  while (!stack.empty()) {
    std::uint32_t id = stack.back();
    stack.pop_back();
    if (!seen.insert(id).second) continue;
    if (is_terminal(id)) continue;
    const Node& n = nodes_[id];
    int arity = n.matrix ? 4 : 2;
    bool saw_nonzero = false;
    for (int i = 0; i < arity; ++i) {
      const DdEdge& kid = n.kids[i];
      if (is_zero(kid)) {
        if (kid != zero_edge()) {
          throw std::logic_error("zero child is not the canonical zero edge");
        }
        continue;
      }
      if (!saw_nonzero) {
        saw_nonzero = true;
        if (kind_ == DdKind::Qmdd && kid.weight != Complex{1.0, 0.0}) {
          throw std::logic_error(
              "QMDD normalization violated: leftmost nonzero weight != 1");
        }
      }
      if (nodes_[kid.node].level != n.level + 1) {
        throw std::logic_error("child level must be parent level + 1");
      }
      stack.push_back(kid.node);
    }
    if (!saw_nonzero) {
      throw std::logic_error("all-zero node present; should be a zero edge");
    }
  }
}

Circuit invert_circuit(const Circuit& circuit) {
  std::vector<Gate> gates;
  for (auto it = circuit.gates().rbegin(); it != circuit.gates().rend(); ++it) {
    switch (it->kind()) {
      case GateKind::S:
        for (int i = 0; i < 3; ++i) gates.push_back(*it);
        break;
      case GateKind::T:
        for (int i = 0; i < 7; ++i) gates.push_back(*it);
        break;
      default:
        gates.push_back(*it);  // self-inverse
        break;
    }
  }
  return Circuit(circuit.n_qubits(), std::move(gates));
}

EquivResult equiv_check(const Circuit& a, const Circuit& b, DdKind kind) {
  if (a.n_qubits() != b.n_qubits()) {
    throw std::invalid_argument("circuits have different qubit counts");
  }
  DdManager manager(kind, a.n_qubits());
  DdEdge product = manager.identity();
  for (const Gate& g : a.gates()) {
    product = manager.multiply(manager.from_gate(g), product);
  }
  // product now holds A; right-multiply by B^-1 gate by gate. B^-1 as a
  // circuit is applied left to right, so its matrix product folds in
  // reverse.
  Circuit b_inverse = invert_circuit(b);
  DdEdge inverse = manager.identity();
  for (const Gate& g : b_inverse.gates()) {
    inverse = manager.multiply(manager.from_gate(g), inverse);
  }
  product = manager.multiply(product, inverse);

  DdEdge ident = manager.identity();
  if (manager.is_zero(product)) return {EquivVerdict::NotEqual, {0.0, 0.0}};

  Complex factor;
  bool structure_matches;
  if (kind == DdKind::Qmdd) {
    // The factor sits on the root edge once the structure is canonical.
    structure_matches = product.node == ident.node;
    factor = product.weight;
  } else {
    // ADD carries values in terminals: read the (0,0) entry and compare
    // against the identity scaled by it.
    factor = manager.top_left_entry(product);
    structure_matches = factor != Complex{0.0, 0.0} &&
                        product == manager.scale(ident, factor);
  }

  const double tol = 1e-9;
  if (!structure_matches) return {EquivVerdict::NotEqual, factor};
  if (std::abs(factor - Complex{1.0, 0.0}) <= tol) {
    return {EquivVerdict::Equal, factor};
  }
  if (std::abs(std::abs(factor) - 1.0) <= tol) {
    return {EquivVerdict::EqualUpToGlobalFactor, factor};
  }
  return {EquivVerdict::NotEqual, factor};
}

}  // namespace qcsim
