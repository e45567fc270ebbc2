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

#include "qcsim/encode_comp.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "encode_util.hpp"
#include "qcsim/counter.hpp"
#include "qcsim/errors.hpp"

namespace qcsim {

CompEncoding encode_circuit_comp(const Circuit& circuit) {
  const int n = circuit.n_qubits();
  WeightedCnf cnf(0);
  std::vector<int> current(static_cast<size_t>(n));
  for (int q = 0; q < n; ++q) {
    current[static_cast<size_t>(q)] = cnf.add_var();
    cnf.add_unit(Literal::neg(current[static_cast<size_t>(q)]));
  }

  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  std::vector<int> h_vars;

  for (const Gate& g : circuit.gates()) {
    switch (g.kind()) {
      case GateKind::X: {
        int prev = current[static_cast<size_t>(g.target())];
        int next = cnf.add_var();
        cnf.add_clause({Literal::pos(next), Literal::pos(prev)});
        cnf.add_clause({Literal::neg(next), Literal::neg(prev)});
        current[static_cast<size_t>(g.target())] = next;
        break;
      }
      case GateKind::H: {
        int prev = current[static_cast<size_t>(g.target())];
        int next = cnf.add_var();
        int h = cnf.add_var();
        // h <-> (x and x'), with the fresh output left unconstrained.
        cnf.add_clause({Literal::neg(h), Literal::pos(prev)});
        cnf.add_clause({Literal::neg(h), Literal::pos(next)});
        cnf.add_clause({Literal::pos(h), Literal::neg(prev), Literal::neg(next)});
        cnf.set_weight(h, -inv_sqrt2, inv_sqrt2);
        h_vars.push_back(h);
        current[static_cast<size_t>(g.target())] = next;
        break;
      }
      case GateKind::Cnot:
      case GateKind::Ccnot:
      case GateKind::Mcx: {
        std::vector<Literal> guard;
        for (const ControlBit& c : g.controls()) {
          guard.push_back({current[static_cast<size_t>(c.qubit)], !c.positive});
        }
        int prev = current[static_cast<size_t>(g.target())];
        int next = cnf.add_var();
        detail::add_xor_guard(cnf, prev, next, guard);
        current[static_cast<size_t>(g.target())] = next;
        break;
      }
      case GateKind::S:
      case GateKind::T:
        throw UnsupportedGateError(
            "computational-basis encoding supports only Toffoli+H gates; " +
            gate_kind_name(g.kind()) + " needs complex weights");
    }
  }

  return CompEncoding{std::move(cnf), n, std::move(current), std::move(h_vars)};
}

double amplitude_wmc(const Circuit& circuit, const BasisString& b) {
  if (b.size() != circuit.n_qubits()) {
    throw std::invalid_argument("basis string length mismatch");
  }
  CompEncoding enc = encode_circuit_comp(circuit);
  for (int q = 0; q < enc.n_qubits; ++q) {
    enc.cnf.add_unit({enc.final_vars[static_cast<size_t>(q)], !b.bit(q)});
  }
  return count_weighted(enc.cnf);
}

std::int64_t path_count(const Circuit& circuit) {
  CompEncoding enc = encode_circuit_comp(circuit);
  // Strip weights: the path count is the plain model count.
  WeightedCnf unweighted(enc.cnf.num_vars());
  for (const Clause& clause : enc.cnf.clauses()) unweighted.add_clause(clause);
  double count = count_weighted(unweighted);
  return static_cast<std::int64_t>(std::llround(count));
}

}  // namespace qcsim
