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

#include "qcsim/check.hpp"

#include <algorithm>
#include <cmath>

#include "qcsim/dd.hpp"
#include "qcsim/encode_comp.hpp"
#include "qcsim/encode_pauli.hpp"
#include "qcsim/lowering.hpp"
#include "qcsim/statevector.hpp"

namespace qcsim {

bool wmc_supports(const Circuit& circuit) {
  for (const Gate& g : circuit.gates()) {
    if (g.kind() == GateKind::S || g.kind() == GateKind::T) return false;
  }
  return true;
}

bool pauli_supports(const Circuit& circuit) {
  for (const Gate& g : circuit.gates()) {
    if (g.kind() == GateKind::Mcx && g.controls().size() > 2) return false;
  }
  return true;
}

Circuit prepare_for_pauli(const Circuit& circuit, bool* lowered) {
  Circuit canonical = canonicalize_mcx(circuit);
  bool needs_lowering = false;
  for (const Gate& g : canonical.gates()) {
    if (g.kind() == GateKind::Ccnot) needs_lowering = true;
  }
  if (lowered != nullptr) {
    *lowered = needs_lowering || !(canonical == circuit);
  }
  return needs_lowering ? lower_ccnot(canonical) : canonical;
}

namespace {

std::vector<double> prob0_from_distribution(const std::vector<double>& probs,
                                            int n_qubits) {
  std::vector<double> prob0(static_cast<size_t>(n_qubits), 0.0);
  for (size_t i = 0; i < probs.size(); ++i) {
    for (int q = 0; q < n_qubits; ++q) {
      if ((i >> (n_qubits - 1 - q)) & 1) continue;
      prob0[static_cast<size_t>(q)] += probs[i];
    }
  }
  return prob0;
}

}  // namespace

CheckReport cross_check(const Circuit& circuit, int wmc_qubit_limit) {
  const int n = circuit.n_qubits();
  const size_t dim = size_t{1} << n;
  CheckReport report;

  {
    BackendReport sv;
    sv.name = "sv";
    sv.applicable = true;
    StateVector state = simulate(circuit);
    sv.probabilities.resize(dim);
    for (size_t i = 0; i < dim; ++i) {
      sv.probabilities[i] = state.prob(BasisString::from_index(i, n));
    }
    sv.prob0 = prob0_from_distribution(sv.probabilities, n);
    report.backends.push_back(std::move(sv));
  }

  for (DdKind kind : {DdKind::Add, DdKind::Qmdd}) {
    BackendReport dd;
    dd.name = kind == DdKind::Add ? "add" : "qmdd";
    dd.applicable = true;
    DdManager manager(kind, n);
    DdEdge state = manager.simulate(circuit);
    dd.probabilities.resize(dim);
    for (size_t i = 0; i < dim; ++i) {
      dd.probabilities[i] =
          manager.measure_prob(state, BasisString::from_index(i, n));
    }
    dd.prob0 = prob0_from_distribution(dd.probabilities, n);
    report.backends.push_back(std::move(dd));
  }

  {
    BackendReport wmc;
    wmc.name = "wmc";
    if (!wmc_supports(circuit)) {
      wmc.note = "not applicable: circuit uses S or T gates";
    } else if (n > wmc_qubit_limit) {
      wmc.note = "skipped: distribution needs 2^n weighted counts";
    } else {
      wmc.applicable = true;
      wmc.probabilities.resize(dim);
      for (size_t i = 0; i < dim; ++i) {
        double amp = amplitude_wmc(circuit, BasisString::from_index(i, n));
        wmc.probabilities[i] = amp * amp;
      }
      wmc.prob0 = prob0_from_distribution(wmc.probabilities, n);
    }
    report.backends.push_back(std::move(wmc));
  }

  {
    BackendReport pauli;
    pauli.name = "pauli";
    if (!pauli_supports(circuit)) {
      pauli.note = "not applicable: mcx with more than two controls";
    } else {
      bool lowered = false;
      Circuit prepared = prepare_for_pauli(circuit, &lowered);
      pauli.applicable = true;
      if (lowered) pauli.note = "circuit rewritten to Clifford+T";
      pauli.prob0.resize(static_cast<size_t>(n));
      for (int q = 0; q < n; ++q) {
        pauli.prob0[static_cast<size_t>(q)] = prob0_pauli(prepared, q);
      }
    }
    report.backends.push_back(std::move(pauli));
  }

  double max_dev = 0.0;
  for (size_t i = 0; i < report.backends.size(); ++i) {
    const BackendReport& a = report.backends[i];
    if (!a.applicable) continue;
    for (size_t j = i + 1; j < report.backends.size(); ++j) {
      const BackendReport& b = report.backends[j];
      if (!b.applicable) continue;
      if (!a.probabilities.empty() && !b.probabilities.empty()) {
        for (size_t k = 0; k < dim; ++k) {
          max_dev = std::max(max_dev,
                             std::abs(a.probabilities[k] - b.probabilities[k]));
        }
      }
      for (int q = 0; q < n; ++q) {
        max_dev = std::max(max_dev, std::abs(a.prob0[static_cast<size_t>(q)] -
                                             b.prob0[static_cast<size_t>(q)]));
      }
    }
  }
  report.max_deviation = max_dev;
  report.pass = max_dev <= 1e-9;
  return report;
}

}  // namespace qcsim
