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

#include "qcsim/circuit.hpp"

namespace qcsim {

// Rewrites negated controls as X-conjugated positive controls and converts
// 1- and 2-control Mcx gates to Cnot/Ccnot. Throws UnsupportedGateError for
// Mcx gates with more than two controls.
Circuit canonicalize_mcx(const Circuit& circuit);

// Replaces every Ccnot with an exact Clifford+T realization (seven T-phase
// stages and six CNOTs; T-inverse is spelled S.S.S.T). Input may contain only
// {X, H, S, T, Cnot, Ccnot} with positive controls; run canonicalize_mcx
// first if needed. The output contains only {X, H, S, T, Cnot} and implements
// the same unitary exactly.
Circuit lower_ccnot(const Circuit& circuit);

}  // namespace qcsim
