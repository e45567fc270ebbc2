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

#include "qcsim/cnf.hpp"

namespace qcsim {

struct CountOptions {
  // Branch on the highest-indexed open variable instead of the lowest. The
  // result is identical either way; exists to exercise branch-order
  // independence in tests.
  bool branch_highest_first = false;
};

// Exact weighted model count via DPLL with unit propagation. Satisfied
// residual formulas contribute the running literal-weight product times
// prod(W(v) + W(-v)) over still-unassigned variables, which realizes the
// product-over-all-variables weight semantics without full expansion.
// Pure-literal elimination is deliberately not applied; it is unsound for
// weighted counting.
double count_weighted(const WeightedCnf& formula, CountOptions options = {});

}  // namespace qcsim
