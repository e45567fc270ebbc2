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

#include <vector>

#include "qcsim/cnf.hpp"

namespace qcsim::detail {

using Cube = std::vector<Literal>;

// Clauses for next <-> prev, 2 clauses.
inline void add_copy(WeightedCnf& cnf, int prev, int next) {
  cnf.add_clause({Literal::neg(next), Literal::pos(prev)});
  cnf.add_clause({Literal::pos(next), Literal::neg(prev)});
}

// Clauses for out <-> a xor b, 4 clauses.
inline void add_xor2(WeightedCnf& cnf, int out, int a, int b) {
  cnf.add_clause({Literal::neg(out), Literal::pos(a), Literal::pos(b)});
  cnf.add_clause({Literal::neg(out), Literal::neg(a), Literal::neg(b)});
  cnf.add_clause({Literal::pos(out), Literal::neg(a), Literal::pos(b)});
  cnf.add_clause({Literal::pos(out), Literal::pos(a), Literal::neg(b)});
}

// Clauses for next <-> prev xor G. The guard G is supplied as a DNF cover
// `flip` and a DNF cover `copy` of its complement; every cube must imply its
// side. Emits two clauses per cube.
inline void add_guarded_xor(WeightedCnf& cnf, int prev, int next,
                            const std::vector<Cube>& flip,
                            const std::vector<Cube>& copy) {
  auto emit = [&](const Cube& cube, bool flipping) {
    Clause a;
    Clause b;
    for (const Literal& lit : cube) {
      a.push_back({lit.var, !lit.negated});
      b.push_back({lit.var, !lit.negated});
    }
    if (flipping) {
      a.push_back(Literal::pos(next));
      a.push_back(Literal::pos(prev));
      b.push_back(Literal::neg(next));
      b.push_back(Literal::neg(prev));
    } else {
      a.push_back(Literal::neg(next));
      a.push_back(Literal::pos(prev));
      b.push_back(Literal::pos(next));
      b.push_back(Literal::neg(prev));
    }
    cnf.add_clause(std::move(a));
    cnf.add_clause(std::move(b));
  };
  for (const Cube& cube : flip) emit(cube, true);
  for (const Cube& cube : copy) emit(cube, false);
}

// next <-> prev xor (conjunction of guard literals).
inline void add_xor_guard(WeightedCnf& cnf, int prev, int next,
                          const Cube& guard) {
  std::vector<Cube> copy;
  for (const Literal& lit : guard) {
    copy.push_back({Literal{lit.var, !lit.negated}});
  }
  add_guarded_xor(cnf, prev, next, {guard}, copy);
}

}  // namespace qcsim::detail
