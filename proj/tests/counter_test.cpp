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

#include <gtest/gtest.h>

#include <cmath>

#include "qcsim/circuit_io.hpp"
#include "qcsim/cnf.hpp"
#include "qcsim/counter.hpp"
#include "qcsim/encode_comp.hpp"
#include "test_util.hpp"

namespace qcsim {
namespace {

TEST(CountWeighted, MixedSignWeights) {
  WeightedCnf f(3);
  f.add_clause({Literal::pos(1), Literal::pos(2)});
  f.add_clause({Literal::neg(1), Literal::pos(2)});
  f.add_clause({Literal::pos(3)});
  f.set_weight(1, -0.5, 1.0 / 3.0);
  f.set_weight(2, 0.25, 0.75);
  EXPECT_NEAR(count_weighted(f), -1.0 / 24.0, 1e-12);
}

TEST(CountWeighted, EmptyClauseMeansZero) {
  WeightedCnf f(2);
  f.add_clause({Literal::pos(1)});
  f.add_clause({});
  EXPECT_EQ(count_weighted(f), 0.0);
}

TEST(CountWeighted, EncodedBellUncomputeAmplitude) {
  Circuit c = parse_circuit("qubits 2\nh 0\ncx 0 1\ncx 0 1\nh 0\n");
  EXPECT_NEAR(amplitude_wmc(c, BasisString::from_string("00")), 1.0, 1e-12);
}

TEST(CountWeighted, AgreesWithBruteForceOnRandomFormulas) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    WeightedCnf f = testing::random_weighted_cnf(seed);
    double expected = brute_force_wmc(f);
    double got = count_weighted(f);
    double tol = std::max(1e-12, 1e-9 * std::abs(expected));
    EXPECT_NEAR(got, expected, tol) << "seed " << seed;
  }
}

TEST(CountWeighted, BranchOrderDoesNotMatter) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    WeightedCnf f = testing::random_weighted_cnf(seed, 12, 30);
    double low_first = count_weighted(f, {.branch_highest_first = false});
    double high_first = count_weighted(f, {.branch_highest_first = true});
    double tol = std::max(1e-12, 1e-9 * std::abs(low_first));
    EXPECT_NEAR(low_first, high_first, tol) << "seed " << seed;
  }
}

// Fully unconstrained variables are closed by the W(v)+W(!v) factor, not by
// branching.
TEST(CountWeighted, ClosesUnassignedVariables) {
  WeightedCnf f(4);
  f.add_clause({Literal::pos(1)});
  f.set_weight(2, 0.5, 0.25);
  f.set_weight(4, -1.0, 1.0);
  EXPECT_NEAR(count_weighted(f), 1.0 * 0.75 * 2.0 * 0.0, 1e-15);
}

}  // namespace
}  // namespace qcsim
