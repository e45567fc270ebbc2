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

#include <numbers>

#include "qcsim/circuit_io.hpp"
#include "qcsim/statevector.hpp"
#include "test_util.hpp"

namespace qcsim {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752;

TEST(InitZero, BasisStateAtOrigin) {
  StateVector one = StateVector::zero(1);
  EXPECT_EQ(one.amplitudes(), (std::vector<Complex>{{1, 0}, {0, 0}}));

  StateVector two = StateVector::zero(2);
  ASSERT_EQ(two.amplitudes().size(), 4u);
  EXPECT_EQ(two.amplitudes()[0], (Complex{1, 0}));

  StateVector three = StateVector::zero(3);
  EXPECT_NEAR(three.norm_squared(), 1.0, 1e-15);
  EXPECT_EQ(three.amplitudes()[0], (Complex{1, 0}));
}

TEST(InitZero, EnforcesQubitCap) {
  EXPECT_THROW(StateVector::zero(0), std::out_of_range);
  EXPECT_THROW(StateVector::zero(25), std::out_of_range);
  EXPECT_NO_THROW(StateVector::zero(25, 26));  // override flag
}

TEST(ApplyGate, HadamardOnBasisStates) {
  StateVector s = StateVector::zero(1);
  s.apply_gate(Gate::h(0));
  EXPECT_NEAR(s.amplitudes()[0].real(), kInvSqrt2, 1e-12);
  EXPECT_NEAR(s.amplitudes()[1].real(), kInvSqrt2, 1e-12);

  StateVector t = StateVector::zero(1);
  t.apply_gate(Gate::x(0));
  t.apply_gate(Gate::h(0));
  EXPECT_NEAR(t.amplitudes()[0].real(), kInvSqrt2, 1e-12);
  EXPECT_NEAR(t.amplitudes()[1].real(), -kInvSqrt2, 1e-12);
}

TEST(ApplyGate, ToffoliFlipsTargetWhenControlsSet) {
  StateVector s = StateVector::zero(3);
  s.apply_gate(Gate::x(0));
  s.apply_gate(Gate::x(1));  // |110>
  s.apply_gate(Gate::ccnot(0, 1, 2));
  EXPECT_NEAR(s.prob(BasisString::from_string("111")), 1.0, 1e-12);
}

TEST(ApplyGate, MatchesKroneckerReference) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Circuit c = testing::random_full_gate_set(seed, 4, 10);
    StateVector fast = simulate(c);
    testing::CMatrix u = testing::full_circuit_matrix(c);
    std::vector<Complex> slow(std::size_t{1} << c.n_qubits(), Complex{0, 0});
    slow[0] = Complex{1, 0};
    slow = testing::mat_vec(u, slow);
    for (std::size_t i = 0; i < slow.size(); ++i) {
      EXPECT_NEAR(std::abs(fast.amplitudes()[i] - slow[i]), 0.0, 1e-10)
          << "seed " << seed << " index " << i;
    }
  }
}

TEST(Simulate, ExampleCircuitSuperposition) {
  Circuit c = parse_circuit("qubits 3\nh 0\nh 1\nccx 0 1 2\n");
  StateVector s = simulate(c);
  EXPECT_NEAR(s.prob(BasisString::from_string("000")), 0.25, 1e-12);
  EXPECT_NEAR(s.prob(BasisString::from_string("010")), 0.25, 1e-12);
  EXPECT_NEAR(s.prob(BasisString::from_string("100")), 0.25, 1e-12);
  EXPECT_NEAR(s.prob(BasisString::from_string("111")), 0.25, 1e-12);
  EXPECT_NEAR(s.prob(BasisString::from_string("110")), 0.0, 1e-12);
}

TEST(Simulate, BellUncomputeReturnsToOrigin) {
  Circuit c = parse_circuit("qubits 2\nh 0\ncx 0 1\ncx 0 1\nh 0\n");
  StateVector s = simulate(c);
  EXPECT_NEAR(s.prob(BasisString::from_string("00")), 1.0, 1e-12);
}

TEST(Simulate, TGateSandwichAmplitudes) {
  Circuit c = parse_circuit("qubits 2\nh 0\ncx 0 1\nt 0\ncx 0 1\nh 0\n");
  StateVector s = simulate(c);
  Complex phase = std::polar(1.0, std::numbers::pi / 4.0);
  Complex a0 = 0.5 + 0.5 * phase;
  Complex a2 = 0.5 - 0.5 * phase;
  EXPECT_NEAR(std::abs(s.amplitudes()[0] - a0), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(s.amplitudes()[1]), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(s.amplitudes()[2] - a2), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(s.amplitudes()[3]), 0.0, 1e-12);
}

TEST(Prob, MeasurementExample) {
  Circuit c = parse_circuit("qubits 3\nh 0\nh 1\nccx 0 1 2\n");
  StateVector s = simulate(c);
  EXPECT_NEAR(s.prob(BasisString::from_string("000")), 0.25, 1e-12);
  EXPECT_NEAR(s.prob(BasisString::from_string("001")), 0.0, 1e-12);

  StateVector zero = StateVector::zero(2);
  EXPECT_NEAR(zero.prob(BasisString::from_string("00")), 1.0, 1e-15);
  EXPECT_THROW(zero.prob(BasisString::from_string("0")), std::invalid_argument);
}

TEST(MarginalProb0, TGateSandwich) {
  Circuit c = parse_circuit("qubits 2\nh 0\ncx 0 1\nt 0\ncx 0 1\nh 0\n");
  StateVector s = simulate(c);
  EXPECT_NEAR(s.marginal_prob0(0), 0.5 + std::numbers::sqrt2 / 4.0, 1e-12);
  EXPECT_NEAR(s.marginal_prob0(1), 1.0, 1e-12);

  StateVector zero = StateVector::zero(2);
  EXPECT_NEAR(zero.marginal_prob0(1), 1.0, 1e-15);

  StateVector plus = StateVector::zero(1);
  plus.apply_gate(Gate::h(0));
  EXPECT_NEAR(plus.marginal_prob0(0), 0.5, 1e-12);
}

TEST(Expectation, PauliBasics) {
  StateVector zero = StateVector::zero(2);
  EXPECT_NEAR(zero.expectation(PauliString::from_string("ZI")), 1.0, 1e-12);
  EXPECT_NEAR(zero.expectation(PauliString::from_string("XI")), 0.0, 1e-12);
  EXPECT_NEAR(zero.expectation(PauliString::from_string("II")), 1.0, 1e-12);

  // (|0> + i|1>)/sqrt(2) is the +1 eigenstate of Y.
  StateVector y_plus = StateVector::zero(1);
  y_plus.apply_gate(Gate::h(0));
  y_plus.apply_gate(Gate::s(0));
  EXPECT_NEAR(y_plus.expectation(PauliString::from_string("Y")), 1.0, 1e-12);
}

TEST(Expectation, MatchesMarginalIdentity) {
  // marginal_prob0(q) == (1 + <Z_q>) / 2 on random circuits.
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Circuit c = testing::random_full_gate_set(seed, 5, 15);
    StateVector s = simulate(c);
    for (int q = 0; q < c.n_qubits(); ++q) {
      std::string pauli(static_cast<std::size_t>(c.n_qubits()), 'I');
      pauli[static_cast<std::size_t>(q)] = 'Z';
      double z = s.expectation(PauliString::from_string(pauli));
      EXPECT_NEAR(s.marginal_prob0(q), 0.5 * (1.0 + z), 1e-10)
          << "seed " << seed << " qubit " << q;
    }
  }
}

TEST(Invariants, NormPreservedOnRandomCircuits) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Circuit c = testing::random_full_gate_set(seed, 8, 50);
    StateVector s = StateVector::zero(c.n_qubits());
    for (const Gate& g : c.gates()) {
      s.apply_gate(g);
      ASSERT_NEAR(s.norm_squared(), 1.0, 1e-10) << "seed " << seed;
    }
  }
}

TEST(Invariants, InvolutionsUndoThemselves) {
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    Circuit c = testing::random_toffoli_h(seed, 5, 10);
    StateVector s = simulate(c);
    std::vector<Complex> before = s.amplitudes();
    for (const Gate& g : c.gates()) {
      if (g.kind() == GateKind::S || g.kind() == GateKind::T) continue;
      s.apply_gate(g);
      s.apply_gate(g);
      for (std::size_t i = 0; i < before.size(); ++i) {
        ASSERT_NEAR(std::abs(s.amplitudes()[i] - before[i]), 0.0, 1e-10);
      }
    }
  }
}

TEST(Invariants, ProbabilitiesSumToOne) {
  for (std::uint64_t seed = 200; seed < 220; ++seed) {
    Circuit c = testing::random_full_gate_set(seed, 6, 25);
    StateVector s = simulate(c);
    double total = 0.0;
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << c.n_qubits()); ++i) {
      total += s.prob(BasisString::from_index(i, c.n_qubits()));
    }
    EXPECT_NEAR(total, 1.0, 1e-9);
    std::string all_i(static_cast<std::size_t>(c.n_qubits()), 'I');
    EXPECT_NEAR(s.expectation(PauliString::from_string(all_i)), 1.0, 1e-10);
  }
}

}  // namespace
}  // namespace qcsim
