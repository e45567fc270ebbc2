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
#include <random>

#include "qcsim/circuit_io.hpp"
#include "qcsim/dd.hpp"
#include "qcsim/lowering.hpp"
#include "qcsim/statevector.hpp"
#include "test_util.hpp"

namespace qcsim {
namespace {

std::vector<Complex> real_vec(std::vector<double> values) {
  std::vector<Complex> out;
  for (double v : values) out.emplace_back(v, 0.0);
  return out;
}

std::vector<Complex> random_state(std::uint64_t seed, int n) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist;
  std::vector<Complex> v(std::size_t{1} << n);
  for (auto& amp : v) amp = Complex{dist(rng), dist(rng)};
  return v;
}

TEST(FromVector, MergedTreeExample) {
  // [1,0,2,0,1,0,-2,0]: the decision tree has 7 interior nodes; merging the
  // two equal subtrees leaves 6 in the ADD.
  std::vector<Complex> v = real_vec({1, 0, 2, 0, 1, 0, -2, 0});
  DdManager add(DdKind::Add, 3);
  DdEdge e = add.from_vector(v);
  EXPECT_EQ(add.node_count(e), 6u);
  EXPECT_EQ(add.to_vector(e), v);

  // As a QMDD all four leaf pairs merge into one node with constants on the
  // edges: x, two y nodes, one z node.
  DdManager qmdd(DdKind::Qmdd, 3);
  DdEdge q = qmdd.from_vector(v);
  EXPECT_EQ(qmdd.node_count(q), 4u);
  auto back = qmdd.to_vector(q);
  for (std::size_t i = 0; i < v.size(); ++i) {
    EXPECT_NEAR(std::abs(back[i] - v[i]), 0.0, 1e-12);
  }
  qmdd.validate(q);
  // The constants 1, 2, 1, -2 sit on the y-node edges: visible as the path
  // products into the shared [1, 0] substate.
  EXPECT_NEAR(std::abs(qmdd.amplitude(q, BasisString::from_string("000")) -
                       Complex{1, 0}),
              0.0, 1e-12);
  EXPECT_NEAR(std::abs(qmdd.amplitude(q, BasisString::from_string("010")) -
                       Complex{2, 0}),
              0.0, 1e-12);
  EXPECT_NEAR(std::abs(qmdd.amplitude(q, BasisString::from_string("100")) -
                       Complex{1, 0}),
              0.0, 1e-12);
  EXPECT_NEAR(std::abs(qmdd.amplitude(q, BasisString::from_string("110")) -
                       Complex{-2, 0}),
              0.0, 1e-12);
}

TEST(FromVector, GeometricVectorCompressesToChain) {
  // [1,2,2,4,4,8,8,16]: every level halves, so the QMDD is a single chain;
  // with the shared terminal that is n+1 = 4 nodes. The ADD keeps all
  // 2^n - 1 = 7 interior nodes.
  std::vector<Complex> v = real_vec({1, 2, 2, 4, 4, 8, 8, 16});
  DdManager qmdd(DdKind::Qmdd, 3);
  DdEdge q = qmdd.from_vector(v);
  EXPECT_EQ(qmdd.node_count(q), 3u);
  EXPECT_EQ(qmdd.node_count(q) + qmdd.terminal_count(q), 4u);
  auto back = qmdd.to_vector(q);
  for (std::size_t i = 0; i < v.size(); ++i) {
    EXPECT_NEAR(std::abs(back[i] - v[i]), 0.0, 1e-12);
  }

  DdManager add(DdKind::Add, 3);
  EXPECT_EQ(add.node_count(add.from_vector(v)), 7u);
}

TEST(FromVector, UniformHalfVectorHasLinearAdd) {
  std::vector<Complex> v = real_vec({0.5, 0.5, 0.5, 0.5, 0, 0, 0, 0});
  DdManager add(DdKind::Add, 3);
  DdEdge e = add.from_vector(v);
  EXPECT_EQ(add.node_count(e), 3u);
  EXPECT_EQ(add.to_vector(e), v);
}

TEST(FromVector, RejectsWrongLength) {
  DdManager m(DdKind::Add, 2);
  EXPECT_THROW(m.from_vector(real_vec({1, 0})), std::invalid_argument);
}

TEST(ToVector, BasisState) {
  DdManager m(DdKind::Qmdd, 2);
  EXPECT_EQ(m.to_vector(m.zero_state()), real_vec({1, 0, 0, 0}));
  EXPECT_THROW(m.to_vector(m.identity()), std::invalid_argument);
}

TEST(RoundTrip, RandomVectorsBothKinds) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    int n = 1 + static_cast<int>(seed % 6);
    std::vector<Complex> v = random_state(seed, n);
    for (DdKind kind : {DdKind::Add, DdKind::Qmdd}) {
      DdManager m(kind, n);
      DdEdge e = m.from_vector(v);
      m.validate(e);
      auto back = m.to_vector(e);
      for (std::size_t i = 0; i < v.size(); ++i) {
        ASSERT_NEAR(std::abs(back[i] - v[i]), 0.0, 1e-12)
            << "seed " << seed << " kind " << static_cast<int>(kind);
      }
    }
  }
}

TEST(FromGate, HadamardDiagramShape) {
  // Matrix nodes branch on (row bit, col bit) at once, so the drawn
  // two-level x / x' diagram is a single quadrant node here, ending in the
  // two terminals +1/sqrt2 and -1/sqrt2.
  DdManager add(DdKind::Add, 1);
  DdEdge h = add.from_gate(Gate::h(0));
  EXPECT_EQ(add.node_count(h), 1u);
  EXPECT_EQ(add.terminal_count(h), 2u);
  const double s = 1.0 / std::numbers::sqrt2;
  EXPECT_NEAR(std::abs(add.top_left_entry(h) - Complex{s, 0.0}), 0.0, 1e-15);
}

TEST(FromGate, MatchesKroneckerReference) {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 40; ++round) {
    Circuit c = testing::random_full_gate_set(rng(), 4, 1);
    const Gate& g = c.gates()[0];
    testing::CMatrix expect = testing::full_gate_matrix(g, c.n_qubits());
    for (DdKind kind : {DdKind::Add, DdKind::Qmdd}) {
      DdManager m(kind, c.n_qubits());
      DdEdge e = m.from_gate(g);
      m.validate(e);
      // Read every matrix entry by applying to basis vectors.
      const std::size_t dim = std::size_t{1} << c.n_qubits();
      for (std::size_t col = 0; col < dim; ++col) {
        std::vector<Complex> basis(dim, Complex{0, 0});
        basis[col] = Complex{1, 0};
        auto image = m.to_vector(m.apply(e, m.from_vector(basis)));
        for (std::size_t row = 0; row < dim; ++row) {
          ASSERT_NEAR(std::abs(image[row] - expect[row][col]), 0.0, 1e-12)
              << "round " << round;
        }
      }
    }
  }
}

TEST(FromGate, CnotMatrixEntries) {
  DdManager m(DdKind::Qmdd, 2);
  DdEdge cnot = m.from_gate(Gate::cnot(0, 1));
  testing::CMatrix expect = {{{1, 0}, {0, 0}, {0, 0}, {0, 0}},
                             {{0, 0}, {1, 0}, {0, 0}, {0, 0}},
                             {{0, 0}, {0, 0}, {0, 0}, {1, 0}},
                             {{0, 0}, {0, 0}, {1, 0}, {0, 0}}};
  for (std::size_t col = 0; col < 4; ++col) {
    std::vector<Complex> basis(4, Complex{0, 0});
    basis[col] = Complex{1, 0};
    auto image = m.to_vector(m.apply(cnot, m.from_vector(basis)));
    for (std::size_t row = 0; row < 4; ++row) {
      EXPECT_NEAR(std::abs(image[row] - expect[row][col]), 0.0, 1e-12);
    }
  }
}

TEST(Apply, HadamardOnBasisStates) {
  DdManager m(DdKind::Qmdd, 1);
  DdEdge h = m.from_gate(Gate::h(0));
  auto plus = m.to_vector(m.apply(h, m.zero_state()));
  const double s = 1.0 / std::numbers::sqrt2;
  EXPECT_NEAR(std::abs(plus[0] - Complex{s, 0}), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(plus[1] - Complex{s, 0}), 0.0, 1e-12);
}

TEST(Apply, CnotPermutesBasis) {
  DdManager m(DdKind::Add, 2);
  DdEdge ten = m.from_vector(real_vec({0, 0, 1, 0}));
  auto eleven = m.to_vector(m.apply(m.from_gate(Gate::cnot(0, 1)), ten));
  EXPECT_EQ(eleven, real_vec({0, 0, 0, 1}));
}

TEST(Apply, ExampleCircuitChain) {
  Circuit c = parse_circuit("qubits 3\nh 0\nh 1\nccx 0 1 2\n");
  for (DdKind kind : {DdKind::Add, DdKind::Qmdd}) {
    DdManager m(kind, 3);
    auto v = m.to_vector(m.simulate(c));
    for (std::size_t i : {0u, 2u, 4u, 7u}) {
      EXPECT_NEAR(std::abs(v[i] - Complex{0.5, 0.0}), 0.0, 1e-12);
    }
    for (std::size_t i : {1u, 3u, 5u, 6u}) {
      EXPECT_NEAR(std::abs(v[i]), 0.0, 1e-12);
    }
  }
}

TEST(Add, BasicsAndZero) {
  DdManager m(DdKind::Qmdd, 1);
  DdEdge zero_ket = m.from_vector(real_vec({1, 0}));
  DdEdge one_ket = m.from_vector(real_vec({0, 1}));
  EXPECT_EQ(m.to_vector(m.add(zero_ket, one_ket)), real_vec({1, 1}));

  EXPECT_EQ(m.add(zero_ket, m.zero_edge()), zero_ket);
  EXPECT_EQ(m.add(m.zero_edge(), one_ket), one_ket);
}

TEST(Add, DestructiveInterferenceCollapsesToZero) {
  for (DdKind kind : {DdKind::Add, DdKind::Qmdd}) {
    DdManager m(kind, 2);
    DdEdge up = m.from_vector(real_vec({0, 0, 0.5, 0}));
    DdEdge down = m.from_vector(real_vec({0, 0, -0.5, 0}));
    DdEdge sum = m.add(up, down);
    EXPECT_TRUE(m.is_zero(sum));
    EXPECT_EQ(m.node_count(sum), 0u);
  }
}

TEST(Add, CommutesAndAssociates) {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 20; ++round) {
    int n = 1 + static_cast<int>(rng() % 4);
    for (DdKind kind : {DdKind::Add, DdKind::Qmdd}) {
      DdManager m(kind, n);
      DdEdge a = m.from_vector(random_state(rng(), n));
      DdEdge b = m.from_vector(random_state(rng(), n));
      DdEdge c = m.from_vector(random_state(rng(), n));
      auto ab = m.to_vector(m.add(a, b));
      auto ba = m.to_vector(m.add(b, a));
      auto ab_c = m.to_vector(m.add(m.add(a, b), c));
      auto a_bc = m.to_vector(m.add(a, m.add(b, c)));
      for (std::size_t i = 0; i < ab.size(); ++i) {
        ASSERT_NEAR(std::abs(ab[i] - ba[i]), 0.0, 1e-12);
        ASSERT_NEAR(std::abs(ab_c[i] - a_bc[i]), 0.0, 1e-12);
      }
    }
  }
}

TEST(SimulateDd, BellUncomputeIsCompact) {
  Circuit c = parse_circuit("qubits 2\nh 0\ncx 0 1\ncx 0 1\nh 0\n");
  DdManager m(DdKind::Qmdd, 2);
  DdEdge state = m.simulate(c);
  EXPECT_EQ(m.node_count(state), 2u);
  EXPECT_NEAR(m.measure_prob(state, BasisString::from_string("00")), 1.0,
              1e-12);
}

TEST(SimulateDd, UniformSuperpositionMergesPerLevel) {
  Circuit c = parse_circuit("qubits 3\nh 0\nh 1\nh 2\n");
  DdManager m(DdKind::Qmdd, 3);
  DdEdge state = m.simulate(c);
  EXPECT_EQ(m.node_count(state), 3u);
}

TEST(SimulateDd, ExampleCircuitMeasurement) {
  Circuit c = parse_circuit("qubits 3\nh 0\nh 1\nccx 0 1 2\n");
  for (DdKind kind : {DdKind::Add, DdKind::Qmdd}) {
    DdManager m(kind, 3);
    DdEdge state = m.simulate(c);
    EXPECT_NEAR(m.measure_prob(state, BasisString::from_string("000")), 0.25,
                1e-12);
    EXPECT_NEAR(m.measure_prob(state, BasisString::from_string("001")), 0.0,
                1e-12);
  }
}

TEST(MeasureProb, BasisState) {
  DdManager m(DdKind::Add, 2);
  EXPECT_NEAR(m.measure_prob(m.zero_state(), BasisString::from_string("00")),
              1.0, 1e-15);
  EXPECT_THROW(m.measure_prob(m.zero_state(), BasisString::from_string("0")),
               std::invalid_argument);
}

TEST(Canonicity, ConstructionOrderDoesNotMatter) {
  // Build the same vector directly and as the sum of its even and odd
  // parts: the unique table must return the same root node.
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    int n = 1 + static_cast<int>(seed % 6);
    std::vector<Complex> v = random_state(seed + 1000, n);
    for (DdKind kind : {DdKind::Add, DdKind::Qmdd}) {
      DdManager m(kind, n);
      DdEdge direct = m.from_vector(v);
      std::vector<Complex> lower(v.size(), Complex{0, 0});
      std::vector<Complex> upper(v.size(), Complex{0, 0});
      for (std::size_t i = 0; i < v.size(); ++i) {
        (i < v.size() / 2 ? lower : upper)[i] = v[i];
      }
      DdEdge sum = m.add(m.from_vector(lower), m.from_vector(upper));
      ASSERT_EQ(direct.node, sum.node) << "seed " << seed;
      ASSERT_NEAR(std::abs(direct.weight - sum.weight), 0.0, 1e-12);
    }
  }
}

TEST(BackendAgreement, RandomCircuitsMatchStatevector) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Circuit c = testing::random_full_gate_set(seed);
    StateVector s = simulate(c);
    for (DdKind kind : {DdKind::Add, DdKind::Qmdd}) {
      DdManager m(kind, c.n_qubits());
      DdEdge state = m.simulate(c);
      m.validate(state);
      for (std::uint64_t i = 0; i < (std::uint64_t{1} << c.n_qubits()); ++i) {
        BasisString b = BasisString::from_index(i, c.n_qubits());
        ASSERT_NEAR(m.measure_prob(state, b), s.prob(b), 1e-9)
            << "seed " << seed;
      }
    }
  }
}

TEST(EquivCheck, InverseCircuitCancels) {
  Circuit bell = parse_circuit("qubits 2\nh 0\ncx 0 1\ncx 0 1\nh 0\n");
  Circuit empty(2, {});
  for (DdKind kind : {DdKind::Add, DdKind::Qmdd}) {
    EXPECT_EQ(equiv_check(bell, empty, kind).verdict, EquivVerdict::Equal);
  }
}

TEST(EquivCheck, LoweredToffoliEqualsToffoli) {
  Circuit ccnot(3, {Gate::ccnot(0, 1, 2)});
  Circuit lowered = lower_ccnot(ccnot);
  for (DdKind kind : {DdKind::Add, DdKind::Qmdd}) {
    EXPECT_EQ(equiv_check(ccnot, lowered, kind).verdict, EquivVerdict::Equal);
  }
}

TEST(EquivCheck, DetectsDifference) {
  Circuit x(1, {Gate::x(0)});
  Circuit empty(1, {});
  for (DdKind kind : {DdKind::Add, DdKind::Qmdd}) {
    EXPECT_EQ(equiv_check(x, empty, kind).verdict, EquivVerdict::NotEqual);
  }
}

TEST(EquivCheck, GlobalPhaseIsReported) {
  // S X S X = i * I.
  Circuit phased(1, {Gate::x(0), Gate::s(0), Gate::x(0), Gate::s(0)});
  Circuit empty(1, {});
  for (DdKind kind : {DdKind::Add, DdKind::Qmdd}) {
    EquivResult result = equiv_check(phased, empty, kind);
    EXPECT_EQ(result.verdict, EquivVerdict::EqualUpToGlobalFactor);
    EXPECT_NEAR(std::abs(result.factor - Complex{0.0, 1.0}), 0.0, 1e-9);
  }
}

TEST(EquivCheck, SelfInverseDefinitions) {
  // s.s.s.s and t^8 are identities; check the inverse builder with them.
  Circuit s_four(1, {Gate::s(0), Gate::s(0), Gate::s(0), Gate::s(0)});
  Circuit t_circ(1, {Gate::t(0)});
  Circuit empty(1, {});
  EXPECT_EQ(equiv_check(s_four, empty, DdKind::Qmdd).verdict,
            EquivVerdict::Equal);
  EXPECT_EQ(equiv_check(t_circ, t_circ, DdKind::Qmdd).verdict,
            EquivVerdict::Equal);
  EXPECT_THROW(equiv_check(t_circ, Circuit(2, {}), DdKind::Qmdd),
               std::invalid_argument);
}

TEST(Validate, QmddNormalizationHoldsEverywhere) {
  for (std::uint64_t seed = 200; seed < 230; ++seed) {
    Circuit c = testing::random_full_gate_set(seed, 5, 20);
    DdManager m(DdKind::Qmdd, c.n_qubits());
    DdEdge state = m.zero_state();
    for (const Gate& g : c.gates()) {
      state = m.apply(m.from_gate(g), state);
      ASSERT_NO_THROW(m.validate(state)) << "seed " << seed;
    }
  }
}

}  // namespace
}  // namespace qcsim
