// Copyright 2026 The phasepovm Authors
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

#include "oracles.hpp"
#include "phasepovm/phasepovm.hpp"

namespace phasepovm {
namespace {

TEST(Decomposition, ElementMatricesMatchDefinitions) {
  const auto w = givens_matrix(4, {2, 4, 0.3});
  EXPECT_LE(oracle::max_entry_diff(w, oracle::dense_element(4, {true, 2, 4, 0.3})), 0.0);
  const auto s = phase_matrix(4, {3, 1.1});
  EXPECT_LE(oracle::max_entry_diff(s, oracle::dense_element(4, {false, 3, 0, 1.1})), 0.0);
  EXPECT_THROW(givens_matrix(4, {3, 2, 0.1}), DomainError);
  EXPECT_THROW(givens_matrix(4, {1, 5, 0.1}), DomainError);
  EXPECT_THROW(phase_matrix(4, {0, 0.1}), DomainError);
}

TEST(Decomposition, EightOutcomeNetlistEqualsReferenceSequence) {
  const auto got = oracle::as_elements(decompose_closed(8));
  const auto ref = oracle::reference_netlist8();
  ASSERT_EQ(got.size(), ref.size());
  for (std::size_t i = 0; i < ref.size(); ++i) {
    EXPECT_EQ(got[i].givens, ref[i].givens) << i;
    EXPECT_EQ(got[i].u, ref[i].u) << i;
    EXPECT_EQ(got[i].v, ref[i].v) << i;
    EXPECT_LE(angle_distance(got[i].angle, ref[i].angle), 1e-10) << i;
  }
}

TEST(Decomposition, ReferenceSequenceInvertsReferenceMatrix) {
  // Oracle-only cross-check: the two transcriptions are consistent.
  const auto prod = oracle::naive_matmul(oracle::dense_product(8, oracle::reference_netlist8()),
                                         oracle::reference_z8());
  EXPECT_LE(identity_residual(prod), 1e-12);
}

class DecompositionSizes : public ::testing::TestWithParam<std::size_t> {};

TEST_P(DecompositionSizes, ClosedFormRoundTrip) {
  const std::size_t m = GetParam();
  const auto n = decompose_closed(m);
  EXPECT_EQ(n.elements.size(), 2 + 3 * (m / 2 - 1));
  const auto z = build_extension_closed(m).matrix();
  EXPECT_LE(round_trip_residual(n, z), 1e-9);
  // Same product through dense matrices.
  EXPECT_LE(oracle::max_entry_diff(evaluate_netlist(n), oracle::dense_product(m, oracle::as_elements(n))),
            1e-12);
}

TEST_P(DecompositionSizes, EliminationAgreesWithClosedForm) {
  const std::size_t m = GetParam();
  const auto ext = build_extension_closed(m);
  const auto elim = decompose_by_elimination(ext);
  EXPECT_TRUE(netlists_equal(elim, decompose_closed(m), 1e-10));
  EXPECT_LE(round_trip_residual(elim, ext.matrix()), 1e-9);
}

INSTANTIATE_TEST_SUITE_P(PowersOfTwo, DecompositionSizes, ::testing::Values(2, 4, 8, 16, 32, 64));

TEST(Decomposition, EliminationOfIdentityIsEmpty) {
  EXPECT_TRUE(decompose_by_elimination(ComplexMatrix::identity(6)).elements.empty());
}

TEST(Decomposition, EliminationHandlesGenericUnitaries) {
  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t m = 2 + rng() % 7;
    // Random unitary as a product of random rotations and phases.
    Netlist gen{m, {}};
    for (int i = 0; i < 40; ++i) {
      const std::size_t u = 1 + rng() % (m - 1);
      const std::size_t v = u + 1 + rng() % (m - u);
      gen.elements.emplace_back(GivensRotation{u, v, uniform(rng, -3, 3)});
      gen.elements.emplace_back(PhaseShift{1 + rng() % m, uniform(rng, -3, 3)});
    }
    const auto u = evaluate_netlist(gen);
    const auto n = decompose_by_elimination(u);
    EXPECT_LE(identity_residual(matmul(evaluate_netlist(n), u)), 1e-9);
  }
}

TEST(Decomposition, EliminationRejectsNonUnitary) {
  EXPECT_THROW(decompose_by_elimination(ComplexMatrix{{1, 0.1}, {0, 1}}), DomainError);
  EXPECT_THROW(decompose_by_elimination(ComplexMatrix(2, 3)), ShapeError);
}

TEST(Decomposition, AnglesCompareModuloTwoPi) {
  EXPECT_NEAR(canonical_angle(3 * oracle::pi), oracle::pi, 1e-15);
  EXPECT_NEAR(canonical_angle(-oracle::pi), oracle::pi, 1e-15);
  EXPECT_NEAR(angle_distance(-oracle::pi + 0.1, oracle::pi + 0.1), 0.0, 1e-14);
  Netlist a{4, {GivensRotation{1, 2, 0.5}}};
  Netlist b{4, {GivensRotation{1, 2, 0.5 + 2 * oracle::pi}}};
  Netlist c{4, {PhaseShift{1, 0.5}}};
  EXPECT_TRUE(netlists_equal(a, b));
  EXPECT_FALSE(netlists_equal(a, c));
}

TEST(Decomposition, TripletAngles) {
  EXPECT_NEAR(triplet_angle(8, 0), std::atan(std::sqrt(3.0)), 1e-15);
  EXPECT_NEAR(triplet_angle(8, 2), oracle::pi / 4, 1e-15);
  EXPECT_NEAR(triplet_closing_angle(8), oracle::pi + oracle::pi / 8, 1e-15);
}

TEST(Decomposition, StructuralPatterns) {
  for (std::size_t m = 4; m <= 256; m *= 2) {
    const auto n = decompose_closed(m);
    for (const auto& e : n.elements)
      if (const auto* g = std::get_if<GivensRotation>(&e)) {
        EXPECT_LE(g->v - g->u, 2u);
      }
    for (std::size_t t = 2; t + 2 < n.elements.size(); t += 3) {
      const auto& a = std::get<GivensRotation>(n.elements[t]);
      const auto& b = std::get<GivensRotation>(n.elements[t + 1]);
      const auto& c = std::get<GivensRotation>(n.elements[t + 2]);
      EXPECT_EQ(a.omega, b.omega);
      EXPECT_NEAR(c.omega, oracle::pi + oracle::pi / static_cast<double>(m), 1e-15);
    }
  }
  EXPECT_EQ(decompose_closed(2).elements.size(), 2u);
}

}  // namespace
}  // namespace phasepovm
