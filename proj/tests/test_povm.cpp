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

TEST(Povm, RejectsBadOutcomeCounts) {
  for (std::size_t m : {0u, 1u, 3u, 6u, 12u, 8192u}) EXPECT_THROW(PhasePovm{m}, DomainError) << m;
  try {
    require_outcome_count(6);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("M must be a power of 2"), std::string::npos);
  }
  EXPECT_THROW(PhasePovm(4).element(4), DomainError);
}

TEST(Povm, ElementsAreScaledRankOneProjectors) {
  for (std::size_t m : {2u, 4u, 8u, 64u}) {
    const PhasePovm povm(m);
    for (std::size_t k = 0; k < m; ++k) {
      const auto& e = povm.element(k);
      EXPECT_NEAR(e.trace().real(), 2.0 / static_cast<double>(m), 1e-15);
      EXPECT_LE(hermiticity_residual(e), 1e-15);
      // Pi_k^2 = (2/M) Pi_k
      EXPECT_LE(max_abs_diff(matmul(e, e), (2.0 / static_cast<double>(m)) * e), 1e-15);
      const auto x = x_k(m, k);
      EXPECT_LE(max_abs_diff(ComplexMatrix::outer(x, x), e), 1e-15);
    }
  }
}

TEST(Povm, PsiHasExpectedPhases) {
  const auto v = psi_k(8, 3);
  EXPECT_NEAR(std::arg(v[0]), -3 * oracle::pi / 8, 1e-15);
  EXPECT_NEAR(std::arg(v[1]), 3 * oracle::pi / 8, 1e-15);
  EXPECT_NEAR(v.norm(), 1.0, 1e-15);
}

TEST(Povm, Completeness) {
  for (std::size_t m = 2; m <= kMaxOutcomes; m *= 2)
    EXPECT_LE(identity_residual(PhasePovm(m).sum()), 1e-12) << "M=" << m;
}

TEST(Povm, TraceRuleMatchesClosedForm) {
  for (std::size_t m : {2u, 4u, 8u, 16u, 128u})
    for (double phi : {0.0, 0.1, 1.0, 2.5, -0.7, 6.0}) {
      const auto d = povm_distribution(PhasePovm(m), QubitState::from_phase(phi));
      const auto a = analytic_phase_distribution(m, phi);
      for (std::size_t k = 0; k < m; ++k) {
        EXPECT_NEAR(d.probabilities[k], oracle::phase_probability(m, k, phi), 1e-14);
        EXPECT_NEAR(a.probabilities[k], oracle::phase_probability(m, k, phi), 1e-14);
      }
      EXPECT_NEAR(d.total(), 1.0, 1e-14);
    }
}

TEST(Povm, GuessingProbabilityIsTwoOverM) {
  EXPECT_NEAR(guessing_probability(2), 1.0, 1e-12);
  EXPECT_NEAR(guessing_probability(4), 0.5, 1e-12);
  EXPECT_NEAR(guessing_probability(8), 0.25, 1e-12);
  EXPECT_NEAR(guessing_probability(1024), 2.0 / 1024, 1e-12);
}

TEST(Povm, QubitStateValidation) {
  EXPECT_THROW(QubitState(ComplexMatrix{{1, 0}, {0, 1}}), DomainError);           // trace 2
  EXPECT_THROW(QubitState(ComplexMatrix{{0.5, 0.1}, {0.2, 0.5}}), DomainError);   // not Hermitian
  EXPECT_THROW(QubitState(ComplexMatrix{{1.2, 0}, {0, -0.2}}), DomainError);      // negative
  EXPECT_THROW(QubitState(ComplexMatrix(3, 3)), ShapeError);
  EXPECT_THROW(QubitState::pure(ComplexVector{0.0, 0.0}), DomainError);
  EXPECT_NO_THROW(QubitState::maximally_mixed());
  const auto s = QubitState::pure(ComplexVector{3.0, Complex(0, 4)});
  EXPECT_NEAR(s.density()(0, 0).real(), 9.0 / 25, 1e-15);
}

TEST(Povm, MaximallyMixedStateIsUniform) {
  const auto d = povm_distribution(PhasePovm(16), QubitState::maximally_mixed());
  for (double p : d.probabilities) EXPECT_NEAR(p, 1.0 / 16, 1e-15);
}

TEST(Povm, WrapPhase) {
  EXPECT_NEAR(wrap_phase(2 * oracle::pi + 0.25), 0.25, 1e-14);
  EXPECT_NEAR(wrap_phase(-0.25), 2 * oracle::pi - 0.25, 1e-14);
  EXPECT_THROW(wrap_phase(std::numeric_limits<double>::infinity()), DomainError);
}

}  // namespace
}  // namespace phasepovm
