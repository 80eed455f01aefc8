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

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "phasepovm/phasepovm.hpp"

namespace phasepovm {
namespace {

TEST(Optics, ModeStackingIsPathMajor) {
  EXPECT_EQ(mode_index(1, Polarization::H), 0u);
  EXPECT_EQ(mode_index(1, Polarization::V), 1u);
  EXPECT_EQ(mode_index(3, Polarization::V), 5u);
  ModeAmplitudes s(2);
  EXPECT_THROW(s.amplitude(3, Polarization::H), DomainError);
}

TEST(Optics, PolarizingBeamSplitterRoutesVerticalLight) {
  const auto out = apply_element(input_state(0.7, 2), PBS{1, 2});
  EXPECT_NEAR(std::abs(out.amplitude(1, Polarization::H)), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_LE(std::abs(out.amplitude(1, Polarization::V)), 1e-15);
  EXPECT_EQ(out.amplitude(2, Polarization::H), Complex(0));
  // Reflected V picks up a sign.
  EXPECT_LE(std::abs(out.amplitude(2, Polarization::V) + std::polar(1 / std::sqrt(2.0), 0.7)), 1e-15);
  EXPECT_LE(max_abs_diff(element_matrix(PBS{1, 2}, 2), element_matrix(as_ppbs(PBS{1, 2}), 2)), 0.0);
}

TEST(Optics, ElementMatricesAreUnitary) {
  const std::vector<OpticalElement> elements{PolarizationRotation{2, 0.4}, WaveplatePhase{1, 1.3},
                                             PPBS{1, 3, 0.2, 1.1}, PBS{3, 2}, Detector{2, Polarization::V, 0}};
  for (const auto& e : elements) EXPECT_TRUE(is_unitary(element_matrix(e, 3)));
}

TEST(Optics, ElementsRejectMissingPaths) {
  EXPECT_THROW(apply_element(ModeAmplitudes(2), PPBS{1, 3, 0, 0}), DomainError);
  EXPECT_THROW(apply_element(ModeAmplitudes(2), PPBS{2, 2, 0, 0}), DomainError);
  EXPECT_THROW(ModeAmplitudes(1, ComplexVector{2.0, 0.0}), DomainError);
}

class SchemeSizes : public ::testing::TestWithParam<std::size_t> {};

TEST_P(SchemeSizes, InterferometerRealisesTheNetlist) {
  const std::size_t m = GetParam();
  const auto scheme = build_direct_scheme(m);
  EXPECT_LE(max_abs_diff(interferometer_matrix(scheme), evaluate_netlist(decompose_closed(m))), 1e-12);
  EXPECT_TRUE(is_unitary(scheme_transfer_matrix(scheme)));
}

TEST_P(SchemeSizes, DetectorsSeeSignedZDagger) {
  const std::size_t m = GetParam();
  const auto d = detection_matrix(build_direct_scheme(m));
  auto expected = adjoint(build_extension_closed(m).matrix());
  for (std::size_t j = 1; j < m; j += 2)
    for (auto& z : expected.row(j)) z = -z;
  EXPECT_LE(max_abs_diff(d, expected), 1e-12);
}

TEST_P(SchemeSizes, DirectSchemeReproducesPovm) {
  const std::size_t m = GetParam();
  const auto scheme = build_direct_scheme(m);
  for (double phi : {0.0, 0.3, 2.0, 4.4}) {
    const auto d = simulate_direct(scheme, QubitState::from_phase(phi));
    for (std::size_t k = 0; k < m; ++k) EXPECT_NEAR(d.probabilities[k], oracle::phase_probability(m, k, phi), 1e-12);
  }
}

TEST_P(SchemeSizes, NetlistSimulationMatchesDirect) {
  const std::size_t m = GetParam();
  const auto rho = QubitState::from_phase(1.234);
  EXPECT_LE(max_abs_diff(simulate_netlist(decompose_closed(m), rho), simulate_direct(build_direct_scheme(m), rho)),
            1e-12);
}

INSTANTIATE_TEST_SUITE_P(PowersOfTwo, SchemeSizes, ::testing::Values(2, 4, 8, 16, 32));

TEST(Optics, PropagationConservesNormStepByStep) {
  const auto p = propagate(build_direct_scheme(16), input_state(0.9));
  ASSERT_FALSE(p.step_norms.empty());
  for (double n : p.step_norms) EXPECT_NEAR(n, 1.0, 1e-12);
  EXPECT_EQ(p.final_state.paths(), 16u);
}

TEST(Optics, DirectLayoutUsesMPaths) {
  const DirectLayout layout{8};
  EXPECT_EQ(layout.network_path(1), 1u);
  EXPECT_EQ(layout.network_path(4), 6u);
  EXPECT_EQ(layout.tap_path(1), 3u);
  EXPECT_EQ(layout.tap_path(4), 8u);
  std::set<std::size_t> used;
  for (std::size_t i = 1; i <= 4; ++i) {
    used.insert(layout.network_path(i));
    used.insert(layout.tap_path(i));
  }
  EXPECT_EQ(used.size(), 8u);
}

TEST(Optics, ModularBlockIsAnIsometry) {
  for (std::size_t k = 0; k + 2 <= 8; ++k) {
    const auto iso = modular_block_isometry(16, k);
    EXPECT_LE(identity_residual(adjoint_times(iso, iso)), 1e-14);
  }
  EXPECT_THROW(modular_block_isometry(16, 7), DomainError);
  EXPECT_THROW(modular_block_isometry(2, 0), DomainError);
}

TEST(Optics, FoldedScheduleShape) {
  const auto f = build_folded_schedule(8);
  ASSERT_EQ(f.loop_slots.size(), 3u);
  EXPECT_NEAR(f.loop_slots[0].splitter_angle, std::atan(std::sqrt(3.0)), 1e-15);
  EXPECT_NEAR(f.loop_slots[2].loop_rotation, oracle::pi + oracle::pi / 8, 1e-15);
  EXPECT_EQ(f.exit.slot, 4u);
  EXPECT_EQ(f.exit.splitter_angle, 0.0);
  EXPECT_TRUE(build_folded_schedule(2).loop_slots.empty());
}

TEST(Optics, FoldedSchemeMatchesDirect) {
  Rng rng(41);
  for (std::size_t m : {2u, 4u, 8u, 16u, 64u}) {
    const auto scheme = build_direct_scheme(m);
    for (int i = 0; i < 10; ++i) {
      const auto rho = random_mixed_state(rng);
      const auto folded = simulate_folded(m, rho);
      EXPECT_LE(max_abs_diff(folded.flatten(), simulate_direct(scheme, rho)), 1e-12);
      EXPECT_LE(folded.residual_loop_norm, 1e-12);
      EXPECT_EQ(folded.slots.size(), m / 2);
    }
  }
}

TEST(Optics, WaveplateAndBeamSplitterExamples) {
  const auto w = apply_element(input_state(0.0), WaveplatePhase{1, oracle::pi / 2});
  EXPECT_LE(std::abs(w.amplitude(1, Polarization::V) - Complex(0, -1 / std::sqrt(2.0))), 1e-15);
  // Equal-angle PPBS is a plain beam splitter on both polarizations.
  const auto ppbs = element_matrix(PPBS{1, 2, 0.4, 0.4}, 2);
  auto expected = ComplexMatrix::identity(4);
  for (std::size_t p : {0u, 1u}) {
    expected(p, p) = expected(p + 2, p + 2) = std::cos(0.4);
    expected(p, p + 2) = std::sin(0.4);
    expected(p + 2, p) = -std::sin(0.4);
  }
  EXPECT_LE(max_abs_diff(ppbs, expected), 1e-15);
  const auto phi_pi = input_state(oracle::pi);
  EXPECT_LE(std::abs(phi_pi.amplitude(1, Polarization::V) + 1 / std::sqrt(2.0)), 1e-15);
}

TEST(Optics, ModularBlockTapAmplitude) {
  for (std::size_t m : {8u, 32u})
    for (std::size_t k = 0; k + 2 <= m / 2; ++k) {
      const auto iso = modular_block_isometry(m, k);
      const double expected = std::sqrt(2.0 / static_cast<double>(m - 2 * k));
      EXPECT_NEAR(iso(0, 0).real(), expected, 1e-14);
      EXPECT_NEAR(iso(1, 1).real(), expected, 1e-14);
      EXPECT_NEAR(std::abs(iso(0, 1)) + std::abs(iso(1, 0)), 0.0, 1e-15);
    }
}

TEST(Optics, FoldedAnglesDecreaseAndMixedInputIsFlat) {
  const auto f = build_folded_schedule(32);
  for (std::size_t i = 1; i < f.loop_slots.size(); ++i)
    EXPECT_LT(f.loop_slots[i].splitter_angle, f.loop_slots[i - 1].splitter_angle);
  const auto s = simulate_folded(8, QubitState::maximally_mixed());
  for (const auto& [h, v] : s.slots) {
    EXPECT_NEAR(h, 1.0 / 8, 1e-14);
    EXPECT_NEAR(v, 1.0 / 8, 1e-14);
  }
}

TEST(Optics, DirectSchemeDocumentedExamples) {
  const auto d = simulate_direct(build_direct_scheme(4), QubitState::from_phase(oracle::pi / 2));
  const std::vector<double> expected{0.25, 0.5, 0.25, 0.0};
  for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(d.probabilities[k], expected[k], 1e-14);
  const auto s8 = build_direct_scheme(8);
  const DirectLayout layout{8};
  for (std::size_t k = 0; k < 4; ++k) {
    EXPECT_EQ(s8.detectors[k].outcome, k);
    EXPECT_EQ(s8.detectors[k].polarization, Polarization::H);
    EXPECT_EQ(s8.detectors[k].path, layout.network_path(k + 1));
    EXPECT_EQ(s8.detectors[k + 4].outcome, k + 4);
    EXPECT_EQ(s8.detectors[k + 4].polarization, Polarization::V);
    EXPECT_EQ(s8.detectors[k + 4].path, layout.tap_path(k + 1));
  }
  const auto s2 = build_direct_scheme(2);
  EXPECT_EQ(std::count_if(s2.elements.begin(), s2.elements.end(),
                          [](const OpticalElement& e) { return std::holds_alternative<PBS>(e); }),
            1);
}

}  // namespace
}  // namespace phasepovm
