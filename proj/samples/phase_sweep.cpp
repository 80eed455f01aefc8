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

// Sends (|H> + e^{i phi}|V>)/sqrt2 through the direct and folded schemes for
// a few phases and prints the most likely outcome next to the ideal estimate.

#include <cstdio>
#include <numbers>

#include "phasepovm/phasepovm.hpp"

int main() {
  using namespace phasepovm;
  constexpr std::size_t m = 16;
  const auto scheme = build_direct_scheme(m);

  std::printf("M=%zu, guessing probability %.4f\n", m, guessing_probability(m));
  std::printf("%8s %6s %10s %10s %14s\n", "phi", "k*", "P(k*)", "2pi k*/M", "|direct-fold|");
  for (double phi : {0.0, 0.4, 1.3, std::numbers::pi, 4.0, 5.9}) {
    const auto rho = QubitState::from_phase(phi);
    const auto direct = simulate_direct(scheme, rho);
    const auto folded = simulate_folded(m, rho).flatten();
    std::size_t best = 0;
    for (std::size_t k = 1; k < m; ++k)
      if (direct.probabilities[k] > direct.probabilities[best]) best = k;
    std::printf("%8.3f %6zu %10.4f %10.4f %14.2e\n", phi, best, direct.probabilities[best],
                2 * std::numbers::pi * static_cast<double>(best) / m, max_abs_diff(direct, folded));
  }
  return 0;
}
