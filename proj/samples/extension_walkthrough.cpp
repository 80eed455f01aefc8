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

// Builds the M=8 extension both ways, compiles it into a Givens netlist and
// prints the netlist together with the round-trip residual.

#include <cstdio>

#include "phasepovm/phasepovm.hpp"

int main() {
  using namespace phasepovm;
  constexpr std::size_t m = 8;

  const auto closed = build_extension_closed(m);
  const auto recursive = build_extension_recursive(m);
  std::printf("Z (M=%zu), columns in order", m);
  for (auto k : closed.column_order()) std::printf(" %zu", k);
  std::printf("\n");
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) {
      const auto z = closed.matrix()(r, c);
      std::printf(" %+.4f%+.4fi", z.real(), z.imag());
    }
    std::printf("\n");
  }
  std::printf("max |closed - recursive| = %.2e\n", max_abs_diff(closed.matrix(), recursive.matrix()));

  const auto report = verify_naimark(closed);
  std::printf("worst projector residual = %.2e (%s)\n", report.worst(), report.passed() ? "ok" : "FAILED");

  const auto netlist = decompose_closed(m);
  std::printf("\nZ^dagger as %zu elements, first applied first:\n", netlist.elements.size());
  for (const auto& e : netlist.elements) {
    if (const auto* g = std::get_if<GivensRotation>(&e))
      std::printf("  W(%zu,%zu, %.6f)\n", g->u, g->v, g->omega);
    else {
      const auto& s = std::get<PhaseShift>(e);
      std::printf("  S(%zu, %.6f)\n", s.u, s.phi);
    }
  }
  std::printf("|N Z - I| = %.2e\n", round_trip_residual(netlist, closed.matrix()));
  return report.passed() ? 0 : 1;
}
