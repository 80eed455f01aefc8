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

// Seeded random qubit states for randomized verification.
//
// std::mt19937_64 output is fully specified by the standard, but the
// <random> distributions are not, so the uniform and Gaussian variates are
// derived here directly from the raw engine bits. Same seed, same states, on
// every standard library.

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "phasepovm/numerics.hpp"
#include "phasepovm/povm.hpp"

namespace phasepovm {

using Rng = std::mt19937_64;

/// Uniform on [0, 1) with 53 random bits.
inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline double uniform(Rng& rng, double lo, double hi) { return lo + (hi - lo) * uniform01(rng); }

/// Standard normal via Box-Muller.
inline double standard_normal(Rng& rng) {
  const double u1 = 1.0 - uniform01(rng);  // (0, 1]
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2 * std::numbers::pi * u2);
}

/// Haar-random unit vector in C^n.
inline ComplexVector random_unit_vector(Rng& rng, std::size_t n) {
  ComplexVector v(n);
  double sq = 0;
  do {
    for (auto& z : v) z = Complex(standard_normal(rng), standard_normal(rng));
    sq = v.squared_norm();
  } while (sq < 1e-24);
  const double inv = 1 / std::sqrt(sq);
  for (auto& z : v) z *= inv;
  return v;
}

inline QubitState random_pure_state(Rng& rng) { return QubitState::pure(random_unit_vector(rng, 2)); }

/// lambda |v><v| + (1 - lambda)|v_perp><v_perp| with lambda ~ U[0,1) and v Haar.
inline QubitState random_mixed_state(Rng& rng) {
  const auto v = random_unit_vector(rng, 2);
  const ComplexVector w{-std::conj(v[1]), std::conj(v[0])};
  const double lambda = uniform01(rng);
  ComplexMatrix rho = lambda * ComplexMatrix::outer(v, v);
  rho += (1 - lambda) * ComplexMatrix::outer(w, w);
  // Clean rounding so the Hermiticity check sees an exactly Hermitian matrix.
  rho(1, 0) = std::conj(rho(0, 1));
  rho(0, 0) = rho(0, 0).real();
  rho(1, 1) = rho(1, 1).real();
  return QubitState(std::move(rho));
}

}  // namespace phasepovm
