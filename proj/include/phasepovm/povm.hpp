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

// The M-outcome phase POVM on a qubit and its analytic statistics.
//
// Outcome k is associated with the phase 2*pi*k/M. The element for outcome k
// is (2/M)|psi_k><psi_k| with
//
//   |psi_k> = (e^{-i pi k/M} |0> + e^{i pi k/M} |1>) / sqrt(2).
//
// Restricting the continuous canonical phase measurement to span{|0>,|1>}
// and discretising the outcome to M values yields exactly this family; only
// the discretised qubit version is modelled here.

#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "phasepovm/numerics.hpp"

namespace phasepovm {

/// Upper bound on the outcome count accepted anywhere in the library.
inline constexpr std::size_t kMaxOutcomes = 4096;

inline bool is_power_of_two(std::size_t m) { return m != 0 && (m & (m - 1)) == 0; }

/// Throws DomainError unless 2 <= M <= kMaxOutcomes and M is a power of 2.
inline void require_outcome_count(std::size_t m) {
  if (m < 2 || !is_power_of_two(m))
    throw DomainError("M must be a power of 2 (M >= 2), got " + std::to_string(m));
  if (m > kMaxOutcomes)
    throw DomainError("M must not exceed " + std::to_string(kMaxOutcomes) + ", got " +
                      std::to_string(m));
}

inline void require_outcome_index(std::size_t m, std::size_t k) {
  if (k >= m)
    throw DomainError("outcome index " + std::to_string(k) + " out of range for M=" +
                      std::to_string(m));
}

/// Wraps any real phase into [0, 2 pi).
inline double wrap_phase(double phi) {
  if (!std::isfinite(phi)) throw DomainError("phase must be finite");
  constexpr double two_pi = 2 * std::numbers::pi;
  double w = std::fmod(phi, two_pi);
  if (w < 0) w += two_pi;
  if (w >= two_pi) w = 0;
  return w;
}

/// Normalised column vector behind outcome k.
inline ComplexVector psi_k(std::size_t m, std::size_t k) {
  require_outcome_count(m);
  require_outcome_index(m, k);
  const double angle = std::numbers::pi * static_cast<double>(k) / static_cast<double>(m);
  const double s = 1 / std::numbers::sqrt2;
  return ComplexVector{std::polar(s, -angle), std::polar(s, angle)};
}

/// Unnormalised X_k = sqrt(2/M) psi_k, so that Pi_k = X_k X_k^dagger.
inline ComplexVector x_k(std::size_t m, std::size_t k) {
  auto v = psi_k(m, k);
  const double scale = std::sqrt(2.0 / static_cast<double>(m));
  for (auto& z : v) z *= scale;
  return v;
}

inline ComplexMatrix povm_element(std::size_t m, std::size_t k) {
  const auto x = x_k(m, k);
  return ComplexMatrix::outer(x, x);
}

/// Validated 2x2 density matrix.
class QubitState {
 public:
  static constexpr double kTolerance = tolerance::kCompare;

  explicit QubitState(ComplexMatrix density, double tol = kTolerance)
      : density_(std::move(density)) {
    if (density_.rows() != 2 || density_.cols() != 2)
      throw ShapeError("QubitState", density_.rows(), density_.cols(), 2, 2);
    if (!density_.all_finite()) throw DomainError("QubitState: non-finite entries");
    if (hermiticity_residual(density_) > tol)
      throw DomainError("QubitState: density matrix is not Hermitian");
    if (std::abs(density_.trace() - Complex(1)) > tol)
      throw DomainError("QubitState: trace must be 1");
    const auto eig = eig_hermitian_2x2(density_, tol);
    if (eig.values[1] < -tol)
      throw DomainError("QubitState: density matrix is not positive semidefinite");
  }

  /// |v><v| for a (not necessarily normalised) nonzero amplitude pair.
  static QubitState pure(const ComplexVector& amplitudes) {
    if (amplitudes.size() != 2) throw ShapeError("QubitState::pure", amplitudes.size(), 1, 2, 1);
    const double n = amplitudes.norm();
    if (!(n > 0)) throw DomainError("QubitState::pure: zero vector");
    ComplexVector v{amplitudes[0] / n, amplitudes[1] / n};
    return QubitState(ComplexMatrix::outer(v, v));
  }

  /// (|0> + e^{i phi}|1>)/sqrt(2).
  static QubitState from_phase(double phi) {
    return pure(ComplexVector{Complex(1), std::polar(1.0, wrap_phase(phi))});
  }

  static QubitState maximally_mixed() {
    return QubitState(ComplexMatrix{{0.5, 0.0}, {0.0, 0.5}});
  }

  const ComplexMatrix& density() const { return density_; }

 private:
  ComplexMatrix density_;
};

/// Probability per outcome k = 0..M-1.
struct OutcomeDistribution {
  std::size_t M = 0;
  std::vector<double> probabilities;

  double total() const {
    double s = 0;
    for (double p : probabilities) s += p;
    return s;
  }
};

inline double max_abs_diff(const OutcomeDistribution& a, const OutcomeDistribution& b) {
  if (a.probabilities.size() != b.probabilities.size())
    throw ShapeError("max_abs_diff", a.probabilities.size(), 1, b.probabilities.size(), 1);
  double m = 0;
  for (std::size_t i = 0; i < a.probabilities.size(); ++i)
    m = std::max(m, std::abs(a.probabilities[i] - b.probabilities[i]));
  return m;
}

class PhasePovm {
 public:
  explicit PhasePovm(std::size_t m) : m_(m) {
    require_outcome_count(m);
    elements_.reserve(m);
    for (std::size_t k = 0; k < m; ++k) elements_.push_back(povm_element(m, k));
  }

  std::size_t outcomes() const { return m_; }
  const ComplexMatrix& element(std::size_t k) const {
    require_outcome_index(m_, k);
    return elements_[k];
  }
  const std::vector<ComplexMatrix>& elements() const { return elements_; }

  /// Sum_k Pi_k; equals I_2 for a valid POVM.
  ComplexMatrix sum() const {
    ComplexMatrix s(2, 2);
    for (const auto& e : elements_) s += e;
    return s;
  }

 private:
  std::size_t m_;
  std::vector<ComplexMatrix> elements_;
};

/// Tr[Pi_k rho].
inline double outcome_probability(const PhasePovm& povm, std::size_t k, const QubitState& rho) {
  const auto& pi = povm.element(k);
  const auto& d = rho.density();
  Complex t{};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) t += pi(i, j) * d(j, i);
  if (std::abs(t.imag()) > tolerance::kInput)
    throw NumericalError("outcome_probability: trace has imaginary residue");
  return t.real();
}

inline OutcomeDistribution povm_distribution(const PhasePovm& povm, const QubitState& rho) {
  OutcomeDistribution d{povm.outcomes(), {}};
  d.probabilities.reserve(povm.outcomes());
  for (std::size_t k = 0; k < povm.outcomes(); ++k)
    d.probabilities.push_back(outcome_probability(povm, k, rho));
  return d;
}

/// Closed form for the state (|0> + e^{i phi}|1>)/sqrt(2):
/// P(k) = (1 + cos(phi - 2 pi k / M)) / M.
inline OutcomeDistribution analytic_phase_distribution(std::size_t m, double phi) {
  require_outcome_count(m);
  const double w = wrap_phase(phi);
  const double md = static_cast<double>(m);
  OutcomeDistribution d{m, std::vector<double>(m)};
  for (std::size_t k = 0; k < m; ++k)
    d.probabilities[k] =
        (1 + std::cos(w - 2 * std::numbers::pi * static_cast<double>(k) / md)) / md;
  return d;
}

/// Average success probability over the M symmetric states drawn with prior
/// 1/M each; the optimum equals 2/M.
inline double guessing_probability(std::size_t m) {
  const PhasePovm povm(m);
  double s = 0;
  for (std::size_t k = 0; k < m; ++k) {
    const auto state = QubitState::from_phase(2 * std::numbers::pi * static_cast<double>(k) /
                                              static_cast<double>(m));
    s += outcome_probability(povm, k, state);
  }
  return s / static_cast<double>(m);
}

}  // namespace phasepovm
