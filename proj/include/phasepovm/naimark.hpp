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

// Naimark extension of the phase POVM.
//
// Every POVM element is rank one, so the extension is a set of M rank-one
// projectors P_k = Z_k Z_k^dagger on C^M = H_A (x) H_S with dim H_A = M/2.
// With the ancilla prepared in |e_1>, the first two entries of every Z_k are
// X_k. The columns are packed into an M x M unitary Z in the interleaved order
//
//   Z = [Z_0  Z_{M/2}  Z_1  Z_{M/2+1}  ...  Z_{M/2-1}  Z_{M-1}],
//
// i.e. matrix column 2j holds outcome j and column 2j+1 holds outcome j+M/2.
//
// Two independent constructions are provided: the closed form for every
// column, and the column-by-column recursion that solves one orthogonality
// constraint per new entry and closes with a norm-completing entry.

#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "phasepovm/numerics.hpp"
#include "phasepovm/povm.hpp"
#include "phasepovm/random.hpp"

namespace phasepovm {

/// Outcome stored in matrix column j (interleaved order).
inline std::size_t outcome_of_column(std::size_t m, std::size_t column) {
  return column % 2 == 0 ? column / 2 : column / 2 + m / 2;
}

/// Matrix column holding outcome k.
inline std::size_t column_of_outcome(std::size_t m, std::size_t outcome) {
  return outcome < m / 2 ? 2 * outcome : 2 * (outcome - m / 2) + 1;
}

/// Closed-form column Z_k, truncated to length M.
inline ComplexVector closed_form_column(std::size_t m, std::size_t k) {
  require_outcome_count(m);
  require_outcome_index(m, k);
  const double md = static_cast<double>(m);
  const bool upper = k >= m / 2;
  const std::size_t base = upper ? k - m / 2 : k;

  ComplexVector z(m);
  const auto x = x_k(m, k);
  z[0] = x[0];
  z[1] = x[1];
  for (std::size_t j = 0; j < base; ++j) {
    const double a = md - 2.0 * static_cast<double>(j);
    const double scale = 2.0 / std::sqrt(a * (a - 2));
    const double angle = static_cast<double>(base - j) * std::numbers::pi / md;
    if (upper) {
      z[2 + 2 * j] = scale * std::sin(angle);
      z[3 + 2 * j] = -scale * std::cos(angle);
    } else {
      z[2 + 2 * j] = -scale * std::cos(angle);
      z[3 + 2 * j] = -scale * std::sin(angle);
    }
  }
  // Norm-completing entry; for base = M/2-1 it is zero and falls off the end.
  const double b = static_cast<double>(base);
  const double tail = std::sqrt((md - 2 * b - 2) / (md - 2 * b));
  const std::size_t pos = 2 * base + (upper ? 3 : 2);
  if (pos < m) z[pos] = tail;
  return z;
}

class ExtensionMatrix {
 public:
  ExtensionMatrix(std::size_t m, ComplexMatrix z) : m_(m), z_(std::move(z)) {
    require_outcome_count(m);
    if (z_.rows() != m || z_.cols() != m) throw ShapeError("ExtensionMatrix", z_.rows(), z_.cols(), m, m);
  }

  std::size_t outcomes() const { return m_; }
  const ComplexMatrix& matrix() const { return z_; }

  /// Z_k, the projector vector for outcome k.
  ComplexVector column_for_outcome(std::size_t k) const {
    require_outcome_index(m_, k);
    return z_.column_vector(column_of_outcome(m_, k));
  }

  /// sigma: outcome of each matrix column.
  std::vector<std::size_t> column_order() const {
    std::vector<std::size_t> order(m_);
    for (std::size_t j = 0; j < m_; ++j) order[j] = outcome_of_column(m_, j);
    return order;
  }

 private:
  std::size_t m_;
  ComplexMatrix z_;
};

inline ExtensionMatrix build_extension_closed(std::size_t m) {
  require_outcome_count(m);
  ComplexMatrix z(m, m);
  for (std::size_t j = 0; j < m; ++j) z.set_column(j, closed_form_column(m, outcome_of_column(m, j)));
  return ExtensionMatrix(m, std::move(z));
}

/// Entries with magnitude at or below this are treated as zero by the
/// recursion (no pivot, already orthogonal, already normalised).
inline constexpr double kRecursionThreshold = 1e-12;

/// Column-by-column construction in the interleaved order.
///
/// A new column starts as X_k. Against each previously built column c (in
/// build order) the orthogonality constraint c^dagger z = 0 is linear in the
/// next unset entry p: conj(c_p) z_p = -sum_{i<p} conj(c_i) z_i. When c has no
/// support at p the constraint cannot introduce an entry and must already
/// hold. The column is closed by the positive real entry that brings its norm
/// to one, unless it is already normalised.
inline ExtensionMatrix build_extension_recursive(std::size_t m) {
  require_outcome_count(m);
  std::vector<std::vector<Complex>> built;
  built.reserve(m);

  for (std::size_t j = 0; j < m; ++j) {
    const std::size_t k = outcome_of_column(m, j);
    const auto x = x_k(m, k);
    std::vector<Complex> z{x[0], x[1]};

    for (std::size_t prev = 0; prev < built.size(); ++prev) {
      const auto& c = built[prev];
      const std::size_t p = z.size();
      Complex residual{};
      for (std::size_t i = 0; i < std::min(p, c.size()); ++i) residual += std::conj(c[i]) * z[i];
      const Complex pivot = p < c.size() ? std::conj(c[p]) : Complex{};
      if (std::abs(pivot) > kRecursionThreshold) {
        z.push_back(-residual / pivot);
      } else if (std::abs(residual) > kRecursionThreshold) {
        throw NumericalError("build_extension_recursive: orthogonality constraint of column " +
                             std::to_string(j) + " (outcome " + std::to_string(k) +
                             ") against column " + std::to_string(prev) + " is singular");
      }
    }

    double sq = 0;
    for (const auto& v : z) sq += std::norm(v);
    const double deficit = 1 - sq;
    if (std::abs(deficit) > kRecursionThreshold) {
      if (deficit < 0 || z.size() >= m)
        throw NumericalError("build_extension_recursive: column " + std::to_string(j) +
                             " cannot be normalised (norm deficit " + std::to_string(deficit) + ")");
      z.push_back(std::sqrt(deficit));
    }
    built.push_back(std::move(z));
  }

  ComplexMatrix out(m, m);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < built[j].size(); ++i) out(i, j) = built[j][i];
  return ExtensionMatrix(m, std::move(out));
}

/// P_k = Z_k Z_k^dagger.
inline ComplexMatrix projector(const ExtensionMatrix& ext, std::size_t k) {
  const auto z = ext.column_for_outcome(k);
  return ComplexMatrix::outer(z, z);
}

/// Tr[P_k (rho_A (x) rho)] with rho_A = |e_1><e_1|.
inline double extended_outcome_probability(const ExtensionMatrix& ext, std::size_t k,
                                           const QubitState& rho) {
  const auto& z = ext.matrix();
  const std::size_t c = column_of_outcome(ext.outcomes(), k);
  const auto& d = rho.density();
  Complex t{};
  for (std::size_t s = 0; s < 2; ++s)
    for (std::size_t u = 0; u < 2; ++u) t += std::conj(z(s, c)) * d(s, u) * z(u, c);
  return t.real();
}

struct NaimarkReport {
  double max_orthogonality_residual = 0;  // max_{k != l} |Z_k^dagger Z_l|
  double max_norm_residual = 0;           // max_k |Z_k^dagger Z_k - 1|
  double max_povm_block_residual = 0;     // max_k ||Tr_A[P_k (rho_A (x) I)] - Pi_k||
  double unitarity_residual = 0;          // max(||Z^dagger Z - I||, ||Z Z^dagger - I||)
  double max_statistics_residual = 0;     // random-state |Tr[Pi_k rho] - Tr[P_k (rho_A (x) rho)]|
  double tolerance = 0;
  std::uint64_t seed = 0;
  std::size_t random_states = 0;

  double worst() const {
    return std::max({max_orthogonality_residual, max_norm_residual, max_povm_block_residual,
                     unitarity_residual, max_statistics_residual});
  }
  bool passed() const { return worst() <= tolerance; }
};

inline constexpr std::uint64_t kDefaultSeed = 20190821;

/// Computes every projector constraint residual for `ext`.
///
/// The statistics check draws `random_states` qubit states (alternating pure
/// and mixed) from `seed`. All residuals are reported; `tol` only decides the
/// verdict returned by NaimarkReport::passed.
inline NaimarkReport verify_naimark(const ExtensionMatrix& ext, double tol = tolerance::kCompare,
                                    std::uint64_t seed = kDefaultSeed,
                                    std::size_t random_states = 20) {
  const std::size_t m = ext.outcomes();
  const auto& z = ext.matrix();
  NaimarkReport report;
  report.tolerance = tol;
  report.seed = seed;
  report.random_states = random_states;

  const auto gram = adjoint_times(z, z);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const double v = std::abs(gram(a, b) - Complex(a == b ? 1 : 0));
      if (a == b)
        report.max_norm_residual = std::max(report.max_norm_residual, v);
      else
        report.max_orthogonality_residual = std::max(report.max_orthogonality_residual, v);
    }
  const auto zzh = matmul(z, adjoint(z));
  report.unitarity_residual = std::max(identity_residual(gram), identity_residual(zzh));

  const PhasePovm povm(m);
  for (std::size_t k = 0; k < m; ++k) {
    // Only the top-left block of P_k survives the ancilla trace.
    const auto col = column_of_outcome(m, k);
    ComplexMatrix block(2, 2);
    for (std::size_t s = 0; s < 2; ++s)
      for (std::size_t u = 0; u < 2; ++u) block(s, u) = z(s, col) * std::conj(z(u, col));
    report.max_povm_block_residual =
        std::max(report.max_povm_block_residual, max_abs_diff(block, povm.element(k)));
  }

  Rng rng(seed);
  for (std::size_t n = 0; n < random_states; ++n) {
    const auto rho = n % 2 == 0 ? random_pure_state(rng) : random_mixed_state(rng);
    for (std::size_t k = 0; k < m; ++k) {
      const double lhs = outcome_probability(povm, k, rho);
      const double rhs = extended_outcome_probability(ext, k, rho);
      report.max_statistics_residual = std::max(report.max_statistics_residual, std::abs(lhs - rhs));
    }
  }
  return report;
}

}  // namespace phasepovm
