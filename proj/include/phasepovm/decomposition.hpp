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

// Factorisation of Z^dagger into real Givens rotations and phase shifts.
//
//   W(u, v, w): identity except rows/cols u, v = [[cos w, sin w], [-sin w, cos w]]
//   S(u, f):    identity except entry (u, u) = e^{-i f}
//
// Mode indices are 1-based. A Netlist stores elements in application order:
// elements[0] acts first on the input vector, so its matrix is the rightmost
// factor of the product.

#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "phasepovm/naimark.hpp"
#include "phasepovm/numerics.hpp"
#include "phasepovm/povm.hpp"

namespace phasepovm {

struct GivensRotation {
  std::size_t u = 1;
  std::size_t v = 2;
  double omega = 0;
  friend bool operator==(const GivensRotation&, const GivensRotation&) = default;
};

struct PhaseShift {
  std::size_t u = 1;
  double phi = 0;
  friend bool operator==(const PhaseShift&, const PhaseShift&) = default;
};

using NetlistElement = std::variant<GivensRotation, PhaseShift>;

struct Netlist {
  std::size_t M = 0;
  std::vector<NetlistElement> elements;
};

/// Maps an angle into (-pi, pi].
inline double canonical_angle(double a) {
  constexpr double two_pi = 2 * std::numbers::pi;
  double r = std::remainder(a, two_pi);  // [-pi, pi]
  if (r <= -std::numbers::pi) r += two_pi;
  return r;
}

/// Difference of two angles modulo 2 pi, in [0, pi].
inline double angle_distance(double a, double b) { return std::abs(canonical_angle(a - b)); }

inline void validate(std::size_t m, const GivensRotation& g) {
  if (g.u < 1 || g.v > m || g.u >= g.v)
    throw DomainError("GivensRotation: need 1 <= u < v <= " + std::to_string(m) + ", got u=" +
                      std::to_string(g.u) + " v=" + std::to_string(g.v));
  if (!std::isfinite(g.omega)) throw DomainError("GivensRotation: non-finite angle");
}

inline void validate(std::size_t m, const PhaseShift& s) {
  if (s.u < 1 || s.u > m)
    throw DomainError("PhaseShift: need 1 <= u <= " + std::to_string(m) + ", got u=" +
                      std::to_string(s.u));
  if (!std::isfinite(s.phi)) throw DomainError("PhaseShift: non-finite angle");
}

inline void validate(const Netlist& n) {
  if (n.M == 0) throw DomainError("Netlist: M must be >= 1");
  for (const auto& e : n.elements) std::visit([&](const auto& x) { validate(n.M, x); }, e);
}

inline ComplexMatrix givens_matrix(std::size_t m, const GivensRotation& g) {
  validate(m, g);
  auto w = ComplexMatrix::identity(m);
  const double c = std::cos(g.omega);
  const double s = std::sin(g.omega);
  w(g.u - 1, g.u - 1) = c;
  w(g.u - 1, g.v - 1) = s;
  w(g.v - 1, g.u - 1) = -s;
  w(g.v - 1, g.v - 1) = c;
  return w;
}

inline ComplexMatrix phase_matrix(std::size_t m, const PhaseShift& s) {
  validate(m, s);
  auto p = ComplexMatrix::identity(m);
  p(s.u - 1, s.u - 1) = std::polar(1.0, -s.phi);
  return p;
}

/// Left-multiplies `a` by the element in place (touches two rows or one).
inline void apply_rows(ComplexMatrix& a, const GivensRotation& g) {
  const double c = std::cos(g.omega);
  const double s = std::sin(g.omega);
  auto ru = a.row(g.u - 1);
  auto rv = a.row(g.v - 1);
  for (std::size_t j = 0; j < a.cols(); ++j) {
    const Complex x = ru[j];
    const Complex y = rv[j];
    ru[j] = c * x + s * y;
    rv[j] = -s * x + c * y;
  }
}

inline void apply_rows(ComplexMatrix& a, const PhaseShift& p) {
  const Complex f = std::polar(1.0, -p.phi);
  for (auto& z : a.row(p.u - 1)) z *= f;
}

/// Product of the element matrices; the last element is the leftmost factor.
inline ComplexMatrix evaluate_netlist(const Netlist& n) {
  validate(n);
  auto acc = ComplexMatrix::identity(n.M);
  for (const auto& e : n.elements) std::visit([&](const auto& x) { apply_rows(acc, x); }, e);
  return acc;
}

/// Angle of the first two rotations in triplet k: arctan sqrt((M-2-2k)/2).
inline double triplet_angle(std::size_t m, std::size_t k) {
  const double md = static_cast<double>(m);
  return std::atan(std::sqrt((md - 2 - 2 * static_cast<double>(k)) / 2));
}

/// Angle of the third rotation of every triplet: pi + pi/M.
inline double triplet_closing_angle(std::size_t m) {
  return std::numbers::pi + std::numbers::pi / static_cast<double>(m);
}

/// Closed-form factorisation of Z^dagger:
///   W(1,2,pi/4), S(2,pi/2), then for k = 0..M/2-2 the triplet
///   W(2k+1,2k+3,t_k), W(2k+2,2k+4,t_k), W(2k+3,2k+4,pi+pi/M).
inline Netlist decompose_closed(std::size_t m) {
  require_outcome_count(m);
  Netlist n{m, {}};
  n.elements.reserve(2 + 3 * (m / 2 - 1));
  n.elements.emplace_back(GivensRotation{1, 2, std::numbers::pi / 4});
  n.elements.emplace_back(PhaseShift{2, std::numbers::pi / 2});
  for (std::size_t k = 0; k + 2 <= m / 2; ++k) {
    const double t = triplet_angle(m, k);
    n.elements.emplace_back(GivensRotation{2 * k + 1, 2 * k + 3, t});
    n.elements.emplace_back(GivensRotation{2 * k + 2, 2 * k + 4, t});
    n.elements.emplace_back(GivensRotation{2 * k + 3, 2 * k + 4, triplet_closing_angle(m)});
  }
  return n;
}

/// Entries at or below this magnitude are treated as already eliminated.
inline constexpr double kPivotThreshold = 1e-12;

/// Factorises U^dagger for a unitary U by left-multiplying U with W and S
/// until the identity remains.
///
/// W(1,2,pi/4) and S(2,pi/2) are applied first; for the phase-POVM extension
/// this turns the two complex top rows into real ones. Elimination then runs
/// column by column, zeroing each sub-diagonal entry (r, c) against the
/// diagonal row c with W(c, r, atan2(a_rc, a_cc)). Phase shifts are emitted
/// only where an entry is genuinely complex, and the leftover diagonal is
/// cleared at the end; for real-structured inputs neither happens.
///
/// An input that is already the identity yields an empty netlist.
inline Netlist decompose_by_elimination(const ComplexMatrix& u, double tol = 1e-9) {
  if (!u.is_square()) throw ShapeError("decompose_by_elimination: matrix must be square");
  const std::size_t m = u.rows();
  if (m < 2) throw DomainError("decompose_by_elimination: need at least two modes");
  if (!is_unitary(u, tolerance::kCompare))
    throw DomainError("decompose_by_elimination: input is not unitary within 1e-10");

  Netlist n{m, {}};
  if (identity_residual(u) <= kPivotThreshold) return n;

  ComplexMatrix a = u;
  auto emit = [&](const NetlistElement& e) {
    std::visit([&](const auto& x) { apply_rows(a, x); }, e);
    n.elements.push_back(e);
  };
  // Rotate row r so that entry (r, c) becomes real and non-negative.
  auto realify = [&](std::size_t r, std::size_t c) {
    const Complex z = a(r, c);
    if (std::abs(z.imag()) > kPivotThreshold) emit(PhaseShift{r + 1, std::arg(z)});
  };

  emit(GivensRotation{1, 2, std::numbers::pi / 4});
  emit(PhaseShift{2, std::numbers::pi / 2});

  for (std::size_t c = 0; c + 1 < m; ++c) {
    for (std::size_t r = c + 1; r < m; ++r) {
      if (std::abs(a(r, c)) <= kPivotThreshold) continue;
      realify(c, c);
      realify(r, c);
      const double omega = std::atan2(a(r, c).real(), a(c, c).real());
      emit(GivensRotation{c + 1, r + 1, omega});
      a(r, c) = 0;
    }
  }
  for (std::size_t d = 0; d < m; ++d) {
    const double phase = std::arg(a(d, d));
    if (std::abs(phase) > kPivotThreshold) emit(PhaseShift{d + 1, phase});
  }

  const double residual = identity_residual(a);
  if (residual > tol)
    throw NumericalError("decompose_by_elimination: residual " + std::to_string(residual) +
                         " above tolerance after elimination");
  return n;
}

inline Netlist decompose_by_elimination(const ExtensionMatrix& ext, double tol = 1e-9) {
  return decompose_by_elimination(ext.matrix(), tol);
}

/// Element-by-element comparison; angles are compared modulo 2 pi.
inline bool netlists_equal(const Netlist& a, const Netlist& b, double angle_tol = 1e-10) {
  if (a.M != b.M || a.elements.size() != b.elements.size()) return false;
  for (std::size_t i = 0; i < a.elements.size(); ++i) {
    const auto& x = a.elements[i];
    const auto& y = b.elements[i];
    if (x.index() != y.index()) return false;
    if (const auto* g = std::get_if<GivensRotation>(&x)) {
      const auto& h = std::get<GivensRotation>(y);
      if (g->u != h.u || g->v != h.v || angle_distance(g->omega, h.omega) > angle_tol) return false;
    } else {
      const auto& p = std::get<PhaseShift>(x);
      const auto& q = std::get<PhaseShift>(y);
      if (p.u != q.u || angle_distance(p.phi, q.phi) > angle_tol) return false;
    }
  }
  return true;
}

/// ||evaluate_netlist(n) * Z - I||_max.
inline double round_trip_residual(const Netlist& n, const ComplexMatrix& z) {
  return identity_residual(matmul(evaluate_netlist(n), z));
}

}  // namespace phasepovm
