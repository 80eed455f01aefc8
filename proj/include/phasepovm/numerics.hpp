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

// Small dense complex linear-algebra kernel.
//
// Everything downstream (POVM elements, the extension matrix, Givens
// factors, optical transfer matrices) is stored in these types. Matrices are
// dense and row-major; the sizes handled here stay at or below a few
// thousand rows, so no blocking or sparsity tricks are attempted.
//
// Tensor ordering convention used throughout the library: a vector index
// 2a+s corresponds to ancilla basis state a and system basis state s
// (ancilla-major, system-minor).

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace phasepovm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit the requested operation.
class ShapeError : public Error {
 public:
  ShapeError(const std::string& op, std::size_t lhs_rows, std::size_t lhs_cols,
             std::size_t rhs_rows, std::size_t rhs_cols)
      : Error(op + ": incompatible shapes " + std::to_string(lhs_rows) + "x" +
              std::to_string(lhs_cols) + " and " + std::to_string(rhs_rows) +
              "x" + std::to_string(rhs_cols)),
        lhs_{lhs_rows, lhs_cols},
        rhs_{rhs_rows, rhs_cols} {}

  explicit ShapeError(const std::string& what) : Error(what) {}

  std::array<std::size_t, 2> lhs_shape() const { return lhs_; }
  std::array<std::size_t, 2> rhs_shape() const { return rhs_; }

 private:
  std::array<std::size_t, 2> lhs_{0, 0};
  std::array<std::size_t, 2> rhs_{0, 0};
};

/// An argument lies outside the documented domain (bad M, index, angle...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A numerical procedure could not satisfy its own postcondition.
class NumericalError : public Error {
 public:
  using Error::Error;
};

namespace tolerance {
inline constexpr double kCompare = 1e-10;
inline constexpr double kInput = 1e-12;
}  // namespace tolerance

template <typename Real>
class BasicComplexVector {
 public:
  using real_type = Real;
  using value_type = std::complex<Real>;

  BasicComplexVector() = default;

  explicit BasicComplexVector(std::size_t length) : data_(length) {
    if (length == 0) throw ShapeError("ComplexVector: length must be >= 1");
  }

  BasicComplexVector(std::initializer_list<value_type> values)
      : data_(values) {
    if (data_.empty()) throw ShapeError("ComplexVector: length must be >= 1");
  }

  explicit BasicComplexVector(std::vector<value_type> values)
      : data_(std::move(values)) {
    if (data_.empty()) throw ShapeError("ComplexVector: length must be >= 1");
  }

  static BasicComplexVector basis(std::size_t length, std::size_t index) {
    BasicComplexVector v(length);
    if (index >= length) throw DomainError("ComplexVector::basis: index out of range");
    v[index] = Real(1);
    return v;
  }

  std::size_t size() const { return data_.size(); }

  value_type& operator[](std::size_t i) { return data_[i]; }
  const value_type& operator[](std::size_t i) const { return data_[i]; }

  value_type& at(std::size_t i) {
    if (i >= data_.size()) throw DomainError("ComplexVector::at: index out of range");
    return data_[i];
  }
  const value_type& at(std::size_t i) const {
    if (i >= data_.size()) throw DomainError("ComplexVector::at: index out of range");
    return data_[i];
  }

  std::span<value_type> span() { return data_; }
  std::span<const value_type> span() const { return data_; }
  const std::vector<value_type>& values() const { return data_; }

  auto begin() { return data_.begin(); }
  auto end() { return data_.end(); }
  auto begin() const { return data_.begin(); }
  auto end() const { return data_.end(); }

  Real squared_norm() const {
    Real s = 0;
    for (const auto& z : data_) s += std::norm(z);
    return s;
  }
  Real norm() const { return std::sqrt(squared_norm()); }

  bool all_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](const value_type& z) {
      return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
  }

  friend bool operator==(const BasicComplexVector&, const BasicComplexVector&) = default;

 private:
  std::vector<value_type> data_;
};

template <typename Real>
class BasicComplexMatrix {
 public:
  using real_type = Real;
  using value_type = std::complex<Real>;

  BasicComplexMatrix() = default;

  BasicComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0)
      throw ShapeError("ComplexMatrix: rows and cols must be >= 1");
  }

  /// Row-major nested initializer, e.g. {{1, 0}, {0, 1}}.
  BasicComplexMatrix(std::initializer_list<std::initializer_list<value_type>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    if (rows_ == 0 || cols_ == 0)
      throw ShapeError("ComplexMatrix: rows and cols must be >= 1");
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw ShapeError("ComplexMatrix: ragged initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static BasicComplexMatrix identity(std::size_t n) {
    BasicComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Real(1);
    return m;
  }

  static BasicComplexMatrix diagonal(std::span<const value_type> d) {
    BasicComplexMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  /// Column vector x as an n x 1 matrix.
  static BasicComplexMatrix column(const BasicComplexVector<Real>& x) {
    BasicComplexMatrix m(x.size(), 1);
    for (std::size_t i = 0; i < x.size(); ++i) m(i, 0) = x[i];
    return m;
  }

  /// x y^dagger.
  static BasicComplexMatrix outer(const BasicComplexVector<Real>& x,
                                  const BasicComplexVector<Real>& y) {
    BasicComplexMatrix m(x.size(), y.size());
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < y.size(); ++j) m(i, j) = x[i] * std::conj(y[j]);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  value_type& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const value_type& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  value_type& at(std::size_t r, std::size_t c) {
    check_index(r, c);
    return (*this)(r, c);
  }
  const value_type& at(std::size_t r, std::size_t c) const {
    check_index(r, c);
    return (*this)(r, c);
  }

  std::span<value_type> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const value_type> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  BasicComplexVector<Real> column_vector(std::size_t c) const {
    if (c >= cols_) throw DomainError("ComplexMatrix::column_vector: index out of range");
    BasicComplexVector<Real> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  void set_column(std::size_t c, const BasicComplexVector<Real>& v) {
    if (c >= cols_ || v.size() != rows_)
      throw ShapeError("ComplexMatrix::set_column", rows_, cols_, v.size(), 1);
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
  }

  /// Rows [r0, r0+nr) x cols [c0, c0+nc).
  BasicComplexMatrix block(std::size_t r0, std::size_t c0, std::size_t nr,
                           std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_)
      throw ShapeError("ComplexMatrix::block: block exceeds matrix bounds");
    BasicComplexMatrix b(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
      for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
    return b;
  }

  std::span<const value_type> values() const { return data_; }

  value_type trace() const {
    if (!is_square()) throw ShapeError("trace", rows_, cols_, rows_, cols_);
    value_type t{};
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  bool all_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](const value_type& z) {
      return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
  }

  BasicComplexMatrix& operator+=(const BasicComplexMatrix& o) {
    require_same_shape("operator+", o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  BasicComplexMatrix& operator-=(const BasicComplexMatrix& o) {
    require_same_shape("operator-", o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  BasicComplexMatrix& operator*=(value_type s) {
    for (auto& z : data_) z *= s;
    return *this;
  }

  friend BasicComplexMatrix operator+(BasicComplexMatrix a, const BasicComplexMatrix& b) {
    return a += b;
  }
  friend BasicComplexMatrix operator-(BasicComplexMatrix a, const BasicComplexMatrix& b) {
    return a -= b;
  }
  friend BasicComplexMatrix operator*(value_type s, BasicComplexMatrix a) { return a *= s; }

  friend bool operator==(const BasicComplexMatrix&, const BasicComplexMatrix&) = default;

 private:
  void check_index(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw DomainError("ComplexMatrix::at: index out of range");
  }
  void require_same_shape(const char* op, const BasicComplexMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError(op, rows_, cols_, o.rows_, o.cols_);
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<value_type> data_;
};

using ComplexVector = BasicComplexVector<double>;
using ComplexMatrix = BasicComplexMatrix<double>;
using Complex = std::complex<double>;

template <typename Real>
BasicComplexMatrix<Real> matmul(const BasicComplexMatrix<Real>& a,
                                const BasicComplexMatrix<Real>& b) {
  if (a.cols() != b.rows()) throw ShapeError("matmul", a.rows(), a.cols(), b.rows(), b.cols());
  BasicComplexMatrix<Real> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto out = c.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto aik = a(i, k);
      if (aik == std::complex<Real>{}) continue;
      auto brow = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j) out[j] += aik * brow[j];
    }
  }
  if (!c.all_finite()) throw NumericalError("matmul: non-finite result");
  return c;
}

template <typename Real>
BasicComplexVector<Real> matvec(const BasicComplexMatrix<Real>& a,
                                const BasicComplexVector<Real>& x) {
  if (a.cols() != x.size()) throw ShapeError("matvec", a.rows(), a.cols(), x.size(), 1);
  BasicComplexVector<Real> y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::complex<Real> s{};
    auto r = a.row(i);
    for (std::size_t j = 0; j < x.size(); ++j) s += r[j] * x[j];
    y[i] = s;
  }
  return y;
}

template <typename Real>
BasicComplexMatrix<Real> operator*(const BasicComplexMatrix<Real>& a,
                                   const BasicComplexMatrix<Real>& b) {
  return matmul(a, b);
}

template <typename Real>
BasicComplexMatrix<Real> adjoint(const BasicComplexMatrix<Real>& a) {
  BasicComplexMatrix<Real> t(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) t(c, r) = std::conj(a(r, c));
  return t;
}

/// A^dagger B without materialising A^dagger.
template <typename Real>
BasicComplexMatrix<Real> adjoint_times(const BasicComplexMatrix<Real>& a,
                                       const BasicComplexMatrix<Real>& b) {
  if (a.rows() != b.rows())
    throw ShapeError("adjoint_times", a.cols(), a.rows(), b.rows(), b.cols());
  BasicComplexMatrix<Real> c(a.cols(), b.cols());
  for (std::size_t k = 0; k < a.rows(); ++k) {
    auto arow = a.row(k);
    auto brow = b.row(k);
    for (std::size_t i = 0; i < a.cols(); ++i) {
      const auto aki = std::conj(arow[i]);
      if (aki == std::complex<Real>{}) continue;
      auto out = c.row(i);
      for (std::size_t j = 0; j < b.cols(); ++j) out[j] += aki * brow[j];
    }
  }
  return c;
}

/// x^dagger y.
template <typename Real>
std::complex<Real> inner(const BasicComplexVector<Real>& x, const BasicComplexVector<Real>& y) {
  if (x.size() != y.size()) throw ShapeError("inner", x.size(), 1, y.size(), 1);
  std::complex<Real> s{};
  for (std::size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
  return s;
}

template <typename Real>
BasicComplexMatrix<Real> kron(const BasicComplexMatrix<Real>& a, const BasicComplexMatrix<Real>& b) {
  BasicComplexMatrix<Real> k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
  return k;
}

/// Largest entry magnitude of A - B.
template <typename Real>
Real max_abs_diff(const BasicComplexMatrix<Real>& a, const BasicComplexMatrix<Real>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeError("max_abs_diff", a.rows(), a.cols(), b.rows(), b.cols());
  Real m = 0;
  auto av = a.values();
  auto bv = b.values();
  for (std::size_t i = 0; i < av.size(); ++i) m = std::max(m, std::abs(av[i] - bv[i]));
  return m;
}

template <typename Real>
Real max_abs_diff(const BasicComplexVector<Real>& a, const BasicComplexVector<Real>& b) {
  if (a.size() != b.size()) throw ShapeError("max_abs_diff", a.size(), 1, b.size(), 1);
  Real m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

/// Largest entry magnitude of A - I.
template <typename Real>
Real identity_residual(const BasicComplexMatrix<Real>& a) {
  if (!a.is_square()) throw ShapeError("identity_residual", a.rows(), a.cols(), a.rows(), a.cols());
  Real m = 0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      m = std::max(m, std::abs(a(r, c) - std::complex<Real>(r == c ? 1 : 0)));
  return m;
}

/// max(||A^dagger A - I||_max, ||A A^dagger - I||_max).
template <typename Real>
Real unitarity_residual(const BasicComplexMatrix<Real>& a) {
  if (!a.is_square()) throw ShapeError("is_unitary: matrix must be square");
  const auto ata = adjoint_times(a, a);
  const auto aat = matmul(a, adjoint(a));
  return std::max(identity_residual(ata), identity_residual(aat));
}

template <typename Real>
bool is_unitary(const BasicComplexMatrix<Real>& a, Real tol = tolerance::kCompare) {
  return unitarity_residual(a) <= tol;
}

template <typename Real>
Real hermiticity_residual(const BasicComplexMatrix<Real>& a) {
  if (!a.is_square()) throw ShapeError("hermiticity_residual: matrix must be square");
  Real m = 0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = r; c < a.cols(); ++c)
      m = std::max(m, std::abs(a(r, c) - std::conj(a(c, r))));
  return m;
}

/// Tr_A[P (rho_A (x) I_S)] with rho_A = |e_1><e_1| on an ancilla of dimension
/// M/2 and a two-level system. With the 2a+s ordering this is the top-left
/// 2x2 block of P, but the sum over the ancilla is written out so that other
/// ancilla states can be passed in.
template <typename Real>
BasicComplexMatrix<Real> partial_trace_ancilla(const BasicComplexMatrix<Real>& p,
                                               const BasicComplexMatrix<Real>& rho_ancilla) {
  if (!p.is_square()) throw ShapeError("partial_trace_ancilla: matrix must be square");
  if (p.rows() % 2 != 0)
    throw ShapeError("partial_trace_ancilla: dimension " + std::to_string(p.rows()) +
                     " is odd, cannot factor out a qubit");
  const std::size_t na = p.rows() / 2;
  if (rho_ancilla.rows() != na || rho_ancilla.cols() != na)
    throw ShapeError("partial_trace_ancilla", p.rows(), p.cols(), rho_ancilla.rows(),
                     rho_ancilla.cols());
  // (P (rho_A (x) I))_{(a,s),(b,t)} = sum_c P_{(a,s),(c,t)} rho_A(c,b);
  // trace over a=b.
  BasicComplexMatrix<Real> out(2, 2);
  for (std::size_t s = 0; s < 2; ++s)
    for (std::size_t t = 0; t < 2; ++t) {
      std::complex<Real> acc{};
      for (std::size_t a = 0; a < na; ++a)
        for (std::size_t c = 0; c < na; ++c) {
          const auto r = rho_ancilla(c, a);
          if (r == std::complex<Real>{}) continue;
          acc += p(2 * a + s, 2 * c + t) * r;
        }
      out(s, t) = acc;
    }
  return out;
}

template <typename Real>
BasicComplexMatrix<Real> partial_trace_ancilla(const BasicComplexMatrix<Real>& p) {
  if (!p.is_square()) throw ShapeError("partial_trace_ancilla: matrix must be square");
  if (p.rows() % 2 != 0)
    throw ShapeError("partial_trace_ancilla: dimension " + std::to_string(p.rows()) +
                     " is odd, cannot factor out a qubit");
  // rho_A = |e_1><e_1| selects a = c = 0.
  return p.block(0, 0, 2, 2);
}

template <typename Real>
struct HermitianEigen2 {
  std::array<Real, 2> values;                       // descending
  std::array<BasicComplexVector<Real>, 2> vectors;  // orthonormal
};

/// Closed-form eigendecomposition of a 2x2 Hermitian matrix.
template <typename Real>
HermitianEigen2<Real> eig_hermitian_2x2(const BasicComplexMatrix<Real>& h,
                                        Real tol = Real(tolerance::kInput)) {
  if (h.rows() != 2 || h.cols() != 2) throw ShapeError("eig_hermitian_2x2", h.rows(), h.cols(), 2, 2);
  if (hermiticity_residual(h) > tol)
    throw DomainError("eig_hermitian_2x2: matrix is not Hermitian");
  const Real a = h(0, 0).real();
  const Real d = h(1, 1).real();
  const std::complex<Real> b = h(0, 1);
  const Real mean = (a + d) / 2;
  const Real half = (a - d) / 2;
  const Real r = std::hypot(half, std::abs(b));

  HermitianEigen2<Real> out{{mean + r, mean - r},
                            {BasicComplexVector<Real>(2), BasicComplexVector<Real>(2)}};
  if (r == Real(0)) {
    out.vectors[0] = BasicComplexVector<Real>::basis(2, 0);
    out.vectors[1] = BasicComplexVector<Real>::basis(2, 1);
    return out;
  }
  // Pick the null-space row of (H - l1 I) whose pivot is at least r.
  BasicComplexVector<Real> v(2);
  if (a >= d) {
    v[0] = out.values[0] - d;
    v[1] = std::conj(b);
  } else {
    v[0] = b;
    v[1] = out.values[0] - a;
  }
  const Real n = v.norm();
  v[0] /= n;
  v[1] /= n;
  out.vectors[0] = v;
  out.vectors[1] = BasicComplexVector<Real>{-std::conj(v[1]), std::conj(v[0])};
  return out;
}

}  // namespace phasepovm
