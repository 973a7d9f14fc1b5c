// Copyright 2026 The exo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "exo/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace exo {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
  if (rows == 0 || cols == 0) {
    throw std::invalid_argument("ComplexMatrix: extents must be >= 1");
  }
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0) {
    throw std::invalid_argument("ComplexMatrix: extents must be >= 1");
  }
  if (entries_.size() != rows * cols) {
    throw std::invalid_argument("ComplexMatrix: entry count does not match rows x cols");
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<cplx>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<cplx> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw std::invalid_argument("ComplexMatrix::from_rows: ragged rows");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return ComplexMatrix(r, c, std::move(entries));
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const cplx> diag) {
  ComplexMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix out = *this;
  for (auto& e : out.entries_) e = std::conj(e);
  return out;
}

cplx ComplexMatrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace: matrix is not square");
  cplx t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw std::invalid_argument("ComplexMatrix +=: dimension mismatch");
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw std::invalid_argument("ComplexMatrix -=: dimension mismatch");
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx scalar) {
  for (auto& e : entries_) e *= scalar;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("ComplexMatrix *: dimension mismatch");
  ComplexMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    cplx* out_row = &out.entries_[i * b.cols_];
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      const cplx* b_row = &b.entries_[k * b.cols_];
      for (std::size_t j = 0; j < b.cols_; ++j) out_row[j] += aik * b_row[j];
    }
  }
  return out;
}

std::string ComplexMatrix::to_string(int precision) const {
  std::ostringstream os;
  os << std::setprecision(precision);
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r == 0 ? "[[" : " [");
    for (std::size_t c = 0; c < cols_; ++c) {
      const cplx v = (*this)(r, c);
      os << v.real() << (v.imag() < 0 ? "-" : "+") << std::abs(v.imag()) << "i";
      if (c + 1 < cols_) os << ", ";
    }
    os << (r + 1 == rows_ ? "]]" : "]\n");
  }
  return os.str();
}

StateVector::StateVector(std::vector<cplx> amplitudes) : amplitudes_(std::move(amplitudes)) {
  double norm_sq = 0.0;
  for (const auto& a : amplitudes_) norm_sq += std::norm(a);
  if (amplitudes_.empty() || std::abs(norm_sq - 1.0) > kExactTolerance) {
    throw std::invalid_argument("StateVector: amplitudes are not unit-norm");
  }
}

StateVector StateVector::normalized(std::vector<cplx> amplitudes) {
  double norm_sq = 0.0;
  for (const auto& a : amplitudes) norm_sq += std::norm(a);
  if (norm_sq == 0.0) throw std::invalid_argument("StateVector::normalized: zero vector");
  const double scale = 1.0 / std::sqrt(norm_sq);
  for (auto& a : amplitudes) a *= scale;
  return StateVector(std::move(amplitudes));
}

StateVector StateVector::basis(std::string_view bits) {
  if (bits.empty() || bits.size() > 16) throw std::invalid_argument("StateVector::basis: bad length");
  std::size_t index = 0;
  for (char b : bits) {
    if (b != '0' && b != '1') throw std::invalid_argument("StateVector::basis: expected 0/1");
    index = (index << 1) | static_cast<std::size_t>(b == '1');
  }
  std::vector<cplx> amps(std::size_t{1} << bits.size());
  amps[index] = 1.0;
  return StateVector(std::move(amps));
}

cplx StateVector::inner(const StateVector& other) const {
  if (dim() != other.dim()) throw std::invalid_argument("StateVector::inner: dimension mismatch");
  cplx s = 0.0;
  for (std::size_t i = 0; i < dim(); ++i) s += std::conj(amplitudes_[i]) * other.amplitudes_[i];
  return s;
}

std::vector<cplx> kron(std::span<const cplx> a, std::span<const cplx> b) {
  std::vector<cplx> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x * y);
  return out;
}

StateVector kron(const StateVector& a, const StateVector& b) {
  return StateVector::normalized(kron(a.amplitudes(), b.amplitudes()));
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t rb = b.rows(), cb = b.cols();
  ComplexMatrix out(a.rows() * rb, a.cols() * cb);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cplx aij = a(i, j);
      for (std::size_t k = 0; k < rb; ++k)
        for (std::size_t l = 0; l < cb; ++l) out(i * rb + k, j * cb + l) = aij * b(k, l);
    }
  return out;
}

ComplexMatrix embed_pair(const ComplexMatrix& op4, int q1, int q2, int n) {
  if (op4.rows() != 4 || op4.cols() != 4) throw std::invalid_argument("embed_pair: op must be 4x4");
  if (n < 2 || n > 10) throw std::out_of_range("embed_pair: register size out of range");
  if (q1 == q2) throw std::invalid_argument("embed_pair: q1 == q2");
  if (q1 < 1 || q2 < 1 || q1 > n || q2 > n || q1 > q2) {
    throw std::out_of_range("embed_pair: require 1 <= q1 < q2 <= n");
  }
  const std::size_t dim = std::size_t{1} << n;
  const std::size_t bit1 = std::size_t{1} << (n - q1);
  const std::size_t bit2 = std::size_t{1} << (n - q2);
  ComplexMatrix out(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    const std::size_t in_local = ((col & bit1) ? 2 : 0) | ((col & bit2) ? 1 : 0);
    const std::size_t rest = col & ~(bit1 | bit2);
    for (std::size_t out_local = 0; out_local < 4; ++out_local) {
      const cplx v = op4(out_local, in_local);
      if (v == cplx{}) continue;
      const std::size_t row = rest | ((out_local & 2) ? bit1 : 0) | ((out_local & 1) ? bit2 : 0);
      out(row, col) = v;
    }
  }
  return out;
}

ComplexMatrix matmul_chain(std::span<const ComplexMatrix> ops) {
  if (ops.empty()) throw std::invalid_argument("matmul_chain: empty list");
  ComplexMatrix acc = ops[0];
  if (!acc.is_square()) throw std::invalid_argument("matmul_chain: non-square factor");
  for (std::size_t i = 1; i < ops.size(); ++i) {
    if (ops[i].rows() != acc.cols() || !ops[i].is_square()) {
      throw std::invalid_argument("matmul_chain: dimension mismatch");
    }
    acc = acc * ops[i];
  }
  return acc;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("max_abs_diff: dimension mismatch");
  }
  double d = 0.0;
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) d = std::max(d, std::abs(ea[i] - eb[i]));
  return d;
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  return max_abs_diff(a, b) <= tol;
}

double unitarity_error(const ComplexMatrix& u) {
  if (!u.is_square()) throw std::invalid_argument("unitarity_error: matrix is not square");
  return max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(u.rows()));
}

bool is_unitary(const ComplexMatrix& u, double tol) { return unitarity_error(u) <= tol; }

double frobenius_norm_sq(const ComplexMatrix& m) {
  double s = 0.0;
  for (const auto& e : m.entries()) s += std::norm(e);
  return s;
}

cplx determinant(const ComplexMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant: matrix is not square");
  const std::size_t n = m.rows();
  ComplexMatrix lu = m;
  cplx det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    double best = std::abs(lu(k, k));
    for (std::size_t r = k + 1; r < n; ++r) {
      if (std::abs(lu(r, k)) > best) {
        best = std::abs(lu(r, k));
        pivot = r;
      }
    }
    if (best == 0.0) return 0.0;
    if (pivot != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(lu(k, c), lu(pivot, c));
      det = -det;
    }
    det *= lu(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      const cplx factor = lu(r, k) / lu(k, k);
      for (std::size_t c = k + 1; c < n; ++c) lu(r, c) -= factor * lu(k, c);
    }
  }
  return det;
}

namespace pauli {
ComplexMatrix identity() { return ComplexMatrix::identity(2); }
ComplexMatrix x() { return ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}); }
ComplexMatrix y() {
  return ComplexMatrix::from_rows({{0.0, cplx(0.0, -1.0)}, {cplx(0.0, 1.0), 0.0}});
}
ComplexMatrix z() { return ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}}); }
}  // namespace pauli

ComplexMatrix swap_gate() {
  return ComplexMatrix::from_rows(
      {{1.0, 0.0, 0.0, 0.0}, {0.0, 0.0, 1.0, 0.0}, {0.0, 1.0, 0.0, 0.0}, {0.0, 0.0, 0.0, 1.0}});
}

ComplexMatrix random_unitary(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  // column-major scratch
  std::vector<std::vector<cplx>> cols(dim, std::vector<cplx>(dim));
  for (auto& col : cols)
    for (auto& e : col) e = cplx(gauss(rng), gauss(rng));

  for (std::size_t j = 0; j < dim; ++j) {
    auto& v = cols[j];
    for (std::size_t k = 0; k < j; ++k) {
      const auto& q = cols[k];
      cplx proj = 0.0;
      for (std::size_t i = 0; i < dim; ++i) proj += std::conj(q[i]) * v[i];
      for (std::size_t i = 0; i < dim; ++i) v[i] -= proj * q[i];
    }
    double norm_sq = 0.0;
    for (const auto& e : v) norm_sq += std::norm(e);
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (auto& e : v) e *= inv;
  }

  ComplexMatrix out(dim, dim);
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t i = 0; i < dim; ++i) out(i, j) = cols[j][i];
  return out;
}

}  // namespace exo
