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

#ifndef EXO_QCORE_HPP
#define EXO_QCORE_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace exo {

using cplx = std::complex<double>;

/// Tolerance used for exact algebraic identities (max-abs element distance).
inline constexpr double kExactTolerance = 1e-12;

/// Dense complex matrix, row-major. Small by construction: registers in this
/// library never exceed 2^8 = 256 dimensions.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  /// Zero-filled rows x cols matrix. Both extents must be >= 1.
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<cplx>> rows);
  static ComplexMatrix diagonal(std::span<const cplx> diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return entries_.empty(); }

  cplx& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<cplx> entries() noexcept { return entries_; }
  std::span<const cplx> entries() const noexcept { return entries_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;
  cplx trace() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(cplx scalar);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
  friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

  std::string to_string(int precision = 6) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> entries_;
};

/// Unit-norm state vector.
class StateVector {
 public:
  StateVector() = default;
  /// Throws std::invalid_argument unless | <psi|psi> - 1 | <= 1e-12.
  explicit StateVector(std::vector<cplx> amplitudes);
  /// Rescales to unit norm; throws on a zero vector.
  static StateVector normalized(std::vector<cplx> amplitudes);
  /// Computational basis state from a bit string, qubit 1 leftmost ("0101").
  static StateVector basis(std::string_view bits);

  std::size_t dim() const noexcept { return amplitudes_.size(); }
  std::span<const cplx> amplitudes() const noexcept { return amplitudes_; }
  const cplx& operator[](std::size_t i) const { return amplitudes_[i]; }

  cplx inner(const StateVector& other) const;  // <this|other>

 private:
  std::vector<cplx> amplitudes_;
};

/// Unnormalized tensor product of raw amplitude vectors (first argument is
/// the more significant factor).
std::vector<cplx> kron(std::span<const cplx> a, std::span<const cplx> b);
StateVector kron(const StateVector& a, const StateVector& b);

/// Kronecker product; qubit 1 is the leftmost (most significant) factor.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Embeds a 4x4 two-qubit operator on qubits (q1, q2) of an n-qubit register
/// (1-based, q1 < q2, not necessarily adjacent). The first tensor factor of
/// op4 acts on q1.
ComplexMatrix embed_pair(const ComplexMatrix& op4, int q1, int q2, int n);

/// Ordered product ops[0] * ops[1] * ... * ops[k-1].
ComplexMatrix matmul_chain(std::span<const ComplexMatrix> ops);

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol = kExactTolerance);

/// max |(U^dagger U - I)_ij|; requires a square matrix.
double unitarity_error(const ComplexMatrix& u);
bool is_unitary(const ComplexMatrix& u, double tol = kExactTolerance);

/// Sum of |m_ij|^2.
double frobenius_norm_sq(const ComplexMatrix& m);

/// Determinant via LU decomposition with partial pivoting.
cplx determinant(const ComplexMatrix& m);

namespace pauli {
ComplexMatrix identity();
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
}  // namespace pauli

/// Two-qubit SWAP permutation.
ComplexMatrix swap_gate();

/// Haar-distributed random unitary: Gram-Schmidt orthonormalization of a
/// complex Ginibre matrix (R has a positive real diagonal, so Q is Haar).
ComplexMatrix random_unitary(std::size_t dim, std::mt19937_64& rng);

}  // namespace exo

#endif  // EXO_QCORE_HPP
