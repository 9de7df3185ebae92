// Copyright 2026 The wstate Authors
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

#ifndef WSTATE_LINALG_HPP
#define WSTATE_LINALG_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace wstate {

using Complex = std::complex<double>;

/// Tolerance used for every unitarity check in the library.
inline constexpr double kUnitaryTolerance = 1e-10;

/// Tolerance for the normalization of target columns.
inline constexpr double kColumnNormTolerance = 1e-10;

/// Largest matrix order accepted by permanent().
inline constexpr std::size_t kMaxPermanentOrder = 24;

/// Raised when a request exceeds one of the enumeration or permanent caps.
class CapacityExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense row-major complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> row_major);

  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  bool empty() const { return data_.empty(); }

  Complex operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const Complex> row_major() const { return data_; }
  std::vector<Complex> column(std::size_t c) const;

  ComplexMatrix adjoint() const;
  bool all_finite() const;

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

/// Max-norm of (M^dagger M - I). Throws std::invalid_argument if m is not square.
double unitarity_defect(const ComplexMatrix& m);

/// True iff unitarity_defect(m) <= tol.
bool verify_unitary(const ComplexMatrix& m, double tol);

/// A lossless n-port coupler: square, n >= 2, finite and unitary within
/// kUnitaryTolerance. Entry (k, j) is the amplitude for input port j to reach
/// output port k.
class MultiportUnitary {
 public:
  explicit MultiportUnitary(ComplexMatrix m);

  std::size_t n() const { return m_.rows(); }
  Complex operator()(std::size_t out_port, std::size_t in_port) const {
    return m_(out_port, in_port);
  }
  const ComplexMatrix& matrix() const { return m_; }

  friend bool operator==(const MultiportUnitary&, const MultiportUnitary&) = default;

 private:
  ComplexMatrix m_;
};

/// A normalized complex column, e.g. the first column a coupler should have.
class TargetColumn {
 public:
  explicit TargetColumn(std::vector<Complex> amplitudes);

  std::size_t size() const { return amps_.size(); }
  Complex operator[](std::size_t k) const { return amps_[k]; }
  std::span<const Complex> amplitudes() const { return amps_; }

 private:
  std::vector<Complex> amps_;
};

/// Symmetric n-port whose entry (j, k) is exp(2 pi i j k / n) / sqrt(n).
MultiportUnitary dft_multiport(std::size_t n);

/// The real symmetric 4-port (H2 x H2) / 2, built from four balanced beam
/// splitters. Used as the quarter for the four-photon polarization W.
MultiportUnitary hadamard_quarter();

/// Permanent by Gray-code Ryser iteration, O(2^k k). k is capped at
/// kMaxPermanentOrder (CapacityExceeded beyond it).
Complex permanent(const ComplexMatrix& m);

/// Householder completion: a unitary whose first column equals target.
/// Deterministic; returns a diagonal phase matrix (the identity for a real
/// positive leading entry) when target is within 1e-12 of the first basis
/// vector up to phase.
MultiportUnitary complete_unitary_from_column(const TargetColumn& target);

}  // namespace wstate

#endif  // WSTATE_LINALG_HPP
