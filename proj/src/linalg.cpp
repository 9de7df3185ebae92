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

#include "wstate/linalg.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>

namespace wstate {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Complex{0.0, 0.0}) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> row_major)
    : rows_(rows), cols_(cols), data_(std::move(row_major)) {
  if (data_.size() != rows_ * cols_) {
    throw std::invalid_argument("matrix data has " + std::to_string(data_.size()) +
                                " entries, expected " + std::to_string(rows_ * cols_));
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

std::vector<Complex> ComplexMatrix::column(std::size_t c) const {
  std::vector<Complex> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

bool ComplexMatrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  ComplexMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Complex aik = a(i, k);
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

double unitarity_defect(const ComplexMatrix& m) {
  if (!m.square()) throw std::invalid_argument("unitarity check needs a square matrix");
  if (!m.all_finite()) return std::numeric_limits<double>::infinity();
  const std::size_t n = m.rows();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Complex g = 0.0;
      for (std::size_t k = 0; k < n; ++k) g += std::conj(m(k, i)) * m(k, j);
      if (i == j) g -= 1.0;
      worst = std::max(worst, std::abs(g));
    }
  }
  return worst;
}

bool verify_unitary(const ComplexMatrix& m, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  return unitarity_defect(m) <= tol;
}

MultiportUnitary::MultiportUnitary(ComplexMatrix m) : m_(std::move(m)) {
  if (!m_.square()) throw std::invalid_argument("coupler matrix must be square");
  if (m_.rows() < 2) throw std::invalid_argument("coupler needs at least 2 ports");
  if (!m_.all_finite()) throw std::invalid_argument("coupler matrix has non-finite entries");
  if (!verify_unitary(m_, kUnitaryTolerance)) {
    throw std::invalid_argument("matrix not unitary within 1e-10");
  }
}

TargetColumn::TargetColumn(std::vector<Complex> amplitudes) : amps_(std::move(amplitudes)) {
  if (amps_.empty()) throw std::invalid_argument("target column is empty");
  double norm2 = 0.0;
  for (const Complex& c : amps_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw std::invalid_argument("target column has non-finite entries");
    }
    norm2 += std::norm(c);
  }
  if (std::abs(norm2 - 1.0) > kColumnNormTolerance) {
    throw std::invalid_argument("target column is not normalized (sum |c|^2 = " +
                                std::to_string(norm2) + ")");
  }
}

MultiportUnitary dft_multiport(std::size_t n) {
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  ComplexMatrix m(n, n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      // Reduce j*k mod n first so equal phases get bit-identical entries.
      const std::size_t r = (j * k) % n;
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(n);
      m(j, k) = r == 0 ? Complex{scale, 0.0} : std::polar(scale, angle);
    }
  }
  return MultiportUnitary(std::move(m));
}

MultiportUnitary hadamard_quarter() {
  static constexpr int kSigns[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}};
  ComplexMatrix m(4, 4);
  for (std::size_t j = 0; j < 4; ++j) {
    for (std::size_t k = 0; k < 4; ++k) m(j, k) = 0.5 * kSigns[j][k];
  }
  return MultiportUnitary(std::move(m));
}

Complex permanent(const ComplexMatrix& m) {
  if (m.empty() || !m.square()) {
    throw std::invalid_argument("permanent needs a non-empty square matrix");
  }
  const std::size_t k = m.rows();
  if (k > kMaxPermanentOrder) {
    throw CapacityExceeded("permanent order " + std::to_string(k) + " exceeds cap " +
                           std::to_string(kMaxPermanentOrder));
  }
  if (k == 1) return m(0, 0);

  // Ryser: per(A) = (-1)^k sum_S (-1)^|S| prod_i sum_{j in S} a_ij, with the
  // column subsets S visited in Gray-code order so each step touches one column.
  std::vector<Complex> row_sums(k, Complex{0.0, 0.0});
  Complex total = 0.0;
  bool odd_subset = false;
  const std::uint64_t subsets = std::uint64_t{1} << k;
  std::uint64_t gray = 0;
  for (std::uint64_t i = 1; i < subsets; ++i) {
    const auto col = static_cast<std::size_t>(std::countr_zero(i));
    const std::uint64_t bit = std::uint64_t{1} << col;
    const bool adding = (gray & bit) == 0;
    gray ^= bit;
    odd_subset = !odd_subset;
    for (std::size_t r = 0; r < k; ++r) {
      if (adding) {
        row_sums[r] += m(r, col);
      } else {
        row_sums[r] -= m(r, col);
      }
    }
    Complex prod = row_sums[0];
    for (std::size_t r = 1; r < k; ++r) prod *= row_sums[r];
    if (odd_subset) {
      total -= prod;
    } else {
      total += prod;
    }
  }
  return (k % 2 == 0) ? total : -total;
}

MultiportUnitary complete_unitary_from_column(const TargetColumn& target) {
  const std::size_t n = target.size();
  if (n < 2) throw std::invalid_argument("target column needs at least 2 entries");

  // A Householder reflector H maps x = e^{i phi} e0 onto t when |x| = |t| and
  // <x, t> is real, which phi = arg(t0) guarantees. Then U = H diag(e^{i phi}, 1, ...).
  const Complex t0 = target[0];
  const double phi = std::abs(t0) > 0.0 ? std::arg(t0) : 0.0;
  const Complex phase = std::polar(1.0, phi);

  std::vector<Complex> w(n);
  w[0] = phase * (1.0 - std::abs(t0));
  for (std::size_t k = 1; k < n; ++k) w[k] = -target[k];
  double w_norm2 = 0.0;
  for (const Complex& c : w) w_norm2 += std::norm(c);

  ComplexMatrix u = ComplexMatrix::identity(n);
  if (w_norm2 < 1e-24) {
    u(0, 0) = phi == 0.0 ? Complex{1.0, 0.0} : phase;
    return MultiportUnitary(std::move(u));
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) u(r, c) -= 2.0 * w[r] * std::conj(w[c]) / w_norm2;
  }
  for (std::size_t r = 0; r < n; ++r) u(r, 0) *= phase;
  return MultiportUnitary(std::move(u));
}

}  // namespace wstate
