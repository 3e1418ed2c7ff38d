// Copyright 2026 The bipgame Authors
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

#ifndef BIPGAME_MATRIX_HPP
#define BIPGAME_MATRIX_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <type_traits>
#include <vector>

#include "bipgame/errors.hpp"

namespace bipgame {

// Small dense row-major matrix. Only what the walk-count oracles need.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix id(n, n);
    for (std::size_t i = 0; i < n; ++i) id(i, i) = T(1);
    return id;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  T row_sum(std::size_t r) const {
    T sum(0);
    for (std::size_t c = 0; c < cols_; ++c) sum += (*this)(r, c);
    return sum;
  }

  bool symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = r + 1; c < cols_; ++c)
        if (!((*this)(r, c) == (*this)(c, r))) return false;
    return true;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (aik == T(0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if constexpr (std::is_same_v<T, std::int64_t>) {
          std::int64_t prod = 0;
          if (__builtin_mul_overflow(aik, b(k, j), &prod) ||
              __builtin_add_overflow(out(i, j), prod, &out(i, j)))
            throw CapacityError("walk count exceeds 64-bit range");
        } else {
          out(i, j) += aik * b(k, j);
        }
      }
    }
  return out;
}

template <class To, class From>
Matrix<To> matrix_cast(const Matrix<From>& m) {
  Matrix<To> out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = To(m(r, c));
  return out;
}

/// Largest eigenvalue of a symmetric nonnegative matrix by power iteration.
/// Start vector is all ones, which is never orthogonal to the Perron vector
/// of a nonnegative matrix. Iterates on A + I so that a bipartite spectrum
/// (+lambda and -lambda of equal modulus) still has a unique dominant term.
inline double power_iteration(const Matrix<double>& a, int max_iterations = 10000, double tolerance = 1e-14) {
  const std::size_t n = a.rows();
  if (n == 0) return 0.0;
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n))), y(n);
  double lambda = 0.0;
  for (int it = 0; it < max_iterations; ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      y[i] = 0.0;
      for (std::size_t j = 0; j < n; ++j) y[i] += a(i, j) * x[j];
      y[i] += x[i];
    }
    double norm = 0.0;
    for (double v : y) norm += v * v;
    norm = std::sqrt(norm);
    if (norm == 0.0) return 0.0;
    double next = 0.0;
    for (std::size_t i = 0; i < n; ++i) next += x[i] * y[i];
    next -= 1.0;
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / norm;
    if (std::abs(next - lambda) <= tolerance * std::max(1.0, std::abs(next))) return next;
    lambda = next;
  }
  return lambda;
}

}  // namespace bipgame

#endif  // BIPGAME_MATRIX_HPP
