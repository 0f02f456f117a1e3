#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "surfdyn/algebra/scalar.hpp"
#include "surfdyn/error.hpp"

namespace surfdyn {

/// Small dense row-major matrix over an exact or floating scalar.
template <Scalar F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, F{}) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = scalar_from_int<F>(1);
    return m;
  }

  static Matrix diagonal(const std::vector<F>& entries) {
    const int n = static_cast<int>(entries.size());
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = entries[static_cast<std::size_t>(i)];
    return m;
  }

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  F& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const F& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  bool is_diagonal(double tol = kDefaultTolerance) const {
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c)
        if (r != c && !scalar_is_zero((*this)(r, c), tol)) return false;
    return true;
  }

  std::vector<F> diagonal_entries() const {
    std::vector<F> d;
    for (int i = 0; i < std::min(rows_, cols_); ++i) d.push_back((*this)(i, i));
    return d;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    require(a.cols_ == b.rows_, ErrorCode::DimensionMismatch, "matrix product shape");
    Matrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        if (scalar_is_zero(a(i, k), 0.0)) continue;
        for (int j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
      }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Solves A X = B by Gauss-Jordan elimination; nullopt when A is singular
  /// (exactly, or below `tol` for floating scalars).
  static std::optional<Matrix> solve(Matrix a, Matrix b, double tol = kDefaultTolerance) {
    require(a.rows_ == a.cols_ && b.rows_ == a.rows_, ErrorCode::DimensionMismatch, "solve shape");
    const int n = a.rows_;
    for (int col = 0; col < n; ++col) {
      int pivot = -1;
      if constexpr (ScalarTraits<F>::exact) {
        for (int r = col; r < n; ++r)
          if (!scalar_is_zero(a(r, col))) {
            pivot = r;
            break;
          }
      } else {
        double best = tol;
        for (int r = col; r < n; ++r) {
          const double v = ScalarTraits<F>::abs(a(r, col));
          if (v > best) {
            best = v;
            pivot = r;
          }
        }
      }
      if (pivot < 0) return std::nullopt;
      if (pivot != col) {
        a.swap_rows(pivot, col);
        b.swap_rows(pivot, col);
      }
      const F inv = scalar_from_int<F>(1) / a(col, col);
      for (int c = 0; c < n; ++c) a(col, c) *= inv;
      for (int c = 0; c < b.cols_; ++c) b(col, c) *= inv;
      for (int r = 0; r < n; ++r) {
        if (r == col || scalar_is_zero(a(r, col), 0.0)) continue;
        const F factor = a(r, col);
        for (int c = 0; c < n; ++c) a(r, c) -= factor * a(col, c);
        for (int c = 0; c < b.cols_; ++c) b(r, c) -= factor * b(col, c);
      }
    }
    return b;
  }

  std::optional<Matrix> inverse(double tol = kDefaultTolerance) const { return solve(*this, identity(rows_), tol); }

 private:
  void swap_rows(int r1, int r2) {
    for (int c = 0; c < cols_; ++c) std::swap((*this)(r1, c), (*this)(r2, c));
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<F> data_;
};

}  // namespace surfdyn
