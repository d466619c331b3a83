#pragma once

#include "arithmat/integer.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace arithmat {

/// Dense integer matrix stored row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols = 0);
  /// Builds a matrix whose columns are the given vectors (all of length `rows`).
  static IntMatrix from_columns(const std::vector<std::vector<Integer>>& columns,
                                std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Integer> row(std::size_t i) const;
  std::vector<Integer> column(std::size_t j) const;

  IntMatrix transpose() const;
  /// Keeps the listed columns, in the listed order.
  IntMatrix select_columns(const std::vector<std::size_t>& indices) const;
  /// Horizontal concatenation [*this | other]; row counts must agree.
  IntMatrix hconcat(const IntMatrix& other) const;

  bool is_zero() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend std::vector<Integer> operator*(const IntMatrix& a, const std::vector<Integer>& v);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Smith normal form with transformation matrices: u * m * v == diag(d).
struct SnfResult {
  /// Diagonal of length min(rows, cols); nonzero entries come first and
  /// each divides the next.
  std::vector<Integer> d;
  IntMatrix u;
  IntMatrix v;
  IntMatrix u_inv;
  IntMatrix v_inv;

  std::size_t rank() const;
};

SnfResult snf(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

/// GCD of the minors of order rank(m). Equals 1 for a zero or empty matrix.
Integer gcd_maximal_minors(const IntMatrix& m);

/// Basis (as columns) of the saturation of the column span of m inside Z^rows.
IntMatrix saturate(const IntMatrix& m);

/// Exact determinant of a square matrix (fraction-free elimination).
Integer determinant(const IntMatrix& m);

}  // namespace arithmat
