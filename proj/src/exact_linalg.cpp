#include "arithmat/exact_linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace arithmat {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<std::vector<Integer>>& columns,
                                  std::size_t rows) {
  IntMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

std::vector<Integer> IntMatrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

std::vector<Integer> IntMatrix::column(std::size_t j) const {
  std::vector<Integer> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::select_columns(const std::vector<std::size_t>& indices) const {
  IntMatrix s(rows_, indices.size());
  for (std::size_t j = 0; j < indices.size(); ++j)
    for (std::size_t i = 0; i < rows_; ++i) s(i, j) = (*this)(i, indices[j]);
  return s;
}

IntMatrix IntMatrix::hconcat(const IntMatrix& other) const {
  if (other.rows_ != rows_) throw std::invalid_argument("hconcat: row count mismatch");
  IntMatrix c(rows_, cols_ + other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) c(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < other.cols_; ++j) c(i, cols_ + j) = other(i, j);
  }
  return c;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

std::vector<Integer> operator*(const IntMatrix& a, const std::vector<Integer>& v) {
  if (a.cols_ != v.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
  std::vector<Integer> out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
  return out;
}

std::size_t SnfResult::rank() const {
  return static_cast<std::size_t>(
      std::count_if(d.begin(), d.end(), [](const Integer& x) { return x != 0; }));
}

namespace {

// Working state for the Smith reduction. Maintains u * m * v == a together
// with the inverses of u and v.
class SnfWorker {
 public:
  explicit SnfWorker(const IntMatrix& m)
      : a_(m),
        u_(IntMatrix::identity(m.rows())),
        u_inv_(IntMatrix::identity(m.rows())),
        v_(IntMatrix::identity(m.cols())),
        v_inv_(IntMatrix::identity(m.cols())) {}

  SnfResult run() {
    const std::size_t n = std::min(a_.rows(), a_.cols());
    for (std::size_t t = 0; t < n; ++t) {
      if (!reduce_pivot(t)) break;
      if (a_(t, t) < 0) negate_row(t);
    }
    SnfResult out;
    out.d.resize(n);
    for (std::size_t t = 0; t < n; ++t) out.d[t] = a_(t, t);
    out.u = std::move(u_);
    out.v = std::move(v_);
    out.u_inv = std::move(u_inv_);
    out.v_inv = std::move(v_inv_);
    return out;
  }

 private:
  // Moves the smallest nonzero entry of the trailing submatrix to (t,t).
  bool move_smallest_to(std::size_t t) {
    std::size_t bi = 0, bj = 0;
    bool found = false;
    Integer best;
    for (std::size_t i = t; i < a_.rows(); ++i)
      for (std::size_t j = t; j < a_.cols(); ++j) {
        if (a_(i, j) == 0) continue;
        Integer mag = abs(a_(i, j));
        if (!found || mag < best) {
          best = std::move(mag);
          bi = i;
          bj = j;
          found = true;
        }
      }
    if (!found) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  // Quotient rounded to the nearest integer, so the remainder is at most |b|/2.
  static Integer nearest_quotient(const Integer& a, const Integer& b) {
    const Integer twice = 2 * a + abs(b);
    return floor_div(twice, 2 * abs(b)) * (b < 0 ? -1 : 1);
  }

  // Clears row and column t and makes a_(t,t) divide the trailing submatrix.
  // Every round restarts from the smallest entry, which keeps entries small.
  bool reduce_pivot(std::size_t t) {
    if (!move_smallest_to(t)) return false;
    for (;;) {
      bool clear = true;
      for (std::size_t i = t + 1; i < a_.rows(); ++i) {
        if (a_(i, t) == 0) continue;
        add_row(i, t, -nearest_quotient(a_(i, t), a_(t, t)));
        if (a_(i, t) != 0) clear = false;
      }
      for (std::size_t j = t + 1; j < a_.cols(); ++j) {
        if (a_(t, j) == 0) continue;
        add_col(j, t, -nearest_quotient(a_(t, j), a_(t, t)));
        if (a_(t, j) != 0) clear = false;
      }
      if (clear) {
        std::size_t bad = a_.rows();
        for (std::size_t i = t + 1; i < a_.rows() && bad == a_.rows(); ++i)
          for (std::size_t j = t + 1; j < a_.cols(); ++j)
            if (a_(i, j) % a_(t, t) != 0) {
              bad = i;
              break;
            }
        if (bad == a_.rows()) return true;
        add_row(t, bad, 1);
      }
      move_smallest_to(t);
    }
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < a_.cols(); ++c) std::swap(a_(i, c), a_(j, c));
    for (std::size_t c = 0; c < u_.cols(); ++c) std::swap(u_(i, c), u_(j, c));
    for (std::size_t r = 0; r < u_inv_.rows(); ++r) std::swap(u_inv_(r, i), u_inv_(r, j));
  }

  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < a_.rows(); ++r) std::swap(a_(r, i), a_(r, j));
    for (std::size_t r = 0; r < v_.rows(); ++r) std::swap(v_(r, i), v_(r, j));
    for (std::size_t c = 0; c < v_inv_.cols(); ++c) std::swap(v_inv_(i, c), v_inv_(j, c));
  }

  // row_i += c * row_j
  void add_row(std::size_t i, std::size_t j, const Integer& c) {
    if (c == 0) return;
    for (std::size_t k = 0; k < a_.cols(); ++k) a_(i, k) += c * a_(j, k);
    for (std::size_t k = 0; k < u_.cols(); ++k) u_(i, k) += c * u_(j, k);
    for (std::size_t r = 0; r < u_inv_.rows(); ++r) u_inv_(r, j) -= c * u_inv_(r, i);
  }

  // col_i += c * col_j
  void add_col(std::size_t i, std::size_t j, const Integer& c) {
    if (c == 0) return;
    for (std::size_t r = 0; r < a_.rows(); ++r) a_(r, i) += c * a_(r, j);
    for (std::size_t r = 0; r < v_.rows(); ++r) v_(r, i) += c * v_(r, j);
    for (std::size_t k = 0; k < v_inv_.cols(); ++k) v_inv_(j, k) -= c * v_inv_(i, k);
  }

  void negate_row(std::size_t i) {
    for (std::size_t k = 0; k < a_.cols(); ++k) a_(i, k) = -a_(i, k);
    for (std::size_t k = 0; k < u_.cols(); ++k) u_(i, k) = -u_(i, k);
    for (std::size_t r = 0; r < u_inv_.rows(); ++r) u_inv_(r, i) = -u_inv_(r, i);
  }

  IntMatrix a_;
  IntMatrix u_;
  IntMatrix u_inv_;
  IntMatrix v_;
  IntMatrix v_inv_;
};

}  // namespace

SnfResult snf(const IntMatrix& m) { return SnfWorker(m).run(); }

std::size_t rank(const IntMatrix& m) {
  if (m.empty()) return 0;
  return snf(m).rank();
}

Integer gcd_maximal_minors(const IntMatrix& m) {
  Integer product = 1;
  if (m.empty()) return product;
  for (const Integer& d : snf(m).d)
    if (d != 0) product *= d;
  return product;
}

IntMatrix saturate(const IntMatrix& m) {
  if (m.empty()) return IntMatrix(m.rows(), 0);
  SnfResult s = snf(m);
  std::vector<std::size_t> keep(s.rank());
  for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i;
  return s.u_inv.select_columns(keep);
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace arithmat
