#ifndef CONTACTLAB_MATRIX_HPP
#define CONTACTLAB_MATRIX_HPP

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "contactlab/rational.hpp"

namespace contactlab {

/// Dense matrix over Rational, row-major.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Rational(1);
    return m;
  }

  static Matrix from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) return Matrix(0, 0);
    Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i) {
      if (static_cast<int>(rows[i].size()) != m.cols())
        throw std::invalid_argument("Matrix::from_rows: ragged rows");
      for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix from_columns(const std::vector<Vec>& cols) {
    if (cols.empty()) return Matrix(0, 0);
    Matrix m(static_cast<int>(cols[0].size()), static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols(); ++j) {
      if (static_cast<int>(cols[j].size()) != m.rows())
        throw std::invalid_argument("Matrix::from_columns: ragged columns");
      for (int i = 0; i < m.rows(); ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& operator()(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rational& operator()(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

  Vec row(int i) const {
    Vec r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
  }

  Vec column(int j) const {
    Vec c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!x.is_zero()) return false;
    return true;
  }

  bool is_square() const { return rows_ == cols_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  Matrix operator+(const Matrix& o) const {
    check_same_shape(o, "+");
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
  }

  Matrix operator-(const Matrix& o) const {
    check_same_shape(o, "-");
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
  }

  Matrix operator-() const {
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = -e_[i];
    return r;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
    Matrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const Rational& a = (*this)(i, k);
        if (a.is_zero()) continue;
        for (int j = 0; j < o.cols_; ++j) {
          const Rational& b = o(k, j);
          if (!b.is_zero()) r(i, j) += a * b;
        }
      }
    return r;
  }

  friend Matrix operator*(const Rational& c, const Matrix& m) {
    Matrix r(m.rows_, m.cols_);
    for (std::size_t i = 0; i < m.e_.size(); ++i) r.e_[i] = c * m.e_[i];
    return r;
  }

  Vec apply(const Vec& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("Matrix::apply: size mismatch");
    Vec r(rows_);
    for (int i = 0; i < rows_; ++i) {
      Rational s;
      for (int j = 0; j < cols_; ++j)
        if (!v[j].is_zero()) s += (*this)(i, j) * v[j];
      r[i] = s;
    }
    return r;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  Rational trace() const {
    require_square("trace");
    Rational t;
    for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  Matrix pow(int k) const {
    require_square("pow");
    Matrix r = identity(rows_);
    for (int i = 0; i < k; ++i) r = r * (*this);
    return r;
  }

  struct RrefResult;

  /// Unique reduced row-echelon form, exact Gauss-Jordan.
  RrefResult rref() const;

  int rank() const;

  /// Null space basis, one vector per free column in increasing column order.
  std::vector<Vec> kernel_basis() const;

  Rational determinant() const {
    require_square("determinant");
    Matrix m = *this;
    Rational det(1);
    for (int c = 0; c < cols_; ++c) {
      int pr = -1;
      for (int i = c; i < rows_; ++i)
        if (!m(i, c).is_zero()) {
          pr = i;
          break;
        }
      if (pr < 0) return Rational(0);
      if (pr != c) {
        for (int j = 0; j < cols_; ++j) std::swap(m(pr, j), m(c, j));
        det = -det;
      }
      det *= m(c, c);
      Rational inv = m(c, c).inverse();
      for (int i = c + 1; i < rows_; ++i) {
        if (m(i, c).is_zero()) continue;
        Rational f = m(i, c) * inv;
        for (int j = c; j < cols_; ++j) m(i, j) -= f * m(c, j);
      }
    }
    return det;
  }

  Matrix inverse() const;

  /// Unique solution of Ax = b, or nullopt when the system is inconsistent
  /// or underdetermined.
  std::optional<Vec> solve_unique(const Vec& b) const;

  /// Any solution of Ax = b, or nullopt when inconsistent.
  std::optional<Vec> solve_any(const Vec& b) const;

  /// Row-space basis: the nonzero rows of the RREF.
  std::vector<Vec> row_space_basis() const;

  /// Column-space basis (image), deterministic via RREF of the transpose.
  std::vector<Vec> image_basis() const { return transpose().row_space_basis(); }

 private:
  void check_same_shape(const Matrix& o, const char* op) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument(std::string("Matrix: shape mismatch in ") + op);
  }
  void require_square(const char* op) const {
    if (!is_square()) throw std::invalid_argument(std::string("Matrix: ") + op + " requires square matrix");
  }

  int rows_, cols_;
  std::vector<Rational> e_;
};

struct Matrix::RrefResult {
  Matrix reduced;
  int rank;
  std::vector<int> pivot_columns;
};

inline Matrix::RrefResult Matrix::rref() const {
  Matrix m = *this;
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int pr = -1;
    for (int i = r; i < rows_; ++i)
      if (!m(i, c).is_zero()) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != r)
      for (int j = 0; j < cols_; ++j) std::swap(m(pr, j), m(r, j));
    Rational inv = m(r, c).inverse();
    for (int j = 0; j < cols_; ++j) m(r, j) *= inv;
    for (int i = 0; i < rows_; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Rational f = m(i, c);
      for (int j = 0; j < cols_; ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), r, std::move(pivots)};
}

inline int Matrix::rank() const { return rref().rank; }

inline std::vector<Vec> Matrix::kernel_basis() const {
  RrefResult rr = rref();
  std::vector<bool> is_pivot(cols_, false);
  for (int p : rr.pivot_columns) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (int f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    Vec v(cols_);
    v[f] = Rational(1);
    for (int r = 0; r < rr.rank; ++r) v[rr.pivot_columns[r]] = -rr.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline Matrix Matrix::inverse() const {
  require_square("inverse");
  int n = rows_;
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
    aug(i, n + i) = Rational(1);
  }
  RrefResult rr = aug.rref();
  if (rr.rank < n || rr.pivot_columns[n - 1] != n - 1)
    throw std::domain_error("Matrix: singular, no inverse");
  Matrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = rr.reduced(i, n + j);
  return inv;
}

inline std::optional<Vec> Matrix::solve_unique(const Vec& b) const {
  if (static_cast<int>(b.size()) != rows_) throw std::invalid_argument("solve_unique: size mismatch");
  Matrix aug(rows_, cols_ + 1);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
    aug(i, cols_) = b[i];
  }
  RrefResult rr = aug.rref();
  for (int p : rr.pivot_columns)
    if (p == cols_) return std::nullopt;  // inconsistent
  if (rr.rank != cols_) return std::nullopt;  // non-unique
  Vec x(cols_);
  for (int r = 0; r < rr.rank; ++r) x[rr.pivot_columns[r]] = rr.reduced(r, cols_);
  return x;
}

inline std::optional<Vec> Matrix::solve_any(const Vec& b) const {
  if (static_cast<int>(b.size()) != rows_) throw std::invalid_argument("solve_any: size mismatch");
  Matrix aug(rows_, cols_ + 1);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
    aug(i, cols_) = b[i];
  }
  RrefResult rr = aug.rref();
  for (int p : rr.pivot_columns)
    if (p == cols_) return std::nullopt;
  Vec x(cols_);
  for (int r = 0; r < rr.rank; ++r) x[rr.pivot_columns[r]] = rr.reduced(r, cols_);
  return x;
}

inline std::vector<Vec> Matrix::row_space_basis() const {
  RrefResult rr = rref();
  std::vector<Vec> rows;
  for (int i = 0; i < rr.rank; ++i) rows.push_back(rr.reduced.row(i));
  return rows;
}

/// Flattens a matrix row-major; used for span-membership of operators.
inline Vec flatten(const Matrix& m) {
  Vec v;
  v.reserve(static_cast<std::size_t>(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

/// Commutator MN - NM.
inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

}  // namespace contactlab

#endif
