#pragma once

#include "logaq/field.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace logaq {

using IntVector = std::vector<Integer>;

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("ragged integer matrix");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t rows) {
    IntMatrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != rows) throw std::invalid_argument("ragged integer matrix");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector column(std::size_t j) const {
    IntVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  IntVector row(std::size_t i) const {
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("integer matrix shape mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  friend IntVector operator*(const IntMatrix& a, const IntVector& x) {
    if (a.cols_ != x.size()) throw std::invalid_argument("integer matrix/vector shape mismatch");
    IntVector y(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) y[i] += a(i, j) * x[j];
    return y;
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
      os << (i ? ", [" : "[");
      for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).get_str();
      os << ']';
    }
    os << ']';
    return os.str();
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// U * A * V = D with U, V unimodular. `u_inv`, `v_inv` are the exact inverses.
struct SnfResult {
  IntMatrix u, u_inv, d, v, v_inv;
  std::vector<Integer> invariant_factors;  // nonzero diagonal entries, d1 | d2 | ...
  std::size_t rank() const { return invariant_factors.size(); }
};

namespace detail {

inline void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}
inline void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}
// row_dst += q * row_src
inline void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += q * m(src, j);
}
// col_dst += q * col_src
inline void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += q * m(i, src);
}

// Floor-free division used for pivot reduction: a = q*p + r with |r| <= |p|/2 not needed;
// truncating division suffices because the pivot is the smallest entry.
inline Integer tdiv(const Integer& a, const Integer& p) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
  return q;
}

}  // namespace detail

/// Smith normal form with deterministic pivoting: the pivot is the entry of smallest
/// nonzero absolute value in the active block, ties broken by row-major position.
inline SnfResult snf(const IntMatrix& a) {
  using namespace detail;
  const std::size_t m = a.rows(), n = a.cols();
  SnfResult r{IntMatrix::identity(m), IntMatrix::identity(m), a, IntMatrix::identity(n),
              IntMatrix::identity(n), {}};
  IntMatrix& d = r.d;

  // Elementary operations recorded on the transforms.
  auto row_swap = [&](std::size_t i, std::size_t j) {
    swap_rows(d, i, j);
    swap_rows(r.u, i, j);
    swap_cols(r.u_inv, i, j);
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    swap_cols(d, i, j);
    swap_cols(r.v, i, j);
    swap_rows(r.v_inv, i, j);
  };
  auto row_add = [&](std::size_t dst, std::size_t src, const Integer& q) {  // row_dst += q row_src
    add_row(d, dst, src, q);
    add_row(r.u, dst, src, q);
    add_col(r.u_inv, src, dst, -q);
  };
  auto col_add = [&](std::size_t dst, std::size_t src, const Integer& q) {  // col_dst += q col_src
    add_col(d, dst, src, q);
    add_col(r.v, dst, src, q);
    add_row(r.v_inv, src, dst, -q);
  };
  auto row_negate = [&](std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) d(i, j) = -d(i, j);
    for (std::size_t j = 0; j < m; ++j) r.u(i, j) = -r.u(i, j);
    for (std::size_t k = 0; k < m; ++k) r.u_inv(k, i) = -r.u_inv(k, i);
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    while (true) {
      // Pivot selection.
      bool found = false;
      std::size_t pi = 0, pj = 0;
      Integer best;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (d(i, j) == 0) continue;
          Integer v = abs(d(i, j));
          if (!found || v < best) {
            found = true;
            best = v;
            pi = i;
            pj = j;
          }
        }
      if (!found) goto done;
      row_swap(t, pi);
      col_swap(t, pj);

      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        Integer q = tdiv(d(i, t), d(t, t));
        row_add(i, t, -q);
        if (d(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        Integer q = tdiv(d(t, j), d(t, t));
        col_add(j, t, -q);
        if (d(t, j) != 0) dirty = true;
      }
      if (dirty) continue;

      // Divisibility of the remaining block.
      bool fixed = true;
      for (std::size_t i = t + 1; i < m && fixed; ++i)
        for (std::size_t j = t + 1; j < n; ++j) {
          if (d(i, j) % d(t, t) != 0) {
            row_add(t, i, Integer(1));
            fixed = false;
            break;
          }
        }
      if (!fixed) continue;
      if (d(t, t) < 0) row_negate(t);
      break;
    }
  }
done:
  for (std::size_t t = 0; t < std::min(m, n); ++t)
    if (d(t, t) != 0) r.invariant_factors.push_back(d(t, t));
  return r;
}

/// Columns form the integer basis of {x : a x = 0} induced by snf(a).
inline IntMatrix int_kernel(const IntMatrix& a) {
  SnfResult s = snf(a);
  std::size_t rank = s.rank();
  IntMatrix k(a.cols(), a.cols() - rank);
  for (std::size_t j = rank; j < a.cols(); ++j)
    for (std::size_t i = 0; i < a.cols(); ++i) k(i, j - rank) = s.v(i, j);
  return k;
}

/// Canonical solution of a x = b: transform by the SNF, zero the free coordinates,
/// transform back. Returns nullopt when b is outside the column lattice of a.
inline std::optional<IntVector> int_solve(const IntMatrix& a, const IntVector& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("int_solve: right-hand side has wrong length");
  SnfResult s = snf(a);
  IntVector c = s.u * b;
  std::size_t rank = s.rank();
  IntVector y(a.cols());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < rank) {
      if (c[i] % s.d(i, i) != 0) return std::nullopt;
      y[i] = c[i] / s.d(i, i);
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return s.v * y;
}

/// Basis (as columns) of the lattice spanned by the columns of `spanning`.
inline IntMatrix lattice_basis(const IntMatrix& spanning) {
  SnfResult s = snf(spanning);
  // spanning = u_inv d v_inv, so the column lattice is u_inv * diag(d) * Z^rank.
  IntMatrix basis(spanning.rows(), s.rank());
  for (std::size_t j = 0; j < s.rank(); ++j)
    for (std::size_t i = 0; i < spanning.rows(); ++i) basis(i, j) = s.u_inv(i, j) * s.d(j, j);
  return basis;
}

inline std::size_t int_rank(const IntMatrix& a) { return snf(a).rank(); }

// ---------------------------------------------------------------------------
// Dense matrices over a Field.

class FieldMatrix {
 public:
  FieldMatrix() = default;
  FieldMatrix(Field field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols) {}

  static FieldMatrix from_rows(Field field, const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
    FieldMatrix m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = field.normalize(rows[i].at(j));
    return m;
  }

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  /// Reduced row echelon form; returns pivot columns.
  std::vector<std::size_t> rref_in_place() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
      std::size_t p = row;
      while (p < rows_ && (*this)(p, col) == 0) ++p;
      if (p == rows_) continue;
      if (p != row)
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(row, j));
      Rational inv = field_.inv((*this)(row, col));
      for (std::size_t j = col; j < cols_; ++j) (*this)(row, j) = field_.mul((*this)(row, j), inv);
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == row || (*this)(i, col) == 0) continue;
        Rational f = (*this)(i, col);
        for (std::size_t j = col; j < cols_; ++j)
          (*this)(i, j) = field_.sub((*this)(i, j), field_.mul(f, (*this)(row, j)));
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

inline std::size_t field_rank(FieldMatrix m) { return m.rref_in_place().size(); }

/// Null space basis read off the reduced echelon form: one column per free variable,
/// with that free coordinate equal to 1 and the other free coordinates 0.
inline FieldMatrix field_kernel(const FieldMatrix& m) {
  FieldMatrix r = m;
  std::vector<std::size_t> pivots = r.rref_in_place();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  FieldMatrix k(m.field(), m.cols(), free_cols.size());
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    k(free_cols[f], f) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) k(pivots[i], f) = m.field().neg(r(i, free_cols[f]));
  }
  return k;
}

}  // namespace logaq
