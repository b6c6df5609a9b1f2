#pragma once

/**
 * @file linalg.hpp
 * @brief Dense exact matrices, fraction-free (Bareiss) row reduction and
 * nullspaces.
 *
 * Bareiss elimination divides only by the previous pivot and every division
 * is exact, so integer input stays integral over the rationals.
 */

#include <algorithm>
#include <array>
#include <cstddef>
#include <vector>

#include "sgconic/field.hpp"

namespace sgconic {

template <class K>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const K& fill = K{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  K& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const K& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(data_.begin() + a * cols_, data_.begin() + (a + 1) * cols_,
                     data_.begin() + b * cols_);
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<K> data_;
};

/// Row echelon form plus the pivot column of each nonzero row.
template <class K>
struct RowEchelon {
  Matrix<K> m;
  std::vector<std::size_t> pivot_cols;

  std::size_t rank() const noexcept { return pivot_cols.size(); }
};

/// Fraction-free row echelon form. Pivots are taken top to bottom, left to
/// right, using the first nonzero entry in the column.
template <class K>
RowEchelon<K> fraction_free_echelon(Matrix<K> m) {
  RowEchelon<K> out;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  bool have_prev = false;
  K prev{};
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && is_zero(m(piv, c))) ++piv;
    if (piv == rows) continue;
    m.swap_rows(piv, r);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        K v = m(r, c) * m(i, j) - m(i, c) * m(r, j);
        if (have_prev) v /= prev;
        m(i, j) = v;
      }
      m(i, c) = K{};
    }
    prev = m(r, c);
    have_prev = true;
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.m = std::move(m);
  return out;
}

template <class K>
std::size_t rank(const Matrix<K>& m) {
  return fraction_free_echelon(m).rank();
}

/// Basis of the right nullspace, one vector per free column, each normalized
/// projectively. Ordered by free column index.
template <class K>
std::vector<std::vector<K>> nullspace(const Matrix<K>& input) {
  RowEchelon<K> e = fraction_free_echelon(input);
  const std::size_t cols = input.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;

  // A bound element to borrow the field's "one" from.
  K like{};
  for (std::size_t i = 0; i < input.rows() && is_zero(like); ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (!is_zero(input(i, j))) {
        like = input(i, j);
        break;
      }

  std::vector<std::vector<K>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<K> x(cols, K{});
    x[f] = from_int(1, like);
    for (std::size_t k = e.rank(); k-- > 0;) {
      const std::size_t pc = e.pivot_cols[k];
      K acc{};
      for (std::size_t j = pc + 1; j < cols; ++j) acc += e.m(k, j) * x[j];
      x[pc] = -acc / e.m(k, pc);
    }
    field_traits<K>::normalize(std::span<K>(x));
    basis.push_back(std::move(x));
  }
  return basis;
}

template <class K>
using Mat3 = std::array<std::array<K, 3>, 3>;

template <class K>
K det3(const Mat3<K>& a) {
  K t0 = a[1][1] * a[2][2] - a[1][2] * a[2][1];
  K t1 = a[1][0] * a[2][2] - a[1][2] * a[2][0];
  K t2 = a[1][0] * a[2][1] - a[1][1] * a[2][0];
  return a[0][0] * t0 - a[0][1] * t1 + a[0][2] * t2;
}

template <class K>
Mat3<K> mul3(const Mat3<K>& a, const Mat3<K>& b) {
  Mat3<K> r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      K acc{};
      for (int k = 0; k < 3; ++k) acc += a[i][k] * b[k][j];
      r[i][j] = acc;
    }
  return r;
}

template <class K>
Mat3<K> transpose3(const Mat3<K>& a) {
  Mat3<K> r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = a[j][i];
  return r;
}

template <class K>
std::array<K, 3> apply3(const Mat3<K>& a, const std::array<K, 3>& v) {
  std::array<K, 3> r{};
  for (int i = 0; i < 3; ++i) {
    K acc{};
    for (int k = 0; k < 3; ++k) acc += a[i][k] * v[k];
    r[i] = acc;
  }
  return r;
}

/// Adjugate; equals det(a) * inverse(a). Enough for projective purposes
/// because inverses only matter up to scale.
template <class K>
Mat3<K> adjugate3(const Mat3<K>& a) {
  Mat3<K> r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
      const int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      r[i][j] = a[r0][c0] * a[r1][c1] - a[r0][c1] * a[r1][c0];
    }
  return r;
}

}  // namespace sgconic
