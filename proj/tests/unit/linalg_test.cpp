#include <gtest/gtest.h>

#include "sgconic/linalg.hpp"
#include "support/reference.hpp"

using namespace sgconic;

namespace {

Matrix<Rational> from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t c = rows.begin()->size();
  Matrix<Rational> m(rows.size(), c);
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (long v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

}  // namespace

TEST(Rank, SmallExamples) {
  EXPECT_EQ(rank(from_rows({{1, 2, 3}, {2, 4, 6}})), 1u);
  EXPECT_EQ(rank(from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})), 3u);
  EXPECT_EQ(rank(from_rows({{0, 0}, {0, 0}})), 0u);
  EXPECT_EQ(rank(from_rows({{0, 1, 1}, {1, 1, 0}, {1, 2, 1}})), 2u);
}

TEST(Nullspace, VectorsAreAnnihilated) {
  ref::Gen g(5);
  for (int t = 0; t < 200; ++t) {
    const std::size_t rows = g.int_in(1, 5), cols = g.int_in(2, 6);
    Matrix<Rational> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = g.int_in(-3, 3);
    const auto basis = nullspace(m);
    EXPECT_EQ(basis.size() + rank(m), cols);
    for (const auto& v : basis)
      for (std::size_t i = 0; i < rows; ++i) {
        Rational acc = 0;
        for (std::size_t j = 0; j < cols; ++j) acc += m(i, j) * v[j];
        EXPECT_EQ(acc, 0);
      }
  }
}

TEST(Nullspace, RankAgreesWithLaplaceOnSquareMatrices) {
  ref::Gen g(6);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = g.int_in(1, 4);
    Matrix<Rational> m(n, n);
    std::vector<std::vector<ref::Q>> r(n, std::vector<ref::Q>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const long v = g.int_in(-2, 2);
        m(i, j) = v;
        r[i][j] = v;
      }
    EXPECT_EQ(rank(m) == n, sgn(ref::laplace(r)) != 0);
  }
}

TEST(Nullspace, OverFp) {
  Matrix<Fp> m(1, 3);
  m(0, 0) = Fp(1, 5), m(0, 1) = Fp(1, 5), m(0, 2) = Fp(1, 5);
  const auto basis = nullspace(m);
  ASSERT_EQ(basis.size(), 2u);
  for (const auto& v : basis) EXPECT_TRUE((v[0] + v[1] + v[2]).is_zero());
}

TEST(Mat3, AdjugateIsDetTimesInverse) {
  ref::Gen g(8);
  for (int t = 0; t < 100; ++t) {
    Mat3<Rational> a;
    for (auto& row : a)
      for (auto& v : row) v = g.int_in(-5, 5);
    const Rational d = det3(a);
    const auto prod = mul3(a, adjugate3(a));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) EXPECT_EQ(prod[i][j], i == j ? d : Rational(0));
  }
}

TEST(Mat3, DetMatchesReference) {
  ref::Gen g(9);
  for (int t = 0; t < 100; ++t) {
    Mat3<Rational> a;
    for (auto& row : a)
      for (auto& v : row) v = g.int_in(-5, 5);
    EXPECT_EQ(det3(a), ref::det3({a[0][0], a[0][1], a[0][2]}, {a[1][0], a[1][1], a[1][2]},
                                 {a[2][0], a[2][1], a[2][2]}));
  }
}
