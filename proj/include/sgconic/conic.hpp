#pragma once

/**
 * @file conic.hpp
 * @brief Plane conics A x^2 + B y^2 + C z^2 + D xy + E xz + F yz and exact
 * interpolation through point sets.
 */

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "sgconic/linalg.hpp"
#include "sgconic/projective.hpp"

namespace sgconic {

template <class K>
class Conic {
 public:
  using Coeffs = Homogeneous<K, 6, conic_tag>;

  explicit Conic(std::array<K, 6> coeffs) : c_(std::move(coeffs)) {}
  explicit Conic(Coeffs c) : c_(std::move(c)) {}

  const std::array<K, 6>& coeffs() const noexcept { return c_.coords(); }
  const K& operator[](std::size_t i) const { return c_[i]; }

  K evaluate(const ProjPoint<K>& p) const {
    const auto& x = p.coords();
    const auto& c = coeffs();
    K r = c[0] * x[0] * x[0];
    r += c[1] * x[1] * x[1];
    r += c[2] * x[2] * x[2];
    r += c[3] * x[0] * x[1];
    r += c[4] * x[0] * x[2];
    r += c[5] * x[1] * x[2];
    return r;
  }

  bool contains(const ProjPoint<K>& p) const { return is_zero(evaluate(p)); }

  /// Twice the Gram matrix: [[2A, D, E], [D, 2B, F], [E, F, 2C]].
  Mat3<K> matrix() const {
    const auto& c = coeffs();
    return {{{c[0] + c[0], c[3], c[4]}, {c[3], c[1] + c[1], c[5]}, {c[4], c[5], c[2] + c[2]}}};
  }

  bool is_singular() const { return is_zero(det3(matrix())); }

  std::string to_string() const { return c_.to_string(); }

  friend bool operator==(const Conic& a, const Conic& b) { return a.c_ == b.c_; }
  friend bool operator<(const Conic& a, const Conic& b) { return a.c_ < b.c_; }
  friend std::ostream& operator<<(std::ostream& os, const Conic& c) { return os << c.to_string(); }

 private:
  Coeffs c_;
};

/// Conic from a symmetric matrix in the doubled convention of
/// Conic::matrix().
template <class K>
Conic<K> conic_from_matrix(const Mat3<K>& m) {
  // (2A, 2B, 2C, 2D, 2E, 2F) is the same projective class.
  return Conic<K>(std::array<K, 6>{m[0][0], m[1][1], m[2][2], m[0][1] + m[0][1], m[0][2] + m[0][2],
                                   m[1][2] + m[1][2]});
}

/// The degree-2 monomials (x^2, y^2, z^2, xy, xz, yz) at p.
template <class K>
std::array<K, 6> conic_monomials(const ProjPoint<K>& p) {
  const auto& x = p.coords();
  return {x[0] * x[0], x[1] * x[1], x[2] * x[2], x[0] * x[1], x[0] * x[2], x[1] * x[2]};
}

template <class K>
Matrix<K> conic_interpolation_matrix(std::span<const ProjPoint<K>> pts) {
  Matrix<K> m(pts.size(), 6);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    auto row = conic_monomials(pts[i]);
    for (std::size_t j = 0; j < 6; ++j) m(i, j) = row[j];
  }
  return m;
}

/// The product of two linear forms.
template <class K>
Conic<K> conic_from_lines(const ProjLine<K>& l, const ProjLine<K>& m) {
  const auto& a = l.coords();
  const auto& b = m.coords();
  return Conic<K>(std::array<K, 6>{a[0] * b[0], a[1] * b[1], a[2] * b[2], a[0] * b[1] + a[1] * b[0],
                                   a[0] * b[2] + a[2] * b[0], a[1] * b[2] + a[2] * b[1]});
}

/// If x_i divides the form, the residual linear factor.
template <class K>
std::optional<ProjLine<K>> divide_by_coordinate(const Conic<K>& c, std::size_t i) {
  const auto& k = c.coeffs();
  // Monomials free of x_i must vanish; the quotient collects the rest.
  switch (i) {
    case 0:
      if (!is_zero(k[1]) || !is_zero(k[2]) || !is_zero(k[5])) return std::nullopt;
      return ProjLine<K>({k[0], k[3], k[4]});
    case 1:
      if (!is_zero(k[0]) || !is_zero(k[2]) || !is_zero(k[4])) return std::nullopt;
      return ProjLine<K>({k[3], k[1], k[5]});
    default:
      if (!is_zero(k[0]) || !is_zero(k[1]) || !is_zero(k[3])) return std::nullopt;
      return ProjLine<K>({k[4], k[5], k[2]});
  }
}

/// The conic q(T X) obtained by substituting X -> T X into c.
template <class K>
Conic<K> pull_back(const Conic<K>& c, const Mat3<K>& t) {
  return conic_from_matrix(mul3(transpose3(t), mul3(c.matrix(), t)));
}

template <class K>
struct ConicFit {
  Conic<K> conic;
  bool determined;
};

/// Lexicographically first canonical vector of a nullspace basis.
template <class K>
Conic<K> first_conic_of(std::vector<std::vector<K>> basis) {
  std::vector<Conic<K>> conics;
  for (auto& v : basis) {
    std::array<K, 6> a;
    std::copy(v.begin(), v.end(), a.begin());
    conics.emplace_back(a);
  }
  return *std::min_element(conics.begin(), conics.end());
}

/// Fits a conic through five distinct points. `determined` is true iff the
/// conic is unique, which fails exactly when four of the points are
/// collinear.
template <class K>
ConicFit<K> conic_through_five(std::span<const ProjPoint<K>> pts) {
  if (pts.size() != 5) throw DegenerateInput("conic_through_five needs exactly 5 points");
  std::set<ProjPoint<K>> uniq(pts.begin(), pts.end());
  if (uniq.size() != 5) throw DegenerateInput("conic_through_five: duplicate points");
  auto basis = nullspace(conic_interpolation_matrix(pts));
  const bool determined = basis.size() == 1;
  return {first_conic_of(std::move(basis)), determined};
}

template <class K>
std::optional<Conic<K>> conic_contains_all(std::span<const ProjPoint<K>> pts) {
  if (pts.empty()) throw DegenerateInput("conic_contains_all: empty configuration");
  auto basis = nullspace(conic_interpolation_matrix(pts));
  if (basis.empty()) return std::nullopt;
  return first_conic_of(std::move(basis));
}

/// Members of pts on the conic, in canonical order.
template <class K>
std::vector<ProjPoint<K>> points_on_conic(const Conic<K>& c, std::span<const ProjPoint<K>> pts) {
  std::vector<ProjPoint<K>> out;
  for (const auto& p : pts)
    if (c.contains(p)) out.push_back(p);
  std::sort(out.begin(), out.end());
  return out;
}

template <class K>
bool conic_is_singular(const Conic<K>& c) {
  return c.is_singular();
}

}  // namespace sgconic
