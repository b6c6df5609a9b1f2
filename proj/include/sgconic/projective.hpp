#pragma once

/**
 * @file projective.hpp
 * @brief Points and lines of the projective plane over an exact field.
 *
 * Both are stored in canonical form: over Q as coprime integers with the
 * first nonzero entry positive, over F_p with the first nonzero entry equal
 * to 1. Projective equality is therefore plain coordinate equality, and the
 * lexicographic order on coordinates is a total order used for every
 * deterministic tie-break in the library.
 */

#include <algorithm>
#include <array>
#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <type_traits>

#include "sgconic/field.hpp"

namespace sgconic {

struct point_tag {};
struct line_tag {};
struct conic_tag {};

template <class K, std::size_t N, class Tag>
class Homogeneous {
 public:
  using scalar_type = K;
  static constexpr std::size_t size = N;

  Homogeneous() = delete;

  explicit Homogeneous(std::array<K, N> coords) : c_(std::move(coords)) {
    field_traits<K>::normalize(std::span<K>(c_));
  }

  const std::array<K, N>& coords() const noexcept { return c_; }
  const K& operator[](std::size_t i) const { return c_[i]; }

  friend bool operator==(const Homogeneous& a, const Homogeneous& b) { return a.c_ == b.c_; }
  friend bool operator<(const Homogeneous& a, const Homogeneous& b) {
    return std::lexicographical_compare(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < N; ++i) {
      if (i) s += std::is_same_v<Tag, point_tag> ? ":" : ",";
      s += field_traits<K>::to_string(c_[i]);
    }
    if constexpr (std::is_same_v<Tag, point_tag>) return "(" + s + ")";
    else if constexpr (std::is_same_v<Tag, line_tag>) return "[" + s + "]";
    else return "<" + s + ">";
  }

  friend std::ostream& operator<<(std::ostream& os, const Homogeneous& h) { return os << h.to_string(); }

 private:
  std::array<K, N> c_;
};

template <class K>
using ProjPoint = Homogeneous<K, 3, point_tag>;
template <class K>
using ProjLine = Homogeneous<K, 3, line_tag>;

/// Rational point from integer coordinates.
inline ProjPoint<Rational> point_q(long x, long y, long z) {
  return ProjPoint<Rational>({Rational(x), Rational(y), Rational(z)});
}
inline ProjLine<Rational> line_q(long a, long b, long c) {
  return ProjLine<Rational>({Rational(a), Rational(b), Rational(c)});
}
inline ProjPoint<Fp> point_fp(long x, long y, long z, std::int64_t p) {
  return ProjPoint<Fp>({Fp(x, p), Fp(y, p), Fp(z, p)});
}

template <class K>
std::array<K, 3> cross(const std::array<K, 3>& a, const std::array<K, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

template <class K>
K dot(const std::array<K, 3>& a, const std::array<K, 3>& b) {
  K r = a[0] * b[0];
  r += a[1] * b[1];
  r += a[2] * b[2];
  return r;
}

template <class K>
bool incident(const ProjPoint<K>& p, const ProjLine<K>& l) {
  return is_zero(dot(p.coords(), l.coords()));
}

template <class K>
ProjLine<K> line_through(const ProjPoint<K>& p, const ProjPoint<K>& q) {
  if (p == q) throw DegenerateInput("line_through: points coincide " + p.to_string());
  return ProjLine<K>(cross(p.coords(), q.coords()));
}

template <class K>
ProjPoint<K> meet(const ProjLine<K>& a, const ProjLine<K>& b) {
  if (a == b) throw DegenerateInput("meet: lines coincide " + a.to_string());
  return ProjPoint<K>(cross(a.coords(), b.coords()));
}

/// True iff the 3x3 determinant of the coordinate rows vanishes. Repeated
/// points count as collinear.
template <class K>
bool collinear(const ProjPoint<K>& p, const ProjPoint<K>& q, const ProjPoint<K>& r) {
  return is_zero(dot(cross(p.coords(), q.coords()), r.coords()));
}

/// The field's 1, taken from the first nonzero coordinate of h.
template <class K, std::size_t N, class Tag>
K one_like(const Homogeneous<K, N, Tag>& h) {
  for (const auto& c : h.coords())
    if (!is_zero(c)) return from_int(1, c);
  throw InternalInvariantViolation("homogeneous vector with no nonzero entry");
}

/// Fundamental point e_i of the plane over the field of `like`.
template <class K>
ProjPoint<K> fundamental_point(std::size_t i, const K& like) {
  std::array<K, 3> c{};
  c[i] = from_int(1, like);
  return ProjPoint<K>(c);
}

}  // namespace sgconic
