#pragma once

/**
 * @file field.hpp
 * @brief Exact scalar fields: the rationals (GMP backed) and prime fields F_p.
 *
 * Every geometric object in the library is templated on a scalar type K.
 * `field_traits<K>` supplies the few operations generic code needs beyond
 * the arithmetic operators: zero tests, construction of small integers,
 * projective normalization and printing.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <span>
#include <string>

#include "sgconic/error.hpp"

namespace sgconic {

using Integer = mpz_class;
using Rational = mpq_class;

/// Deterministic primality test for 64-bit moduli (trial division is plenty
/// for the moduli this library accepts).
inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Largest accepted modulus; keeps products of two residues inside int64.
inline constexpr std::int64_t kMaxPrimeModulus = (std::int64_t{1} << 31) - 1;

/// Throws UnsupportedField unless p is an odd prime within range.
inline void require_odd_prime(std::int64_t p) {
  if (p == 2) throw UnsupportedField("characteristic 2 is not supported");
  if (p > kMaxPrimeModulus) throw UnsupportedField("modulus " + std::to_string(p) + " too large");
  if (!is_prime(p)) throw UnsupportedField(std::to_string(p) + " is not an odd prime");
}

/**
 * Element of the prime field F_p with a runtime modulus.
 *
 * A default-constructed Fp is an "unbound" zero (modulus 0). It adopts the
 * modulus of whatever it is combined with, which lets containers of Fp be
 * value-initialized before the modulus is known. Only zero can be unbound.
 */
class Fp {
 public:
  Fp() = default;

  Fp(std::int64_t value, std::int64_t p) : p_(p) {
    if (p < 3 || p % 2 == 0) throw UnsupportedField("F_p requires an odd modulus >= 3");
    if (p > kMaxPrimeModulus) throw UnsupportedField("modulus too large");
    value_ = value % p;
    if (value_ < 0) value_ += p;
  }

  std::int64_t value() const noexcept { return value_; }
  std::int64_t modulus() const noexcept { return p_; }
  bool is_zero() const noexcept { return value_ == 0; }
  bool bound() const noexcept { return p_ != 0; }

  Fp inverse() const {
    if (value_ == 0) throw DegenerateInput("division by zero in F_p");
    // Extended Euclid on (value, p).
    std::int64_t r0 = p_, r1 = value_, s0 = 0, s1 = 1;
    while (r1 != 0) {
      std::int64_t q = r0 / r1;
      std::int64_t t = r0 - q * r1;
      r0 = r1;
      r1 = t;
      t = s0 - q * s1;
      s0 = s1;
      s1 = t;
    }
    return Fp(s0, p_);
  }

  Fp operator-() const {
    Fp r = *this;
    if (r.value_ != 0) r.value_ = p_ - r.value_;
    return r;
  }

  Fp& operator+=(const Fp& o) {
    adopt(o);
    value_ += o.value_;
    if (value_ >= p_ && p_ != 0) value_ -= p_;
    return *this;
  }
  Fp& operator-=(const Fp& o) { return *this += -o; }
  Fp& operator*=(const Fp& o) {
    adopt(o);
    value_ = p_ == 0 ? 0 : (value_ * o.value_) % p_;
    return *this;
  }
  Fp& operator/=(const Fp& o) {
    if (o.value_ == 0) throw DegenerateInput("division by zero in F_p");
    return *this *= o.inverse();
  }

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }

  friend bool operator==(const Fp& a, const Fp& b) {
    check_compatible(a, b);
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Fp& a, const Fp& b) {
    check_compatible(a, b);
    return a.value_ <=> b.value_;
  }

 private:
  static void check_compatible(const Fp& a, const Fp& b) {
    if (a.p_ != 0 && b.p_ != 0 && a.p_ != b.p_) {
      throw InternalInvariantViolation("mixing elements of F_" + std::to_string(a.p_) + " and F_" +
                                       std::to_string(b.p_));
    }
  }
  void adopt(const Fp& o) {
    check_compatible(*this, o);
    if (p_ == 0) p_ = o.p_;
  }

  std::int64_t value_ = 0;
  std::int64_t p_ = 0;
};

template <class K>
struct field_traits;

template <>
struct field_traits<Rational> {
  static constexpr bool is_rational = true;

  static bool is_zero(const Rational& a) { return sgn(a) == 0; }
  static Rational from_int(long n, const Rational& /*like*/) { return Rational(n); }
  static std::int64_t characteristic(const Rational&) { return 0; }
  static std::string to_string(const Rational& a) { return a.get_str(); }

  /// Scales a nonzero vector to coprime integers whose first nonzero entry
  /// is positive.
  static void normalize(std::span<Rational> v) {
    Integer lcm_den = 1;
    bool any = false;
    for (const auto& a : v) {
      if (sgn(a) != 0) any = true;
      mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), a.get_den_mpz_t());
    }
    if (!any) throw DegenerateInput("zero vector has no projective class");
    Integer g = 0;
    for (auto& a : v) {
      a *= lcm_den;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_num_mpz_t());
    }
    int sign = 0;
    for (const auto& a : v) {
      if (sgn(a) != 0) {
        sign = sgn(a);
        break;
      }
    }
    if (sign < 0) g = -g;
    for (auto& a : v) {
      a /= g;
      a.canonicalize();
    }
  }
};

template <>
struct field_traits<Fp> {
  static constexpr bool is_rational = false;

  static bool is_zero(const Fp& a) { return a.is_zero(); }
  static Fp from_int(long n, const Fp& like) {
    if (!like.bound()) {
      if (n == 0) return Fp{};
      throw InternalInvariantViolation("cannot build a nonzero F_p constant without a modulus");
    }
    return Fp(n, like.modulus());
  }
  static std::int64_t characteristic(const Fp& a) { return a.modulus(); }
  static std::string to_string(const Fp& a) { return std::to_string(a.value()); }

  /// Scales a nonzero vector so its first nonzero entry is 1.
  static void normalize(std::span<Fp> v) {
    for (const auto& a : v) {
      if (!a.is_zero()) {
        Fp inv = a.inverse();
        for (auto& b : v) b *= inv;
        return;
      }
    }
    throw DegenerateInput("zero vector has no projective class");
  }
};

template <class K>
concept ExactField = requires(const K& a, std::span<K> v, long n) {
  { field_traits<K>::is_zero(a) } -> std::convertible_to<bool>;
  { field_traits<K>::from_int(n, a) } -> std::convertible_to<K>;
  field_traits<K>::normalize(v);
};

template <class K>
bool is_zero(const K& a) {
  return field_traits<K>::is_zero(a);
}

template <class K>
K from_int(long n, const K& like) {
  return field_traits<K>::from_int(n, like);
}

}  // namespace sgconic
