#pragma once

/**
 * @file ternary_form.hpp
 * @brief Homogeneous polynomials in x, y, z with exact coefficients.
 *
 * Just enough polynomial algebra to push curves through a quadratic
 * transformation: linear substitution, the monomial substitution
 * (x, y, z) -> (yz, xz, xy), and stripping a common monomial factor.
 */

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <vector>

#include "sgconic/conic.hpp"
#include "sgconic/projective.hpp"

namespace sgconic {

using Exponent = std::array<int, 3>;

template <class K>
class TernaryForm {
 public:
  explicit TernaryForm(int degree) : degree_(degree) {}

  static TernaryForm from_line(const ProjLine<K>& l) {
    TernaryForm f(1);
    f.add({1, 0, 0}, l[0]);
    f.add({0, 1, 0}, l[1]);
    f.add({0, 0, 1}, l[2]);
    return f;
  }

  static TernaryForm from_conic(const Conic<K>& c) {
    TernaryForm f(2);
    f.add({2, 0, 0}, c[0]);
    f.add({0, 2, 0}, c[1]);
    f.add({0, 0, 2}, c[2]);
    f.add({1, 1, 0}, c[3]);
    f.add({1, 0, 1}, c[4]);
    f.add({0, 1, 1}, c[5]);
    return f;
  }

  int degree() const noexcept { return degree_; }
  const std::map<Exponent, K>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add(const Exponent& e, const K& c) {
    if (sgconic::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (sgconic::is_zero(it->second)) terms_.erase(it);
    }
  }

  K evaluate(const ProjPoint<K>& p) const {
    K acc{};
    for (const auto& [e, c] : terms_) {
      K t = c;
      for (int i = 0; i < 3; ++i)
        for (int k = 0; k < e[i]; ++k) t *= p[i];
      acc += t;
    }
    return acc;
  }

  /// Multiplicity at the fundamental point e_i: d minus the largest power
  /// of x_i that occurs.
  int multiplicity_at_fundamental(std::size_t i) const {
    int top = 0;
    for (const auto& [e, c] : terms_) top = std::max(top, e[i]);
    return degree_ - top;
  }

  friend TernaryForm operator*(const TernaryForm& a, const TernaryForm& b) {
    TernaryForm r(a.degree_ + b.degree_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_)
        r.add({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    return r;
  }

  /// f(T X): substitutes each variable by the corresponding row of t.
  TernaryForm substitute_linear(const Mat3<K>& t) const {
    std::array<TernaryForm, 3> rows{TernaryForm(1), TernaryForm(1), TernaryForm(1)};
    for (int i = 0; i < 3; ++i) {
      rows[i].add({1, 0, 0}, t[i][0]);
      rows[i].add({0, 1, 0}, t[i][1]);
      rows[i].add({0, 0, 1}, t[i][2]);
    }
    TernaryForm out(degree_);
    for (const auto& [e, c] : terms_) {
      TernaryForm term(0);
      term.add({0, 0, 0}, c);
      for (int i = 0; i < 3; ++i)
        for (int k = 0; k < e[i]; ++k) term = term * rows[i];
      for (const auto& [e2, c2] : term.terms_) out.add(e2, c2);
    }
    return out;
  }

  /// f(yz, xz, xy).
  TernaryForm cremona_substitute() const {
    TernaryForm out(2 * degree_);
    for (const auto& [e, c] : terms_) out.add({e[1] + e[2], e[0] + e[2], e[0] + e[1]}, c);
    return out;
  }

  /// Splits off the largest monomial factor x^a y^b z^c; returns (a, b, c)
  /// and leaves the residual form in place.
  Exponent strip_monomial_factor() {
    if (terms_.empty()) return {0, 0, 0};
    Exponent m = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
      for (int i = 0; i < 3; ++i) m[i] = std::min(m[i], e[i]);
    std::map<Exponent, K> stripped;
    for (auto& [e, c] : terms_) stripped.emplace(Exponent{e[0] - m[0], e[1] - m[1], e[2] - m[2]}, c);
    terms_ = std::move(stripped);
    degree_ -= m[0] + m[1] + m[2];
    return m;
  }

  std::optional<ProjLine<K>> as_line() const {
    if (degree_ != 1 || terms_.empty()) return std::nullopt;
    return ProjLine<K>({coeff({1, 0, 0}), coeff({0, 1, 0}), coeff({0, 0, 1})});
  }

  std::optional<Conic<K>> as_conic() const {
    if (degree_ != 2 || terms_.empty()) return std::nullopt;
    return Conic<K>(std::array<K, 6>{coeff({2, 0, 0}), coeff({0, 2, 0}), coeff({0, 0, 2}), coeff({1, 1, 0}),
                                     coeff({1, 0, 1}), coeff({0, 1, 1})});
  }

  K coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? K{} : it->second;
  }

 private:
  int degree_;
  std::map<Exponent, K> terms_;
};

}  // namespace sgconic
