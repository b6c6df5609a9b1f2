#pragma once

/**
 * @file cremona.hpp
 * @brief The standard quadratic (Cremona) transformation based at three
 * non-collinear points F, G, H.
 *
 * With M = [F | G | H] (canonical representatives as columns) and
 * T = M^{-1}, the map is
 *
 *     P  ->  M * s(T * P),      s(x : y : z) = (yz : xz : xy).
 *
 * T sends F, G, H to the fundamental points; s is the standard quadratic
 * involution there. The three sides of the base triangle are contracted:
 *
 *     line GH  ->  R_GH = M e_1,   line FH -> R_FH = M e_2,   line FG -> R_FG = M e_3.
 *
 * Since s is an involution, this map is its own inverse on the generic
 * locus, and the inverse is the transformation based at (R_GH, R_FH, R_FG).
 */

#include <array>
#include <variant>

#include "sgconic/conic.hpp"
#include "sgconic/linalg.hpp"
#include "sgconic/projective.hpp"
#include "sgconic/ternary_form.hpp"

namespace sgconic {

enum class BasePoint { F = 0, G = 1, H = 2 };
/// Indexed like the fundamental point they correspond to.
enum class RPoint { GH = 0, FH = 1, FG = 2 };

inline const char* to_string(RPoint r) {
  switch (r) {
    case RPoint::GH: return "R_GH";
    case RPoint::FH: return "R_FH";
    case RPoint::FG: return "R_FG";
  }
  return "?";
}

template <class K>
struct GenericImage {
  ProjPoint<K> point;
};

template <class K>
struct ContractedTo {
  RPoint which;
  ProjPoint<K> point;
};

struct UndefinedAt {
  BasePoint base;
};

template <class K>
using CremonaImage = std::variant<GenericImage<K>, ContractedTo<K>, UndefinedAt>;

template <class K>
using LineImage = std::variant<Conic<K>, ProjLine<K>, ContractedTo<K>>;

/// Degree and multiplicities (at F, G, H on the source side; at R_GH, R_FH,
/// R_FG on the image side) of a plane curve.
struct CurveProfile {
  int degree;
  std::array<int, 3> multiplicities;

  friend bool operator==(const CurveProfile&, const CurveProfile&) = default;
};

/// Degree 2d - m1 - m2 - m3 with multiplicities (d - m2 - m3, d - m1 - m3,
/// d - m1 - m2) at (R_GH, R_FH, R_FG). The curve must be irreducible and
/// not a side of the base triangle.
inline CurveProfile transform_multiplicity_profile(int d, int m1, int m2, int m3) {
  if (d < 1) throw PreconditionViolated("curve degree must be at least 1");
  for (int m : {m1, m2, m3})
    if (m < 0 || m > d) throw PreconditionViolated("multiplicities must lie in [0, d]");
  const int image_degree = 2 * d - m1 - m2 - m3;
  if (image_degree <= 0) throw ContractedCurve("curve is contracted (a side of the base triangle)");
  return {image_degree, {d - m2 - m3, d - m1 - m3, d - m1 - m2}};
}

/// Exact image of a curve: the residual form after the exceptional
/// monomial factor is removed, plus the source and image profiles.
template <class K>
struct CurveImage {
  TernaryForm<K> form;  // in image coordinates; degree 0 means contracted
  CurveProfile source;
  CurveProfile image;
};

template <class K>
class CremonaMap {
 public:
  CremonaMap(const ProjPoint<K>& f, const ProjPoint<K>& g, const ProjPoint<K>& h) : base_{f, g, h} {
    if (f == g || f == h || g == h) throw DegenerateInput("Cremona base points must be distinct");
    if (collinear(f, g, h)) throw DegenerateInput("Cremona base points must not be collinear");
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) from_[i][j] = base_[j][i];
    const K det = det3(from_);
    to_ = adjugate3(from_);
    for (auto& row : to_)
      for (auto& v : row) v /= det;
  }

  const std::array<ProjPoint<K>, 3>& base() const noexcept { return base_; }
  const ProjPoint<K>& base_point(BasePoint b) const { return base_[static_cast<int>(b)]; }
  const Mat3<K>& to_fundamental() const noexcept { return to_; }
  const Mat3<K>& from_fundamental() const noexcept { return from_; }

  /// Image of the side of the base triangle indexed by r.
  ProjPoint<K> r_point(RPoint r) const {
    const int i = static_cast<int>(r);
    return ProjPoint<K>({from_[0][i], from_[1][i], from_[2][i]});
  }

  /// The transformation based at (R_GH, R_FH, R_FG).
  CremonaMap inverse() const { return CremonaMap(r_point(RPoint::GH), r_point(RPoint::FH), r_point(RPoint::FG)); }

  CremonaImage<K> apply(const ProjPoint<K>& p) const {
    const auto x = apply3(to_, p.coords());
    int zeros = 0, last_zero = -1, last_nonzero = -1;
    for (int i = 0; i < 3; ++i) {
      if (is_zero(x[i])) {
        ++zeros;
        last_zero = i;
      } else {
        last_nonzero = i;
      }
    }
    if (zeros == 2) return UndefinedAt{static_cast<BasePoint>(last_nonzero)};
    if (zeros == 1) {
      const auto r = static_cast<RPoint>(last_zero);
      return ContractedTo<K>{r, r_point(r)};
    }
    const std::array<K, 3> y{x[1] * x[2], x[0] * x[2], x[0] * x[1]};
    return GenericImage<K>{ProjPoint<K>(apply3(from_, y))};
  }

  /// The image of a point off the three sides of the base triangle.
  ProjPoint<K> apply_generic(const ProjPoint<K>& p) const {
    auto img = apply(p);
    if (auto* g = std::get_if<GenericImage<K>>(&img)) return g->point;
    throw NotInGenericLocus("point " + p.to_string() + " lies on a side of the base triangle");
  }

  /// True iff p lies on none of the lines FG, FH, GH.
  bool in_generic_locus(const ProjPoint<K>& p) const {
    return std::holds_alternative<GenericImage<K>>(apply(p));
  }

  /// Exact image of the curve {form = 0} (source coordinates).
  CurveImage<K> image_of_curve(const TernaryForm<K>& form) const {
    // Pull back to fundamental coordinates: P = M X.
    TernaryForm<K> g = form.substitute_linear(from_);
    CurveProfile source{g.degree(),
                        {g.multiplicity_at_fundamental(0), g.multiplicity_at_fundamental(1),
                         g.multiplicity_at_fundamental(2)}};
    // Y = s(X), so X = s(Y); the exceptional factor is x^m1 y^m2 z^m3.
    TernaryForm<K> h = g.cremona_substitute();
    h.strip_monomial_factor();
    CurveProfile image{h.degree(),
                       {h.multiplicity_at_fundamental(0), h.multiplicity_at_fundamental(1),
                        h.multiplicity_at_fundamental(2)}};
    // Back to image coordinates: Y = T Q.
    return {h.substitute_linear(to_), source, image};
  }

  /// Image of a line: a conic through the three R points if the line misses
  /// the base points, a line through R_GH / R_FH / R_FG if it passes through
  /// exactly F / G / H, and a single R point for a side of the triangle.
  LineImage<K> image_of_line(const ProjLine<K>& l) const {
    const CurveImage<K> img = image_of_curve(TernaryForm<K>::from_line(l));
    if (auto c = img.form.as_conic()) return *c;
    if (auto m = img.form.as_line()) return *m;
    // A side through two base points; the missing one names the R point.
    for (int i = 0; i < 3; ++i) {
      if (!incident(base_[i], l)) {
        const auto r = static_cast<RPoint>(i);
        return ContractedTo<K>{r, r_point(r)};
      }
    }
    throw InternalInvariantViolation("line through all three Cremona base points");
  }

 private:
  std::array<ProjPoint<K>, 3> base_;
  Mat3<K> from_{};
  Mat3<K> to_{};
};

}  // namespace sgconic
