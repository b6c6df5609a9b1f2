#pragma once

/**
 * @file finder.hpp
 * @brief Constructive ordinary-conic finder.
 *
 * For a finite rational point set P the finder returns either a conic
 * containing all of P, or a conic through exactly five points of P that is
 * uniquely determined by them. The search follows a case analysis:
 *
 *  - MainB: some line carries exactly three points. Remove them; the rest
 *    is collinear (done) or has an ordinary line M, and L * M works.
 *  - MainC: two ordinary lines FG, FH meet at a point F of P. Apply the
 *    quadratic transformation based at F, G, H to the points off the base
 *    triangle and look for an ordinary line of the image set (Case 2) or
 *    use the line carrying the whole image set (Case 1).
 *
 * Every returned ordinary conic is re-verified exactly before it leaves this
 * header. Ties are broken by the lexicographic order on canonical
 * coordinates, so traces are reproducible.
 */

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sgconic/conic.hpp"
#include "sgconic/cremona.hpp"
#include "sgconic/incidence.hpp"
#include "sgconic/point_config.hpp"

namespace sgconic {

enum class CaseLabel { MainA, MainB, MainC, TripleLine, Sub1a, Sub1b, Sub1c, Sub2a, Sub2b };

inline const char* to_string(CaseLabel c) {
  switch (c) {
    case CaseLabel::MainA: return "MainA";
    case CaseLabel::MainB: return "MainB";
    case CaseLabel::MainC: return "MainC";
    case CaseLabel::TripleLine: return "TripleLine";
    case CaseLabel::Sub1a: return "Sub1a";
    case CaseLabel::Sub1b: return "Sub1b";
    case CaseLabel::Sub1c: return "Sub1c";
    case CaseLabel::Sub2a: return "Sub2a";
    case CaseLabel::Sub2b: return "Sub2b";
  }
  return "?";
}

using CaseTrace = std::vector<CaseLabel>;

struct CollinearCase {};

template <class K>
struct TripleLineCase {
  ProjLine<K> line;
};

template <class K>
struct IntersectingPair {
  ProjPoint<K> f;
  ProjLine<K> l1;  // ordinary line F G
  ProjLine<K> l2;  // ordinary line F H
  ProjPoint<K> g;
  ProjPoint<K> h;
};

template <class K>
using MainCase = std::variant<CollinearCase, TripleLineCase<K>, IntersectingPair<K>>;

template <class K>
struct AllOnConic {
  Conic<K> conic;
  CaseTrace trace;  // empty when decided by the upfront rank check
};

template <class K>
struct OrdinaryConic {
  Conic<K> conic;
  std::array<ProjPoint<K>, 5> witness;  // canonical order
  CaseTrace trace;
};

template <class K>
using SGConicResult = std::variant<AllOnConic<K>, OrdinaryConic<K>>;

/// Root-to-leaf paths of the case tree that may label each result kind.
inline bool is_valid_trace(const CaseTrace& t, bool ordinary) {
  using C = CaseLabel;
  static const std::vector<CaseTrace> ordinary_paths = {
      {C::MainB, C::TripleLine}, {C::MainC, C::Sub1a}, {C::MainC, C::Sub1c},
      {C::MainC, C::Sub1c, C::TripleLine}, {C::MainC, C::Sub2a}, {C::MainC, C::Sub2b, C::TripleLine}};
  static const std::vector<CaseTrace> all_on_paths = {
      {},
      {C::MainB, C::TripleLine},
      {C::MainC},
      {C::MainC, C::Sub1a},
      {C::MainC, C::Sub1b},
      {C::MainC, C::Sub1c},
      {C::MainC, C::Sub1c, C::TripleLine},
      {C::MainC, C::Sub2b, C::TripleLine}};
  const auto& paths = ordinary ? ordinary_paths : all_on_paths;
  return std::find(paths.begin(), paths.end(), t) != paths.end();
}

namespace detail {

template <class K>
std::vector<ProjPoint<K>> points_on_line(std::span<const ProjPoint<K>> pts, const ProjLine<K>& l) {
  std::vector<ProjPoint<K>> out;
  for (const auto& p : pts)
    if (incident(p, l)) out.push_back(p);
  std::sort(out.begin(), out.end());
  return out;
}

/// First coordinate line [1:0:0], [0:1:0], [0:0:1] different from l.
template <class K>
ProjLine<K> coordinate_line_other_than(const ProjLine<K>& l) {
  const K one = one_like(l);
  for (std::size_t i = 0; i < 3; ++i) {
    std::array<K, 3> c{};
    c[i] = one;
    ProjLine<K> m(c);
    if (!(m == l)) return m;
  }
  throw InternalInvariantViolation("no coordinate line differs from " + l.to_string());
}

/// Line through p and the first fundamental point different from p.
template <class K>
ProjLine<K> canonical_line_through(const ProjPoint<K>& p) {
  for (std::size_t i = 0; i < 3; ++i) {
    ProjPoint<K> e = fundamental_point(i, one_like(p));
    if (!(e == p)) return line_through(p, e);
  }
  throw InternalInvariantViolation("unreachable: a point equal to all fundamental points");
}

template <class K>
void verify_all_on(std::span<const ProjPoint<K>> pts, const Conic<K>& c, const char* where) {
  for (const auto& p : pts)
    if (!c.contains(p))
      throw InternalInvariantViolation(std::string(where) + ": conic " + c.to_string() + " misses " + p.to_string());
}

/// Exactly the five witnesses lie on the conic, and they determine it.
template <class K>
OrdinaryConic<K> verified_ordinary(std::span<const ProjPoint<K>> pts, std::vector<ProjPoint<K>> five,
                                   CaseTrace trace, const char* where) {
  std::sort(five.begin(), five.end());
  if (five.size() != 5 || std::adjacent_find(five.begin(), five.end()) != five.end())
    throw InternalInvariantViolation(std::string(where) + ": witness is not five distinct points");
  auto fit = conic_through_five(std::span<const ProjPoint<K>>(five));
  if (!fit.determined)
    throw InternalInvariantViolation(std::string(where) + ": witnesses do not determine a unique conic");
  auto on = points_on_conic(fit.conic, pts);
  if (on != five)
    throw InternalInvariantViolation(std::string(where) + ": conic " + fit.conic.to_string() + " meets the set in " +
                                     std::to_string(on.size()) + " points");
  OrdinaryConic<K> out{fit.conic, {five[0], five[1], five[2], five[3], five[4]}, std::move(trace)};
  return out;
}

inline CaseTrace extend(CaseTrace t, CaseLabel c) {
  t.push_back(c);
  return t;
}

}  // namespace detail

/// Which of the three main cases applies. An intersecting ordinary pair is
/// preferred over a three-point line.
template <class K>
MainCase<K> classify_main_case(std::span<const ProjPoint<K>> pts) {
  const auto prof = incidence_profile(pts);
  if (prof.all_collinear()) return CollinearCase{};
  std::map<ProjPoint<K>, std::vector<const DeterminedLine<K>*>> ordinary_at;
  for (const auto& dl : prof.lines)
    if (dl.points.size() == 2)
      for (const auto& p : dl.points) ordinary_at[p].push_back(&dl);
  for (const auto& [f, lines] : ordinary_at) {
    if (lines.size() < 2) continue;
    const auto* a = lines[0];
    const auto* b = lines[1];
    const auto& g = a->points[0] == f ? a->points[1] : a->points[0];
    const auto& h = b->points[0] == f ? b->points[1] : b->points[0];
    return IntersectingPair<K>{f, a->line, b->line, g, h};
  }
  for (const auto& dl : prof.lines)
    if (dl.points.size() == 3) return TripleLineCase<K>{dl.line};
  throw InternalInvariantViolation("no main case applies: no three-point line and no intersecting ordinary lines");
}

template <class K>
MainCase<K> classify_main_case(const PointConfig<K>& cfg) {
  return classify_main_case(cfg.points());
}

/// Resolution when the line l carries exactly three points of the set.
template <class K>
SGConicResult<K> resolve_triple_line(std::span<const ProjPoint<K>> pts, const ProjLine<K>& l,
                                     CaseTrace trace = {CaseLabel::MainB}) {
  trace.push_back(CaseLabel::TripleLine);
  const auto on_l = detail::points_on_line(pts, l);
  if (on_l.size() != 3)
    throw PreconditionViolated("resolve_triple_line: line " + l.to_string() + " carries " +
                               std::to_string(on_l.size()) + " points, not 3");
  std::vector<ProjPoint<K>> rest;
  for (const auto& p : pts)
    if (!incident(p, l)) rest.push_back(p);
  std::sort(rest.begin(), rest.end());

  auto all_on = [&](const ProjLine<K>& m) -> SGConicResult<K> {
    Conic<K> c = conic_from_lines(l, m);
    detail::verify_all_on(pts, c, "TripleLine");
    return AllOnConic<K>{c, trace};
  };
  if (rest.empty()) return all_on(detail::coordinate_line_other_than(l));
  if (rest.size() == 1) return all_on(detail::canonical_line_through(rest[0]));
  if (all_collinear(std::span<const ProjPoint<K>>(rest))) return all_on(line_through(rest[0], rest[1]));

  const auto ord = ordinary_lines(std::span<const ProjPoint<K>>(rest));
  if (ord.empty()) throw InternalInvariantViolation("non-collinear residual set without an ordinary line");
  const auto& m = ord.front();
  std::vector<ProjPoint<K>> five = on_l;
  five.push_back(m.points.first);
  five.push_back(m.points.second);
  auto res = detail::verified_ordinary(pts, std::move(five), trace, "TripleLine");
  if (!(res.conic == conic_from_lines(l, m.line)))
    throw InternalInvariantViolation("TripleLine: fitted conic differs from L * M");
  return res;
}

template <class K>
SGConicResult<K> resolve_triple_line(const PointConfig<K>& cfg, const ProjLine<K>& l,
                                     CaseTrace trace = {CaseLabel::MainB}) {
  return resolve_triple_line(cfg.points(), l, std::move(trace));
}

/// Resolution from two ordinary lines FG and FH meeting at F.
template <class K>
SGConicResult<K> resolve_cremona_case(std::span<const ProjPoint<K>> pts, const ProjPoint<K>& f,
                                      const ProjPoint<K>& g, const ProjPoint<K>& h,
                                      CaseTrace trace = {CaseLabel::MainC}) {
  using detail::extend;
  using detail::points_on_line;
  using Pts = std::span<const ProjPoint<K>>;

  if (f == g || f == h || g == h) throw PreconditionViolated("F, G, H must be distinct");
  const ProjLine<K> fg = line_through(f, g);
  const ProjLine<K> fh = line_through(f, h);
  {
    const auto on_fg = points_on_line(pts, fg);
    const auto on_fh = points_on_line(pts, fh);
    auto pair = [](const ProjPoint<K>& a, const ProjPoint<K>& b) {
      std::vector<ProjPoint<K>> v{a, b};
      std::sort(v.begin(), v.end());
      return v;
    };
    if (on_fg != pair(f, g) || on_fh != pair(f, h))
      throw PreconditionViolated("FG and FH must be ordinary lines of the configuration");
  }
  const ProjLine<K> gh = line_through(g, h);
  const auto on_gh = points_on_line(pts, gh);
  const bool gh_ordinary = on_gh.size() == 2;

  std::vector<ProjPoint<K>> rest;  // points off the base triangle
  for (const auto& p : pts)
    if (!incident(p, fg) && !incident(p, fh) && !incident(p, gh)) rest.push_back(p);
  std::sort(rest.begin(), rest.end());

  if (rest.empty()) {
    Conic<K> c = conic_from_lines(gh, fg);
    detail::verify_all_on(pts, c, "MainC");
    return AllOnConic<K>{c, trace};
  }

  const CremonaMap<K> phi(f, g, h);
  const CremonaMap<K> phi_inv = phi.inverse();
  const ProjPoint<K> r_gh = phi.r_point(RPoint::GH);
  const ProjPoint<K> r_fh = phi.r_point(RPoint::FH);
  const ProjPoint<K> r_fg = phi.r_point(RPoint::FG);

  std::map<ProjPoint<K>, ProjPoint<K>> preimage;
  std::vector<ProjPoint<K>> image;
  for (const auto& p : rest) {
    ProjPoint<K> q = phi.apply_generic(p);
    preimage.emplace(q, p);
    image.push_back(q);
  }
  std::sort(image.begin(), image.end());
  if (preimage.size() != rest.size()) throw InternalInvariantViolation("quadratic map is not injective off the triangle");

  auto preimage_line = [&](const ProjLine<K>& l) -> ProjLine<K> {
    auto img = phi_inv.image_of_line(l);
    if (auto* m = std::get_if<ProjLine<K>>(&img)) return *m;
    throw InternalInvariantViolation("expected the preimage of " + l.to_string() + " to be a line");
  };
  auto preimage_conic = [&](const ProjLine<K>& l) -> Conic<K> {
    auto img = phi_inv.image_of_line(l);
    if (auto* c = std::get_if<Conic<K>>(&img)) return *c;
    throw InternalInvariantViolation("expected the preimage of " + l.to_string() + " to be a conic");
  };
  auto all_on = [&](const Conic<K>& c, CaseTrace t) -> SGConicResult<K> {
    detail::verify_all_on(pts, c, "MainC");
    return AllOnConic<K>{c, std::move(t)};
  };
  auto others_on_gh = [&]() {
    std::vector<ProjPoint<K>> v;
    for (const auto& p : on_gh)
      if (!(p == g) && !(p == h)) v.push_back(p);
    return v;
  };

  if (all_collinear(Pts(image))) {
    // Case 1. A single image point gets the line through it and R_GH.
    const ProjLine<K> l = image.size() == 1 ? line_through(image[0], r_gh) : line_through(image[0], image[1]);
    const bool via_gh = incident(r_gh, l), via_fh = incident(r_fh, l), via_fg = incident(r_fg, l);
    if (int(via_gh) + int(via_fh) + int(via_fg) > 1)
      throw InternalInvariantViolation("image line passes through two contracted points");

    if (!via_gh && !via_fh && !via_fg) {
      const CaseTrace t = extend(trace, CaseLabel::Sub1a);
      const Conic<K> d = preimage_conic(l);
      if (gh_ordinary) return all_on(d, t);
      if (rest.size() < 2) throw InternalInvariantViolation("Subcase 1a with fewer than two residual points");
      const auto u = others_on_gh().front();
      return detail::verified_ordinary(pts, {rest[0], rest[1], u, f, g}, t, "Sub1a");
    }
    if (via_gh) {
      const ProjLine<K> d = preimage_line(l);
      return all_on(conic_from_lines(d, gh), extend(trace, CaseLabel::Sub1b));
    }
    // Through R_FG: the preimage passes through H. Through R_FH: through G.
    const CaseTrace t = extend(trace, CaseLabel::Sub1c);
    const ProjLine<K> d = preimage_line(l);
    const ProjPoint<K>& apex = via_fg ? h : g;
    const ProjLine<K>& side = via_fg ? fg : fh;
    if (gh_ordinary) return all_on(conic_from_lines(d, side), t);
    if (on_gh.size() == 3) return resolve_triple_line(pts, gh, t);
    const auto uv = others_on_gh();
    std::vector<ProjPoint<K>> st;
    for (const auto& p : points_on_line(pts, d))
      if (!(p == apex)) st.push_back(p);
    if (st.size() < 2) throw InternalInvariantViolation("Subcase 1c with fewer than two points on D");
    return detail::verified_ordinary(pts, {f, uv[0], uv[1], st[0], st[1]}, t, "Sub1c");
  }

  // Case 2: image set not collinear, so it has ordinary lines.
  const auto ord = ordinary_lines(Pts(image));
  for (const auto& ol : ord) {
    if (incident(r_gh, ol.line) || incident(r_fh, ol.line) || incident(r_fg, ol.line)) continue;
    const Conic<K> c = preimage_conic(ol.line);
    const auto& s = preimage.at(ol.points.first);
    const auto& t = preimage.at(ol.points.second);
    auto res = detail::verified_ordinary(pts, {s, t, f, g, h}, extend(trace, CaseLabel::Sub2a), "Sub2a");
    if (!(res.conic == c)) throw InternalInvariantViolation("Sub2a: fitted conic differs from the preimage conic");
    return res;
  }
  for (const auto& ol : ord) {
    if (!incident(r_fg, ol.line) && !incident(r_fh, ol.line)) continue;
    const ProjLine<K> d = preimage_line(ol.line);
    if (points_on_line(pts, d).size() != 3)
      throw InternalInvariantViolation("Sub2b: preimage line does not carry exactly three points");
    return resolve_triple_line(pts, d, extend(trace, CaseLabel::Sub2b));
  }
  throw InternalInvariantViolation("Subcase 2c reached: every ordinary line of the image passes through R_GH");
}

template <class K>
SGConicResult<K> resolve_cremona_case(const PointConfig<K>& cfg, const ProjPoint<K>& f, const ProjPoint<K>& g,
                                      const ProjPoint<K>& h, CaseTrace trace = {CaseLabel::MainC}) {
  return resolve_cremona_case(cfg.points(), f, g, h, std::move(trace));
}

/// Either a conic through every point, or a verified ordinary conic.
/// Only defined over the rationals; over F_p the statement is false.
template <class K>
SGConicResult<K> find_ordinary_conic(const PointConfig<K>& cfg) {
  if constexpr (!field_traits<K>::is_rational) {
    throw UnsupportedField("the ordinary conic finder only runs over the rationals");
  } else {
    const auto pts = cfg.points();
    if (auto c = conic_contains_all(pts)) {
      detail::verify_all_on(pts, *c, "rank check");
      return AllOnConic<K>{*c, {}};
    }
    const auto mc = classify_main_case(pts);
    if (std::holds_alternative<CollinearCase>(mc))
      throw InternalInvariantViolation("collinear set survived the rank check");
    SGConicResult<K> res = std::holds_alternative<TripleLineCase<K>>(mc)
                               ? resolve_triple_line(pts, std::get<TripleLineCase<K>>(mc).line)
                               : [&] {
                                   const auto& ip = std::get<IntersectingPair<K>>(mc);
                                   return resolve_cremona_case(pts, ip.f, ip.g, ip.h);
                                 }();
    if (std::holds_alternative<AllOnConic<K>>(res))
      throw InternalInvariantViolation("case analysis put every point on a conic after the rank check ruled it out");
    return res;
  }
}

}  // namespace sgconic
