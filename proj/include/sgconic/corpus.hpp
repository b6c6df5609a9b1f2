#pragma once

/**
 * @file corpus.hpp
 * @brief Deterministic point-set generators: structured witnesses and
 * seeded random configurations.
 */

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "sgconic/conic.hpp"
#include "sgconic/oracle.hpp"
#include "sgconic/point_config.hpp"
#include "sgconic/random.hpp"

namespace sgconic::corpus {

/// S = (0:1:0) and the three chords of y^2 = xz through S, meeting the conic
/// at (1 : t : t^2) and (1 : -t : t^2). Every ordinary conic of the result
/// is a pair of lines through S.
inline PointConfig<Rational> gen_singular_only(const Rational& t1, const Rational& t2, const Rational& t3) {
  std::set<Rational> values;
  for (const Rational* t : {&t1, &t2, &t3}) {
    values.insert(*t);
    values.insert(Rational(-*t));
  }
  if (values.size() != 6 || values.count(Rational(0)))
    throw DegenerateInput("chord parameters must be nonzero with distinct absolute values");
  std::vector<ProjPoint<Rational>> pts{point_q(0, 1, 0)};
  for (const Rational* t : {&t1, &t2, &t3}) {
    const Rational sq = *t * *t;
    pts.emplace_back(std::array<Rational, 3>{Rational(1), *t, sq});
    pts.emplace_back(std::array<Rational, 3>{Rational(1), Rational(-*t), sq});
  }
  return PointConfig<Rational>(std::move(pts));
}

inline PointConfig<Rational> gen_singular_only() { return gen_singular_only(Rational(1), Rational(2), Rational(3)); }

/// Triangle (0:0:1), (1:0:1), (0:1:1), its edge midpoints and centroid.
inline PointConfig<Rational> gen_triangle_midpoints_centroid() {
  return PointConfig<Rational>({point_q(0, 0, 1), point_q(1, 0, 1), point_q(0, 1, 1), point_q(1, 0, 2),
                                point_q(0, 1, 2), point_q(1, 1, 2), point_q(1, 1, 3)});
}

inline constexpr std::int64_t kGeneralPositionBound = 100;

/// n points with no three collinear and no six on a conic, drawn from
/// integer triples in [-100, 100]^3 by rejection.
inline PointConfig<Rational> gen_general_position(std::size_t n, std::uint64_t seed) {
  if (n < 1) throw DegenerateInput("general position needs n >= 1");
  Xorshift64Star rng(seed);
  std::vector<ProjPoint<Rational>> pts;
  std::vector<Conic<Rational>> conics;  // one per 5-subset accepted so far
  const std::uint64_t budget = 10000 * static_cast<std::uint64_t>(n);
  for (std::uint64_t draws = 0; pts.size() < n; ++draws) {
    if (draws >= budget) throw GenerationFailed("general position: retry budget exhausted");
    std::array<Rational, 3> c;
    for (auto& v : c) v = Rational(rng.uniform(-kGeneralPositionBound, kGeneralPositionBound));
    if (sgn(c[0]) == 0 && sgn(c[1]) == 0 && sgn(c[2]) == 0) continue;
    ProjPoint<Rational> p(c);
    bool ok = std::find(pts.begin(), pts.end(), p) == pts.end();
    for (std::size_t i = 0; ok && i < pts.size(); ++i)
      for (std::size_t j = i + 1; ok && j < pts.size(); ++j)
        if (collinear(pts[i], pts[j], p)) ok = false;
    for (std::size_t i = 0; ok && i < conics.size(); ++i)
      if (conics[i].contains(p)) ok = false;
    if (!ok) continue;
    // New 5-subsets all contain p: p plus any 4 earlier points.
    if (pts.size() >= 4) {
      std::vector<std::size_t> comb{0, 1, 2, 3};
      do {
        std::vector<ProjPoint<Rational>> five{pts[comb[0]], pts[comb[1]], pts[comb[2]], pts[comb[3]], p};
        conics.push_back(conic_through_five(std::span<const ProjPoint<Rational>>(five)).conic);
      } while (oracle::detail::next_combination(comb, pts.size()));
    }
    pts.push_back(p);
  }
  return PointConfig<Rational>(std::move(pts));
}

/// Number of distinct projective points with integer coordinates in
/// [-bound, bound]; exact for small bounds, otherwise a cheap upper bound.
inline std::uint64_t grid_capacity(std::int64_t bound) {
  const std::uint64_t side = 2 * static_cast<std::uint64_t>(bound) + 1;
  if (bound > 40) return (side * side * side - 1) / 2;
  std::uint64_t primitive = 0;
  for (std::int64_t x = -bound; x <= bound; ++x)
    for (std::int64_t y = -bound; y <= bound; ++y)
      for (std::int64_t z = -bound; z <= bound; ++z) {
        if (x == 0 && y == 0 && z == 0) continue;
        if (std::gcd(std::gcd(x, y), z) == 1) ++primitive;
      }
  return primitive / 2;
}

/// n distinct points with integer coordinates in [-bound, bound].
inline PointConfig<Rational> gen_random_rational(std::size_t n, std::uint64_t seed, std::int64_t bound) {
  if (n < 1) throw DegenerateInput("random configuration needs n >= 1");
  if (bound < 1) throw DegenerateInput("coordinate bound must be >= 1");
  if (n > grid_capacity(bound))
    throw GenerationFailed(std::to_string(n) + " points do not fit in a grid of bound " + std::to_string(bound));
  Xorshift64Star rng(seed);
  std::vector<ProjPoint<Rational>> pts;
  std::set<ProjPoint<Rational>> seen;
  const std::uint64_t budget = 1000 * static_cast<std::uint64_t>(n) + 100000;
  for (std::uint64_t draws = 0; pts.size() < n; ++draws) {
    if (draws >= budget) throw GenerationFailed("random configuration: retry budget exhausted");
    std::array<Rational, 3> c;
    for (auto& v : c) v = Rational(rng.uniform(-bound, bound));
    if (sgn(c[0]) == 0 && sgn(c[1]) == 0 && sgn(c[2]) == 0) continue;
    ProjPoint<Rational> p(c);
    if (seen.insert(p).second) pts.push_back(p);
  }
  return PointConfig<Rational>(std::move(pts));
}

inline PointConfig<Fp> gen_finite_plane_full(std::int64_t p) {
  return PointConfig<Fp>(oracle::finite_plane(p).points);
}

enum class GeneratorKind { SingularOnly, GeneralPosition, FinitePlaneFull, TriangleMidpointsCentroid, Random };

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::Random;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::int64_t p = 5;
  std::int64_t bound = 10;
  std::array<Rational, 3> chords{Rational(1), Rational(2), Rational(3)};
};

inline AnyConfig generate(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GeneratorKind::SingularOnly: return gen_singular_only(spec.chords[0], spec.chords[1], spec.chords[2]);
    case GeneratorKind::GeneralPosition: return gen_general_position(spec.n, spec.seed);
    case GeneratorKind::FinitePlaneFull: return gen_finite_plane_full(spec.p);
    case GeneratorKind::TriangleMidpointsCentroid: return gen_triangle_midpoints_centroid();
    case GeneratorKind::Random: return gen_random_rational(spec.n, spec.seed, spec.bound);
  }
  throw DegenerateInput("unknown generator kind");
}

}  // namespace sgconic::corpus
