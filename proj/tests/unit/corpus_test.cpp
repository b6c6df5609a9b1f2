#include <gtest/gtest.h>

#include "sgconic/corpus.hpp"
#include "sgconic/incidence.hpp"
#include "sgconic/oracle.hpp"
#include "support/builders.hpp"
#include "support/reference.hpp"

using namespace sgconic;
using testing_support::to_ref;

namespace {

using Pts = std::span<const ProjPoint<Rational>>;

}  // namespace

TEST(Xorshift, StreamMatchesDocumentedRecurrence) {
  // Values computed independently from the documented update equations.
  Xorshift64Star a(0);
  EXPECT_EQ(a.next(), 0x7bbcb40d550682d0ULL);
  EXPECT_EQ(a.next(), 0xde7fe413d00cc9fdULL);
  EXPECT_EQ(a.next(), 0xb3c638353c668c91ULL);
  Xorshift64Star b(42);
  EXPECT_EQ(b.next(), 0x31b0ece7c4f697a2ULL);
  EXPECT_EQ(b.next(), 0x9008a3b1cb686f03ULL);
  EXPECT_EQ(b.next(), 0x7c7173abd97be16fULL);
}

TEST(Xorshift, UniformStaysInRange) {
  Xorshift64Star r(7);
  std::set<std::int64_t> seen;
  for (int i = 0; i < 2000; ++i) {
    const auto v = r.uniform(-3, 3);
    ASSERT_GE(v, -3);
    ASSERT_LE(v, 3);
    seen.insert(v);
  }
  EXPECT_EQ(seen.size(), 7u);
}

TEST(SingularOnly, DefaultInstance) {
  const auto cfg = corpus::gen_singular_only();
  ASSERT_EQ(cfg.size(), 7u);
  const auto expect = testing_support::pts_q(
      {{0, 1, 0}, {1, 1, 1}, {1, -1, 1}, {1, 2, 4}, {1, -2, 4}, {1, 3, 9}, {1, -3, 9}});
  EXPECT_EQ(std::vector<ProjPoint<Rational>>(cfg.points().begin(), cfg.points().end()), expect);
}

TEST(SingularOnly, ConstructionInvariants) {
  ref::Gen g(81);
  const std::array<ref::Q, 6> parabola{0, 1, 0, 0, -1, 0};  // y^2 - xz
  for (int t = 0; t < 50; ++t) {
    std::array<Rational, 3> ts;
    for (auto& v : ts) {
      v = Rational(g.int_in(-20, 20), g.int_in(1, 6));
      v.canonicalize();
    }
    std::set<Rational> abs_values;
    bool ok = true;
    for (auto& v : ts) ok &= sgn(v) != 0 && abs_values.insert(abs(v)).second;
    if (!ok) {
      EXPECT_THROW(corpus::gen_singular_only(ts[0], ts[1], ts[2]), DegenerateInput);
      continue;
    }
    const auto cfg = corpus::gen_singular_only(ts[0], ts[1], ts[2]);
    const auto pts = to_ref(cfg.points());
    ASSERT_EQ(pts.size(), 7u);
    const auto s = to_ref(point_q(0, 1, 0));
    EXPECT_NE(sgn(ref::conic_eval(parabola, s)), 0);
    std::size_t on = 0;
    for (const auto& p : pts) on += sgn(ref::conic_eval(parabola, p)) == 0;
    EXPECT_EQ(on, 6u);
    // Chord partners are collinear with S.
    for (const auto& v : ts) {
      const ref::V3 a{1, v, v * v}, b{1, -v, v * v};
      EXPECT_TRUE(ref::collinear(s, a, b));
    }
  }
  EXPECT_THROW(corpus::gen_singular_only(Rational(1), Rational(-1), Rational(2)), DegenerateInput);
  EXPECT_THROW(corpus::gen_singular_only(Rational(0), Rational(1), Rational(2)), DegenerateInput);
}

TEST(GeneralPosition, ReverifiedIndependently) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    for (std::size_t n : {1u, 5u, 6u, 8u}) {
      const auto cfg = corpus::gen_general_position(n, seed);
      const auto pts = to_ref(cfg.points());
      ASSERT_EQ(pts.size(), n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          for (std::size_t k = j + 1; k < n; ++k) EXPECT_FALSE(ref::collinear(pts[i], pts[j], pts[k]));
      if (n < 6) continue;
      std::vector<std::size_t> c{0, 1, 2, 3, 4};
      do {
        const auto q = ref::conic_by_minors({pts[c[0]], pts[c[1]], pts[c[2]], pts[c[3]], pts[c[4]]});
        EXPECT_FALSE(ref::all_zero(q));
        std::size_t on = 0;
        for (const auto& p : pts) on += sgn(ref::conic_eval(q, p)) == 0;
        EXPECT_EQ(on, 5u);
      } while (oracle::detail::next_combination(c, n));
    }
  }
  EXPECT_FALSE(conic_contains_all(corpus::gen_general_position(6, 11).points()).has_value());
}

TEST(GeneralPosition, SevenPointsGiveSmoothCertificates) {
  const auto certs = oracle::enumerate_ordinary_conics(corpus::gen_general_position(7, 2).points());
  EXPECT_EQ(certs.size(), 21u);
  for (const auto& c : certs) EXPECT_FALSE(c.singular);
}

TEST(Triangle, Shape) {
  const auto cfg = corpus::gen_triangle_midpoints_centroid();
  EXPECT_EQ(cfg.size(), 7u);
  const auto prof = incidence_profile(cfg);
  EXPECT_EQ(prof.t(2), 3u);
  EXPECT_EQ(prof.t(3), 6u);
  EXPECT_EQ(Rational(static_cast<long>(prof.t(2))), Rational(static_cast<long>(3 * prof.s)) / 7);
}

TEST(Random, DeterministicAndDistinct) {
  const auto a = corpus::gen_random_rational(12, 42, 10);
  const auto b = corpus::gen_random_rational(12, 42, 10);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.size(), 12u);
  for (const auto& p : a.points())
    for (int i = 0; i < 3; ++i) EXPECT_LE(abs(p[i]), 10);
  EXPECT_NE(a, corpus::gen_random_rational(12, 43, 10));
  EXPECT_EQ(corpus::gen_random_rational(1, 5, 3).size(), 1u);
}

TEST(Random, CapacityAndErrors) {
  // Coordinates in {-1, 0, 1}: 26 nonzero vectors, 13 projective points.
  EXPECT_EQ(corpus::grid_capacity(1), 13u);
  EXPECT_EQ(corpus::gen_random_rational(13, 1, 1).size(), 13u);
  EXPECT_THROW(corpus::gen_random_rational(14, 1, 1), GenerationFailed);
  EXPECT_THROW(corpus::gen_random_rational(0, 1, 1), DegenerateInput);
  EXPECT_THROW(corpus::gen_random_rational(3, 1, 0), DegenerateInput);

  // Brute-force count of primitive classes for bound 2.
  std::set<ProjPoint<Rational>> classes;
  for (long x = -2; x <= 2; ++x)
    for (long y = -2; y <= 2; ++y)
      for (long z = -2; z <= 2; ++z)
        if (x || y || z) classes.insert(point_q(x, y, z));
  EXPECT_EQ(corpus::grid_capacity(2), classes.size());
}

TEST(Generate, DispatchesOnKind) {
  corpus::GeneratorSpec spec;
  spec.kind = corpus::GeneratorKind::FinitePlaneFull;
  spec.p = 5;
  const auto plane = corpus::generate(spec);
  ASSERT_TRUE(std::holds_alternative<PointConfig<Fp>>(plane));
  EXPECT_EQ(std::get<PointConfig<Fp>>(plane).size(), 31u);

  spec.kind = corpus::GeneratorKind::Random;
  spec.n = 10, spec.seed = 7, spec.bound = 50;
  EXPECT_EQ(corpus::generate(spec), corpus::generate(spec));
}
