#include <gtest/gtest.h>

#include "sgconic/projective.hpp"
#include "support/builders.hpp"
#include "support/reference.hpp"

using namespace sgconic;
using testing_support::from_ref;
using testing_support::to_ref;

TEST(Canonical, PointsOverQ) {
  EXPECT_EQ(ProjPoint<Rational>({Rational(-2), Rational(4), Rational(6)}), point_q(1, -2, -3));
  EXPECT_EQ(ProjPoint<Rational>({Rational(0), Rational(1, 2), Rational(1, 3)}), point_q(0, 3, 2));
  EXPECT_EQ(point_q(0, -5, 0).to_string(), "(0:1:0)");
}

TEST(Canonical, PointsOverFp) {
  const auto p = point_fp(0, 3, 1, 7);
  EXPECT_EQ(p[1].value(), 1);
  EXPECT_EQ(p[2].value(), 5);  // 1/3 = 5 mod 7
}

TEST(Canonical, ZeroTripleRejected) { EXPECT_THROW(point_q(0, 0, 0), DegenerateInput); }

TEST(LineThrough, Examples) {
  EXPECT_EQ(line_through(point_q(1, 0, 0), point_q(0, 1, 0)), line_q(0, 0, 1));
  EXPECT_EQ(line_through(point_q(1, 0, 0), point_q(0, 0, 1)), line_q(0, 1, 0));
  EXPECT_EQ(line_through(point_q(1, 1, 1), point_q(1, 2, 3)), line_q(1, -2, 1));
  EXPECT_THROW(line_through(point_q(1, 2, 3), point_q(2, 4, 6)), DegenerateInput);
}

TEST(Meet, Examples) {
  EXPECT_EQ(meet(line_q(0, 0, 1), line_q(0, 1, 0)), point_q(1, 0, 0));
  EXPECT_EQ(meet(line_q(1, 0, 0), line_q(0, 1, 0)), point_q(0, 0, 1));
  EXPECT_EQ(meet(line_q(1, -2, 1), line_q(1, 1, -2)), point_q(1, 1, 1));
  EXPECT_THROW(meet(line_q(1, 1, 1), line_q(2, 2, 2)), DegenerateInput);
}

TEST(Collinear, Examples) {
  EXPECT_TRUE(collinear(point_q(1, 0, 0), point_q(0, 1, 0), point_q(1, 1, 0)));
  EXPECT_FALSE(collinear(point_q(1, 0, 0), point_q(0, 1, 0), point_q(0, 0, 1)));
  EXPECT_FALSE(collinear(point_q(1, 1, 1), point_q(1, 2, 4), point_q(1, 3, 9)));
  EXPECT_TRUE(collinear(point_q(1, 2, 3), point_q(1, 2, 3), point_q(0, 0, 1)));
}

TEST(Properties, IncidenceSymmetryAndDuality) {
  ref::Gen g(21);
  for (int t = 0; t < 500; ++t) {
    const auto p = from_ref(g.point(20)), q = from_ref(g.point(20)), r = from_ref(g.point(20));
    if (p == q) continue;
    const auto l = line_through(p, q);
    EXPECT_TRUE(incident(p, l));
    EXPECT_TRUE(incident(q, l));
    // The reference meet agrees up to scale.
    const auto l_ref = ref::meet_cramer(to_ref(p), to_ref(q));
    EXPECT_TRUE(ref::proportional<3>(l_ref, {l[0], l[1], l[2]}));
    if (r == p) continue;
    const auto m = line_through(p, r);
    if (m == l) continue;
    EXPECT_EQ(meet(l, m), p);
    // collinear() against the reference determinant.
    EXPECT_EQ(collinear(p, q, r), ref::collinear(to_ref(p), to_ref(q), to_ref(r)));
  }
}

TEST(Properties, CanonicalizationIdempotent) {
  ref::Gen g(22);
  for (int t = 0; t < 300; ++t) {
    const auto v = g.point(100);
    const ProjPoint<Rational> once(v);
    const ProjPoint<Rational> twice(once.coords());
    EXPECT_EQ(once, twice);
    EXPECT_EQ(once.coords(), twice.coords());
  }
}
