#include <gtest/gtest.h>

#include <algorithm>

#include "dcs/atlas.hpp"
#include "dcs/projective.hpp"
#include "support/gen.hpp"

using namespace dcs;
using dcs::test::for_all;
using dcs::test::Gen;

namespace {

// d_k^0 : k X0 + X1 = 0 of the planar base point
PLine d1() { return line_through({-1, 1, 1}, {-1, 1, 2}); }
PLine d2() { return line_through({-1, 2, 1}, {-1, 2, 2}); }

}  // namespace

TEST(HPoint, RejectsZeroAndTooShort) {
  EXPECT_THROW((HPoint{0, 0, 0}), Error);
  try {
    HPoint p{0, 0};
    ADD_FAILURE() << p.ambient_dim();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroVector);
  }
  EXPECT_THROW(HPoint(CVector::Ones(1)), Error);
}

TEST(HPoint, CanonicalIsProjectivelyEqual) {
  for_all(11, 200, [](Gen& g) {
    const HPoint p = g.point(g.integer(1, 5));
    const HPoint c = p.scaled(g.scalar()).canonical();
    EXPECT_NEAR(c.coords().norm(), 1.0, 1e-14);
    EXPECT_LT(proj_dist(p, c), 1e-14);
  });
}

TEST(ProjDist, Examples) {
  EXPECT_LT(proj_dist({1, 2, 3}, {2, 4, 6}), 1e-16);
  EXPECT_DOUBLE_EQ(proj_dist({1, 0, 0}, {0, 1, 0}), 1.0);
  // sqrt(1 - |<p,q>|^2/(|p|^2|q|^2)) = sqrt(1 - 16/18) evaluated in 40 digits
  EXPECT_NEAR(proj_dist({-1, 1, 1}, {-1, 1, 2}), 0.33333333333333333333, 1e-15);
  EXPECT_THROW(proj_dist({1, 0}, {1, 0, 0}), Error);
}

TEST(ProjDist, ScaleInvariant) {
  for_all(12, 1000, [](Gen& g) {
    const int n = g.integer(1, 5);
    const HPoint p = g.point(n), q = g.point(n);
    const double d = proj_dist(p, q);
    EXPECT_NEAR(proj_dist(p.scaled(g.scalar()), q), d, 1e-12);
    EXPECT_NEAR(proj_dist(p, q.scaled(g.scalar())), d, 1e-12);
    EXPECT_GE(d, 0.0);
    EXPECT_LE(d, 1.0);
  });
}

TEST(ProjDist, SymmetricAndTriangle) {
  for_all(13, 500, [](Gen& g) {
    const int n = g.integer(1, 4);
    const HPoint a = g.point(n), b = g.point(n), c = g.point(n);
    EXPECT_NEAR(proj_dist(a, b), proj_dist(b, a), 1e-15);
    // the chordal sine is a metric on CP^n
    EXPECT_LE(proj_dist(a, c), proj_dist(a, b) + proj_dist(b, c) + 1e-14);
  });
}

TEST(ProjDist, NearbyPointsKeepRelativePrecision) {
  const HPoint p({1, 2, 3});
  const HPoint q({1, 2, 3.0 + 1e-10});
  const double d = proj_dist(p, q);
  // first order: |dq_perp| / |q|
  EXPECT_NEAR(d / 1e-10, std::sqrt(5.0 / 14.0) / std::sqrt(14.0), 1e-5);
}

TEST(SpanDim, Examples) {
  EXPECT_EQ(span_dim({HPoint{1, 0, 0}, HPoint{0, 1, 0}, HPoint{1, 1, 0}}), 1);
  const Config6 d0 = planar_basepoint();
  EXPECT_EQ(span_dim(d0.points), 2);
  EXPECT_EQ(span_dim(solid_basepoint().points), 3);
  EXPECT_EQ(span_dim({HPoint{1, 0, 0}}), 0);
}

TEST(SpanDim, PermutationAndRescalingInvariant) {
  for_all(14, 300, [](Gen& g) {
    const int n = g.integer(2, 5);
    const int k = g.integer(1, 6);
    const int lowrank = g.integer(0, std::min(n, k - 1));
    // points inside a random subspace of projective dimension lowrank
    std::vector<HPoint> basis;
    for (int i = 0; i <= lowrank; ++i) basis.push_back(g.point(n));
    std::vector<HPoint> pts;
    for (int i = 0; i < k; ++i) {
      CVector v = CVector::Zero(n + 1);
      for (const auto& b : basis) v += g.gaussian() * b.coords();
      pts.emplace_back(v);
    }
    const int d = span_dim(pts);
    EXPECT_LE(d, lowrank);
    std::shuffle(pts.begin(), pts.end(), g.engine());
    for (auto& p : pts) p = p.scaled(g.scalar());
    EXPECT_EQ(span_dim(pts), d);
  });
}

TEST(Lines, Examples) {
  // solid d_1^0 through [0:0:0:1], [0:0:1:1] is X0 = X1 = 0
  const PLine s1 = line_through({0, 0, 0, 1}, {0, 0, 1, 1});
  EXPECT_TRUE(on_line({0, 0, 1, 0}, s1).holds);
  EXPECT_TRUE(on_line({0, 0, 3, -2}, s1).holds);
  EXPECT_FALSE(on_line({1, 0, 0, 0}, s1).holds);
  // planar d_1^0 satisfies X0 + X1 = 0
  const HPoint cov = d1().covector();
  EXPECT_LT(proj_dist(cov, {1, 1, 0}), 1e-15);
  EXPECT_THROW(line_through({1, 2, 3}, {2, 4, 6}), Error);
}

TEST(Lines, Incidence) {
  EXPECT_TRUE(on_line({0, 0, 1}, d1()).holds);
  EXPECT_FALSE(on_line({1, 0, 0}, d1()).holds);
  const Incidence a2 = on_line({-1, 2, 1}, d1());
  EXPECT_FALSE(a2.holds);
  // smallest relative singular value of the normalized rows, 40-digit evaluation
  EXPECT_NEAR(a2.margin, 0.083772844520804915221, 1e-14);
}

TEST(Lines, ThroughBothDefiningPoints) {
  for_all(15, 500, [](Gen& g) {
    const int n = g.integer(2, 5);
    const HPoint p = g.point(n), q = g.point(n);
    const PLine l = line_through(p, q);
    EXPECT_TRUE(on_line(p, l).holds);
    EXPECT_TRUE(on_line(q, l).holds);
    // any other pair of the span gives the same incidences
    const HPoint r(CVector(g.gaussian() * p.coords() + g.gaussian() * q.coords()));
    const HPoint s(CVector(g.gaussian() * p.coords() + g.gaussian() * q.coords()));
    const PLine m = line_through(r, s);
    EXPECT_TRUE(on_line(p, m).holds);
    EXPECT_LT(line_dist(l, m), 1e-10);
  });
}

TEST(Meet, Examples) {
  EXPECT_LT(proj_dist(meet_lines(d1(), d2()), {0, 0, 1}), 1e-15);
  const Config6 s = solid_basepoint();
  EXPECT_LT(proj_dist(meet_lines(s.line(1), s.line(2)), {0, 0, 1, 0}), 1e-15);
  const PLine skew1 = line_through({1, 0, 0, 0}, {0, 1, 0, 0});
  const PLine skew2 = line_through({0, 0, 1, 0}, {0, 0, 0, 1});
  try {
    meet_lines(skew1, skew2);
    ADD_FAILURE() << "skew lines met";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoIntersection);
  }
  try {
    meet_lines(d1(), line_through({0, 0, 1}, {-1, 1, 5}));
    ADD_FAILURE() << "identical lines met";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateSpan);
  }
}

TEST(Meet, CommonPointRecovered) {
  for_all(16, 500, [](Gen& g) {
    const HPoint a = g.point(2), b = g.point(2), c = g.point(2);
    if (std::abs(bracket(a, b, c)) < 1e-3) return;
    EXPECT_LT(proj_dist(meet_lines(line_through(a, b), line_through(a, c)), a), 1e-11);
  });
}

TEST(Meet, CoplanarLinesInHigherSpace) {
  for_all(17, 200, [](Gen& g) {
    const int n = g.integer(3, 6);
    const HPoint a = g.point(n), b = g.point(n), c = g.point(n);
    EXPECT_LT(proj_dist(meet_lines(line_through(a, b), line_through(c, a)), a), 1e-10);
  });
}

TEST(Bracket, Examples) {
  const HPoint a1{-1, 1, 1}, b1{-1, 1, 2}, a2{-1, 2, 1}, i0{0, 0, 1};
  EXPECT_LT(std::abs(bracket(a1, b1, i0)), 1e-15);
  EXPECT_NEAR(std::abs(bracket(a1, b1, a2) - Complex(1.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(bracket(b1, a1, a2) + Complex(1.0)), 0.0, 1e-15);
  EXPECT_THROW(bracket({1, 0, 0, 0}, a1, b1), Error);
}

TEST(Bracket, ZeroExactlyOnCollinear) {
  for_all(18, 500, [](Gen& g) {
    const HPoint p = g.point(2), q = g.point(2);
    const HPoint r(CVector(g.gaussian() * p.coords() + g.gaussian() * q.coords()));
    const double scale = p.coords().norm() * q.coords().norm() * r.coords().norm();
    EXPECT_LT(std::abs(bracket(p, q, r)) / scale, 1e-14);
    EXPECT_LE(span_dim({p, q, r}), 1);
    const HPoint s = g.point(2);
    const bool generic = std::abs(bracket(p, q, s)) / (scale / r.coords().norm() * s.coords().norm()) > 1e-6;
    EXPECT_EQ(generic, span_dim({p, q, s}) == 2);
  });
}

TEST(Hyperplane, Residual) {
  EXPECT_LT(hyperplane_residual({0, 1, 0, 0}, {1, 0, 3, 4}), 1e-16);
  EXPECT_NEAR(hyperplane_residual({1, 0, 0}, {1, 0, 0}), 1.0, 1e-16);
}

TEST(Embedding, PreservesDistances) {
  for_all(19, 200, [](Gen& g) {
    const HPoint p = g.point(2), q = g.point(2);
    EXPECT_NEAR(proj_dist(p.embedded().embedded(), q.embedded(2)), proj_dist(p, q), 1e-15);
  });
}
