#include <gtest/gtest.h>

#include <algorithm>

#include "dcs/atlas.hpp"
#include "dcs/strata.hpp"
#include "support/gen.hpp"

using namespace dcs;
using dcs::test::for_all;
using dcs::test::Gen;

namespace {

bool has_failure(const MembershipReport& r, const std::string& name) {
  return std::find(r.failures.begin(), r.failures.end(), name) != r.failures.end();
}

Config6 rescale(const Config6& c, Gen& g) {
  std::array<Complex, 6> s;
  for (auto& x : s) x = g.scalar();
  return c.rescaled(s);
}

const HPoint kI0{0, 0, 1};
const HPoint kSolidI0{0, 0, 1, 0};

}  // namespace

TEST(ConfigurationSpace, Examples) {
  const Config6 d0 = planar_basepoint();
  EXPECT_TRUE(in_configuration_space(d0.points).verdict);
  const HPoint rep[] = {d0.A(1), d0.B(1), d0.A(1)};
  EXPECT_FALSE(in_configuration_space(rep).verdict);
  const HPoint two[] = {d0.A(1), d0.B(1)};
  const auto r = in_configuration_space(two);
  EXPECT_TRUE(r.verdict);
  EXPECT_NEAR(r.margin, 1.0 / 3.0, 1e-15);
  EXPECT_THROW(in_configuration_space(std::span<const HPoint>{}), Error);
}

TEST(Stratum, Examples) {
  EXPECT_EQ(stratum_of(planar_basepoint().points), 2);
  EXPECT_EQ(stratum_of(solid_basepoint().points), 3);
  const HPoint col[] = {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}};
  EXPECT_EQ(stratum_of(col), 1);
}

TEST(Validate, BasePoints) {
  const auto r = validate(planar_basepoint(), SpaceTag::planar_fixed(2, kI0));
  EXPECT_TRUE(r.verdict);
  // minimum over the margin checks, each evaluated in 40-digit arithmetic:
  // lines-distinct for d1, d2 is the smallest
  EXPECT_NEAR(r.margin, 0.10144199648855795355, 1e-14);
  const auto e = validate(planar_basepoint().embedded(), SpaceTag::planar_fixed(3, planar_center_cp3()));
  EXPECT_TRUE(e.verdict);
  EXPECT_NEAR(e.margin, 0.10144199648855795355, 1e-14);
  const auto s = validate(solid_basepoint(), SpaceTag::solid_fixed(3, kSolidI0));
  EXPECT_TRUE(s.verdict);
  EXPECT_NEAR(s.margin, 0.5, 1e-15);
  EXPECT_TRUE(validate(solid_basepoint_cp4(), SpaceTag::solid_fixed(4, solid_center_cp4())).verdict);
}

TEST(Validate, Negatives) {
  Config6 c = planar_basepoint();
  c.points[1] = c.points[0];
  const auto r = validate(c, SpaceTag::planar(2));
  EXPECT_FALSE(r.verdict);
  EXPECT_TRUE(has_failure(r, "pairwise-distinct"));

  // planar base point with the wrong center
  const auto w = validate(planar_basepoint(), SpaceTag::planar_fixed(2, {1, 0, 0}));
  EXPECT_FALSE(w.verdict);
  EXPECT_TRUE(has_failure(w, "fixed-center"));

  // B3 moved off the common point's pencil
  Config6 nc = planar_basepoint();
  nc.points[5] = HPoint{1, 1, 2};
  EXPECT_FALSE(validate(nc, SpaceTag::planar(2)).verdict);

  // a point equal to the center
  Config6 ce = planar_basepoint();
  ce.points[0] = kI0;
  EXPECT_FALSE(validate(ce, SpaceTag::planar(2)).verdict);

  EXPECT_THROW(validate(planar_basepoint(), SpaceTag::planar(3)), Error);
  EXPECT_THROW(validate(planar_basepoint(), SpaceTag::fk(2, 6)), Error);
}

TEST(Validate, SolidAndPlanarExclusive) {
  const auto a = validate(solid_basepoint(), SpaceTag::planar(3));
  EXPECT_FALSE(a.verdict);
  EXPECT_TRUE(has_failure(a, "span-excess"));
  const auto b = validate(planar_basepoint().embedded(), SpaceTag::solid(3));
  EXPECT_FALSE(b.verdict);
  EXPECT_TRUE(has_failure(b, "span"));
}

TEST(Validate, MarginVanishesLinearly) {
  // A1 slides along d1 into the center: [-e : e : 1]
  auto margin = [](double e) {
    Config6 c = planar_basepoint();
    c.points[0] = HPoint{-e, e, 1};
    return degeneracy_margin(c, SpaceTag::planar(2));
  };
  const double s1 = margin(1e-4) / 1e-4;
  const double s2 = margin(1e-5) / 1e-5;
  EXPECT_NEAR(s1, std::sqrt(2.0), 1e-6);
  EXPECT_NEAR(s2, std::sqrt(2.0), 1e-7);
  EXPECT_FALSE(validate([] {
                 Config6 c = planar_basepoint();
                 c.points[0] = HPoint{0, 0, 1};
                 return c;
               }(),
                        SpaceTag::planar(2))
                   .verdict);
}

TEST(Validate, RescalingInvariant) {
  const Config6 d0 = planar_basepoint();
  const double m0 = degeneracy_margin(d0, SpaceTag::planar(2));
  for_all(21, 1000, [&](Gen& g) {
    EXPECT_NEAR(degeneracy_margin(rescale(d0, g), SpaceTag::planar(2)), m0, 1e-12);
  });
  for_all(22, 200, [](Gen& g) {
    ConfigSampler s(g.engine()());
    const int n = g.integer(3, 5);
    const Config6 c = s.solid(n, std::nullopt);
    const auto a = validate(c, SpaceTag::solid(n));
    const auto b = validate(rescale(c, g), SpaceTag::solid(n));
    EXPECT_EQ(a.verdict, b.verdict);
    EXPECT_NEAR(a.margin, b.margin, 1e-10 * std::max(1.0, a.margin));
  });
}

TEST(Validate, SampledConfigurationsPass) {
  for_all(23, 300, [](Gen& g) {
    ConfigSampler s(g.engine()());
    const int n = g.integer(2, 5);
    const Config6 c = s.planar(n, std::nullopt);
    const auto r = validate(c, SpaceTag::planar(n));
    EXPECT_TRUE(r.verdict);
    EXPECT_GT(r.margin, 1e-6);
    if (n >= 3) {
      EXPECT_TRUE(validate(s.solid(n, std::nullopt), SpaceTag::solid(n)).verdict);
    }
  });
}

TEST(Validate, ForgettingTheCenterKeepsMembership) {
  for_all(24, 300, [](Gen& g) {
    ConfigSampler s(g.engine()());
    const int n = g.integer(2, 4);
    const HPoint center = g.point(n);
    const SpaceTag tp = SpaceTag::planar_fixed(n, center);
    const Config6 p = s.planar(n, center);
    ASSERT_TRUE(validate(p, tp).verdict);
    EXPECT_TRUE(validate(p, tp.forget_center()).verdict);
    if (n >= 3) {
      const SpaceTag ts = SpaceTag::solid_fixed(n, center);
      const Config6 q = s.solid(n, center);
      ASSERT_TRUE(validate(q, ts).verdict);
      EXPECT_TRUE(validate(q, ts.forget_center()).verdict);
      // strata are disjoint
      EXPECT_FALSE(validate(q, SpaceTag::planar(n)).verdict);
      EXPECT_FALSE(validate(p, SpaceTag::solid(n)).verdict);
    }
  });
}

TEST(Validate, CenterMatchesConstruction) {
  for_all(25, 200, [](Gen& g) {
    ConfigSampler s(g.engine()());
    const HPoint center = g.point(2);
    const Config6 c = s.planar(2, center);
    EXPECT_LT(proj_dist(c.center(), center), 1e-9);
  });
}

TEST(LineTriple, Validation) {
  const Config6 d0 = planar_basepoint();
  EXPECT_TRUE(validate_lines(LineTriple{d0.lines()}, kI0).verdict);
  LineTriple bad{d0.lines()};
  bad.lines[2] = bad.lines[0];
  EXPECT_FALSE(validate_lines(bad, kI0).verdict);
  EXPECT_LT(line_triple_dist(LineTriple{d0.lines()}, LineTriple{d0.lines()}), 1e-15);
}

TEST(SpaceTag, Names) {
  EXPECT_EQ(SpaceTag::planar_fixed(2, kI0).name(), "D_I^{2,2}");
  EXPECT_EQ(SpaceTag::solid(3).name(), "D^{3,3}");
  EXPECT_THROW(SpaceTag::solid(2).check(), Error);
}
