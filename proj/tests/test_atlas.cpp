#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "dcs/atlas.hpp"
#include "dcs/path_engine.hpp"
#include "support/gen.hpp"

using namespace dcs;
using dcs::test::for_all;
using dcs::test::Gen;

namespace {

const Atlas& A() { return Atlas::instance(); }

Config6 config_at(const std::string& id, Complex z, double t = 0.0) {
  return std::get<Config6>(A().eval(id, z, t));
}

std::set<std::string> claim_ids(const std::string& item) {
  std::set<std::string> out;
  for (const auto& c : A().claims_for(item)) out.insert(c.id);
  return out;
}

}  // namespace

TEST(Atlas, ListsCatalog) {
  const auto ids = A().list_items();
  for (const char* id : {"alpha", "beta", "gamma", "sigma", "sigma_tilde_Lambda", "Lambda_tilde", "L",
                         "K_alpha", "K_beta", "K_gamma", "Phi_tilde", "H", "Pi_tilde", "M", "F_tilde",
                         "B_tilde", "Psi_tilde", "Sigma_tilde", "phi", "psi", "gr_a", "gr_b"}) {
    EXPECT_NE(std::find(ids.begin(), ids.end(), id), ids.end()) << id;
  }
  try {
    A().item("no_such_item");
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownId);
  }
}

TEST(Atlas, EvalExamples) {
  const Config6 d0 = planar_basepoint();
  EXPECT_LT(config_dist(config_at("alpha", 1.0), d0), 1e-15);
  EXPECT_LT(config_dist(config_at("sigma", 1.0), d0), 1e-15);
  // B1 of alpha(z) is [-1:1:1+z]
  EXPECT_LT(proj_dist(config_at("alpha", Complex(0, 1)).B(1), HPoint{-1, 1, Complex(1, 1)}), 1e-15);
  EXPECT_LT(proj_dist(config_at("sigma_tilde_Lambda", 1.0).B(3), HPoint{0, 1, 2}), 1e-15);
  const HPoint psi0 = std::get<HPoint>(A().eval("Psi", 0.0));
  EXPECT_LT(proj_dist(psi0, HPoint{1, 0, 0, 0}), 1e-15);
  const HPoint psi1 = std::get<HPoint>(A().eval("Psi", std::polar(1.0, 0.7)));
  EXPECT_LT(proj_dist(psi1, solid_center()), 1e-15);
}

TEST(Atlas, DomainChecked) {
  EXPECT_THROW(A().eval("alpha", 0.5), Error);
  EXPECT_THROW(A().eval("Lambda_tilde", Complex(1.5, 0)), Error);
  EXPECT_THROW(A().eval("L", 1.0, 1.5), Error);
  try {
    A().eval("alpha", 2.0);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OutOfDomain);
  }
}

TEST(Atlas, Basepoints) {
  const Config6 d0 = planar_basepoint();
  EXPECT_LT(config_dist(A().basepoint(SpaceTag::planar(2)), d0), 1e-15);
  EXPECT_LT(config_dist(A().basepoint(SpaceTag::planar(3)), d0.embedded()), 1e-15);
  const Config6 s = A().basepoint(SpaceTag::solid(3));
  EXPECT_LT(proj_dist(s.A(1), HPoint{0, 0, 0, 1}), 1e-15);
  EXPECT_LT(proj_dist(s.B(3), HPoint{1, 0, 1, 0}), 1e-15);
  const HPoint expect[] = {{-1, 1, 1}, {-1, 1, 2}, {-1, 2, 1}, {-1, 2, 2}, {0, 1, 1}, {0, 1, 2}};
  for (int i = 0; i < 6; ++i) EXPECT_LT(proj_dist(d0.points[i], expect[i]), 1e-15);
}

TEST(Atlas, ClaimsFor) {
  const auto l = claim_ids("L");
  EXPECT_TRUE(l.count("C6.1") && l.count("C6.2") && l.count("C6.3"));
  EXPECT_EQ(claim_ids("alpha"), (std::set<std::string>{"C3.alpha", "C3.alpha.closure"}));
  const auto p = claim_ids("Psi_tilde");
  EXPECT_TRUE(p.count("C13.1") && p.count("C13.2") && p.count("C13.4"));
  for (const auto& c : A().claims_for("Psi_tilde")) {
    if (c.id == "C13.4") EXPECT_EQ(c.expected, (std::vector<int>{1, 1, 2}));
  }
}

TEST(Atlas, ClaimRegistryConsistent) {
  std::set<std::string> seen, families;
  for (const auto& c : A().claims()) {
    EXPECT_TRUE(seen.insert(c.id).second) << "duplicate " << c.id;
    families.insert(c.family);
    for (const auto& r : c.references) EXPECT_TRUE(A().contains(r)) << c.id << " -> " << r;
    EXPECT_GT(c.tolerance, 0.0);
  }
  // fifteen claim families plus the two braid families
  EXPECT_EQ(families.size(), 17u);
}

TEST(Atlas, CircleItemsClosedAtBasepoint) {
  for (const auto& id : A().list_items()) {
    const AtlasItem& it = A().item(id);
    if (!it.basepoint || it.value_kind != ValueKind::Config) continue;
    if (it.domain != DomainKind::Circle && it.domain != DomainKind::Cylinder) continue;
    const Value base = A().item(*it.basepoint).fn(Sample{});
    for (double t : {0.0, 1.0}) {
      if (it.domain == DomainKind::Circle && t > 0) continue;
      EXPECT_LT(value_dist(it.fn(Sample::circle(0.0, t)), base), 1e-12) << id << " t=" << t;
      EXPECT_LT(value_dist(it.fn(Sample::circle(kTwoPi, t, Side::Left)), base), 1e-12) << id;
    }
  }
}

TEST(Atlas, PiecewiseJunctionsAgree) {
  for (const auto& id : A().list_items()) {
    const AtlasItem& it = A().item(id);
    for (int j = 0; j <= 64; ++j) {
      const double t = j / 64.0;
      for (const auto& ps : it.piecewise) {
        for (double J : ps.junctions(t)) {
          const double d = value_dist(it.fn(Sample::circle(J, t, Side::Left)),
                                      it.fn(Sample::circle(J, t, Side::Right)));
          EXPECT_LT(d, 1e-9) << id << " " << ps.name() << " t=" << t << " at " << J;
        }
      }
    }
  }
}

TEST(Atlas, DisksKeepPositiveMargin) {
  const Grid g;
  for (const auto& id : A().list_items()) {
    const AtlasItem& it = A().item(id);
    if (it.domain != DomainKind::Disk || !it.space || it.value_kind != ValueKind::Config) continue;
    const SweepReport r = check_membership_sweep(id, *it.space, g, Tolerances{});
    EXPECT_TRUE(r.verdict) << id << " " << r.first_failure;
    EXPECT_GT(r.margin, 1e-6) << id;
  }
}

TEST(Charts, PhiFixesTheBaseFibre) {
  for_all(31, 50, [](Gen& g) {
    ConfigSampler s(g.engine()());
    const Config6 f = s.planar(2, planar_center());
    EXPECT_LT(config_dist(phi_trivialization(planar_center(), f), f), 1e-12);
    const Complex z = std::polar(g.uniform(0, 0.95), g.uniform(0, kTwoPi));
    const HPoint c = phi_chart_center(z);
    const Config6 out = phi_trivialization(c, f);
    EXPECT_TRUE(validate(out, SpaceTag::planar_fixed(2, c)).verdict);
  });
}

TEST(Charts, PsiProjectsToItsLines) {
  const Config6 d0 = planar_basepoint();
  for_all(32, 50, [&](Gen& g) {
    const Complex z = std::polar(g.uniform(0, 0.95), g.uniform(0, kTwoPi));
    const LineTriple l = psi_lines(z);
    const Config6 out = psi_trivialization(l, d0, psi_center_of_projection());
    EXPECT_LT(line_triple_dist(LineTriple{out.lines()}, l), 1e-12);
  });
}

TEST(Charts, GrDisplayMatchesProjection) {
  const Config6 base = gr_frame_basepoint();
  CMatrix q = CMatrix::Zero(4, 1);
  q(0, 0) = 1;
  for_all(33, 50, [&](Gen& g) {
    const Complex p1 = g.gaussian() * 0.3, p2 = g.gaussian() * 0.3;
    const Config6 a = gr_display(base, p1, p2);
    const Config6 b = gr_projection(base, plane_graph_cp3(p1, p2, 0.0), q);
    EXPECT_LT(config_dist(a, b), 1e-12);
  });
}
