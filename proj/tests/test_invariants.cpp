#include <gtest/gtest.h>

#include <numeric>

#include "dcs/invariants.hpp"
#include "support/gen.hpp"

using namespace dcs;
using dcs::test::for_all;
using dcs::test::Gen;

namespace {

using V = std::vector<std::int64_t>;

const std::vector<std::string> kAll{"w1", "w2", "w3", "rho1", "rho2", "tau1", "tau2", "tau3"};
const char* kCatalog[] = {"alpha", "beta", "gamma", "sigma", "sigma_tilde_Lambda", "Phi_tilde_S1",
                          "L@1", "M@0", "K_gamma@0.5", "H@0"};

V row(const std::string& loop, const std::vector<std::string>& fns = kAll) {
  const WindingRow r = winding_row(Path(loop), fns);
  EXPECT_FALSE(r.indeterminate) << loop;
  return r.values;
}

V add(const V& a, const V& b) {
  V out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

V neg(V a) {
  for (auto& x : a) x = -x;
  return a;
}

IntMatrix random_unimodular(Gen& g, int n) {
  IntMatrix u(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i) u[i][i] = 1;
  for (int k = 0; k < 6; ++k) {
    const int i = g.integer(0, n - 1), j = g.integer(0, n - 1);
    if (i == j) continue;
    const int c = g.integer(-2, 2);
    for (int col = 0; col < n; ++col) u[i][col] += c * u[j][col];
  }
  return u;
}

IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.size(), std::vector<std::int64_t>(b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

}  // namespace

TEST(Winding, PowersOfZ) {
  for (int k = -6; k <= 6; ++k) {
    const auto r = track_winding([k](double t) { return std::polar(1.0, k * t); });
    EXPECT_EQ(r.winding, k);
    EXPECT_LT(r.residual, 1e-12);
  }
}

TEST(Winding, ArgumentPrinciple) {
  // winding of a polynomial on the unit circle counts its roots inside
  for_all(51, 200, [](Gen& g) {
    const int deg = g.integer(1, 7);
    std::vector<Complex> roots;
    int inside = 0;
    for (int i = 0; i < deg; ++i) {
      double r = g.uniform(0.0, 2.0);
      if (std::abs(r - 1.0) < 0.05) r += 0.1;
      roots.push_back(std::polar(r, g.uniform(0.0, kTwoPi)));
      inside += r < 1.0;
    }
    const Complex lead = g.scalar();
    const auto w = track_winding([&](double t) {
      const Complex z = std::polar(1.0, t);
      Complex p = lead;
      for (Complex a : roots) p *= z - a;
      return p;
    });
    EXPECT_FALSE(w.indeterminate);
    EXPECT_EQ(w.winding, inside);
    EXPECT_LT(w.residual, 0.05);
  });
}

TEST(Winding, RapidOscillationForcesRefinement) {
  // 200 turns over 512 samples: every step exceeds a quarter turn
  const auto r = track_winding([](double t) { return std::polar(1.0, 200.0 * t); });
  EXPECT_EQ(r.winding, 200);
  EXPECT_GT(r.depth, 0);
  EXPECT_LT(r.samples, std::size_t{1} << 20);
}

TEST(Winding, CapReportsIndeterminate) {
  WindingOptions o;
  o.cap = 600;
  const auto r = track_winding([](double t) { return std::polar(1.0, 300.0 * t); }, o);
  EXPECT_TRUE(r.indeterminate);
}

TEST(Winding, ZeroOnTheLoopIsAnError) {
  try {
    track_winding([](double t) { return std::polar(1.0, t) - Complex(1.0, 0.0); });
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateFunctional);
  }
}

TEST(Winding, Examples) {
  EXPECT_EQ(row("base_planar"), V(8, 0));
  // chart(B1) - chart(A1) along alpha is (1+z) - 1
  const FiberVector a = fiber_winding_vector(Path("alpha"));
  EXPECT_EQ(a.k[0], 1);
  // all three bracket ratios are constant along beta
  EXPECT_EQ(row("beta", {"w1", "w2", "w3"}), (V{0, 0, 0}));
}

TEST(Winding, CatalogVectors) {
  EXPECT_EQ(row("alpha"), (V{0, 0, 0, 1, 0, 2, 0, 0}));
  EXPECT_EQ(row("beta"), (V{0, 0, 0, 0, 1, 0, 2, 0}));
  EXPECT_EQ(row("gamma"), (V{0, 0, 0, -1, -1, 0, 0, 2}));
  EXPECT_EQ(row("sigma"), (V{0, 0, 0, -1, -1, -1, -1, 1}));
  EXPECT_EQ(row("Phi_tilde_S1"), (V{0, 0, 0, 0, 0, 3, 3, 3}));
  EXPECT_EQ(row("sigma_tilde_Lambda"), V(8, 0));
  EXPECT_EQ(row("M@0"), (V{0, 0, 0, 0, 0, -1, -1, -1}));
}

TEST(Winding, AdditiveUnderConcatAndInvert) {
  for (const char* p : kCatalog) {
    const V wp = row(p);
    EXPECT_EQ(row(std::string("(") + p + ")^-1"), neg(wp)) << p;
    EXPECT_EQ(row(std::string(p) + "*base_planar"), wp) << p;
    for (const char* q : kCatalog) {
      EXPECT_EQ(row(std::string("(") + p + ")*(" + q + ")"), add(wp, row(q))) << p << " * " << q;
    }
  }
}

TEST(Winding, CatalogLoopsAreWellSampled) {
  for (const char* p : kCatalog) {
    for (const auto& id : kAll) {
      const auto r = winding(Path(p), functional(id));
      EXPECT_FALSE(r.indeterminate) << p << " " << id;
      EXPECT_LT(r.samples, std::size_t{1} << 20);
      EXPECT_GT(r.min_modulus, 1e-6) << p << " " << id;
      EXPECT_LT(r.residual, 0.05);
    }
  }
}

TEST(Functionals, ScaleInvariant) {
  for_all(52, 300, [](Gen& g) {
    ConfigSampler s(g.engine()());
    const Config6 c = s.planar(2, planar_center());
    std::array<Complex, 6> k;
    for (auto& x : k) x = g.scalar();
    const Config6 r = c.rescaled(k);
    for (const auto& f : builtin_functionals()) {
      const Complex a = f.eval(c), b = f.eval(r);
      EXPECT_LT(std::abs(a - b), 1e-12 * std::abs(a)) << f.id;
    }
  });
}

TEST(Fibers, Vectors) {
  auto fv = [](const char* loop) {
    const FiberVector f = fiber_winding_vector(Path(loop));
    EXPECT_FALSE(f.indeterminate);
    return V(f.k.begin(), f.k.end());
  };
  EXPECT_EQ(fv("alpha"), (V{1, 0, 0}));
  EXPECT_EQ(fv("beta"), (V{0, 1, 0}));
  EXPECT_EQ(fv("gamma"), (V{0, 0, 1}));
  EXPECT_EQ(fv("F_tilde"), (V{0, -1, 1}));
  EXPECT_EQ(fv("B_tilde"), (V{-1, 0, 1}));
  EXPECT_EQ(fv("Psi_tilde"), (V{1, 1, 2}));
  EXPECT_EQ(fv("Sigma_tilde"), (V{0, -1, 0}));
  EXPECT_THROW(fiber_winding_vector(Path("sigma")), Error);
}

TEST(Relations, Examples) {
  const auto a = check_linear_relation(Path("sigma*sigma"), Path("(alpha^-1*beta^-1)*gamma"), {"w1", "w2", "w3"});
  EXPECT_TRUE(a.equal);
  const auto b = check_linear_relation(Path("sigma*sigma"), Path("(alpha^-1*beta^-1)*gamma"), kAll);
  EXPECT_TRUE(b.equal);
  const auto c = check_linear_relation(Path("alpha"), Path("beta"), kAll);
  EXPECT_FALSE(c.equal);
  // the reference relation does not hold for the lift; the doubled gamma does
  EXPECT_FALSE(check_linear_relation(Path("Phi_tilde_S1*sigma"), Path("(alpha*beta)*gamma"), kAll).equal);
  EXPECT_TRUE(check_linear_relation(Path("Phi_tilde_S1*sigma"), Path("(alpha*beta)*(gamma*gamma)"), kAll).equal);
}

TEST(Relations, IndependenceMatrix) {
  const auto f = independence_matrix({Path("alpha"), Path("beta"), Path("gamma")}, {"fiber"});
  EXPECT_EQ(f.matrix, (IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  EXPECT_EQ(f.rank, 3);
  // the three bracket ratios are identically 1 on D_I^{2,2}: rank 0
  EXPECT_EQ(independence_matrix({Path("alpha"), Path("beta"), Path("sigma")}, {"w1", "w2", "w3"}).rank, 0);
  EXPECT_EQ(independence_matrix({Path("alpha"), Path("beta"), Path("sigma")}, kAll).rank, 3);
  EXPECT_EQ(independence_matrix({Path("base_planar")}, kAll).rank, 0);
}

TEST(Relations, DiskNullity) {
  for (const char* f : {"w1", "w2", "w3", "rho1", "tau3"}) {
    const auto r = disk_winding_nullity("Lambda_tilde", functional(f));
    EXPECT_TRUE(r.passed) << f;
    EXPECT_EQ(r.winding, 0);
  }
  const auto punct = disk_winding_nullity([](Complex z) { return z - Complex(0.3, 0.1); });
  EXPECT_TRUE(punct.inconclusive);
  EXPECT_FALSE(punct.passed);
  const auto fine = disk_winding_nullity([](Complex z) { return z + Complex(3.0, 0.0); });
  EXPECT_TRUE(fine.passed);
}

TEST(Lattice, Classes) {
  auto cls = [](const char* loop) { return class_vector(Path(loop), kAll); };
  EXPECT_EQ(cls("alpha"), (V{1, 0, 0}));
  EXPECT_EQ(cls("sigma*sigma"), (V{0, 0, 2}));
  EXPECT_EQ(cls("gamma"), (V{1, 1, 2}));
  EXPECT_EQ(cls("Phi_tilde_S1"), (V{3, 3, 3}));
  EXPECT_EQ(cls("M@0"), (V{-1, -1, -1}));
  EXPECT_FALSE(class_vector(Path("sigma_tilde_Lambda"), kAll) == std::nullopt);
}

TEST(Lattice, SolveInteger) {
  const IntMatrix cols{{1, 0}, {1, 2}};
  EXPECT_EQ(solve_integer(cols, {3, 4}), (V{1, 2}));
  EXPECT_EQ(solve_integer(cols, {0, 1}), std::nullopt);
}

TEST(Lattice, SmithExamples) {
  EXPECT_EQ(smith_diagonal({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}), (V{2, 6, 12}));
  EXPECT_EQ(quotient_invariants({{2, 2, 1}}, 3), (V{2}));
  EXPECT_EQ(quotient_invariants({{1, 1, 1}}, 3), (V{2}));
  EXPECT_EQ(quotient_invariants({{0, -1, 1}, {-1, 0, 1}}, 3), (V{1}));
  EXPECT_EQ(quotient_invariants({{0, -1, 1}, {-1, 0, 1}, {1, 1, 2}}, 3), (V{0, 4}));
  EXPECT_EQ(quotient_invariants({{3, 3, 3}}, 3), (V{2, 3}));
  EXPECT_EQ(quotient_invariants({}, 3), (V{3}));
  EXPECT_EQ(integer_rank({{1, 2}, {2, 4}}), 1);
}

TEST(Lattice, SmithInvariantUnderUnimodularChange) {
  for_all(53, 300, [](Gen& g) {
    const int rows = g.integer(1, 4), n = g.integer(1, 4);
    IntMatrix m(rows, std::vector<std::int64_t>(n));
    for (auto& r : m)
      for (auto& x : r) x = g.integer(-6, 6);
    const V d = smith_diagonal(m);
    const IntMatrix t = mul(mul(random_unimodular(g, rows), m), random_unimodular(g, n));
    EXPECT_EQ(smith_diagonal(t), d);
    EXPECT_EQ(static_cast<int>(d.size()), integer_rank(m));
    // each entry divides the next
    for (std::size_t i = 1; i < d.size(); ++i) EXPECT_EQ(d[i] % d[i - 1], 0);
    // |det| of a square full-rank matrix is the product of the diagonal
  });
}

TEST(Lattice, LadderIsConsistent) {
  // all relation vectors used by the lattice claims, read from windings
  const auto phi = class_vector(Path("Phi_tilde_S1"), kAll);
  const auto m0 = class_vector(Path("M@0"), kAll);
  ASSERT_TRUE(phi && m0);
  EXPECT_EQ(quotient_invariants({*m0}, 3), (V{2}));
  EXPECT_EQ(quotient_invariants({*phi}, 3), (V{2, 3}));
  // fibre side of the solid case
  auto fv = [](const char* l) {
    const auto f = fiber_winding_vector(Path(l));
    return V(f.k.begin(), f.k.end());
  };
  const IntMatrix solid{fv("F_tilde"), fv("B_tilde")};
  EXPECT_EQ(quotient_invariants(solid, 3), (V{1}));
  IntMatrix with_psi = solid;
  with_psi.push_back(fv("Psi_tilde"));
  EXPECT_EQ(quotient_invariants(with_psi, 3), (V{0, 4}));
}
