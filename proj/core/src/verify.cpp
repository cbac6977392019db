#include "dcs/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dcs/braid_words.hpp"

namespace dcs {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

void ClaimReport::downgrade(Verdict v) {
  if (v == Verdict::Fail || (v == Verdict::Inconclusive && verdict == Verdict::Pass)) verdict = v;
}

Verdict distance_verdict(double d, double tol, double floor) {
  if (d <= tol) return Verdict::Pass;
  if (d <= floor) return Verdict::Inconclusive;
  return Verdict::Fail;
}

namespace {

const Atlas& atlas() { return Atlas::instance(); }

// Constructions (path endpoints, sampled fibres, meets) never demand more than
// the floor; verdicts still use the caller's tolerance.
Tolerances engine(const VerifyOptions& o) {
  Tolerances t = o.tol;
  t.proj_eq_tol = std::max(t.proj_eq_tol, o.floor);
  return t;
}

std::string fmt(double x) {
  std::ostringstream o;
  o.precision(6);
  o << x;
  return o.str();
}

DomainKind field_domain(const LoopExpr& e) {
  DomainKind d = DomainKind::Circle;
  for (const auto& id : e.atoms()) {
    const DomainKind k = atlas().item(id).domain;
    if (k == DomainKind::Disk || k == DomainKind::Chart || k == DomainKind::Cylinder) return k;
    if (k == DomainKind::Circle) d = k;
  }
  return d;
}

Verdict worse(Verdict a, Verdict b) {
  if (a == Verdict::Fail || b == Verdict::Fail) return Verdict::Fail;
  if (a == Verdict::Inconclusive || b == Verdict::Inconclusive) return Verdict::Inconclusive;
  return Verdict::Pass;
}

// residual-only failures below the floor cannot be told apart from rounding
Verdict membership_verdict(const MembershipReport& m, double floor) {
  if (m.verdict) return Verdict::Pass;
  for (const auto& c : m.checks) {
    if (!c.passed && (!c.residual || c.value > floor)) return Verdict::Fail;
  }
  return Verdict::Inconclusive;
}

Verdict sweep_verdict(const SweepReport& s, const VerifyOptions& opt) {
  if (!s.verdict) return Verdict::Fail;
  if (!(s.margin > opt.tol.margin_warn)) return Verdict::Fail;
  return s.inconclusive ? Verdict::Inconclusive : Verdict::Pass;
}

void check_membership(const Claim& c, const VerifyOptions& opt, ClaimReport& r) {
  const AtlasItem& it = atlas().item(c.lhs);
  if (!c.tag) throw Error(ErrorKind::UnknownId, c.id + ": membership claim without a tag");
  const SweepReport s = check_membership_sweep(c.lhs, *c.tag, opt.grid, opt.tol, opt.floor);
  r.grids.emplace_back("sweep", opt.grid.describe(it.domain));
  r.margin("min-margin", s.margin);
  r.margin("max-residual", s.max_residual);
  r.ints("nodes", {static_cast<std::int64_t>(s.nodes)});
  if (!s.first_failure.empty()) r.notes.push_back("first failure " + s.first_failure);
  r.downgrade(sweep_verdict(s, opt));
  if (opt.stability && s.verdict && it.domain != DomainKind::Constant) {
    const Grid fine = opt.grid.doubled();
    const SweepReport f = check_membership_sweep(c.lhs, *c.tag, fine, opt.tol, opt.floor);
    ++r.refinements;
    r.grids.emplace_back("doubled", fine.describe(it.domain));
    r.margin("min-margin-doubled", f.margin);
    if (!f.first_failure.empty()) r.notes.push_back("doubled grid failure " + f.first_failure);
    r.downgrade(sweep_verdict(f, opt));
  }
}

void pointwise(const Claim& c, const VerifyOptions& opt, ClaimReport& r, bool fields) {
  const Path lhs(c.lhs, engine(opt));
  const Path rhs(c.rhs, engine(opt));
  const double tol = opt.scaled(c.tolerance);
  auto run = [&](const Grid& g, const char* label) {
    PointwiseResult p;
    DomainKind d = DomainKind::Circle;
    if (fields) {
      d = field_domain(lhs.expr());
      p = pointwise_eq_nodes(lhs, rhs, domain_nodes(d, g));
    } else {
      p = pointwise_eq(lhs, rhs, g.circle);
    }
    r.grids.emplace_back(label, g.describe(d));
    return p;
  };
  const PointwiseResult coarse = run(opt.grid, "grid");
  r.margin("max-distance", coarse.max_dist);
  Verdict v = distance_verdict(coarse.max_dist, tol, opt.floor);
  if (v != Verdict::Pass) {
    std::ostringstream o;
    o.precision(10);
    o << "largest distance at z=(" << coarse.z_at_max.real() << "," << coarse.z_at_max.imag()
      << ")";
    r.notes.push_back(o.str());
  }
  r.downgrade(v);
  if (opt.stability) {
    const PointwiseResult fine = run(opt.grid.doubled(), "doubled");
    ++r.refinements;
    r.margin("max-distance-doubled", fine.max_dist);
    r.downgrade(distance_verdict(fine.max_dist, tol, opt.floor));
    if (fine.max_dist > std::max(coarse.max_dist, opt.floor) * (1 + 1e-6) && v == Verdict::Pass) {
      r.notes.push_back("distance grew under grid doubling");
      r.downgrade(Verdict::Fail);
    }
  }
}

void junctions(const Claim& c, const VerifyOptions& opt, ClaimReport& r) {
  const AtlasItem& it = atlas().item(c.lhs);
  if (it.piecewise.empty()) throw Error(ErrorKind::Unsupported, c.lhs + " has no piecewise data");
  const double tol = opt.scaled(c.tolerance);
  const int nt = it.domain == DomainKind::Cylinder ? 64 : 0;
  double worst_value = 0.0, worst_piece = 0.0, worst_cover = 0.0;
  std::int64_t count = 0;
  std::string where;
  for (int j = 0; j <= nt; ++j) {
    const double t = nt ? static_cast<double>(j) / nt : 0.0;
    for (const auto& ps : it.piecewise) {
      const auto& pieces = ps.pieces();
      // coverage with matching endpoints
      worst_cover = std::max(worst_cover, std::abs(pieces.front().lo(t)));
      worst_cover = std::max(worst_cover, std::abs(pieces.back().hi(t) - kTwoPi));
      for (std::size_t k = 0; k < pieces.size(); ++k) {
        worst_cover = std::max(worst_cover, std::max(0.0, pieces[k].lo(t) - pieces[k].hi(t)));
        if (k + 1 < pieces.size()) {
          worst_cover = std::max(worst_cover, std::abs(pieces[k].hi(t) - pieces[k + 1].lo(t)));
        }
      }
      for (double J : ps.junctions(t)) {
        ++count;
        std::vector<Complex> vals;
        const Sample s = Sample::circle(J, t);
        for (const auto& p : pieces) {
          if (p.lo(t) <= J + 1e-12 && J <= p.hi(t) + 1e-12) vals.push_back(p.f(s));
        }
        for (std::size_t a = 0; a < vals.size(); ++a) {
          for (std::size_t b = a + 1; b < vals.size(); ++b) {
            const double d = std::abs(vals[a] - vals[b]) / std::max(1.0, std::abs(vals[a]));
            if (d > worst_piece) {
              worst_piece = d;
              where = ps.name() + " at t=" + fmt(t) + ", arg z=" + fmt(J);
            }
          }
        }
        const double dv = value_dist(it.fn(Sample::circle(J, t, Side::Left)),
                                     it.fn(Sample::circle(J, t, Side::Right)));
        worst_value = std::max(worst_value, dv);
      }
    }
  }
  r.grids.emplace_back("t-grid", std::to_string(nt + 1));
  r.ints("junctions", {count});
  r.margin("max-piece-gap", worst_piece);
  r.margin("max-value-gap", worst_value);
  r.margin("coverage-gap", worst_cover);
  if (!where.empty() && worst_piece > tol) r.notes.push_back("largest gap: " + where);
  r.downgrade(distance_verdict(std::max(worst_piece, worst_value), tol, opt.floor));
  r.downgrade(distance_verdict(worst_cover, 1e-12, opt.floor));
}

void winding_equal(const Claim& c, const VerifyOptions& opt, ClaimReport& r) {
  const RelationReport rel = check_linear_relation(Path(c.lhs, engine(opt)), Path(c.rhs, engine(opt)),
                                                   c.functionals, opt.winding);
  r.ints("lhs", rel.lhs.values);
  r.ints("rhs", rel.rhs.values);
  double res = 0.0;
  for (double x : rel.lhs.residuals) res = std::max(res, x);
  for (double x : rel.rhs.residuals) res = std::max(res, x);
  r.margin("max-residual-turns", res);
  r.grids.emplace_back("winding", std::to_string(opt.winding.initial) + "+adaptive");
  if (rel.indeterminate) {
    r.downgrade(Verdict::Inconclusive);
  } else if (!rel.equal) {
    r.downgrade(Verdict::Fail);
  }
}

void fiber_vector(const Claim& c, const VerifyOptions& opt, ClaimReport& r) {
  const FiberVector f = fiber_winding_vector(Path(c.lhs, engine(opt)), opt.winding);
  r.ints("fiber-windings", {f.k[0], f.k[1], f.k[2]});
  r.ints("expected", std::vector<std::int64_t>(c.expected.begin(), c.expected.end()));
  double res = 0.0;
  for (const auto& d : f.detail) res = std::max(res, d.residual);
  r.margin("max-residual-turns", res);
  r.grids.emplace_back("winding", std::to_string(opt.winding.initial) + "+adaptive");
  if (f.indeterminate) {
    r.downgrade(Verdict::Inconclusive);
  } else if (std::vector<std::int64_t>(f.k.begin(), f.k.end()) !=
             std::vector<std::int64_t>(c.expected.begin(), c.expected.end())) {
    r.downgrade(Verdict::Fail);
  }
}

void disk_nullity(const Claim& c, const VerifyOptions& opt, ClaimReport& r) {
  std::vector<std::int64_t> w;
  double min_mod = std::numeric_limits<double>::infinity();
  for (const auto& id : c.functionals) {
    const NullityReport n = disk_winding_nullity(c.lhs, functional(id), opt.grid, opt.winding);
    w.push_back(n.winding);
    min_mod = std::min(min_mod, n.min_modulus);
    if (n.inconclusive) {
      r.notes.push_back(id + ": " + n.note);
      r.downgrade(Verdict::Inconclusive);
    } else if (!n.passed) {
      r.downgrade(Verdict::Fail);
    }
  }
  r.ints("boundary-windings", w);
  r.margin("min-modulus-on-disk", min_mod);
  r.grids.emplace_back("disk", opt.grid.describe(DomainKind::Disk));
}

void basepoint_closure(const Claim& c, const VerifyOptions& opt, ClaimReport& r) {
  const AtlasItem& it = atlas().item(c.lhs);
  const Value base = atlas().item(c.rhs).fn(Sample{});
  double worst = 0.0;
  const std::vector<double> ts =
      it.domain == DomainKind::Cylinder ? std::vector<double>{0.0, 1.0} : std::vector<double>{0.0};
  for (double t : ts) {
    worst = std::max(worst, value_dist(it.fn(Sample::circle(0.0, t)), base));
    worst = std::max(worst, value_dist(it.fn(Sample::circle(kTwoPi, t, Side::Left)), base));
  }
  r.margin("max-distance", worst);
  r.downgrade(distance_verdict(worst, opt.scaled(c.tolerance), opt.floor));
}

void containment(const Claim& c, const VerifyOptions& opt, ClaimReport& r) {
  const AtlasItem& lift = atlas().item(c.lhs);
  const AtlasItem& plane = atlas().item(c.rhs);
  double worst = 0.0;
  for (const Sample& s : domain_nodes(lift.domain, opt.grid)) {
    const Config6 cfg = std::get<Config6>(lift.fn(s));
    const HPoint cov = std::get<Hyperplane>(plane.fn(s)).covector;
    for (const auto& p : cfg.points) worst = std::max(worst, hyperplane_residual(cov, p));
  }
  r.grids.emplace_back("disk", opt.grid.describe(lift.domain));
  r.margin("max-residual", worst);
  r.downgrade(distance_verdict(worst, opt.scaled(c.tolerance), opt.floor));
}

std::vector<Complex> coarse_disk() { return disk_nodes(32, 8); }

void phi_chart(const Claim& c, const VerifyOptions& opt, ClaimReport& r) {
  const double tol = opt.scaled(c.tolerance);
  const Config6 d0 = planar_basepoint();
  const HPoint i0 = planar_center();
  ConfigSampler sampler(opt.seed);
  std::vector<Config6> fibers{d0};
  for (int k = 0; k < 8; ++k) fibers.push_back(sampler.planar(2, i0, engine(opt)));

  if (c.lhs == "membership") {
    const SpaceTag tag = SpaceTag::planar(2);
    double margin = std::numeric_limits<double>::infinity(), proj = 0.0, ident = 0.0;
    Verdict ok = Verdict::Pass;
    for (std::size_t f = 0; f < fibers.size(); ++f) {
      const auto nodes = f == 0 ? disk_nodes(opt.grid.disk_angular, opt.grid.disk_radial)
                                : coarse_disk();
      for (Complex z : nodes) {
        const HPoint center = phi_chart_center(z);
        const Config6 out = phi_trivialization(center, fibers[f]);
        const MembershipReport m = validate(out, tag, opt.tol);
        margin = std::min(margin, m.margin);
        ok = worse(ok, membership_verdict(m, opt.floor));
        proj = std::max(proj, proj_dist(out.center(engine(opt)), center));
      }
      ident = std::max(ident, config_dist(phi_trivialization(i0, fibers[f]), fibers[f]));
    }
    r.grids.emplace_back("base fibre", opt.grid.describe(DomainKind::Disk));
    r.grids.emplace_back("random fibres", "8 x 32x8");
    r.margin("min-margin", margin);
    r.margin("mu-defect", proj);
    r.margin("identity-defect", ident);
    r.downgrade(ok);
  if (!(margin > opt.tol.margin_warn)) r.downgrade(Verdict::Fail);
    r.downgrade(distance_verdict(std::max(proj, ident), tol, opt.floor));
  } else if (c.lhs == "geometric") {
    double worst = 0.0;
    std::int64_t skipped = 0, used = 0;
    for (const auto& f : fibers) {
      for (Complex z : coarse_disk()) {
        const HPoint center = phi_chart_center(z);
        try {
          const double d = config_dist(phi_geometric(center, f, engine(opt)), phi_trivialization(center, f));
          worst = std::max(worst, d);
          ++used;
        } catch (const Error&) {
          ++skipped;  // center on a fibre line: handled by the singular-locus check
        }
      }
    }
    r.grids.emplace_back("fibres", "9 x 32x8");
    r.ints("nodes-used-skipped", {used, skipped});
    r.margin("max-distance", worst);
    r.downgrade(distance_verdict(worst, tol, opt.floor));
  } else {
    // centers approaching points of the fibre lines d_i^0
    const double eps[] = {1e-3, 1e-4, 1e-5, 1e-6};
    CVector dir(3);
    dir << Complex(0.3, 0.1), Complex(0.0, -0.7), Complex(0.2, 0.0);
    double worst_final = 0.0;
    bool monotone = true;
    for (int i = 1; i <= 3; ++i) {
      const CVector star = d0.A(i).coords() + 2.0 * i0.coords();
      const Config6 limit = phi_trivialization(HPoint(star), d0);
      double prev = std::numeric_limits<double>::infinity();
      for (double e : eps) {
        const Config6 g = phi_geometric(HPoint(CVector(star + e * dir)), d0, engine(opt));
        const double d = config_dist(g, limit);
        r.margin("d" + std::to_string(i) + " eps=" + fmt(e), d);
        monotone = monotone && (d < prev || d <= opt.floor);
        prev = d;
      }
      worst_final = std::max(worst_final, prev);
    }
    r.grids.emplace_back("rays", "3 lines x 4 radii");
    if (!monotone) r.notes.push_back("distances do not shrink along the rays");
    // convergence threshold is absolute: it measures a limit, not an identity
    if (!monotone || worst_final > c.tolerance) r.downgrade(Verdict::Fail);
  }
}

void psi_chart(const Claim& c, const VerifyOptions& opt, ClaimReport& r) {
  const double tol = opt.scaled(c.tolerance);
  const Config6 d0 = planar_basepoint();
  const HPoint q = psi_center_of_projection();
  const auto charts = fiber_charts(2);
  std::mt19937_64 rng(opt.seed);
  std::normal_distribution<double> n01;
  std::vector<Config6> fibers{d0};
  for (int k = 0; k < 8; ++k) {
    Config6 f;
    for (std::size_t i = 0; i < 3; ++i) {
      const Complex xa(n01(rng), n01(rng));
      Complex xb(n01(rng), n01(rng));
      if (std::abs(xb - xa) < 0.1) xb += 1.0;
      f.points[2 * i] = HPoint(CVector(charts[i].base + xa * charts[i].center));
      f.points[2 * i + 1] = HPoint(CVector(charts[i].base + xb * charts[i].center));
    }
    fibers.push_back(f);
  }
  const SpaceTag tag = SpaceTag::planar_fixed(2, planar_center());
  double margin = std::numeric_limits<double>::infinity(), lam = 0.0, ident = 0.0;
  Verdict ok = Verdict::Pass;
  for (std::size_t f = 0; f < fibers.size(); ++f) {
    const auto nodes =
        f == 0 ? disk_nodes(opt.grid.disk_angular, opt.grid.disk_radial) : coarse_disk();
    for (Complex z : nodes) {
      const LineTriple lines = psi_lines(z);
      const Config6 out = psi_trivialization(lines, fibers[f], q, engine(opt));
      const MembershipReport m = validate(out, tag, opt.tol);
      margin = std::min(margin, m.margin);
      ok = worse(ok, membership_verdict(m, opt.floor));
      lam = std::max(lam, line_triple_dist(LineTriple{out.lines()}, lines));
    }
    ident = std::max(ident, config_dist(psi_trivialization(psi_lines(0.0), fibers[f], q, engine(opt)),
                                        fibers[f]));
  }
  r.grids.emplace_back("base fibre", opt.grid.describe(DomainKind::Disk));
  r.grids.emplace_back("random fibres", "8 x 32x8");
  r.margin("min-margin", margin);
  r.margin("lambda-defect", lam);
  r.margin("identity-defect", ident);
  r.downgrade(ok);
  if (!(margin > opt.tol.margin_warn)) r.downgrade(Verdict::Fail);
  r.downgrade(distance_verdict(std::max(lam, ident), tol, opt.floor));
}

Config6 to_frame(const Config6& c) {
  Config6 out;
  for (std::size_t i = 0; i < 6; ++i) {
    const CVector& a = c.points[i].coords();
    out.points[i] = HPoint({0, a[0], a[1], a[2]});
  }
  return out;
}

void gr_projection_claim(const Claim& c, const VerifyOptions& opt, ClaimReport& r) {
  const double tol = opt.scaled(c.tolerance);
  const bool variant_b = c.lhs == "b";
  const HPoint center = gr_frame_center();
  CMatrix h = CMatrix::Zero(4, 3);
  h(0, 0) = h(1, 1) = h(2, 2) = 1;
  CMatrix q = CMatrix::Zero(4, 1);
  q(0, 0) = 1;
  ConfigSampler sampler(opt.seed);
  std::vector<Config6> fibers{gr_frame_basepoint()};
  for (int k = 0; k < 8; ++k) fibers.push_back(to_frame(sampler.planar(2, planar_center(), engine(opt))));

  const SpaceTag tag = variant_b ? SpaceTag::planar(3) : SpaceTag::planar_fixed(3, center);
  double margin = std::numeric_limits<double>::infinity(), plane = 0.0, direct = 0.0,
         display = 0.0, ident = 0.0;
  Verdict ok = Verdict::Pass;
  for (std::size_t f = 0; f < fibers.size(); ++f) {
    const auto nodes =
        f == 0 ? disk_nodes(opt.grid.disk_angular, opt.grid.disk_radial) : coarse_disk();
    for (Complex z : nodes) {
      const Complex p1 = 0.7 * z, p2 = 0.4 * std::conj(z), p3 = variant_b ? 0.3 * z : Complex(0);
      const CMatrix target = plane_graph_cp3(p1, p2, p3);
      const Config6 out = variant_b ? gr_projection(fibers[f], target, q, engine(opt))
                                    : gr_geometric(fibers[f], center, target, h, q, engine(opt));
      const MembershipReport m = validate(out, tag, opt.tol);
      margin = std::min(margin, m.margin);
      ok = worse(ok, membership_verdict(m, opt.floor));
      const HPoint cov({-1.0, p1, p2, p3});
      for (const auto& p : out.points) plane = std::max(plane, hyperplane_residual(cov, p));
      if (!variant_b) {
        direct = std::max(direct, config_dist(out, gr_projection(fibers[f], target, q, engine(opt))));
        display = std::max(display, config_dist(out, gr_display(fibers[f], p1, p2)));
      }
    }
    const CMatrix p0 = plane_graph_cp3(0, 0, 0);
    const Config6 at0 = variant_b ? gr_projection(fibers[f], p0, q, engine(opt))
                                  : gr_geometric(fibers[f], center, p0, h, q, engine(opt));
    ident = std::max(ident, config_dist(at0, fibers[f]));
  }
  r.grids.emplace_back("base fibre", opt.grid.describe(DomainKind::Disk));
  r.grids.emplace_back("random fibres", "8 x 32x8");
  r.margin("min-margin", margin);
  r.margin("plane-residual", plane);
  r.margin("identity-defect", ident);
  if (!variant_b) {
    r.margin("direct-projection-distance", direct);
    r.margin("display-distance", display);
    r.notes.push_back("display compared with the index shift making it a projection from [1:0:0:0]");
  }
  r.downgrade(ok);
  if (!(margin > opt.tol.margin_warn)) r.downgrade(Verdict::Fail);
  r.downgrade(distance_verdict(std::max({plane, ident, direct}), tol, opt.floor));
}

void class_vector_claim(const Claim& c, const VerifyOptions& opt, ClaimReport& r) {
  const auto v = class_vector(Path(c.lhs, engine(opt)), c.functionals, opt.winding);
  r.ints("expected", std::vector<std::int64_t>(c.expected.begin(), c.expected.end()));
  if (!v) {
    r.notes.push_back("windings not in the integer span of alpha, beta, sigma");
    r.downgrade(Verdict::Inconclusive);
    return;
  }
  r.ints("class", *v);
  if (*v != std::vector<std::int64_t>(c.expected.begin(), c.expected.end())) r.downgrade(Verdict::Fail);
}

void snf_claim(const Claim& c, const VerifyOptions& opt, ClaimReport& r) {
  IntMatrix rel;
  const bool fiber = c.functionals.size() == 1 && c.functionals[0] == "fiber";
  for (const auto& l : c.loops) {
    const Path p(l, engine(opt));
    if (fiber) {
      const FiberVector f = fiber_winding_vector(p, opt.winding);
      if (f.indeterminate) {
        r.downgrade(Verdict::Inconclusive);
        return;
      }
      rel.push_back({f.k[0], f.k[1], f.k[2]});
    } else {
      const auto v = class_vector(p, c.functionals, opt.winding);
      if (!v) {
        r.downgrade(Verdict::Inconclusive);
        return;
      }
      rel.push_back(*v);
    }
  }
  for (std::size_t i = 0; i < rel.size(); ++i) r.ints("relation " + c.loops[i], rel[i]);
  r.ints("smith-diagonal", smith_diagonal(rel));
  const auto q = quotient_invariants(rel, 3);
  r.ints("quotient", q);
  r.ints("expected", std::vector<std::int64_t>(c.expected.begin(), c.expected.end()));
  if (q != std::vector<std::int64_t>(c.expected.begin(), c.expected.end())) r.downgrade(Verdict::Fail);
}

void braid_claim(const Claim& c, ClaimReport& r) {
  const bool yb3 = c.check == CheckKind::BraidYB3;
  const int lo = c.expected.size() > 0 ? c.expected[0] : (yb3 ? 3 : 4);
  const int hi = c.expected.size() > 1 ? c.expected[1] : 6;
  std::vector<std::int64_t> counts, controls;
  for (int n = lo; n <= hi; ++n) {
    const RelationCheck ok = yb3 ? verify_yb3(n) : verify_yb4(n);
    const RelationCheck bad = yb3 ? verify_yb3_corrupted(n) : verify_yb4_corrupted(n);
    counts.push_back(static_cast<std::int64_t>(ok.passed));
    controls.push_back(static_cast<std::int64_t>(bad.identities - bad.passed));
    if (!ok.ok()) {
      r.downgrade(Verdict::Fail);
      for (const auto& f : ok.failures) r.notes.push_back("n=" + std::to_string(n) + " " + f);
    }
    if (bad.ok()) {
      r.notes.push_back("negative control passed for n=" + std::to_string(n));
      r.downgrade(Verdict::Fail);
    }
  }
  r.ints("identities-verified", counts);
  r.ints("negative-controls-rejected", controls);
  r.grids.emplace_back("n", std::to_string(lo) + ".." + std::to_string(hi));
}

void check_references(const Claim& c) {
  for (const auto& id : c.references) {
    if (!atlas().contains(id)) throw Error(ErrorKind::UnknownId, c.id + ": unknown reference " + id);
  }
}

}  // namespace

ClaimReport verify_claim(const Claim& claim, const VerifyOptions& opt) {
  opt.tol.check();
  check_references(claim);
  ClaimReport r;
  r.claim_id = claim.id;
  r.family = claim.family;
  r.kind = claim.kind;
  r.check = claim.check;
  r.stated = claim.stated;
  r.description = claim.description;
  r.anchor = claim.anchor;
  r.tolerance = opt.scaled(claim.tolerance);
  try {
    switch (claim.check) {
      case CheckKind::MembershipSweep: check_membership(claim, opt, r); break;
      case CheckKind::PointwiseLoops: pointwise(claim, opt, r, false); break;
      case CheckKind::PointwiseFields: pointwise(claim, opt, r, true); break;
      case CheckKind::PiecewiseJunctions: junctions(claim, opt, r); break;
      case CheckKind::WindingEqual: winding_equal(claim, opt, r); break;
      case CheckKind::FiberVector: fiber_vector(claim, opt, r); break;
      case CheckKind::DiskNullity: disk_nullity(claim, opt, r); break;
      case CheckKind::BasepointClosure: basepoint_closure(claim, opt, r); break;
      case CheckKind::HyperplaneContainment: containment(claim, opt, r); break;
      case CheckKind::PhiChart: phi_chart(claim, opt, r); break;
      case CheckKind::PsiChart: psi_chart(claim, opt, r); break;
      case CheckKind::GrProjection: gr_projection_claim(claim, opt, r); break;
      case CheckKind::ClassVector: class_vector_claim(claim, opt, r); break;
      case CheckKind::SmithNormalForm: snf_claim(claim, opt, r); break;
      case CheckKind::BraidYB3:
      case CheckKind::BraidYB4: braid_claim(claim, r); break;
    }
  } catch (const Error& e) {
    r.error = std::string(to_string(e.kind())) + ": " + e.what();
    r.downgrade(Verdict::Fail);
  }
  return r;
}

}  // namespace dcs
