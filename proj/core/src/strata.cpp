#include "dcs/strata.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dcs {

SpaceTag SpaceTag::fk(int n, int k) { return {SpaceKind::Fk, n, k, 0, std::nullopt}; }
SpaceTag SpaceTag::fk_stratum(int n, int k, int i) {
  return {SpaceKind::FkStratum, n, k, i, std::nullopt};
}
SpaceTag SpaceTag::planar(int n) { return {SpaceKind::DPlanar, n, 6, 2, std::nullopt}; }
SpaceTag SpaceTag::planar_fixed(int n, HPoint center) {
  return {SpaceKind::DPlanarFixed, n, 6, 2, std::move(center)};
}
SpaceTag SpaceTag::solid(int n) { return {SpaceKind::DSolid, n, 6, 3, std::nullopt}; }
SpaceTag SpaceTag::solid_fixed(int n, HPoint center) {
  return {SpaceKind::DSolidFixed, n, 6, 3, std::move(center)};
}
SpaceTag SpaceTag::lines_through(HPoint center) {
  const int n = center.ambient_dim();
  return {SpaceKind::F3LinesThrough, n, 3, 1, std::move(center)};
}

bool SpaceTag::is_desargues() const {
  return kind == SpaceKind::DPlanar || kind == SpaceKind::DPlanarFixed ||
         kind == SpaceKind::DSolid || kind == SpaceKind::DSolidFixed;
}

SpaceTag SpaceTag::forget_center() const {
  SpaceTag out = *this;
  if (kind == SpaceKind::DPlanarFixed) out.kind = SpaceKind::DPlanar;
  if (kind == SpaceKind::DSolidFixed) out.kind = SpaceKind::DSolid;
  if (out.kind != SpaceKind::F3LinesThrough) out.center.reset();
  return out;
}

void SpaceTag::check() const {
  const bool planar = kind == SpaceKind::DPlanar || kind == SpaceKind::DPlanarFixed;
  if (n < 1) throw Error(ErrorKind::OutOfDomain, "ambient dimension must be >= 1");
  if (planar && n < 2) throw Error(ErrorKind::OutOfDomain, "planar spaces need n >= 2");
  if (is_solid() && n < 3) throw Error(ErrorKind::OutOfDomain, "solid spaces need n >= 3");
  if (kind == SpaceKind::FkStratum && (i < 0 || i > n)) {
    throw Error(ErrorKind::OutOfDomain, "stratum index out of range");
  }
  const bool needs_center = kind == SpaceKind::DPlanarFixed || kind == SpaceKind::DSolidFixed ||
                            kind == SpaceKind::F3LinesThrough;
  if (needs_center && (!center || center->ambient_dim() != n)) {
    throw Error(ErrorKind::OutOfDomain, "fixed-center tag needs a center in CP^n");
  }
}

std::string SpaceTag::name() const {
  const std::string nn = std::to_string(n);
  switch (kind) {
    case SpaceKind::Fk: return "F_" + std::to_string(k) + "(CP^" + nn + ")";
    case SpaceKind::FkStratum:
      return "F_" + std::to_string(k) + "^{" + std::to_string(i) + "," + nn + "}";
    case SpaceKind::DPlanar: return "D^{2," + nn + "}";
    case SpaceKind::DPlanarFixed: return "D_I^{2," + nn + "}";
    case SpaceKind::DSolid: return "D^{3," + nn + "}";
    case SpaceKind::DSolidFixed: return "D_I^{3," + nn + "}";
    case SpaceKind::F3LinesThrough: return "F_3(lines through I in CP^" + nn + ")";
  }
  return "?";
}

HPoint Config6::center(const Tolerances& tol) const { return meet_lines(line(1), line(2), tol); }

Config6 Config6::embedded(int extra) const {
  Config6 out;
  for (std::size_t i = 0; i < 6; ++i) out.points[i] = points[i].embedded(extra);
  return out;
}

Config6 Config6::rescaled(const std::array<Complex, 6>& scalars) const {
  Config6 out;
  for (std::size_t i = 0; i < 6; ++i) out.points[i] = points[i].scaled(scalars[i]);
  return out;
}

double config_dist(const Config6& a, const Config6& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < 6; ++i) d = std::max(d, proj_dist(a.points[i], b.points[i]));
  return d;
}

double line_triple_dist(const LineTriple& a, const LineTriple& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < 3; ++i) d = std::max(d, line_dist(a.lines[i], b.lines[i]));
  return d;
}

void MembershipReport::add_margin(const std::string& name, double value, double threshold) {
  const bool ok = value > threshold;
  checks.push_back({name, ok, value});
  margin = std::min(margin, value);
  if (!ok) {
    verdict = false;
    if (std::find(failures.begin(), failures.end(), name) == failures.end()) failures.push_back(name);
  }
}

void MembershipReport::add_residual(const std::string& name, double value, double threshold) {
  const bool ok = value <= threshold;
  checks.push_back({name, ok, value, true});
  max_residual = std::max(max_residual, value);
  if (!ok) {
    verdict = false;
    if (std::find(failures.begin(), failures.end(), name) == failures.end()) failures.push_back(name);
  }
}

namespace {

double min_pairwise(std::span<const HPoint> points) {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      m = std::min(m, proj_dist(points[i], points[j]));
    }
  }
  return m;
}

MembershipReport fresh_report() {
  MembershipReport r;
  r.margin = std::numeric_limits<double>::infinity();
  return r;
}

void finish(MembershipReport& r) {
  if (!std::isfinite(r.margin)) r.margin = 0.0;
  if (r.verdict && !(r.margin > 0)) r.verdict = false;
}

// Relative singular value sigma_k (0-based) or 0 when absent.
double rel_sv(std::span<const HPoint> pts, std::size_t k) {
  const auto sv = relative_singular_values(pts);
  return k < sv.size() ? sv[k] : 0.0;
}

}  // namespace

MembershipReport in_configuration_space(std::span<const HPoint> points, const Tolerances& tol) {
  if (points.empty()) throw Error(ErrorKind::EmptyInput, "empty configuration");
  const int dim = points.front().ambient_dim();
  for (const auto& p : points) {
    if (p.ambient_dim() != dim) throw Error(ErrorKind::DimensionMismatch, "mixed ambient dimensions");
  }
  MembershipReport r = fresh_report();
  if (points.size() == 1) {
    r.margin = 1.0;
    r.checks.push_back({"pairwise-distinct", true, 1.0});
    return r;
  }
  r.add_margin("pairwise-distinct", min_pairwise(points), tol.proj_eq_tol);
  finish(r);
  return r;
}

int stratum_of(std::span<const HPoint> points, const Tolerances& tol) {
  const auto r = in_configuration_space(points, tol);
  if (!r.verdict) throw Error(ErrorKind::DegenerateSpan, "points are not pairwise distinct");
  return span_dim(points, tol);
}

MembershipReport validate_lines(const LineTriple& lines, const std::optional<HPoint>& center,
                                const Tolerances& tol) {
  MembershipReport r = fresh_report();
  double distinct = 1.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const auto& a = lines.lines[static_cast<std::size_t>(i)];
      const auto& b = lines.lines[static_cast<std::size_t>(j)];
      const HPoint pts[] = {a.p(), a.q(), b.p(), b.q()};
      distinct = std::min(distinct, rel_sv(pts, 2));
    }
  }
  r.add_margin("lines-distinct", distinct, tol.rank_rel_tol);
  if (!r.verdict) {
    finish(r);
    return r;
  }
  const auto& l = lines.lines;
  const HPoint four[] = {l[0].p(), l[0].q(), l[1].p(), l[1].q()};
  r.add_residual("lines-coplanar", rel_sv(four, 3), tol.rank_rel_tol);
  if (r.verdict) {
    const HPoint meet = meet_lines(l[0], l[1], tol);
    r.add_residual("concurrent", on_line(meet, l[2], tol).margin, tol.rank_rel_tol);
    if (center) r.add_residual("fixed-center", proj_dist(meet, *center), tol.proj_eq_tol);
  }
  finish(r);
  return r;
}

MembershipReport validate(const Config6& config, const SpaceTag& tag, const Tolerances& tol) {
  tag.check();
  if (!tag.is_desargues()) {
    throw Error(ErrorKind::Unsupported, "validate expects a Desargues space tag");
  }
  for (const auto& p : config.points) {
    if (p.ambient_dim() != tag.n) {
      throw Error(ErrorKind::DimensionMismatch, "configuration does not live in CP^" + std::to_string(tag.n));
    }
  }
  MembershipReport r = fresh_report();
  r.add_margin("pairwise-distinct", min_pairwise(config.points), tol.proj_eq_tol);
  if (!r.verdict) {
    finish(r);
    return r;
  }

  const auto lines = config.lines();
  double distinct = 1.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const auto& a = lines[static_cast<std::size_t>(i)];
      const auto& b = lines[static_cast<std::size_t>(j)];
      const HPoint pts[] = {a.p(), a.q(), b.p(), b.q()};
      distinct = std::min(distinct, rel_sv(pts, 2));
    }
  }
  r.add_margin("lines-distinct", distinct, tol.rank_rel_tol);
  if (!r.verdict) {
    finish(r);
    return r;
  }

  const HPoint four[] = {lines[0].p(), lines[0].q(), lines[1].p(), lines[1].q()};
  r.add_residual("lines-coplanar", rel_sv(four, 3), tol.rank_rel_tol);
  if (!r.verdict) {
    finish(r);
    return r;
  }
  const HPoint center = meet_lines(lines[0], lines[1], tol);
  r.add_residual("concurrent", on_line(center, lines[2], tol).margin, tol.rank_rel_tol);

  double center_gap = 1.0;
  for (const auto& p : config.points) center_gap = std::min(center_gap, proj_dist(p, center));
  r.add_margin("center-distinct", center_gap, tol.proj_eq_tol);

  const std::size_t want = tag.is_solid() ? 3 : 2;
  const auto sv = relative_singular_values(config.points);
  r.add_margin("span", want < sv.size() ? sv[want] : 0.0, tol.rank_rel_tol);
  if (static_cast<int>(want) + 1 <= tag.n) {
    r.add_residual("span-excess", want + 1 < sv.size() ? sv[want + 1] : 0.0, tol.rank_rel_tol);
  }
  if (tag.center) r.add_residual("fixed-center", proj_dist(center, *tag.center), tol.proj_eq_tol);
  finish(r);
  return r;
}

double degeneracy_margin(const Config6& config, const SpaceTag& tag, const Tolerances& tol) {
  return validate(config, tag, tol).margin;
}

Complex ConfigSampler::gaussian() {
  std::normal_distribution<double> g(0.0, 1.0);
  const double re = g(rng_);
  const double im = g(rng_);
  return {re, im};
}

HPoint ConfigSampler::random_point(int n) {
  CVector v(n + 1);
  for (int i = 0; i <= n; ++i) v[i] = gaussian();
  return HPoint(v);
}

Config6 ConfigSampler::build(int n, const HPoint& center, const std::array<HPoint, 3>& directions) {
  (void)n;
  Config6 c;
  for (std::size_t i = 0; i < 3; ++i) {
    // Points c*I + dir with random nonzero weights; the weight on dir keeps them off I.
    const Complex a = gaussian();
    const Complex b = gaussian();
    c.points[2 * i] = HPoint(CVector(a * center.coords() + directions[i].coords()));
    c.points[2 * i + 1] = HPoint(CVector(b * center.coords() + directions[i].coords()));
  }
  return c;
}

Config6 ConfigSampler::planar(int n, const std::optional<HPoint>& center, const Tolerances& tol) {
  const SpaceTag tag = center ? SpaceTag::planar_fixed(n, *center) : SpaceTag::planar(n);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const HPoint I = center ? *center : random_point(n);
    // Directions inside a random 2-plane through I.
    const HPoint u = random_point(n);
    const HPoint v = random_point(n);
    std::array<HPoint, 3> dirs;
    for (auto& d : dirs) d = HPoint(CVector(gaussian() * u.coords() + gaussian() * v.coords()));
    Config6 c = build(n, I, dirs);
    const auto r = validate(c, tag, tol);
    if (r.verdict && r.margin > tol.margin_warn) return c;
  }
  throw Error(ErrorKind::DegenerateSpan, "sampler failed to produce a nondegenerate configuration");
}

Config6 ConfigSampler::solid(int n, const std::optional<HPoint>& center, const Tolerances& tol) {
  if (n < 3) throw Error(ErrorKind::OutOfDomain, "solid configurations need n >= 3");
  const SpaceTag tag = center ? SpaceTag::solid_fixed(n, *center) : SpaceTag::solid(n);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const HPoint I = center ? *center : random_point(n);
    std::array<HPoint, 3> dirs = {random_point(n), random_point(n), random_point(n)};
    Config6 c = build(n, I, dirs);
    const auto r = validate(c, tag, tol);
    if (r.verdict && r.margin > tol.margin_warn) return c;
  }
  throw Error(ErrorKind::DegenerateSpan, "sampler failed to produce a nondegenerate configuration");
}

}  // namespace dcs
