#include "dcs/atlas.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace dcs {

namespace {

constexpr Complex kI{0.0, 1.0};

Complex cexp_i(double phi) { return std::polar(1.0, phi); }

HPoint pt(std::initializer_list<Complex> c) { return HPoint(c); }

Config6 cfg(HPoint a1, HPoint b1, HPoint a2, HPoint b2, HPoint a3, HPoint b3) {
  return Config6{{std::move(a1), std::move(b1), std::move(a2), std::move(b2), std::move(a3),
                  std::move(b3)}};
}

PLine line_from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
  const auto nrows = static_cast<Eigen::Index>(rows.size());
  const auto ncols = static_cast<Eigen::Index>(rows.begin()->size());
  CMatrix m(nrows, ncols);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (Complex c : row) m(i, j++) = c;
    ++i;
  }
  return PLine::from_equations(m);
}

std::function<double(double)> at(double c) {
  return [c](double) { return c; };
}

Piece piece(std::function<double(double)> lo, std::function<double(double)> hi,
            std::function<Complex(const Sample&)> f, std::string formula) {
  return Piece{std::move(lo), std::move(hi), std::move(f), std::move(formula)};
}

Complex zc(const Sample& s) { return std::conj(s.z); }

}  // namespace

double arg_2pi(Complex z) {
  double a = std::arg(z);
  if (a < 0) a += kTwoPi;
  if (a >= kTwoPi) a = 0.0;
  return a;
}

const char* to_string(DomainKind d) {
  switch (d) {
    case DomainKind::Circle: return "circle";
    case DomainKind::Disk: return "disk";
    case DomainKind::Cylinder: return "cylinder";
    case DomainKind::Constant: return "constant";
    case DomainKind::Chart: return "chart";
  }
  return "?";
}

const char* to_string(ValueKind k) {
  switch (k) {
    case ValueKind::Config: return "config";
    case ValueKind::Lines: return "lines";
    case ValueKind::Point: return "point";
    case ValueKind::Hyperplane: return "hyperplane";
    case ValueKind::Scalar: return "scalar";
  }
  return "?";
}

const char* to_string(ClaimKind k) {
  switch (k) {
    case ClaimKind::Membership: return "membership";
    case ClaimKind::LiftIdentity: return "lift-identity";
    case ClaimKind::BoundaryIdentity: return "boundary-identity";
    case ClaimKind::PointwiseLoopEquality: return "pointwise-loop-equality";
    case ClaimKind::WindingRelation: return "winding-relation";
    case ClaimKind::DiskNullhomotopy: return "disk-nullhomotopy";
  }
  return "?";
}

const char* to_string(CheckKind k) {
  switch (k) {
    case CheckKind::MembershipSweep: return "membership-sweep";
    case CheckKind::PointwiseLoops: return "pointwise-loops";
    case CheckKind::PointwiseFields: return "pointwise-fields";
    case CheckKind::PiecewiseJunctions: return "piecewise-junctions";
    case CheckKind::WindingEqual: return "winding-equal";
    case CheckKind::FiberVector: return "fiber-vector";
    case CheckKind::DiskNullity: return "disk-nullity";
    case CheckKind::BasepointClosure: return "basepoint-closure";
    case CheckKind::HyperplaneContainment: return "hyperplane-containment";
    case CheckKind::PhiChart: return "phi-chart";
    case CheckKind::PsiChart: return "psi-chart";
    case CheckKind::GrProjection: return "gr-projection";
    case CheckKind::ClassVector: return "class-vector";
    case CheckKind::SmithNormalForm: return "smith-normal-form";
    case CheckKind::BraidYB3: return "braid-yb3";
    case CheckKind::BraidYB4: return "braid-yb4";
  }
  return "?";
}

Sample Sample::circle(double theta, double t, Side side) {
  Sample s;
  s.theta = theta;
  s.t = t;
  s.z = cexp_i(theta);
  s.side = side;
  return s;
}

Sample Sample::disk(Complex z) {
  Sample s;
  s.z = z;
  s.theta = arg_2pi(z);
  return s;
}

ValueKind kind_of(const Value& v) { return static_cast<ValueKind>(v.index()); }

double value_dist(const Value& a, const Value& b) {
  if (a.index() != b.index()) {
    throw Error(ErrorKind::DimensionMismatch, "value_dist: values of different kinds");
  }
  switch (kind_of(a)) {
    case ValueKind::Config: return config_dist(std::get<Config6>(a), std::get<Config6>(b));
    case ValueKind::Lines:
      return line_triple_dist(std::get<LineTriple>(a), std::get<LineTriple>(b));
    case ValueKind::Point: return proj_dist(std::get<HPoint>(a), std::get<HPoint>(b));
    case ValueKind::Hyperplane:
      return proj_dist(std::get<Hyperplane>(a).covector, std::get<Hyperplane>(b).covector);
    case ValueKind::Scalar: return std::abs(std::get<Complex>(a) - std::get<Complex>(b));
  }
  return 0.0;
}

Value embed_value(const Value& v, int extra) {
  switch (kind_of(v)) {
    case ValueKind::Config: return std::get<Config6>(v).embedded(extra);
    case ValueKind::Lines: {
      LineTriple out;
      for (std::size_t i = 0; i < 3; ++i) {
        out.lines[i] = std::get<LineTriple>(v).lines[i].embedded(extra);
      }
      return out;
    }
    case ValueKind::Point: return std::get<HPoint>(v).embedded(extra);
    case ValueKind::Hyperplane:
      throw Error(ErrorKind::Unsupported, "hyperplanes do not embed canonically");
    case ValueKind::Scalar: return v;
  }
  return v;
}

Complex PiecewiseScalar::operator()(const Sample& s) const {
  const double th = s.theta;
  const Piece* chosen = nullptr;
  if (s.side == Side::Left) {
    for (const auto& p : pieces_) {
      if (th >= p.lo(s.t) && th <= p.hi(s.t)) {
        chosen = &p;
        break;
      }
    }
  } else {
    for (const auto& p : pieces_) {
      if (th >= p.lo(s.t) && th <= p.hi(s.t)) chosen = &p;
    }
  }
  if (!chosen) {
    throw Error(ErrorKind::OutOfDomain, name_ + ": arg z outside every piece");
  }
  return chosen->f(s);
}

std::vector<double> PiecewiseScalar::junctions(double t) const {
  std::vector<double> out;
  for (std::size_t i = 0; i + 1 < pieces_.size(); ++i) {
    const double j = pieces_[i].hi(t);
    if (j > 0.0 && j < kTwoPi) out.push_back(j);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

HPoint planar_center() { return pt({0, 0, 1}); }
HPoint planar_center_cp3() { return pt({0, 0, 1, 0}); }
HPoint solid_center() { return pt({0, 0, 1, 0}); }
HPoint solid_center_cp4() { return pt({0, 0, 1, 0, 0}); }

Config6 planar_basepoint() {
  return cfg(pt({-1, 1, 1}), pt({-1, 1, 2}), pt({-1, 2, 1}), pt({-1, 2, 2}), pt({0, 1, 1}),
             pt({0, 1, 2}));
}

Config6 solid_basepoint() {
  return cfg(pt({0, 0, 0, 1}), pt({0, 0, 1, 1}), pt({0, 1, 0, 0}), pt({0, 1, 1, 0}),
             pt({1, 0, 0, 0}), pt({1, 0, 1, 0}));
}

Config6 solid_basepoint_cp4() { return solid_basepoint().embedded(1); }

// ---------------------------------------------------------------------------
// Trivializations

Config6 phi_trivialization(const HPoint& center, const Config6& fiber) {
  if (center.ambient_dim() != 2 || fiber.ambient_dim() != 2) {
    throw Error(ErrorKind::DimensionMismatch, "phi: needs CP^2 data");
  }
  if (std::abs(center[2]) < 1e-300) {
    throw Error(ErrorKind::OutOfDomain, "phi: center on the line X2 = 0");
  }
  const Complex s = center[0] / center[2];
  const Complex t = center[1] / center[2];
  Config6 out;
  for (int i = 1; i <= 3; ++i) {
    const CVector& a = fiber.A(i).coords();
    const CVector& b = fiber.B(i).coords();
    // rescale B so both points share [n : -m] in the first two slots
    const Complex ab = std::conj(b[0]) * a[0] + std::conj(b[1]) * a[1];
    const double bb = std::norm(b[0]) + std::norm(b[1]);
    if (bb < 1e-300) throw Error(ErrorKind::OutOfDomain, "phi: fiber point equals I^0");
    const CVector bs = b * (ab / bb);
    out.points[static_cast<std::size_t>(2 * i - 2)] =
        pt({a[0] + s * a[2], a[1] + t * a[2], a[2]});
    out.points[static_cast<std::size_t>(2 * i - 1)] =
        pt({bs[0] + s * bs[2], bs[1] + t * bs[2], bs[2]});
  }
  return out;
}

Config6 phi_geometric(const HPoint& center, const Config6& fiber, const Tolerances& tol) {
  const HPoint i0 = planar_center();
  const PLine l(pt({1, 0, 0}), pt({0, 1, 0}));
  Config6 out;
  if (proj_dist(center, i0) <= tol.proj_eq_tol) return fiber;
  const HPoint q = meet_lines(l, line_through(i0, center, tol), tol);
  for (int i = 1; i <= 3; ++i) {
    const HPoint di0 = meet_lines(l, fiber.line(i), tol);
    const PLine di = line_through(center, di0, tol);
    out.points[static_cast<std::size_t>(2 * i - 2)] =
        meet_lines(di, line_through(q, fiber.A(i), tol), tol);
    out.points[static_cast<std::size_t>(2 * i - 1)] =
        meet_lines(di, line_through(q, fiber.B(i), tol), tol);
  }
  return out;
}

Config6 psi_trivialization(const LineTriple& lines, const Config6& fiber, const HPoint& q,
                           const Tolerances& tol) {
  Config6 out;
  for (int i = 1; i <= 3; ++i) {
    const PLine& d = lines.lines[static_cast<std::size_t>(i - 1)];
    out.points[static_cast<std::size_t>(2 * i - 2)] =
        meet_lines(d, line_through(q, fiber.A(i), tol), tol);
    out.points[static_cast<std::size_t>(2 * i - 1)] =
        meet_lines(d, line_through(q, fiber.B(i), tol), tol);
  }
  return out;
}

namespace {

CMatrix col(const HPoint& p) { return CMatrix(p.coords()); }

HPoint single_point(const CMatrix& m, const char* what) {
  if (m.cols() != 1) throw Error(ErrorKind::DegenerateSpan, what);
  return HPoint(CVector(m.col(0)));
}

CMatrix join2(const CMatrix& a, const CMatrix& b, double tol) { return subspace_join(a, b, tol); }

}  // namespace

Config6 gr_projection(const Config6& config, const CMatrix& target_plane, const CMatrix& q,
                      const Tolerances& tol) {
  Config6 out;
  for (std::size_t i = 0; i < 6; ++i) {
    const CMatrix through = join2(q, col(config.points[i]), tol.rank_rel_tol);
    out.points[i] = single_point(subspace_meet(through, target_plane, tol.rank_rel_tol),
                                 "gr_projection: Q meets the target plane");
  }
  return out;
}

Config6 gr_geometric(const Config6& config, const HPoint& center, const CMatrix& target_plane,
                     const CMatrix& h, const CMatrix& q, const Tolerances& tol) {
  const double rt = tol.rank_rel_tol;
  CMatrix pts(config.ambient_dim() + 1, 6);
  for (Eigen::Index i = 0; i < 6; ++i) pts.col(i) = config.points[static_cast<std::size_t>(i)].coords();
  const CMatrix p0 = orthonormal_span(pts, rt);
  const CMatrix l0 = subspace_meet(p0, h, rt);
  const CMatrix l = subspace_meet(target_plane, h, rt);
  Config6 out;
  for (int i = 1; i <= 3; ++i) {
    const PLine d0 = config.line(i);
    const CMatrix ci0 = subspace_meet(d0.basis(), l0, rt);
    const CMatrix ci = subspace_meet(join2(q, ci0, rt), l, rt);
    const CMatrix qi = subspace_meet(q, join2(ci, ci0, rt), rt);
    const CMatrix di = join2(col(center), ci, rt);
    // qi is empty only if C_i = C_i^0 (the target plane already contains d_i^0)
    const CMatrix from = qi.cols() > 0 ? qi : q;
    for (int which = 0; which < 2; ++which) {
      const HPoint& x = which == 0 ? config.A(i) : config.B(i);
      const CMatrix m = subspace_meet(join2(from, col(x), rt), di, rt);
      out.points[static_cast<std::size_t>(2 * i - 2 + which)] =
          single_point(m, "gr_geometric: degenerate projection");
    }
  }
  return out;
}

Config6 gr_display(const Config6& config, Complex p1, Complex p2) {
  Config6 out;
  for (std::size_t i = 0; i < 6; ++i) {
    const CVector& a = config.points[i].coords();
    out.points[i] = pt({p1 * a[1] + p2 * a[2], a[1], a[2], a[3]});
  }
  return out;
}

CMatrix plane_graph_cp3(Complex p1, Complex p2, Complex p3) {
  CMatrix m = CMatrix::Zero(4, 3);
  m(0, 0) = p1;
  m(1, 0) = 1;
  m(0, 1) = p2;
  m(2, 1) = 1;
  m(0, 2) = p3;
  m(3, 2) = 1;
  return m;
}

Config6 gr_frame_basepoint() {
  const Config6 d0 = planar_basepoint();
  Config6 out;
  for (std::size_t i = 0; i < 6; ++i) {
    const CVector& a = d0.points[i].coords();
    out.points[i] = pt({0, a[0], a[1], a[2]});
  }
  return out;
}

HPoint gr_frame_center() { return pt({0, 0, 0, 1}); }

HPoint psi_center_of_projection() { return pt({1, -5, 0}); }

LineTriple psi_lines(Complex z) {
  return LineTriple{{line_from_rows({{1.0 + z, 1, 0}}), line_from_rows({{2.0 + z, 1, 0}}),
                     line_from_rows({{1, 0.1 * z, 0}})}};
}

HPoint phi_chart_center(Complex z) { return pt({0.8 * z, 0.5 * kI * std::conj(z), 1}); }

// ---------------------------------------------------------------------------
// Catalog

void Atlas::add(AtlasItem item) {
  const std::string id = item.id;
  items_.emplace(id, std::move(item));
}

void Atlas::add_claim(Claim c) {
  if (c.family.empty()) c.family = c.id.substr(0, c.id.find('.'));
  claims_.push_back(std::move(c));
}

const Atlas& Atlas::instance() {
  static const Atlas atlas;
  return atlas;
}

std::vector<std::string> Atlas::list_items() const {
  std::vector<std::string> out;
  for (const auto& [id, _] : items_) out.push_back(id);
  return out;
}

const AtlasItem& Atlas::item(const std::string& id) const {
  const auto it = items_.find(id);
  if (it == items_.end()) throw Error(ErrorKind::UnknownId, "unknown atlas item: " + id);
  return it->second;
}

Value Atlas::eval(const std::string& id, const Sample& s) const {
  const AtlasItem& it = item(id);
  return it.fn(s);
}

Value Atlas::eval(const std::string& id, Complex z, double t) const {
  const AtlasItem& it = item(id);
  const double m = std::abs(z);
  constexpr double slack = 1e-12;
  switch (it.domain) {
    case DomainKind::Circle:
    case DomainKind::Cylinder:
      if (std::abs(m - 1.0) > slack) {
        throw Error(ErrorKind::OutOfDomain, id + ": parameter must lie on the unit circle");
      }
      if (it.domain == DomainKind::Cylinder && !(t >= 0.0 && t <= 1.0)) {
        throw Error(ErrorKind::OutOfDomain, id + ": t must lie in [0, 1]");
      }
      {
        Sample s = Sample::circle(arg_2pi(z), t);
        s.z = z;
        return it.fn(s);
      }
    case DomainKind::Disk:
    case DomainKind::Chart:
      if (m > 1.0 + slack) throw Error(ErrorKind::OutOfDomain, id + ": parameter outside the disk");
      return it.fn(Sample::disk(z));
    case DomainKind::Constant: return it.fn(Sample{});
  }
  return it.fn(Sample::disk(z));
}

Config6 Atlas::basepoint(const SpaceTag& tag) const {
  tag.check();
  switch (tag.kind) {
    case SpaceKind::DPlanar:
    case SpaceKind::DPlanarFixed: {
      const Config6 d0 = planar_basepoint();
      return tag.n == 2 ? d0 : d0.embedded(tag.n - 2);
    }
    case SpaceKind::DSolid:
    case SpaceKind::DSolidFixed: {
      const Config6 s0 = solid_basepoint();
      return tag.n == 3 ? s0 : s0.embedded(tag.n - 3);
    }
    default: break;
  }
  throw Error(ErrorKind::Unsupported, "no base point for " + tag.name());
}

std::vector<Claim> Atlas::claims_for(const std::string& item_id) const {
  item(item_id);
  std::vector<Claim> out;
  for (const auto& c : claims_) {
    // a claim belongs to the item it is primarily about
    if (!c.references.empty() && c.references.front() == item_id) out.push_back(c);
  }
  return out;
}

const Claim& Atlas::claim(const std::string& claim_id) const {
  for (const auto& c : claims_) {
    if (c.id == claim_id) return c;
  }
  throw Error(ErrorKind::UnknownId, "unknown claim: " + claim_id);
}

std::vector<std::string> Atlas::families() const {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& c : claims_) {
    if (seen.insert(c.family).second) out.push_back(c.family);
  }
  return out;
}

namespace {

// ----- piecewise scalars

PiecewiseScalar make_L1() {
  return {"L^1",
          {piece(at(0), [](double t) { return t * kPi; },
                 [](const Sample& s) { return std::pow(s.z, 4); }, "z^4"),
           piece([](double t) { return t * kPi; }, [](double t) { return (2 - t) * kPi; },
                 [](const Sample& s) { return cexp_i(4 * s.t * kPi); }, "exp(4 t pi i)"),
           piece([](double t) { return (2 - t) * kPi; }, at(kTwoPi),
                 [](const Sample& s) { return std::pow(zc(s), 4); }, "conj(z)^4")}};
}

PiecewiseScalar make_L2(int k) {
  auto j1 = [k](double t) { return (t + k - 1) / k * kPi; };
  auto j2 = [k](double t) { return (1 + (5 - 2 * k) * t) / (3 - k) * kPi; };
  return {"L_" + std::to_string(k) + "^2",
          {piece(at(0), j1, [](const Sample&) { return Complex(2); }, "2"),
           piece(j1, j2,
                 [k](const Sample& s) {
                   return 1.0 + cexp_i(4 * ((2 - k) * s.t * kPi - s.theta) / (1 + s.t));
                 },
                 "1+exp(4((2-k) t pi - arg z)/(1+t) i)"),
           piece(j2, at(kTwoPi), [](const Sample&) { return Complex(2); }, "2")}};
}

PiecewiseScalar make_LB3() {
  return {"B_3^L",
          {piece(at(0), at(kPi), [](const Sample&) { return Complex(2); }, "2"),
           piece(at(kPi), at(kTwoPi), [](const Sample& s) { return 1.0 + s.z * s.z; },
                 "1+z^2")}};
}

PiecewiseScalar make_epsilon() {
  return {"epsilon",
          {piece(at(0), [](double t) { return 2 * t / 3 * kPi; },
                 [](const Sample& s) { return std::pow(s.z, 3); }, "z^3"),
           piece([](double t) { return 2 * t / 3 * kPi; },
                 [](double t) { return 2 * (3 - t) / 3 * kPi; },
                 [](const Sample& s) { return cexp_i(2 * s.t * kPi); }, "exp(2 t pi i)"),
           piece([](double t) { return 2 * (3 - t) / 3 * kPi; }, at(kTwoPi),
                 [](const Sample& s) { return std::pow(zc(s), 3); }, "conj(z)^3")}};
}

PiecewiseScalar make_eta() {
  return {"eta",
          {piece(at(0), at(2 * kPi / 3), [](const Sample&) { return Complex(2); }, "2"),
           piece(at(2 * kPi / 3), at(4 * kPi / 3),
                 [](const Sample& s) { return 1.0 + std::pow(s.z, 3); }, "1+z^3"),
           piece(at(4 * kPi / 3), at(kTwoPi), [](const Sample&) { return Complex(2); }, "2")}};
}

PiecewiseScalar make_H1(int k) {
  const double kk = k;
  return {"H_" + std::to_string(k) + "^1",
          {piece(at(0), [](double t) { return t * kPi; },
                 [kk](const Sample& s) { return kk * zc(s) * zc(s); }, "k conj(z)^2"),
           piece([](double t) { return t * kPi; }, [](double t) { return (2 - t) * kPi; },
                 [kk](const Sample& s) { return kk * cexp_i(-2 * s.t * kPi); },
                 "k exp(-2 t pi i)"),
           piece([](double t) { return (2 - t) * kPi; }, at(kTwoPi),
                 [kk](const Sample& s) { return kk * s.z * s.z; }, "k z^2")}};
}

PiecewiseScalar make_H2(int k) {
  const double c = 2 * k + 1;
  return {"H_" + std::to_string(k) + "^2",
          {piece(at(0), at(kPi),
                 [c](const Sample& s) { return 1.0 + c * s.t * (s.z * s.z - 1.0); },
                 "1+(2k+1) t (z^2-1)"),
           piece(at(kPi), at(kTwoPi), [](const Sample&) { return Complex(1); }, "1")}};
}

PiecewiseScalar make_H3() {
  return {"H^3",
          {piece(at(0), at(kPi),
                 [](const Sample& s) {
                   const Complex z2 = s.z * s.z;
                   return 1.0 + s.t * (4.0 * z2 * z2 - 3.0 * z2 - 1.0);
                 },
                 "1+t(4z^4-3z^2-1)"),
           piece(at(kPi), at(kTwoPi), [](const Sample&) { return Complex(1); }, "1")}};
}

PiecewiseScalar make_H4_1() {
  auto j = [](double t) { return (1 + t) / 2 * kPi; };
  return {"H_1^4",
          {piece(at(0), j, [](const Sample& s) { return cexp_i(4 * s.theta / (1 + s.t)); },
                 "exp(4 arg z/(1+t) i)"),
           piece(j, at(kTwoPi), [](const Sample&) { return Complex(1); }, "1")}};
}

PiecewiseScalar make_H4_2() {
  auto j = [](double t) { return (1 - t) / 2 * kPi; };
  return {"H_2^4",
          {piece(at(0), j, [](const Sample&) { return Complex(1); }, "1"),
           piece(j, at(kPi),
                 [](const Sample& s) {
                   return cexp_i(2 * (2 * s.theta - (1 - s.t) * kPi) / (1 + s.t));
                 },
                 "exp(2(2 arg z-(1-t) pi)/(1+t) i)"),
           piece(at(kPi), at(kTwoPi), [](const Sample&) { return Complex(1); }, "1")}};
}

PiecewiseScalar make_H5() {
  auto j1 = [](double t) { return (1 - t) * kPi; };
  auto j2 = [](double t) { return (2 - t) * kPi; };
  return {"H^5",
          {piece(at(0), j1, [](const Sample&) { return Complex(1); }, "1"),
           piece(j1, j2, [](const Sample& s) { return cexp_i(4 * (s.theta - (1 - s.t) * kPi)); },
                 "exp(4(arg z-(1-t) pi) i)"),
           piece(j2, at(kTwoPi), [](const Sample&) { return Complex(1); }, "1")}};
}

PiecewiseScalar make_m1() {
  auto j = [](double t) { return (2 - t) * kPi; };
  return {"m_1",
          {piece(at(0), j, [](const Sample& s) { return cexp_i(2 * s.theta / (2 - s.t)); },
                 "exp(2 arg z/(2-t) i)"),
           piece(j, at(kTwoPi), [](const Sample&) { return Complex(1); }, "1")}};
}

PiecewiseScalar make_m2() {
  auto j = [](double t) { return t * kPi; };
  return {"m_2",
          {piece(at(0), j, [](const Sample&) { return Complex(1); }, "1"),
           piece(j, at(kTwoPi),
                 [](const Sample& s) { return cexp_i(2 * (s.t * kPi - s.theta) / (2 - s.t)); },
                 "exp(2(t pi-arg z)/(2-t) i)")}};
}

PiecewiseScalar make_table_u() {
  return {"table_u",
          {piece(at(0), at(2 * kPi / 3), [](const Sample& s) { return std::pow(s.z, 3); }, "z^3"),
           piece(at(2 * kPi / 3), at(4 * kPi / 3), [](const Sample&) { return Complex(1); }, "1"),
           piece(at(4 * kPi / 3), at(kTwoPi), [](const Sample& s) { return std::pow(zc(s), 3); },
                 "conj(z)^3")}};
}

AtlasItem circle_item(std::string id, std::string title, std::string anchor, SpaceTag tag,
                      std::function<Value(const Sample&)> fn) {
  AtlasItem it;
  it.id = std::move(id);
  it.title = std::move(title);
  it.anchor = std::move(anchor);
  it.domain = DomainKind::Circle;
  it.value_kind = ValueKind::Config;
  it.target = tag.name();
  it.space = std::move(tag);
  it.fn = std::move(fn);
  return it;
}

}  // namespace

Atlas::Atlas() {
  const HPoint i0 = planar_center();
  const SpaceTag dfix = SpaceTag::planar_fixed(2, i0);
  const SpaceTag dfix3 = SpaceTag::planar_fixed(3, planar_center_cp3());
  const SpaceTag sfix = SpaceTag::solid_fixed(3, solid_center());
  const SpaceTag sfix4 = SpaceTag::solid_fixed(4, solid_center_cp4());
  const Config6 d0 = planar_basepoint();

  auto A = [](int k, Complex x) { return pt({-1, double(k) * x, 1}); };

  // base points
  {
    AtlasItem it;
    it.id = "base_planar";
    it.title = "planar base point D^0";
    it.anchor = "base point A_k^0=[-1:k:1], B_k^0=[-1:k:2]";
    it.domain = DomainKind::Constant;
    it.space = dfix;
    it.target = dfix.name();
    it.fn = [d0](const Sample&) { return Value(d0); };
    add(it);
    it.id = "base_planar_cp3";
    it.title = "D^0 embedded in CP^3";
    it.anchor = "embedding [x0:x1:x2] -> [x0:x1:x2:0]";
    it.space = dfix3;
    it.target = dfix3.name();
    it.fn = [d0](const Sample&) { return Value(d0.embedded(1)); };
    add(it);
    it.id = "base_solid";
    it.title = "solid base point";
    it.anchor = "solid base A_1^0=[0:0:0:1], ...; the line X1=X3=0 is taken as d_3";
    it.space = sfix;
    it.target = sfix.name();
    it.fn = [](const Sample&) { return Value(solid_basepoint()); };
    add(it);
    it.id = "base_solid_cp4";
    it.title = "solid base point embedded in CP^4";
    it.anchor = "fixed points A_1^00=[0:0:0:1:0], ...";
    it.space = sfix4;
    it.target = sfix4.name();
    it.fn = [](const Sample&) { return Value(solid_basepoint_cp4()); };
    add(it);
    it.id = "center_solid";
    it.title = "solid center I^0";
    it.anchor = "center I^0=[0:0:1:0]";
    it.space.reset();
    it.value_kind = ValueKind::Point;
    it.target = "CP^3";
    it.fn = [](const Sample&) { return Value(solid_center()); };
    add(it);
  }

  // generators
  auto based = [](AtlasItem it, const char* base) {
    it.basepoint = base;
    return it;
  };
  add(based(circle_item("alpha", "generator alpha", "B_1=[-1:1:1+z]", dfix,
                        [d0](const Sample& s) {
                          Config6 c = d0;
                          c.points[1] = pt({-1, 1, 1.0 + s.z});
                          return Value(c);
                        }),
            "base_planar"));
  add(based(circle_item("beta", "generator beta", "B_2=[-1:2:1+z]", dfix,
                        [d0](const Sample& s) {
                          Config6 c = d0;
                          c.points[3] = pt({-1, 2, 1.0 + s.z});
                          return Value(c);
                        }),
            "base_planar"));
  add(based(circle_item("gamma", "generator gamma", "B_3=[0:1:1+z]", dfix,
                        [d0](const Sample& s) {
                          Config6 c = d0;
                          c.points[5] = pt({0, 1, 1.0 + s.z});
                          return Value(c);
                        }),
            "base_planar"));
  add(based(circle_item("sigma", "lift sigma of s", "A_k=[-1:kz:1], B_k=[-1:kz:2]", dfix,
                        [d0, A](const Sample& s) {
                          Config6 c = d0;
                          for (int k = 1; k <= 2; ++k) {
                            c.points[static_cast<std::size_t>(2 * k - 2)] = A(k, s.z);
                            c.points[static_cast<std::size_t>(2 * k - 1)] =
                                pt({-1, double(k) * s.z, 2});
                          }
                          return Value(c);
                        }),
            "base_planar"));

  // fiber braids a, b, c pushed into the fibre over d^0 through the affine charts
  for (int line = 1; line <= 3; ++line) {
    const std::string id = std::string("fiber_") + char('a' + line - 1);
    add(based(circle_item(id, "pure braid in the fibre over d_" + std::to_string(line) + "^0",
                          "charts z -> [-1:k:z], z -> [0:1:z]", dfix,
                          [line](const Sample& s) {
                            auto chart = [](int k, Complex x) {
                              return k == 3 ? pt({0, 1, x}) : pt({-1, double(k), x});
                            };
                            Config6 c;
                            for (int k = 1; k <= 3; ++k) {
                              const Complex b = k == line ? 1.0 + s.z : Complex(2);
                              c.points[static_cast<std::size_t>(2 * k - 2)] = chart(k, 1);
                              c.points[static_cast<std::size_t>(2 * k - 1)] = chart(k, b);
                            }
                            return Value(c);
                          }),
              "base_planar"));
  }

  // s and Lambda (lines)
  {
    AtlasItem it;
    it.id = "s";
    it.title = "loop of lines s";
    it.anchor = "d_1: zX0+X1=0, d_2: 2zX0+X1=0, d_3^0";
    it.domain = DomainKind::Circle;
    it.value_kind = ValueKind::Lines;
    it.space = SpaceTag::lines_through(i0);
    it.target = it.space->name();
    it.fn = [](const Sample& s) {
      return Value(LineTriple{{line_from_rows({{s.z, 1, 0}}), line_from_rows({{2.0 * s.z, 1, 0}}),
                               line_from_rows({{1, 0, 0}})}});
    };
    add(it);
    it.id = "Lambda";
    it.title = "null-homotopy Lambda of s^2";
    it.anchor = "d_k: (kz-r)X0+(conj z+kr)X1=0, d_3: zX0+rX1=0";
    it.domain = DomainKind::Disk;
    it.fn = [](const Sample& s) {
      const double r = s.r();
      const Complex z = s.z;
      return Value(LineTriple{{line_from_rows({{z - r, std::conj(z) + r, 0}}),
                               line_from_rows({{2.0 * z - r, std::conj(z) + 2 * r, 0}}),
                               line_from_rows({{z, r, 0}})}});
    };
    add(it);
  }

  add([&] {
    AtlasItem it = circle_item("Lambda_tilde", "lift of Lambda",
                               "A_k=[-conj z-kr:kz-r:conj z], A_3=[-r:z:z]", dfix,
                               [](const Sample& s) {
                                 const double r = s.r();
                                 const Complex z = s.z, zb = std::conj(s.z);
                                 Config6 c;
                                 for (int k = 1; k <= 2; ++k) {
                                   const double kk = k;
                                   c.points[static_cast<std::size_t>(2 * k - 2)] =
                                       pt({-zb - kk * r, kk * z - r, zb});
                                   c.points[static_cast<std::size_t>(2 * k - 1)] =
                                       pt({-zb - kk * r, kk * z - r, zb + 1.0});
                                 }
                                 c.points[4] = pt({-r, z, z});
                                 c.points[5] = pt({-r, z, z + 1.0});
                                 return Value(c);
                               });
    it.domain = DomainKind::Disk;
    return it;
  }());

  add(based(circle_item("sigma_tilde_Lambda", "formula for the boundary of the Lambda lift",
                        "A_k=[-1:kz^2:1], B_k=[-1:kz^2:1+z], B_3=[0:1:1+conj z]", dfix,
                        [d0](const Sample& s) {
                          Config6 c = d0;
                          const Complex z2 = s.z * s.z;
                          for (int k = 1; k <= 2; ++k) {
                            c.points[static_cast<std::size_t>(2 * k - 2)] =
                                pt({-1, double(k) * z2, 1});
                            c.points[static_cast<std::size_t>(2 * k - 1)] =
                                pt({-1, double(k) * z2, 1.0 + s.z});
                          }
                          c.points[5] = pt({0, 1, 1.0 + std::conj(s.z)});
                          return Value(c);
                        }),
            "base_planar"));

  // L
  {
    const auto L1 = make_L1();
    const auto L21 = make_L2(1), L22 = make_L2(2);
    const auto LB3 = make_LB3();
    AtlasItem it = circle_item("L", "homotopy L", "L(-,0)=(alpha^-1*beta^-1)*gamma", dfix,
                               [=](const Sample& s) {
                                 const Complex l1 = L1(s);
                                 const Complex l2[2] = {L21(s), L22(s)};
                                 Config6 c;
                                 for (int k = 1; k <= 2; ++k) {
                                   c.points[static_cast<std::size_t>(2 * k - 2)] =
                                       pt({-1, double(k) * l1, 1});
                                   c.points[static_cast<std::size_t>(2 * k - 1)] =
                                       pt({-1, double(k) * l1, l2[k - 1]});
                                 }
                                 c.points[4] = pt({0, 1, 1});
                                 c.points[5] = pt({0, 1, LB3(s)});
                                 return Value(c);
                               });
    it.domain = DomainKind::Cylinder;
    it.piecewise = {L1, L21, L22, LB3};
    it.basepoint = "base_planar";
    add(it);
  }

  // epsilon, eta, K
  {
    const auto eps = make_epsilon();
    const auto eta = make_eta();
    AtlasItem e;
    e.id = "epsilon";
    e.title = "map epsilon";
    e.anchor = "epsilon(z,t): z^3 | exp(2t pi i) | conj(z)^3";
    e.domain = DomainKind::Cylinder;
    e.value_kind = ValueKind::Scalar;
    e.target = "S^1";
    e.piecewise = {eps};
    e.fn = [eps](const Sample& s) { return Value(eps(s)); };
    add(e);
    AtlasItem h;
    h.id = "eta";
    h.title = "map eta";
    h.anchor = "eta(z): 2 | 1+z^3 | 2";
    h.domain = DomainKind::Circle;
    h.value_kind = ValueKind::Scalar;
    h.target = "C minus {1}";
    h.piecewise = {eta};
    h.fn = [eta](const Sample& s) { return Value(eta(s)); };
    add(h);

    const char* names[3] = {"K_alpha", "K_beta", "K_gamma"};
    for (int which = 0; which < 3; ++which) {
      AtlasItem it = circle_item(
          names[which], std::string("conjugation homotopy ") + names[which],
          "A_k=[-1:k eps:1], B_k=[-1:k eps:2], moving point with eta", dfix,
          [eps, eta, which](const Sample& s) {
            const Complex e1 = eps(s);
            const Complex et = eta(s);
            Config6 c;
            for (int k = 1; k <= 2; ++k) {
              c.points[static_cast<std::size_t>(2 * k - 2)] = pt({-1, double(k) * e1, 1});
              const Complex last = (which == k - 1) ? et : Complex(2);
              c.points[static_cast<std::size_t>(2 * k - 1)] = pt({-1, double(k) * e1, last});
            }
            c.points[4] = pt({0, 1, 1});
            c.points[5] = pt({0, 1, which == 2 ? et : Complex(2)});
            return Value(c);
          });
      it.domain = DomainKind::Cylinder;
      it.piecewise = {eps, eta};
      it.basepoint = "base_planar";
      add(it);
    }

    const auto u = make_table_u();
    AtlasItem tab = circle_item("conj_alpha_table", "formula for the loop sigma*alpha*sigma^-1",
                                "table with A_k=[-1:kz^3:1] on [0,2pi/3]", dfix,
                                [u, eta](const Sample& s) {
                                  const Complex uu = u(s);
                                  Config6 c;
                                  c.points[0] = pt({-1, uu, 1});
                                  c.points[1] = pt({-1, uu, eta(s)});
                                  c.points[2] = pt({-1, 2.0 * uu, 1});
                                  c.points[3] = pt({-1, 2.0 * uu, 2});
                                  c.points[4] = pt({0, 1, 1});
                                  c.points[5] = pt({0, 1, 2});
                                  return Value(c);
                                });
    tab.piecewise = {u, eta};
    tab.basepoint = "base_planar";
    add(tab);
  }

  // Phi, Phi_tilde, H
  {
    AtlasItem p;
    p.id = "Phi";
    p.title = "generator Phi of pi_2(CP^2)";
    p.anchor = "z -> [0:r:z]";
    p.domain = DomainKind::Disk;
    p.value_kind = ValueKind::Point;
    p.target = "CP^2";
    p.fn = [](const Sample& s) { return Value(pt({0, s.r(), s.z})); };
    add(p);

    AtlasItem it = circle_item(
        "Phi_tilde", "lift of Phi", "A_k=[-1:(2k+1)r+k conj z:(2k+1)z+k(r-2)]",
        SpaceTag::planar(2), [](const Sample& s) {
          const double r = s.r();
          const Complex z = s.z, zb = std::conj(s.z);
          Config6 c;
          for (int k = 1; k <= 2; ++k) {
            const double kk = k;
            c.points[static_cast<std::size_t>(2 * k - 2)] =
                pt({-1, (2 * kk + 1) * r + kk * zb, (2 * kk + 1) * z + kk * (r - 2)});
            c.points[static_cast<std::size_t>(2 * k - 1)] =
                pt({-1, (2 * kk + 2) * r + kk * zb, (2 * kk + 2) * z + kk * (r - 2)});
          }
          c.points[4] = pt({-r, zb + 4 * r, 4.0 * z - 3 * (r + 1)});
          c.points[5] = pt({-r, zb + 5 * r, 5.0 * z - 3 * (r + 1)});
          return Value(c);
        });
    it.domain = DomainKind::Disk;
    add(it);

    add(circle_item("Phi_tilde_S1", "formula for the boundary of the Phi lift",
                    "A_k=[-1:k conj z:(2k+1)z-2k], A_3=[0:conj z:4z-3]", dfix,
                    [](const Sample& s) {
                      const Complex z = s.z, zb = std::conj(s.z);
                      Config6 c;
                      for (int k = 1; k <= 2; ++k) {
                        const double kk = k;
                        c.points[static_cast<std::size_t>(2 * k - 2)] =
                            pt({-1, kk * zb, (2 * kk + 1) * z - 2 * kk});
                        c.points[static_cast<std::size_t>(2 * k - 1)] =
                            pt({-1, kk * zb, (2 * kk + 2) * z - 2 * kk});
                      }
                      c.points[4] = pt({0, zb, 4.0 * z - 3.0});
                      c.points[5] = pt({0, zb, 5.0 * z - 3.0});
                      return Value(c);
                    }));

    const auto h11 = make_H1(1), h12 = make_H1(2);
    const auto h21 = make_H2(1), h22 = make_H2(2);
    const auto h3 = make_H3();
    const auto h41 = make_H4_1(), h42 = make_H4_2();
    const auto h5 = make_H5();
    AtlasItem h = circle_item("H", "homotopy H", "H-display with H^1..H^5", dfix,
                              [=](const Sample& s) {
                                const Complex a1[2] = {h11(s), h12(s)};
                                const Complex a2[2] = {h21(s), h22(s)};
                                const Complex a4[2] = {h41(s), h42(s)};
                                const Complex c3 = h3(s);
                                Config6 c;
                                for (int k = 0; k < 2; ++k) {
                                  c.points[static_cast<std::size_t>(2 * k)] =
                                      pt({-1, a1[k], a2[k]});
                                  c.points[static_cast<std::size_t>(2 * k + 1)] =
                                      pt({-1, a1[k], a2[k] + a4[k]});
                                }
                                c.points[4] = pt({0, 1, c3});
                                c.points[5] = pt({0, 1, c3 + h5(s)});
                                return Value(c);
                              });
    h.domain = DomainKind::Cylinder;
    h.piecewise = {h11, h12, h21, h22, h3, h41, h42, h5};
    h.basepoint = "base_planar";
    add(h);
  }

  // Pi, Pi_tilde, M
  {
    AtlasItem p;
    p.id = "Pi";
    p.title = "generator Pi of pi_2(Gr^1(CP^2))";
    p.anchor = "(1-|z|)X1+zX3=0";
    p.domain = DomainKind::Disk;
    p.value_kind = ValueKind::Hyperplane;
    p.target = "planes of CP^3 through I^0";
    p.fn = [](const Sample& s) { return Value(Hyperplane{pt({0, s.r(), 0, s.z})}); };
    add(p);

    AtlasItem it = circle_item("Pi_tilde", "lift of Pi", "A_k=[2r|z|-1:kz:1:-kr]", dfix3,
                               [](const Sample& s) {
                                 const double r = s.r();
                                 const double m = std::abs(s.z);
                                 const Complex z = s.z;
                                 Config6 c;
                                 for (int k = 1; k <= 2; ++k) {
                                   const double kk = k;
                                   c.points[static_cast<std::size_t>(2 * k - 2)] =
                                       pt({2 * r * m - 1, kk * z, 1, -kk * r});
                                   c.points[static_cast<std::size_t>(2 * k - 1)] =
                                       pt({2 * r * m - 1, kk * z, 2, -kk * r});
                                 }
                                 c.points[4] = pt({0, z, z, -r});
                                 c.points[5] = pt({0, z, z + 1.0, -r});
                                 return Value(c);
                               });
    it.domain = DomainKind::Disk;
    add(it);

    const auto m1 = make_m1(), m2 = make_m2();
    AtlasItem m = circle_item("M", "homotopy M", "m_1/m_2 display", dfix,
                              [m1, m2](const Sample& s) {
                                const Complex a = m1(s);
                                Config6 c;
                                for (int k = 1; k <= 2; ++k) {
                                  c.points[static_cast<std::size_t>(2 * k - 2)] =
                                      pt({-1, double(k) * a, 1});
                                  c.points[static_cast<std::size_t>(2 * k - 1)] =
                                      pt({-1, double(k) * a, 2});
                                }
                                c.points[4] = pt({0, 1, 1});
                                c.points[5] = pt({0, 1, 1.0 + m2(s)});
                                return Value(c);
                              });
    m.domain = DomainKind::Cylinder;
    m.piecewise = {m1, m2};
    m.basepoint = "base_planar";
    add(m);
  }

  // solid section
  {
    const HPoint is = solid_center();
    AtlasItem f;
    f.id = "F";
    f.title = "generator F";
    f.anchor = "d_2: zX0-rX1=0=X3, d_3: rX0+conj(z)X1=0=X3";
    f.domain = DomainKind::Disk;
    f.value_kind = ValueKind::Lines;
    f.space = SpaceTag::lines_through(is);
    f.target = "F_3^{2,2}";
    f.fn = [](const Sample& s) {
      const double r = s.r();
      return Value(LineTriple{{line_from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}}),
                               line_from_rows({{s.z, -r, 0, 0}, {0, 0, 0, 1}}),
                               line_from_rows({{r, std::conj(s.z), 0, 0}, {0, 0, 0, 1}})}});
    };
    add(f);
    f.id = "B";
    f.title = "generator B";
    f.anchor = "d_1: zX0-rX3=0=X1, d_3: rX0+conj(z)X3=0=X1";
    f.fn = [](const Sample& s) {
      const double r = s.r();
      return Value(LineTriple{{line_from_rows({{s.z, 0, 0, -r}, {0, 1, 0, 0}}),
                               line_from_rows({{1, 0, 0, 0}, {0, 0, 0, 1}}),
                               line_from_rows({{r, 0, 0, std::conj(s.z)}, {0, 1, 0, 0}})}});
    };
    add(f);

    const Config6 s0 = solid_basepoint();
    AtlasItem ft = circle_item("F_tilde", "lift of F", "A_2=[r:z:0:0], A_3=[conj z:-r:0:0]", sfix,
                               [s0](const Sample& s) {
                                 const double r = s.r();
                                 const Complex z = s.z, zb = std::conj(s.z);
                                 Config6 c = s0;
                                 c.points[2] = pt({r, z, 0, 0});
                                 c.points[3] = pt({r, z, 1, 0});
                                 c.points[4] = pt({zb, -r, 0, 0});
                                 c.points[5] = pt({zb, -r, 1, 0});
                                 return Value(c);
                               });
    ft.domain = DomainKind::Disk;
    add(ft);
    AtlasItem bt = circle_item("B_tilde", "lift of B", "A_1=[r:0:0:z], A_3=[conj z:0:0:-r]", sfix,
                               [s0](const Sample& s) {
                                 const double r = s.r();
                                 const Complex z = s.z, zb = std::conj(s.z);
                                 Config6 c = s0;
                                 c.points[0] = pt({r, 0, 0, z});
                                 c.points[1] = pt({r, 0, 1, z});
                                 c.points[4] = pt({zb, 0, 0, -r});
                                 c.points[5] = pt({zb, 0, 1, -r});
                                 return Value(c);
                               });
    bt.domain = DomainKind::Disk;
    add(bt);

    AtlasItem psi;
    psi.id = "Psi";
    psi.title = "generator Psi of pi_2(CP^3)";
    psi.anchor = "z -> [r:0:z:0]";
    psi.domain = DomainKind::Disk;
    psi.value_kind = ValueKind::Point;
    psi.target = "CP^3";
    psi.fn = [](const Sample& s) { return Value(pt({s.r(), 0, s.z, 0})); };
    add(psi);

    AtlasItem pt_ = circle_item("Psi_tilde", "lift of Psi", "B_1=[r:0:z:1], A_3=[conj z:0:-r:0]",
                                SpaceTag::solid(3), [s0](const Sample& s) {
                                  const double r = s.r();
                                  const Complex z = s.z, zb = std::conj(s.z);
                                  Config6 c = s0;
                                  c.points[1] = pt({r, 0, z, 1});
                                  c.points[3] = pt({r, 1, z, 0});
                                  c.points[4] = pt({zb, 0, -r, 0});
                                  c.points[5] = pt({r + zb, 0, z - r, 0});
                                  return Value(c);
                                });
    pt_.domain = DomainKind::Disk;
    add(pt_);

    AtlasItem sg;
    sg.id = "Sigma";
    sg.title = "generator Sigma of pi_2(Gr^2(CP^3))";
    sg.anchor = "rX1-zX4=0";
    sg.domain = DomainKind::Disk;
    sg.value_kind = ValueKind::Hyperplane;
    sg.target = "hyperplanes of CP^4 through I";
    sg.fn = [](const Sample& s) { return Value(Hyperplane{pt({0, s.r(), 0, 0, -s.z})}); };
    add(sg);

    const Config6 s00 = solid_basepoint_cp4();
    AtlasItem st = circle_item("Sigma_tilde", "lift of Sigma", "A_2=[0:z:0:0:r], B_2=[0:z:1:0:r]",
                               sfix4, [s00](const Sample& s) {
                                 const double r = s.r();
                                 Config6 c = s00;
                                 c.points[2] = pt({0, s.z, 0, 0, r});
                                 c.points[3] = pt({0, s.z, 1, 0, r});
                                 return Value(c);
                               });
    st.domain = DomainKind::Disk;
    add(st);
  }

  // trivialization chart families
  {
    AtlasItem it = circle_item("phi", "center-moving trivialization",
                               "A_i=[n_i+s a_i:-m_i+t a_i:a_i]", SpaceTag::planar(2),
                               [d0](const Sample& s) {
                                 return Value(phi_trivialization(phi_chart_center(s.z), d0));
                               });
    it.domain = DomainKind::Chart;
    add(it);
    it = circle_item("psi", "line-moving trivialization", "A_i=d_i meet Q A_i^0", dfix,
                     [d0](const Sample& s) {
                       return Value(psi_trivialization(psi_lines(s.z), d0,
                                                       psi_center_of_projection()));
                     });
    it.domain = DomainKind::Chart;
    add(it);
    const Config6 g0 = gr_frame_basepoint();
    it = circle_item("gr_a", "projection from Q onto planes through I",
                     "projection from Q onto P: X0=p1 X1+p2 X2",
                     SpaceTag::planar_fixed(3, gr_frame_center()), [g0](const Sample& s) {
                       const CMatrix p = plane_graph_cp3(0.7 * s.z, 0.4 * std::conj(s.z), 0);
                       CMatrix h = CMatrix::Zero(4, 3);
                       h(0, 0) = h(1, 1) = h(2, 2) = 1;
                       CMatrix q = CMatrix::Zero(4, 1);
                       q(0, 0) = 1;
                       return Value(gr_geometric(g0, gr_frame_center(), p, h, q));
                     });
    it.domain = DomainKind::Chart;
    add(it);
    it = circle_item("gr_b", "projection from Q onto nearby planes",
                     "P meet (Q v d_i^0) = d_i, d_i meet (Q v A_i^0) = A_i", SpaceTag::planar(3),
                     [g0](const Sample& s) {
                       const CMatrix p =
                           plane_graph_cp3(0.7 * s.z, 0.4 * std::conj(s.z), 0.3 * s.z);
                       CMatrix q = CMatrix::Zero(4, 1);
                       q(0, 0) = 1;
                       return Value(gr_projection(g0, p, q));
                     });
    it.domain = DomainKind::Chart;
    add(it);
  }

  // ------------------------------------------------------------------ claims
  const std::vector<std::string> all_fn = {"w1", "w2", "w3", "rho1", "rho2", "tau1", "tau2", "tau3"};
  const std::vector<std::string> class_fn = {"rho1", "rho2", "tau1", "tau2", "tau3"};

  auto membership = [&](std::string id, std::string item, SpaceTag tag, std::string anchor) {
    Claim c;
    c.id = std::move(id);
    c.kind = ClaimKind::Membership;
    c.check = CheckKind::MembershipSweep;
    c.description = item + " stays in " + tag.name();
    c.anchor = std::move(anchor);
    c.references = {item};
    c.lhs = item;
    c.tag = std::move(tag);
    add_claim(c);
  };
  auto loops_eq = [&](std::string id, ClaimKind kind, std::vector<std::string> refs,
                      std::string lhs, std::string rhs, std::string anchor, double tol,
                      bool stated = true) {
    Claim c;
    c.id = std::move(id);
    c.kind = kind;
    c.check = CheckKind::PointwiseLoops;
    c.description = lhs + " = " + rhs + " pointwise";
    c.anchor = std::move(anchor);
    c.references = std::move(refs);
    c.lhs = std::move(lhs);
    c.rhs = std::move(rhs);
    c.tolerance = tol;
    c.stated = stated;
    add_claim(c);
  };
  auto fields_eq = [&](std::string id, std::vector<std::string> refs, std::string lhs,
                       std::string rhs, std::string anchor) {
    Claim c;
    c.id = std::move(id);
    c.kind = ClaimKind::LiftIdentity;
    c.check = CheckKind::PointwiseFields;
    c.description = lhs + " = " + rhs + " on the disk";
    c.anchor = std::move(anchor);
    c.references = std::move(refs);
    c.lhs = std::move(lhs);
    c.rhs = std::move(rhs);
    c.tolerance = 1e-8;
    add_claim(c);
  };
  auto junctions = [&](std::string id, std::string item, std::string anchor) {
    Claim c;
    c.id = std::move(id);
    c.kind = ClaimKind::BoundaryIdentity;
    c.check = CheckKind::PiecewiseJunctions;
    c.description = "pieces of " + item + " agree at every junction";
    c.anchor = std::move(anchor);
    c.references = {item};
    c.lhs = item;
    c.tolerance = 1e-9;
    add_claim(c);
  };
  auto winding_eq = [&](std::string id, std::vector<std::string> refs, std::string lhs,
                        std::string rhs, std::vector<std::string> fns, std::string anchor,
                        bool stated = true) {
    Claim c;
    c.id = std::move(id);
    c.kind = ClaimKind::WindingRelation;
    c.check = CheckKind::WindingEqual;
    c.description = "windings of " + lhs + " and " + rhs + " agree";
    c.anchor = std::move(anchor);
    c.references = std::move(refs);
    c.lhs = std::move(lhs);
    c.rhs = std::move(rhs);
    c.functionals = std::move(fns);
    c.stated = stated;
    add_claim(c);
  };
  auto fiber_vec = [&](std::string id, std::string item, std::string loop, std::vector<int> v,
                       std::string anchor) {
    Claim c;
    c.id = std::move(id);
    c.kind = ClaimKind::WindingRelation;
    c.check = CheckKind::FiberVector;
    c.description = "fibre winding vector of " + loop;
    c.anchor = std::move(anchor);
    c.references = {item};
    c.lhs = std::move(loop);
    c.expected = std::move(v);
    c.functionals = {"fiber"};
    add_claim(c);
  };
  auto class_vec = [&](std::string id, std::vector<std::string> refs, std::string loop,
                       std::vector<int> v, std::string anchor, bool stated = true) {
    Claim c;
    c.id = std::move(id);
    c.kind = ClaimKind::WindingRelation;
    c.check = CheckKind::ClassVector;
    c.description = "class of " + loop + " in the basis (alpha, beta, sigma)";
    c.anchor = std::move(anchor);
    c.references = std::move(refs);
    c.lhs = std::move(loop);
    c.expected = std::move(v);
    c.functionals = class_fn;
    c.stated = stated;
    add_claim(c);
  };
  auto snf = [&](std::string id, std::vector<std::string> refs, std::vector<std::string> loops,
                 std::vector<std::string> fns, std::vector<int> expected, std::string anchor,
                 bool stated = true) {
    Claim c;
    c.id = std::move(id);
    c.kind = ClaimKind::WindingRelation;
    c.check = CheckKind::SmithNormalForm;
    c.description = "quotient of Z^3 by the relation lattice";
    c.anchor = std::move(anchor);
    c.references = std::move(refs);
    c.loops = std::move(loops);
    c.functionals = std::move(fns);
    c.expected = std::move(expected);
    c.stated = stated;
    add_claim(c);
  };
  auto simple = [&](std::string id, ClaimKind kind, CheckKind check, std::vector<std::string> refs,
                    std::string lhs, std::string rhs, std::string descr, std::string anchor,
                    double tol = 1e-9) {
    Claim c;
    c.id = std::move(id);
    c.kind = kind;
    c.check = check;
    c.description = std::move(descr);
    c.anchor = std::move(anchor);
    c.references = std::move(refs);
    c.lhs = std::move(lhs);
    c.rhs = std::move(rhs);
    c.tolerance = tol;
    add_claim(c);
  };

  // C1
  simple("C1.1", ClaimKind::Membership, CheckKind::PhiChart, {"phi"}, "membership", "",
         "phi lands in D^{2,2} over the chosen center, is the identity at I^0", "chart phi");
  simple("C1.2", ClaimKind::LiftIdentity, CheckKind::PhiChart, {"phi"}, "geometric", "",
         "coordinate formula agrees with the geometric construction", "chart phi", 1e-8);
  simple("C1.3", ClaimKind::LiftIdentity, CheckKind::PhiChart, {"phi"}, "singular", "",
         "geometric construction converges to the formula on the singular locus", "chart phi",
         1e-4);
  // C2
  simple("C2.1", ClaimKind::Membership, CheckKind::PsiChart, {"psi"}, "", "",
         "psi lands in D_I, lambda o psi = first projection, identity at d^0", "chart psi",
         1e-8);
  // C3
  for (const char* g : {"alpha", "beta", "gamma", "sigma"}) {
    membership(std::string("C3.") + g, g, dfix, "generators of pi_1(D_I0)");
  }
  for (const char* g : {"alpha", "beta", "gamma", "sigma"}) {
    simple(std::string("C3.") + g + ".closure", ClaimKind::BoundaryIdentity,
           CheckKind::BasepointClosure, {g}, g, "base_planar", std::string(g) + "(1) = D^0",
           "loops based at D^0");
  }
  for (const auto& [f, g] : std::vector<std::pair<std::string, std::string>>{
           {"fiber_a", "alpha"}, {"fiber_b", "beta"}, {"fiber_c", "gamma"}}) {
    loops_eq("C3." + f, ClaimKind::PointwiseLoopEquality, {f, g}, f, g,
             "images of a, b, c are alpha, beta, gamma", 1e-12);
  }
  // C4
  membership("C4.s", "s", SpaceTag::lines_through(i0), "map s");
  loops_eq("C4.1", ClaimKind::LiftIdentity, {"sigma", "s"}, "lines(sigma)", "s",
           "sigma lifts s", 1e-8);
  membership("C4.Lambda", "Lambda", SpaceTag::lines_through(i0), "Lambda");
  fields_eq("C4.2", {"Lambda_tilde", "Lambda"}, "lines(Lambda_tilde)", "Lambda",
            "lift of Lambda");
  loops_eq("C4.3", ClaimKind::LiftIdentity, {"Lambda", "s"}, "Lambda", "s*s",
           "Lambda restricted to the circle is s^2", 1e-8);
  // C5
  membership("C5.1", "Lambda_tilde", dfix, "lift of Lambda");
  loops_eq("C5.2", ClaimKind::BoundaryIdentity, {"Lambda_tilde", "sigma_tilde_Lambda"},
           "Lambda_tilde", "sigma_tilde_Lambda", "formula for the boundary of the Lambda lift", 1e-9);
  {
    Claim c;
    c.id = "C5.3";
    c.kind = ClaimKind::DiskNullhomotopy;
    c.check = CheckKind::DiskNullity;
    c.description = "boundary of Lambda_tilde has zero winding for every functional";
    c.anchor = "has a trivial homotopy class";
    c.references = {"Lambda_tilde", "sigma_tilde_Lambda"};
    c.lhs = "Lambda_tilde";
    c.functionals = all_fn;
    add_claim(c);
  }
  membership("C5.4", "sigma_tilde_Lambda", dfix, "formula for the boundary of the Lambda lift");
  // C6
  membership("C6.1", "L", dfix, "homotopy L");
  loops_eq("C6.2", ClaimKind::BoundaryIdentity, {"L", "alpha", "beta", "gamma"}, "L@0",
           "(alpha^-1*beta^-1)*gamma", "L(-,0)=(alpha^-1*beta^-1)*gamma", 1e-9);
  loops_eq("C6.3", ClaimKind::BoundaryIdentity, {"L", "sigma", "sigma_tilde_Lambda"}, "L@1",
           "(sigma*sigma)*sigma_tilde_Lambda^-1", "L(-,1)=(sigma*sigma)*(Lambda lift)^-1", 1e-9);
  junctions("C6.4", "L", "piecewise L");
  winding_eq("C6.5", {"sigma", "alpha", "beta", "gamma"}, "sigma*sigma",
             "(alpha^-1*beta^-1)*gamma", all_fn, "[sigma]^2=[alpha]^-1[beta]^-1[gamma]");
  // C7
  const std::pair<const char*, const char*> ks[3] = {
      {"K_alpha", "alpha"}, {"K_beta", "beta"}, {"K_gamma", "gamma"}};
  for (const auto& [k, g] : ks) {
    const std::string K = k, G = g;
    membership("C7." + K + ".1", K, dfix, "conjugation homotopies");
    loops_eq("C7." + K + ".2", ClaimKind::BoundaryIdentity, {K, "sigma", G}, K + "@1",
             "concat3(sigma," + G + ",sigma^-1)", "K at t=1 is sigma*x*sigma^-1", 1e-9);
    loops_eq("C7." + K + ".3", ClaimKind::BoundaryIdentity, {K, G}, K + "@0",
             "reparam_mid(" + G + ")", "K at t=0 is a reparametrization", 1e-9);
    winding_eq("C7." + K + ".4", {K, G}, K + "@0", G, all_fn, "K at t=0 homotopic to the generator");
    junctions("C7." + K + ".5", K, "piecewise epsilon and eta");
  }
  junctions("C7.epsilon", "epsilon", "map epsilon");
  junctions("C7.eta", "eta", "map eta");
  membership("C7.table.1", "conj_alpha_table", dfix, "tabulated sigma*alpha*sigma^-1");
  loops_eq("C7.table.2", ClaimKind::PointwiseLoopEquality, {"conj_alpha_table", "sigma", "alpha"},
           "conj_alpha_table", "concat3(sigma,alpha,sigma^-1)", "tabulated sigma*alpha*sigma^-1",
           1e-9);
  loops_eq("C7.table.3", ClaimKind::PointwiseLoopEquality, {"conj_alpha_table", "K_alpha"},
           "K_alpha@1", "conj_alpha_table", "K_alpha(-,1)=sigma*alpha*sigma^-1", 1e-9);
  junctions("C7.table.4", "conj_alpha_table", "tabulated sigma*alpha*sigma^-1");
  // C8
  membership("C8.1", "Phi_tilde", SpaceTag::planar(2), "lift of Phi");
  fields_eq("C8.2", {"Phi_tilde", "Phi"}, "center(Phi_tilde)", "Phi", "mu o Phi lift = Phi");
  loops_eq("C8.3", ClaimKind::BoundaryIdentity, {"Phi_tilde", "Phi_tilde_S1"}, "Phi_tilde",
           "Phi_tilde_S1", "formula for the boundary of the Phi lift", 1e-9);
  membership("C8.4", "Phi_tilde_S1", dfix, "formula for the boundary of the Phi lift");
  loops_eq("C8.5", ClaimKind::LiftIdentity, {"Phi_tilde_S1", "s"}, "lines(Phi_tilde_S1)", "s^-1",
           "lambda o (Phi lift) = s^-1", 1e-8);
  // C9
  membership("C9.1", "H", dfix, "homotopy H");
  loops_eq("C9.2", ClaimKind::BoundaryIdentity, {"H", "alpha", "beta", "gamma"}, "H@0",
           "(alpha*beta)*gamma", "H(-,0) reference form", 1e-9);
  loops_eq("C9.3", ClaimKind::BoundaryIdentity, {"H", "alpha", "beta", "gamma"}, "H@0",
           "(alpha*beta)*(gamma*gamma)", "H(-,0) as evaluated", 1e-9, false);
  loops_eq("C9.4", ClaimKind::BoundaryIdentity, {"H", "Phi_tilde_S1", "sigma"}, "H@1",
           "Phi_tilde_S1*sigma", "H(-,1)", 1e-9);
  junctions("C9.5", "H", "piecewise H");
  winding_eq("C9.6", {"Phi_tilde_S1", "sigma", "alpha", "beta", "gamma"}, "Phi_tilde_S1*sigma",
             "(alpha*beta)*gamma", all_fn, "[Phi lift][sigma]=[alpha][beta][gamma]");
  winding_eq("C9.7", {"Phi_tilde_S1", "sigma", "alpha", "beta", "gamma"}, "Phi_tilde_S1*sigma",
             "(alpha*beta)*(gamma*gamma)", all_fn, "relation carried by H", false);
  class_vec("C9.8", {"Phi_tilde_S1"}, "Phi_tilde_S1", {2, 2, 1}, "image of delta spanned by 2a+2b+s");
  class_vec("C9.9", {"Phi_tilde_S1"}, "Phi_tilde_S1", {3, 3, 3}, "class carried by H", false);
  snf("C9.10", {"Phi_tilde_S1"}, {"Phi_tilde_S1"}, class_fn, {2},
      "Z^3/<2a+2b+s> = Z^2");
  snf("C9.11", {"Phi_tilde_S1"}, {"Phi_tilde_S1"}, class_fn, {2, 3}, "quotient carried by H",
      false);
  // C10
  membership("C10.1", "Pi_tilde", dfix3, "lift of Pi");
  simple("C10.2", ClaimKind::LiftIdentity, CheckKind::HyperplaneContainment, {"Pi_tilde", "Pi"},
         "Pi_tilde", "Pi", "Pi lift lies in the plane Pi(z)", "lift of Pi", 1e-8);
  loops_eq("C10.3", ClaimKind::BoundaryIdentity, {"Pi_tilde", "M"}, "Pi_tilde", "embed(M@0)",
           "Pi lift on the circle is M(-,0)", 1e-9);
  // C11
  membership("C11.1", "M", dfix, "homotopy M");
  loops_eq("C11.2", ClaimKind::BoundaryIdentity, {"M", "sigma", "gamma"}, "M@1", "sigma*gamma^-1",
           "M(-,1)=sigma*gamma^-1", 1e-9);
  loops_eq("C11.3", ClaimKind::BoundaryIdentity, {"M", "sigma", "gamma"}, "M@0",
           "sim(sigma,gamma^-1)", "M(-,0) simultaneous product", 1e-9);
  winding_eq("C11.4", {"M"}, "M@0", "M@1", all_fn, "M is a homotopy");
  junctions("C11.5", "M", "piecewise m_1, m_2");
  class_vec("C11.6", {"M", "Pi_tilde"}, "M@0", {-1, -1, -1}, "delta([Pi])=-a-b-s");
  snf("C11.7", {"M", "Pi_tilde"}, {"M@0"}, class_fn, {2}, "Z^3/<a+b+s> = Z^2");
  // C12
  membership("C12.F", "F", SpaceTag::lines_through(solid_center()), "generator F");
  membership("C12.B", "B", SpaceTag::lines_through(solid_center()), "generator B");
  membership("C12.1", "F_tilde", sfix, "lift of F");
  membership("C12.2", "B_tilde", sfix, "lift of B");
  fields_eq("C12.3", {"F_tilde", "F"}, "lines(F_tilde)", "F", "lines of the F lift");
  fields_eq("C12.4", {"B_tilde", "B"}, "lines(B_tilde)", "B", "lines of the B lift");
  fiber_vec("C12.5", "F_tilde", "F_tilde", {0, -1, 1}, "delta([F])=-[b]+[c]");
  fiber_vec("C12.6", "B_tilde", "B_tilde", {-1, 0, 1}, "delta([B])=-[a]+[c]");
  snf("C12.7", {"F_tilde", "B_tilde"}, {"F_tilde", "B_tilde"}, {"fiber"}, {1},
      "pi_1(D_I^3) infinite cyclic");
  // C13
  membership("C13.1", "Psi_tilde", SpaceTag::solid(3), "lift of Psi");
  fields_eq("C13.2", {"Psi_tilde", "Psi"}, "center(Psi_tilde)", "Psi", "center of the Psi lift");
  loops_eq("C13.3", ClaimKind::BoundaryIdentity, {"Psi", "center_solid"}, "Psi", "center_solid",
           "Psi(S^1) = I^0", 1e-12);
  fiber_vec("C13.4", "Psi_tilde", "Psi_tilde", {1, 1, 2}, "[a]+[b]+2[c]");
  snf("C13.5", {"F_tilde", "B_tilde", "Psi_tilde"}, {"F_tilde", "B_tilde", "Psi_tilde"}, {"fiber"},
      {0, 4}, "torsion of order 4");
  // C14
  membership("C14.1", "Sigma_tilde", sfix4, "lift of Sigma");
  simple("C14.2", ClaimKind::LiftIdentity, CheckKind::HyperplaneContainment,
         {"Sigma_tilde", "Sigma"}, "Sigma_tilde", "Sigma", "Sigma lift lies in Sigma(z)",
         "lift of Sigma", 1e-8);
  fiber_vec("C14.3", "Sigma_tilde", "Sigma_tilde", {0, -1, 0}, "delta is an isomorphism");
  // C15
  simple("C15.1", ClaimKind::Membership, CheckKind::GrProjection, {"gr_a"}, "a", "",
         "projection from Q onto planes through I stays in D_I and is the identity at P0",
         "Grassmannian fibration a)", 1e-8);
  simple("C15.2", ClaimKind::Membership, CheckKind::GrProjection, {"gr_b"}, "b", "",
         "projection from Q onto nearby planes stays in D^{2,3}", "Grassmannian fibration b)",
         1e-8);

  // braid presentations
  {
    Claim c;
    c.id = "YB3";
    c.family = "YB3";
    c.kind = ClaimKind::PointwiseLoopEquality;
    c.check = CheckKind::BraidYB3;
    c.description = "alpha_ij alpha_ik alpha_jk = alpha_ik alpha_jk alpha_ij for n = 3..6";
    c.anchor = "YB3";
    c.expected = {3, 6};
    add_claim(c);
    c.id = "YB4";
    c.family = "YB4";
    c.check = CheckKind::BraidYB4;
    c.description = "four-index commutator identities for n = 4..6";
    c.anchor = "YB4";
    c.expected = {4, 6};
    add_claim(c);
  }
}

}  // namespace dcs
