#include "dcs/path_engine.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

namespace dcs {

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  LoopExpr parse() {
    LoopExpr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::Parse,
                "loop expression: " + what + " at position " + std::to_string(pos_) + " in \"" +
                    std::string(s_) + "\"");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(std::string_view tok) {
    skip();
    if (s_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  LoopExpr expr() {
    LoopExpr lhs = term();
    while (eat("*")) {
      LoopExpr rhs = term();
      LoopExpr c;
      c.op = LoopExpr::Op::Concat;
      c.args = {std::move(lhs), std::move(rhs)};
      lhs = std::move(c);
    }
    return lhs;
  }

  LoopExpr term() {
    LoopExpr e = primary();
    while (eat("^-1")) {
      LoopExpr inv;
      inv.op = LoopExpr::Op::Invert;
      inv.args = {std::move(e)};
      e = std::move(inv);
    }
    return e;
  }

  LoopExpr primary() {
    skip();
    if (eat("(")) {
      LoopExpr e = expr();
      if (!eat(")")) fail("expected ')'");
      return e;
    }
    const std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
      ++pos_;
    }
    if (pos_ == start) fail(pos_ < s_.size() ? "expected an identifier" : "unexpected end");
    const std::string name(s_.substr(start, pos_ - start));

    static const std::pair<const char*, LoopExpr::Op> fns[] = {
        {"concat3", LoopExpr::Op::Concat3}, {"reparam_mid", LoopExpr::Op::ReparamMid},
        {"sim", LoopExpr::Op::Sim},         {"embed", LoopExpr::Op::Embed},
        {"lines", LoopExpr::Op::Lines},     {"center", LoopExpr::Op::Center}};
    for (const auto& [fname, op] : fns) {
      if (name == fname && eat("(")) {
        LoopExpr call;
        call.op = op;
        call.args.push_back(expr());
        while (eat(",")) call.args.push_back(expr());
        if (!eat(")")) fail("expected ')'");
        const std::size_t want = op == LoopExpr::Op::Concat3 ? 3 : op == LoopExpr::Op::Sim ? 2 : 1;
        if (call.args.size() != want) fail(name + " takes " + std::to_string(want) + " argument(s)");
        return call;
      }
    }

    LoopExpr atom;
    atom.id = name;
    if (eat("@")) {
      skip();
      const char* b = s_.data() + pos_;
      const char* e = s_.data() + s_.size();
      double t = 0.0;
      const auto res = std::from_chars(b, e, t);
      if (res.ec != std::errc()) fail("expected a number after '@'");
      pos_ += static_cast<std::size_t>(res.ptr - b);
      atom.slice = t;
    }
    return atom;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string fmt_slice(double t) {
  std::ostringstream o;
  o << t;
  return o.str();
}

}  // namespace

LoopExpr parse_loop(std::string_view text) { return Parser(text).parse(); }

std::string LoopExpr::str() const {
  auto call = [this](const char* name) {
    std::string out = std::string(name) + "(";
    for (std::size_t i = 0; i < args.size(); ++i) out += (i ? "," : "") + args[i].str();
    return out + ")";
  };
  switch (op) {
    case Op::Atom: return slice ? id + "@" + fmt_slice(*slice) : id;
    case Op::Concat: return "(" + args[0].str() + "*" + args[1].str() + ")";
    case Op::Invert: return args[0].str() + "^-1";
    case Op::Concat3: return call("concat3");
    case Op::ReparamMid: return call("reparam_mid");
    case Op::Sim: return call("sim");
    case Op::Embed: return call("embed");
    case Op::Lines: return call("lines");
    case Op::Center: return call("center");
  }
  return id;
}

std::vector<std::string> LoopExpr::atoms() const {
  std::vector<std::string> out;
  if (op == Op::Atom) out.push_back(id);
  for (const auto& a : args) {
    for (auto& s : a.atoms()) {
      if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
    }
  }
  return out;
}

// ---------------------------------------------------------------- compiling

namespace {

Sample moved(const Sample& s, double theta, Side side) {
  Sample out = Sample::circle(theta, s.t, side);
  return out;
}

Side flip(Side s) { return s == Side::Left ? Side::Right : Side::Left; }

void check_joint(const std::function<Value(const Sample&)>& p,
                 const std::function<Value(const Sample&)>& q, const std::string& where,
                 const Tolerances& tol) {
  const double d = value_dist(p(Sample::circle(kTwoPi, 0.0, Side::Left)),
                              q(Sample::circle(0.0, 0.0, Side::Right)));
  if (!(d <= tol.proj_eq_tol)) {
    std::ostringstream o;
    o << "endpoint mismatch in " << where << ": distance " << d;
    throw Error(ErrorKind::EndpointMismatch, o.str());
  }
}

}  // namespace

Path::Fn Path::compile(const LoopExpr& e, const Tolerances& tol, ValueKind& kind) {
  using Op = LoopExpr::Op;
  switch (e.op) {
    case Op::Atom: {
      const AtlasItem& it = Atlas::instance().item(e.id);
      kind = it.value_kind;
      const auto fn = it.fn;
      switch (it.domain) {
        case DomainKind::Constant: {
          const Value v = fn(Sample{});
          return [v](const Sample&) { return v; };
        }
        case DomainKind::Circle:
          if (e.slice) throw Error(ErrorKind::Parse, e.id + " is a loop, not a homotopy");
          return [fn](const Sample& s) { return fn(Sample::circle(s.theta, 0.0, s.side)); };
        case DomainKind::Cylinder: {
          const std::optional<double> slice = e.slice;
          if (slice && !(*slice >= 0.0 && *slice <= 1.0)) {
            throw Error(ErrorKind::OutOfDomain, e.id + ": t must lie in [0, 1]");
          }
          return [fn, slice](const Sample& s) {
            return fn(Sample::circle(s.theta, slice.value_or(s.t), s.side));
          };
        }
        case DomainKind::Disk:
        case DomainKind::Chart:
          if (e.slice) throw Error(ErrorKind::Parse, e.id + " is a disk, not a homotopy");
          return [fn](const Sample& s) {
            Sample d = Sample::disk(s.z);
            d.theta = s.theta;
            d.side = s.side;
            return fn(d);
          };
      }
      break;
    }
    case Op::Concat: {
      ValueKind kp, kq;
      auto p = compile(e.args[0], tol, kp);
      auto q = compile(e.args[1], tol, kq);
      if (kp != kq) throw Error(ErrorKind::DimensionMismatch, "concat of different kinds");
      kind = kp;
      check_joint(p, q, e.str(), tol);
      return [p, q](const Sample& s) {
        const bool first = s.theta < kPi || (s.theta == kPi && s.side == Side::Left);
        return first ? p(moved(s, 2 * s.theta, s.side))
                     : q(moved(s, 2 * s.theta - kTwoPi, s.side));
      };
    }
    case Op::Invert: {
      auto p = compile(e.args[0], tol, kind);
      return [p](const Sample& s) { return p(moved(s, kTwoPi - s.theta, flip(s.side))); };
    }
    case Op::Concat3: {
      ValueKind k[3];
      std::function<Value(const Sample&)> f[3];
      for (int i = 0; i < 3; ++i) f[i] = compile(e.args[static_cast<std::size_t>(i)], tol, k[i]);
      if (k[0] != k[1] || k[1] != k[2]) {
        throw Error(ErrorKind::DimensionMismatch, "concat3 of different kinds");
      }
      kind = k[0];
      check_joint(f[0], f[1], e.str(), tol);
      check_joint(f[1], f[2], e.str(), tol);
      return [f0 = f[0], f1 = f[1], f2 = f[2]](const Sample& s) {
        const double a = kTwoPi / 3, b = 2 * kTwoPi / 3;
        const bool left = s.side == Side::Left;
        if (s.theta < a || (s.theta == a && left)) return f0(moved(s, 3 * s.theta, s.side));
        if (s.theta < b || (s.theta == b && left)) {
          return f1(moved(s, 3 * s.theta - kTwoPi, s.side));
        }
        return f2(moved(s, 3 * s.theta - 2 * kTwoPi, s.side));
      };
    }
    case Op::ReparamMid: {
      auto p = compile(e.args[0], tol, kind);
      return [p](const Sample& s) {
        const double a = kTwoPi / 3, b = 2 * kTwoPi / 3;
        const double th = s.theta <= a ? 0.0 : s.theta >= b ? kTwoPi : 3 * (s.theta - a);
        return p(moved(s, th, s.side));
      };
    }
    case Op::Sim: {
      ValueKind kp, kq;
      auto p = compile(e.args[0], tol, kp);
      auto q = compile(e.args[1], tol, kq);
      if (kp != ValueKind::Config || kq != ValueKind::Config) {
        throw Error(ErrorKind::Unsupported, "sim needs configuration loops");
      }
      kind = kp;
      const Config6 p0 = std::get<Config6>(p(Sample::circle(0.0)));
      const Config6 q0 = std::get<Config6>(q(Sample::circle(0.0)));
      if (config_dist(p0, q0) > tol.proj_eq_tol) {
        throw Error(ErrorKind::EndpointMismatch, "sim: loops with different base points");
      }
      // which points each factor moves
      std::array<bool, 6> moves_p{}, moves_q{};
      for (int k = 1; k < 64; ++k) {
        const double th = kTwoPi * k / 64;
        const Config6 a = std::get<Config6>(p(Sample::circle(th)));
        const Config6 b = std::get<Config6>(q(Sample::circle(th)));
        for (std::size_t j = 0; j < 6; ++j) {
          moves_p[j] = moves_p[j] || proj_dist(a.points[j], p0.points[j]) > tol.proj_eq_tol;
          moves_q[j] = moves_q[j] || proj_dist(b.points[j], q0.points[j]) > tol.proj_eq_tol;
        }
      }
      for (std::size_t j = 0; j < 6; ++j) {
        if (moves_p[j] && moves_q[j]) {
          throw Error(ErrorKind::Unsupported, "sim: both loops move point " + std::to_string(j));
        }
      }
      return [p, q, moves_q](const Sample& s) {
        Config6 a = std::get<Config6>(p(s));
        const Config6 b = std::get<Config6>(q(s));
        for (std::size_t j = 0; j < 6; ++j) {
          if (moves_q[j]) a.points[j] = b.points[j];
        }
        return Value(a);
      };
    }
    case Op::Embed: {
      auto p = compile(e.args[0], tol, kind);
      return [p](const Sample& s) { return embed_value(p(s), 1); };
    }
    case Op::Lines: {
      ValueKind k;
      auto p = compile(e.args[0], tol, k);
      if (k != ValueKind::Config) throw Error(ErrorKind::Unsupported, "lines() needs configurations");
      kind = ValueKind::Lines;
      return [p](const Sample& s) {
        const Config6 c = std::get<Config6>(p(s));
        return Value(LineTriple{c.lines()});
      };
    }
    case Op::Center: {
      ValueKind k;
      auto p = compile(e.args[0], tol, k);
      if (k != ValueKind::Config) throw Error(ErrorKind::Unsupported, "center() needs configurations");
      kind = ValueKind::Point;
      return [p, tol](const Sample& s) { return Value(std::get<Config6>(p(s)).center(tol)); };
    }
  }
  throw Error(ErrorKind::Parse, "bad expression");
}

Path::Path(const LoopExpr& expr, const Tolerances& tol) : expr_(expr) {
  fn_ = compile(expr_, tol, kind_);
}

double Path::closure_gap() const {
  return value_dist(at(0.0, Side::Right), at(kTwoPi, Side::Left));
}

// ---------------------------------------------------------------- grids

std::string Grid::describe(DomainKind d) const {
  switch (d) {
    case DomainKind::Circle: return std::to_string(circle);
    case DomainKind::Cylinder: return std::to_string(cyl_angular) + "x" + std::to_string(cyl_t);
    case DomainKind::Disk:
    case DomainKind::Chart:
      return std::to_string(disk_angular) + "x" + std::to_string(disk_radial);
    case DomainKind::Constant: return "1";
  }
  return "";
}

std::vector<double> circle_nodes(int n) {
  if (n < 1) throw Error(ErrorKind::EmptyInput, "circle grid needs at least one node");
  std::vector<double> out(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) out[static_cast<std::size_t>(k)] = kTwoPi * k / n;
  out.back() = kTwoPi;
  return out;
}

std::vector<Complex> disk_nodes(int angular, int radial) {
  if (angular < 1 || radial < 2) throw Error(ErrorKind::EmptyInput, "disk grid too small");
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(angular * (radial - 1) + 1));
  out.push_back(0.0);
  for (int j = 1; j < radial; ++j) {
    const double rho = static_cast<double>(j) / (radial - 1);
    for (int k = 0; k < angular; ++k) {
      out.push_back(j == radial - 1 ? std::polar(1.0, kTwoPi * k / angular)
                                    : std::polar(rho, kTwoPi * k / angular));
    }
  }
  return out;
}

std::vector<Sample> domain_nodes(DomainKind d, const Grid& g) {
  std::vector<Sample> out;
  switch (d) {
    case DomainKind::Constant: out.push_back(Sample{}); break;
    case DomainKind::Circle:
      for (double th : circle_nodes(g.circle)) out.push_back(Sample::circle(th));
      break;
    case DomainKind::Cylinder: {
      const auto th = circle_nodes(g.cyl_angular);
      for (int j = 0; j <= g.cyl_t; ++j) {
        const double t = static_cast<double>(j) / g.cyl_t;
        for (double x : th) out.push_back(Sample::circle(x, t));
      }
      break;
    }
    case DomainKind::Disk:
    case DomainKind::Chart:
      for (Complex z : disk_nodes(g.disk_angular, g.disk_radial)) out.push_back(Sample::disk(z));
      break;
  }
  return out;
}

// ---------------------------------------------------------------- comparisons

PointwiseResult pointwise_eq_nodes(const Path& p, const Path& q, const std::vector<Sample>& nodes) {
  if (p.kind() != q.kind()) {
    throw Error(ErrorKind::DimensionMismatch, "pointwise_eq: " + p.str() + " and " + q.str() +
                                                  " have different value kinds");
  }
  PointwiseResult r;
  r.max_dist = 0.0;
  for (const auto& s : nodes) {
    const double d = value_dist(p(s), q(s));
    if (!(d <= r.max_dist)) {
      r.max_dist = d;
      r.theta_at_max = s.theta;
      r.t_at_max = s.t;
      r.z_at_max = s.z;
    }
  }
  r.nodes = nodes.size();
  return r;
}

PointwiseResult pointwise_eq(const Path& p, const Path& q, int grid_n) {
  if (grid_n < 16) throw Error(ErrorKind::OutOfDomain, "pointwise_eq: grid must have >= 16 nodes");
  std::vector<Sample> nodes;
  for (double th : circle_nodes(grid_n)) nodes.push_back(Sample::circle(th));
  return pointwise_eq_nodes(p, q, nodes);
}

// ---------------------------------------------------------------- membership

MembershipReport validate_value(const Value& v, const SpaceTag& tag, const Tolerances& tol) {
  switch (kind_of(v)) {
    case ValueKind::Config: return validate(std::get<Config6>(v), tag, tol);
    case ValueKind::Lines: return validate_lines(std::get<LineTriple>(v), tag.center, tol);
    default: break;
  }
  throw Error(ErrorKind::Unsupported, "membership is defined for configurations and line triples");
}

namespace {

bool only_floor_residuals(const MembershipReport& r, double floor) {
  bool any = false;
  for (const auto& c : r.checks) {
    if (c.passed) continue;
    if (!c.residual || c.value > floor) return false;
    any = true;
  }
  return any;
}

void absorb(SweepReport& out, const MembershipReport& r, const Sample& s, double floor) {
  out.margin = std::min(out.margin, r.margin);
  out.max_residual = std::max(out.max_residual, r.max_residual);
  if (r.verdict) return;
  const bool soft = only_floor_residuals(r, floor);
  if (soft) {
    out.inconclusive = true;
  } else {
    out.verdict = false;
  }
  if (out.first_failure.empty() || !soft) {
    std::ostringstream o;
    o.precision(17);
    o << "z=(" << s.z.real() << "," << s.z.imag() << ") t=" << s.t << ":";
    for (const auto& f : r.failures) o << " " << f;
    out.first_failure = o.str();
  }
}

}  // namespace

SweepReport check_membership_sweep(const std::string& item_id, const SpaceTag& tag,
                                   const Grid& grid, const Tolerances& tol, double floor) {
  const AtlasItem& it = Atlas::instance().item(item_id);
  if (it.space && it.value_kind == ValueKind::Config && it.space->is_solid() != tag.is_solid()) {
    throw Error(ErrorKind::DimensionMismatch, item_id + " targets " + it.target);
  }
  SweepReport out;
  for (const auto& s : domain_nodes(it.domain, grid)) {
    const MembershipReport r = validate_value(it.fn(s), tag, tol);
    ++out.nodes;
    absorb(out, r, s, floor);
    if (!out.verdict) break;
  }
  return out;
}

SweepReport check_membership_nodes(const std::string& item_id, const SpaceTag& tag,
                                   const std::vector<std::pair<Complex, double>>& params,
                                   const Tolerances& tol, double floor) {
  const Atlas& atlas = Atlas::instance();
  SweepReport out;
  for (const auto& [z, t] : params) {
    const MembershipReport r = validate_value(atlas.eval(item_id, z, t), tag, tol);
    ++out.nodes;
    Sample s = Sample::disk(z);
    s.t = t;
    absorb(out, r, s, floor);
    if (!out.verdict) break;
  }
  return out;
}

}  // namespace dcs
