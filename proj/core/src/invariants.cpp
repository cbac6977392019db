#include "dcs/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <Eigen/Dense>

namespace dcs {

namespace {

using V3 = Eigen::Vector3cd;

V3 v3(const HPoint& p) {
  if (p.ambient_dim() != 2) {
    throw Error(ErrorKind::DimensionMismatch, "bracket functionals need configurations in CP^2");
  }
  return p.coords();
}

// Eigen's cross conjugates complex results; this one is bilinear.
V3 cross(const V3& a, const V3& b) {
  return V3(a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]);
}

Complex br(const V3& a, const V3& b, const V3& c) {
  const V3 x = cross(b, c);
  return a[0] * x[0] + a[1] * x[1] + a[2] * x[2];
}

struct Pts {
  V3 A[3];
  V3 B[3];
  explicit Pts(const Config6& c) {
    for (int i = 0; i < 3; ++i) {
      A[i] = v3(c.A(i + 1));
      B[i] = v3(c.B(i + 1));
    }
  }
};

Complex w_fn(const Config6& c, int i) {
  const Pts p(c);
  const int j = (i + 1) % 3, k = (i + 2) % 3;
  return br(p.A[j], p.B[j], p.A[i]) * br(p.A[k], p.B[k], p.B[i]) /
         (br(p.A[k], p.B[k], p.A[i]) * br(p.A[j], p.B[j], p.B[i]));
}

Complex rho_fn(const Config6& c, int which) {
  const Pts p(c);
  const V3 d1 = cross(p.A[0], p.B[0]);
  const V3 d2 = cross(p.A[1], p.B[1]);
  const V3 d3 = cross(p.A[2], p.B[2]);
  const V3 I = cross(d1, d2);
  const V3& O = p.A[0];
  const V3& R = p.A[2];
  const V3& S = p.B[2];
  const V3 P = cross(cross(p.A[0], p.A[1]), d3);
  const V3 Q = which == 1 ? cross(cross(p.B[0], p.A[1]), d3) : cross(cross(p.A[0], p.B[1]), d3);
  return br(O, P, Q) * br(O, I, R) * br(O, I, S) /
         (br(O, R, S) * br(O, I, P) * br(O, I, Q));
}

Complex tau_fn(const Config6& c, int i) {
  const Pts p(c);
  const V3 E(0, 0, 1);
  const int j = i == 0 ? 1 : 0;
  const int k = i == 2 ? 1 : 2;
  const Complex d = br(p.A[i], p.B[i], p.A[j]) / br(E, p.B[i], p.A[j]);
  return d * d * br(E, p.A[j], p.A[k]) / (br(E, p.A[i], p.A[j]) * br(E, p.A[i], p.A[k]));
}

std::vector<ScalarFunctional> make_functionals() {
  std::vector<ScalarFunctional> out;
  for (int i = 0; i < 3; ++i) {
    out.push_back({"w" + std::to_string(i + 1), "D^{2,2}", {},
                   [i](const Config6& c) { return w_fn(c, i); }});
  }
  for (int i = 1; i <= 2; ++i) {
    out.push_back({"rho" + std::to_string(i), "D^{2,2}", {},
                   [i](const Config6& c) { return rho_fn(c, i); }});
  }
  for (int i = 0; i < 3; ++i) {
    out.push_back({"tau" + std::to_string(i + 1), "D_I^{2,2}, I=[0:0:1]", {},
                   [i](const Config6& c) { return tau_fn(c, i); }});
  }
  return out;
}

}  // namespace

const std::vector<ScalarFunctional>& builtin_functionals() {
  static const std::vector<ScalarFunctional> fns = make_functionals();
  return fns;
}

const ScalarFunctional& functional(const std::string& id) {
  for (const auto& f : builtin_functionals()) {
    if (f.id == id) return f;
  }
  throw Error(ErrorKind::UnknownId, "unknown functional: " + id);
}

std::vector<std::string> functional_ids() {
  std::vector<std::string> out;
  for (const auto& f : builtin_functionals()) out.push_back(f.id);
  return out;
}

// ---------------------------------------------------------------- winding

WindingResult track_winding(const std::function<Complex(double)>& g, const WindingOptions& opt) {
  if (opt.initial < 4) throw Error(ErrorKind::EmptyInput, "winding: too few initial samples");
  WindingResult r;
  r.min_modulus = std::numeric_limits<double>::infinity();

  auto value = [&](double th) {
    const Complex v = g(th);
    const double m = std::abs(v);
    if (!(m >= opt.zero_tol)) {
      std::ostringstream o;
      o.precision(17);
      o << "functional vanishes (|f| = " << m << ") at arg z = " << th;
      throw Error(ErrorKind::DegenerateFunctional, o.str());
    }
    r.min_modulus = std::min(r.min_modulus, m);
    return v;
  };

  struct Node {
    double a, b;
    Complex ga, gb;
    int depth;
  };
  const auto nodes = circle_nodes(opt.initial);
  std::vector<Complex> vals(nodes.size());
  for (std::size_t k = 0; k < nodes.size(); ++k) vals[k] = value(nodes[k]);
  r.samples = nodes.size();

  double total = 0.0;
  std::vector<Node> stack;
  for (std::size_t k = nodes.size() - 1; k-- > 0;) {
    stack.push_back({nodes[k], nodes[k + 1], vals[k], vals[k + 1], 0});
  }
  while (!stack.empty()) {
    Node n = stack.back();
    stack.pop_back();
    const double d = std::arg(n.gb / n.ga);
    if (std::abs(d) < kPi / 2) {
      total += d;
      continue;
    }
    if (r.samples >= opt.cap) {
      r.indeterminate = true;
      total += d;
      continue;
    }
    const double m = 0.5 * (n.a + n.b);
    const Complex gm = value(m);
    ++r.samples;
    r.depth = std::max(r.depth, n.depth + 1);
    stack.push_back({m, n.b, gm, n.gb, n.depth + 1});
    stack.push_back({n.a, m, n.ga, gm, n.depth + 1});
  }
  const double turns = total / kTwoPi;
  r.winding = static_cast<std::int64_t>(std::llround(turns));
  r.residual = std::abs(turns - static_cast<double>(r.winding));
  if (r.residual >= opt.residual_tol) r.indeterminate = true;
  return r;
}

WindingResult winding(const Path& loop, const ScalarFunctional& f, const WindingOptions& opt) {
  if (loop.kind() != ValueKind::Config) {
    throw Error(ErrorKind::Unsupported, "winding needs a configuration loop");
  }
  return track_winding([&](double th) { return f.eval(std::get<Config6>(loop.at(th))); }, opt);
}

// ---------------------------------------------------------------- fiber charts

std::array<FiberChart, 3> fiber_charts(int ambient_dim) {
  auto e = [ambient_dim](std::initializer_list<double> c) {
    CVector v = CVector::Zero(ambient_dim + 1);
    int i = 0;
    for (double x : c) v[i++] = x;
    return v;
  };
  switch (ambient_dim) {
    case 2: {
      const CVector I = e({0, 0, 1});
      return {{{e({-1, 1, 0}), I}, {e({-1, 2, 0}), I}, {e({0, 1, 0}), I}}};
    }
    case 3: {
      const CVector I = e({0, 0, 1, 0});
      return {{{e({0, 0, 0, 1}), I}, {e({0, 1, 0, 0}), I}, {e({1, 0, 0, 0}), I}}};
    }
    case 4: {
      const CVector I = e({0, 0, 1, 0, 0});
      return {{{e({0, 0, 0, 1, 0}), I}, {e({0, 1, 0, 0, 0}), I}, {e({1, 0, 0, 0, 0}), I}}};
    }
    default: break;
  }
  throw Error(ErrorKind::Unsupported, "no fiber charts registered for CP^" + std::to_string(ambient_dim));
}

Complex chart_coordinate(const FiberChart& chart, const CVector& x) {
  const Complex cc = chart.base.squaredNorm(), ii = chart.center.squaredNorm();
  const Complex ci = chart.base.dot(chart.center);
  const Complex cx = chart.base.dot(x), ix = chart.center.dot(x);
  // normal equations of [C I] (mu, nu) = x
  const Complex det = cc * ii - ci * std::conj(ci);
  const Complex mu = (ii * cx - ci * ix) / det;
  const Complex nu = (cc * ix - std::conj(ci) * cx) / det;
  if (std::abs(mu) < 1e-300) throw Error(ErrorKind::OutOfDomain, "chart: point at the center");
  return nu / mu;
}

FiberVector fiber_winding_vector(const Path& loop, const WindingOptions& opt) {
  if (loop.kind() != ValueKind::Config) {
    throw Error(ErrorKind::Unsupported, "fiber windings need a configuration loop");
  }
  const Config6 c0 = std::get<Config6>(loop.at(0.0));
  const auto charts = fiber_charts(c0.ambient_dim());
  constexpr double line_tol = 1e-8;
  for (int i = 0; i < 3; ++i) {
    const PLine chart_line(HPoint(charts[static_cast<std::size_t>(i)].base),
                           HPoint(charts[static_cast<std::size_t>(i)].center));
    if (line_dist(c0.line(i + 1), chart_line) > line_tol) {
      throw Error(ErrorKind::Unsupported,
                  "no chart registered for line d" + std::to_string(i + 1) + " of " + loop.str());
    }
  }
  for (double th : circle_nodes(opt.initial)) {
    const Config6 c = std::get<Config6>(loop.at(th));
    for (int i = 1; i <= 3; ++i) {
      if (line_dist(c.line(i), c0.line(i)) > line_tol) {
        std::ostringstream o;
        o << "line d" << i << " of " << loop.str() << " moves (arg z = " << th << ")";
        throw Error(ErrorKind::Unsupported, o.str());
      }
    }
  }
  FiberVector out;
  for (std::size_t i = 0; i < 3; ++i) {
    const FiberChart& ch = charts[i];
    const int line = static_cast<int>(i) + 1;
    out.detail[i] = track_winding(
        [&](double th) {
          const Config6 c = std::get<Config6>(loop.at(th));
          return chart_coordinate(ch, c.B(line).coords()) - chart_coordinate(ch, c.A(line).coords());
        },
        opt);
    out.k[i] = out.detail[i].winding;
    out.indeterminate = out.indeterminate || out.detail[i].indeterminate;
  }
  return out;
}

WindingRow winding_row(const Path& loop, const std::vector<std::string>& functionals,
                       const WindingOptions& opt) {
  WindingRow row;
  for (const auto& id : functionals) {
    if (id == "fiber") {
      const FiberVector f = fiber_winding_vector(loop, opt);
      for (std::size_t i = 0; i < 3; ++i) {
        row.columns.push_back("fiber" + std::to_string(i + 1));
        row.values.push_back(f.k[i]);
        row.residuals.push_back(f.detail[i].residual);
      }
      row.indeterminate = row.indeterminate || f.indeterminate;
      continue;
    }
    const WindingResult w = winding(loop, functional(id), opt);
    row.columns.push_back(id);
    row.values.push_back(w.winding);
    row.residuals.push_back(w.residual);
    row.indeterminate = row.indeterminate || w.indeterminate;
  }
  return row;
}

RelationReport check_linear_relation(const Path& lhs, const Path& rhs,
                                     const std::vector<std::string>& functionals,
                                     const WindingOptions& opt) {
  RelationReport r;
  r.lhs = winding_row(lhs, functionals, opt);
  r.rhs = winding_row(rhs, functionals, opt);
  r.indeterminate = r.lhs.indeterminate || r.rhs.indeterminate;
  r.equal = !r.indeterminate && r.lhs.values == r.rhs.values;
  return r;
}

// ---------------------------------------------------------------- integer linear algebra

int integer_rank(const IntMatrix& m) {
  if (m.empty()) return 0;
  // fraction-free elimination over 128-bit integers
  std::vector<std::vector<__int128>> a;
  for (const auto& row : m) a.emplace_back(row.begin(), row.end());
  const std::size_t rows = a.size(), cols = a[0].size();
  int rank = 0;
  __int128 prev = 1;
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows; ++c) {
    const auto r0 = static_cast<std::size_t>(rank);
    std::size_t piv = r0;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r0]);
    for (std::size_t r = r0 + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        a[r][k] = (a[r0][c] * a[r][k] - a[r][c] * a[r0][k]) / prev;
      }
      a[r][c] = 0;
    }
    prev = a[r0][c];
    ++rank;
  }
  return rank;
}

IndependenceReport independence_matrix(const std::vector<Path>& loops,
                                       const std::vector<std::string>& functionals,
                                       const WindingOptions& opt) {
  IndependenceReport r;
  for (const auto& p : loops) {
    const WindingRow row = winding_row(p, functionals, opt);
    r.matrix.push_back(row.values);
    r.indeterminate = r.indeterminate || row.indeterminate;
  }
  if (r.indeterminate) throw Error(ErrorKind::DegenerateFunctional, "indeterminate winding");
  r.rank = integer_rank(r.matrix);
  return r;
}

NullityReport disk_winding_nullity(const std::function<Complex(Complex)>& f_on_disk,
                                   const Grid& grid, const WindingOptions& opt) {
  NullityReport r;
  r.min_modulus = std::numeric_limits<double>::infinity();
  for (Complex z : disk_nodes(grid.disk_angular, grid.disk_radial)) {
    r.min_modulus = std::min(r.min_modulus, std::abs(f_on_disk(z)));
  }
  if (!(r.min_modulus >= opt.zero_tol)) {
    r.inconclusive = true;
    r.note = "functional vanishes on the disk grid";
    return r;
  }
  WindingResult w;
  try {
    w = track_winding([&](double th) { return f_on_disk(std::polar(1.0, th)); }, opt);
  } catch (const Error& e) {
    r.inconclusive = true;
    r.note = e.what();
    return r;
  }
  r.winding = w.winding;
  r.residual = w.residual;
  if (w.indeterminate) {
    r.inconclusive = true;
    r.note = "indeterminate boundary winding";
  } else if (w.winding != 0) {
    // a nonzero boundary winding forces a zero between grid nodes
    r.inconclusive = true;
    r.note = "nonzero boundary winding: functional vanishes inside the disk";
  } else {
    r.passed = true;
  }
  return r;
}

NullityReport disk_winding_nullity(const std::string& disk_item, const ScalarFunctional& f,
                                   const Grid& grid, const WindingOptions& opt) {
  const AtlasItem& it = Atlas::instance().item(disk_item);
  if (it.domain != DomainKind::Disk || it.value_kind != ValueKind::Config) {
    throw Error(ErrorKind::Unsupported, disk_item + " is not a disk of configurations");
  }
  return disk_winding_nullity(
      [&](Complex z) { return f.eval(std::get<Config6>(it.fn(Sample::disk(z)))); }, grid, opt);
}

std::optional<std::vector<std::int64_t>> solve_integer(const IntMatrix& columns,
                                                       const std::vector<std::int64_t>& v) {
  const auto n = static_cast<Eigen::Index>(columns.size());
  const auto m = static_cast<Eigen::Index>(v.size());
  Eigen::MatrixXd a(m, n);
  Eigen::VectorXd b(m);
  for (Eigen::Index j = 0; j < n; ++j) {
    if (static_cast<Eigen::Index>(columns[static_cast<std::size_t>(j)].size()) != m) {
      throw Error(ErrorKind::DimensionMismatch, "solve_integer: ragged columns");
    }
    for (Eigen::Index i = 0; i < m; ++i) {
      a(i, j) = static_cast<double>(columns[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]);
    }
  }
  for (Eigen::Index i = 0; i < m; ++i) b(i) = static_cast<double>(v[static_cast<std::size_t>(i)]);
  const Eigen::VectorXd x = a.completeOrthogonalDecomposition().solve(b);
  std::vector<std::int64_t> xi(static_cast<std::size_t>(n));
  for (Eigen::Index j = 0; j < n; ++j) xi[static_cast<std::size_t>(j)] = std::llround(x(j));
  // exact verification
  for (Eigen::Index i = 0; i < m; ++i) {
    std::int64_t s = 0;
    for (Eigen::Index j = 0; j < n; ++j) {
      s += columns[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] *
           xi[static_cast<std::size_t>(j)];
    }
    if (s != v[static_cast<std::size_t>(i)]) return std::nullopt;
  }
  return xi;
}

std::optional<std::vector<std::int64_t>> class_vector(const Path& loop,
                                                      const std::vector<std::string>& functionals,
                                                      const WindingOptions& opt) {
  IntMatrix basis;
  for (const char* g : {"alpha", "beta", "sigma"}) {
    const WindingRow row = winding_row(Path(g), functionals, opt);
    if (row.indeterminate) return std::nullopt;
    basis.push_back(row.values);
  }
  if (integer_rank(basis) < 3) {
    throw Error(ErrorKind::DegenerateSpan, "functionals do not separate alpha, beta, sigma");
  }
  const WindingRow target = winding_row(loop, functionals, opt);
  if (target.indeterminate) return std::nullopt;
  return solve_integer(basis, target.values);
}

std::vector<std::int64_t> smith_diagonal(IntMatrix m) {
  std::vector<std::int64_t> diag;
  if (m.empty()) return diag;
  const std::size_t rows = m.size(), cols = m[0].size();
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // pivot: smallest nonzero absolute value in the remaining block
    for (;;) {
      std::size_t pr = rows, pc = cols;
      std::int64_t best = 0;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          const std::int64_t a = std::llabs(m[i][j]);
          if (a != 0 && (best == 0 || a < best)) {
            best = a;
            pr = i;
            pc = j;
          }
        }
      }
      if (best == 0) {
        std::sort(diag.begin(), diag.end());
        return diag;
      }
      std::swap(m[t], m[pr]);
      for (auto& row : m) std::swap(row[t], row[pc]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        const std::int64_t q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        clean = clean && m[i][t] == 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        const std::int64_t q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        clean = clean && m[t][j] == 0;
      }
      if (!clean) continue;
      // divisibility of the rest of the block
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    diag.push_back(std::llabs(m[t][t]));
  }
  std::sort(diag.begin(), diag.end());
  return diag;
}

std::vector<std::int64_t> quotient_invariants(const IntMatrix& relations, int n) {
  for (const auto& r : relations) {
    if (static_cast<int>(r.size()) != n) throw Error(ErrorKind::DimensionMismatch, "relation length");
  }
  const auto d = smith_diagonal(relations);
  std::vector<std::int64_t> out{n - static_cast<std::int64_t>(d.size())};
  for (auto x : d) {
    if (x > 1) out.push_back(x);
  }
  return out;
}

}  // namespace dcs
