#include "dcs/projective.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/SVD>

namespace dcs {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "dimension-mismatch";
    case ErrorKind::ZeroVector: return "zero-vector";
    case ErrorKind::DegenerateSpan: return "degenerate-span";
    case ErrorKind::NoIntersection: return "no-intersection";
    case ErrorKind::EmptyInput: return "empty-input";
    case ErrorKind::OutOfDomain: return "out-of-domain";
    case ErrorKind::UnknownId: return "unknown-id";
    case ErrorKind::Parse: return "parse-error";
    case ErrorKind::EndpointMismatch: return "endpoint-mismatch";
    case ErrorKind::DegenerateFunctional: return "degenerate-functional";
    case ErrorKind::Unsupported: return "unsupported";
  }
  return "unknown";
}

void Tolerances::check() const {
  if (!(proj_eq_tol > 0) || !(rank_rel_tol > 0) || !(margin_warn > 0) ||
      !(zero_floor > 0)) {
    throw Error(ErrorKind::OutOfDomain, "tolerances must be strictly positive");
  }
  if (!(proj_eq_tol < 1)) {
    throw Error(ErrorKind::OutOfDomain, "proj_eq_tol must be < 1");
  }
}

HPoint::HPoint(CVector coords, double zero_floor) : coords_(std::move(coords)) {
  if (coords_.size() < 2) {
    throw Error(ErrorKind::DimensionMismatch, "a projective point needs at least 2 coordinates");
  }
  if (coords_.cwiseAbs().maxCoeff() < zero_floor) {
    throw Error(ErrorKind::ZeroVector, "homogeneous coordinates vanish");
  }
}

HPoint::HPoint(std::initializer_list<Complex> coords)
    : HPoint(Eigen::Map<const CVector>(coords.begin(), static_cast<Eigen::Index>(coords.size()))) {}

HPoint HPoint::canonical() const {
  CVector v = coords_ / coords_.norm();
  const double cutoff = 1e-12 * v.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > cutoff) {
      v *= std::conj(v[i]) / std::abs(v[i]);
      v[i] = std::abs(v[i]);
      break;
    }
  }
  return HPoint(v);
}

HPoint HPoint::embedded(int extra) const {
  CVector v = CVector::Zero(coords_.size() + extra);
  v.head(coords_.size()) = coords_;
  return HPoint(v);
}

HPoint HPoint::scaled(Complex s) const { return HPoint(coords_ * s); }

double proj_dist(const HPoint& p, const HPoint& q) {
  if (p.ambient_dim() != q.ambient_dim()) {
    throw Error(ErrorKind::DimensionMismatch, "proj_dist: ambient dimensions differ");
  }
  // Rescale first so the quadratic terms cannot underflow.
  const CVector a = p.coords() / p.coords().norm();
  const CVector b = q.coords() / q.coords().norm();
  double wedge = 0.0;
  const Eigen::Index n = a.size();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      wedge += std::norm(a[i] * b[j] - a[j] * b[i]);
    }
  }
  return std::min(1.0, std::sqrt(wedge));
}

namespace {

CMatrix normalized_rows(std::span<const HPoint> points) {
  if (points.empty()) throw Error(ErrorKind::EmptyInput, "empty point list");
  const int dim = points.front().ambient_dim();
  CMatrix m(static_cast<Eigen::Index>(points.size()), dim + 1);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].ambient_dim() != dim) {
      throw Error(ErrorKind::DimensionMismatch, "points of different ambient dimension");
    }
    m.row(static_cast<Eigen::Index>(i)) =
        points[i].coords().transpose() / points[i].coords().norm();
  }
  return m;
}

}  // namespace

std::vector<double> relative_singular_values(std::span<const HPoint> points) {
  if (points.empty()) throw Error(ErrorKind::EmptyInput, "empty point list");
  const int dim = points.front().ambient_dim();
  if (points.size() <= 8 && dim < 8) {
    // stack storage for the small cases that dominate membership sweeps
    using Small = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, 0, 8, 8>;
    Small m(static_cast<Eigen::Index>(points.size()), dim + 1);
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (points[i].ambient_dim() != dim) {
        throw Error(ErrorKind::DimensionMismatch, "points of different ambient dimension");
      }
      m.row(static_cast<Eigen::Index>(i)) =
          points[i].coords().transpose() / points[i].coords().norm();
    }
    Eigen::JacobiSVD<Small> svd(m);
    const auto& s = svd.singularValues();
    std::vector<double> out(static_cast<std::size_t>(s.size()));
    for (Eigen::Index i = 0; i < s.size(); ++i) out[static_cast<std::size_t>(i)] = s[i] / s[0];
    return out;
  }
  const CMatrix m = normalized_rows(points);
  Eigen::JacobiSVD<CMatrix> svd(m);
  const auto& s = svd.singularValues();
  std::vector<double> out(static_cast<std::size_t>(s.size()));
  for (Eigen::Index i = 0; i < s.size(); ++i) out[static_cast<std::size_t>(i)] = s[i] / s[0];
  return out;
}

int span_dim(std::span<const HPoint> points, const Tolerances& tol) {
  const auto sv = relative_singular_values(points);
  int rank = 0;
  for (double s : sv) {
    if (s > tol.rank_rel_tol) ++rank;
  }
  return rank - 1;
}

int span_dim(std::initializer_list<HPoint> points, const Tolerances& tol) {
  return span_dim(std::span<const HPoint>(points.begin(), points.size()), tol);
}

CMatrix PLine::basis() const {
  CMatrix cols(p_.coords().size(), 2);
  cols.col(0) = p_.coords();
  cols.col(1) = q_.coords();
  Eigen::HouseholderQR<CMatrix> qr(cols);
  return qr.householderQ() * CMatrix::Identity(cols.rows(), 2);
}

HPoint PLine::covector() const {
  if (ambient_dim() != 2) {
    throw Error(ErrorKind::DimensionMismatch, "covector form exists only in CP^2");
  }
  const auto& a = p_.coords();
  const auto& b = q_.coords();
  return HPoint({a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]});
}

PLine PLine::embedded(int extra) const { return PLine(p_.embedded(extra), q_.embedded(extra)); }

PLine PLine::from_equations(const CMatrix& rows, const Tolerances& tol) {
  const CMatrix kernel = null_space(rows, tol.rank_rel_tol);
  if (kernel.cols() != 2) {
    throw Error(ErrorKind::DegenerateSpan, "equations do not cut out a line");
  }
  return PLine(HPoint(CVector(kernel.col(0))), HPoint(CVector(kernel.col(1))));
}

PLine line_through(const HPoint& p, const HPoint& q, const Tolerances& tol) {
  if (p.ambient_dim() != q.ambient_dim()) {
    throw Error(ErrorKind::DimensionMismatch, "line_through: ambient dimensions differ");
  }
  if (span_dim({p, q}, tol) != 1) {
    throw Error(ErrorKind::DegenerateSpan, "line_through: coincident points");
  }
  return PLine(p, q);
}

Incidence on_line(const HPoint& x, const PLine& l, const Tolerances& tol) {
  if (x.ambient_dim() != l.ambient_dim()) {
    throw Error(ErrorKind::DimensionMismatch, "on_line: ambient dimensions differ");
  }
  const HPoint pts[] = {x, l.p(), l.q()};
  const auto sv = relative_singular_values(pts);
  const double smallest = sv.size() >= 3 ? sv[2] : 0.0;
  return {smallest <= tol.rank_rel_tol, smallest};
}

HPoint meet_lines(const PLine& l1, const PLine& l2, const Tolerances& tol) {
  if (l1.ambient_dim() != l2.ambient_dim()) {
    throw Error(ErrorKind::DimensionMismatch, "meet_lines: ambient dimensions differ");
  }
  const Eigen::Index n = l1.ambient_dim() + 1;
  if (n > 8) {
    const HPoint pts[] = {l1.p(), l1.q(), l2.p(), l2.q()};
    const int dim = span_dim(pts, tol);
    if (dim <= 1) throw Error(ErrorKind::DegenerateSpan, "meet_lines: identical lines");
    if (dim >= 3) throw Error(ErrorKind::NoIntersection, "meet_lines: skew lines");
    const CMatrix a = l1.basis();
    const CMatrix b = l2.basis();
    CMatrix m(a.rows(), 4);
    m << a, -b;
    Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullV);
    const CVector w = svd.matrixV().col(3);
    return HPoint(CVector(a * w.head(2)));
  }
  // one SVD of [p1 q1 p2 q2] gives both the rank test and the meet
  using Small = Eigen::Matrix<Complex, Eigen::Dynamic, 4, 0, 8, 4>;
  Small m(n, 4);
  m.col(0) = l1.p().coords() / l1.p().coords().norm();
  m.col(1) = l1.q().coords() / l1.q().coords().norm();
  m.col(2) = -l2.p().coords() / l2.p().coords().norm();
  m.col(3) = -l2.q().coords() / l2.q().coords().norm();
  Eigen::JacobiSVD<Small> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv[i] / sv[0] > tol.rank_rel_tol) ++rank;
  }
  if (rank <= 2) throw Error(ErrorKind::DegenerateSpan, "meet_lines: identical lines");
  if (rank >= 4) throw Error(ErrorKind::NoIntersection, "meet_lines: skew lines");
  const auto w = svd.matrixV().col(3);
  return HPoint(CVector(m.col(0) * w[0] + m.col(1) * w[1]));
}

Complex bracket(const HPoint& p, const HPoint& q, const HPoint& r) {
  if (p.ambient_dim() != 2 || q.ambient_dim() != 2 || r.ambient_dim() != 2) {
    throw Error(ErrorKind::DimensionMismatch, "bracket needs points of CP^2");
  }
  const auto& a = p.coords();
  const auto& b = q.coords();
  const auto& c = r.coords();
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

double line_dist(const PLine& a, const PLine& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw Error(ErrorKind::DimensionMismatch, "line_dist: ambient dimensions differ");
  }
  const CMatrix u = a.basis();
  const CMatrix v = b.basis();
  const CMatrix residual = u - v * (v.adjoint() * u);
  Eigen::JacobiSVD<CMatrix> svd(residual);
  return std::min(1.0, svd.singularValues()[0]);
}

double hyperplane_residual(const HPoint& covector, const HPoint& x) {
  if (covector.ambient_dim() != x.ambient_dim()) {
    throw Error(ErrorKind::DimensionMismatch, "hyperplane_residual: ambient dimensions differ");
  }
  const Complex s = covector.coords().transpose() * x.coords();
  return std::abs(s) / (covector.coords().norm() * x.coords().norm());
}

CMatrix orthonormal_span(const CMatrix& columns, double rel_tol) {
  if (columns.cols() == 0) return columns;
  Eigen::JacobiSVD<CMatrix> svd(columns, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s[i] > rel_tol * s[0]) ++rank;
  }
  return svd.matrixU().leftCols(rank);
}

CMatrix null_space(const CMatrix& rows, double rel_tol) {
  Eigen::JacobiSVD<CMatrix> svd(rows, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s[i] > rel_tol * s[0]) ++rank;
  }
  return svd.matrixV().rightCols(rows.cols() - rank);
}

CMatrix subspace_meet(const CMatrix& a, const CMatrix& b, double rel_tol) {
  const CMatrix ua = orthonormal_span(a, rel_tol);
  const CMatrix ub = orthonormal_span(b, rel_tol);
  CMatrix m(ua.rows(), ua.cols() + ub.cols());
  m << ua, -ub;
  const CMatrix k = null_space(m, rel_tol);
  return orthonormal_span(ua * k.topRows(ua.cols()), rel_tol);
}

CMatrix subspace_join(const CMatrix& a, const CMatrix& b, double rel_tol) {
  CMatrix m(a.rows(), a.cols() + b.cols());
  m << a, b;
  return orthonormal_span(m, rel_tol);
}

}  // namespace dcs
