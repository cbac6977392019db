#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace dcs {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

enum class ErrorKind {
  DimensionMismatch,
  ZeroVector,
  DegenerateSpan,
  NoIntersection,
  EmptyInput,
  OutOfDomain,
  UnknownId,
  Parse,
  EndpointMismatch,
  DegenerateFunctional,
  Unsupported,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct Tolerances {
  double proj_eq_tol = 1e-9;   // chordal distance
  double rank_rel_tol = 1e-8;  // relative singular value threshold
  double margin_warn = 1e-6;
  double zero_floor = 1e-300;

  // Throws unless every tolerance is positive and proj_eq_tol < 1.
  void check() const;
};

// A point of CP^n. Coordinates are kept exactly as constructed; two points
// are equal as projective points when their chordal distance vanishes.
class HPoint {
 public:
  HPoint() = default;
  explicit HPoint(CVector coords, double zero_floor = 1e-300);
  HPoint(std::initializer_list<Complex> coords);

  int ambient_dim() const { return static_cast<int>(coords_.size()) - 1; }
  const CVector& coords() const { return coords_; }
  Complex operator[](int i) const { return coords_[i]; }

  // Unit norm, first non-negligible coordinate on the positive real axis.
  HPoint canonical() const;
  // Append zero coordinates (CP^n -> CP^{n+extra}).
  HPoint embedded(int extra = 1) const;
  HPoint scaled(Complex s) const;

 private:
  CVector coords_;
};

// Chordal (Fubini-Study sine) distance, computed through the Lagrange
// identity so that nearby points keep full relative precision.
double proj_dist(const HPoint& p, const HPoint& q);

// Relative singular values (descending) of the matrix whose rows are the
// unit-normalized points.
std::vector<double> relative_singular_values(std::span<const HPoint> points);

int span_dim(std::span<const HPoint> points, const Tolerances& tol = {});
int span_dim(std::initializer_list<HPoint> points, const Tolerances& tol = {});

// Projective line stored as the span of two distinct points.
class PLine {
 public:
  PLine() = default;
  PLine(HPoint p, HPoint q) : p_(std::move(p)), q_(std::move(q)) {}

  const HPoint& p() const { return p_; }
  const HPoint& q() const { return q_; }
  int ambient_dim() const { return p_.ambient_dim(); }

  // Orthonormal basis of the underlying 2-dimensional subspace.
  CMatrix basis() const;
  // Dual covector (CP^2 only): the equation a.X = 0 of the line.
  HPoint covector() const;
  PLine embedded(int extra = 1) const;

  // Line from the kernel of n-1 independent linear equations in CP^n.
  static PLine from_equations(const CMatrix& rows, const Tolerances& tol = {});

 private:
  HPoint p_;
  HPoint q_;
};

PLine line_through(const HPoint& p, const HPoint& q, const Tolerances& tol = {});

struct Incidence {
  bool holds = false;
  double margin = 0.0;  // smallest relative singular value of {x, p, q}
};

Incidence on_line(const HPoint& x, const PLine& l, const Tolerances& tol = {});

HPoint meet_lines(const PLine& l1, const PLine& l2, const Tolerances& tol = {});

// 3x3 determinant of the representatives (CP^2 only).
Complex bracket(const HPoint& p, const HPoint& q, const HPoint& r);

// Sine of the largest principal angle between two lines (0 iff equal).
double line_dist(const PLine& a, const PLine& b);

// |a.x| / (|a| |x|) for a hyperplane covector a.
double hyperplane_residual(const HPoint& covector, const HPoint& x);

// Linear-subspace helpers used by the Grassmannian projections.
CMatrix orthonormal_span(const CMatrix& columns, double rel_tol);
CMatrix null_space(const CMatrix& rows, double rel_tol);
// Intersection of two subspaces given by column bases (possibly empty).
CMatrix subspace_meet(const CMatrix& a, const CMatrix& b, double rel_tol);
CMatrix subspace_join(const CMatrix& a, const CMatrix& b, double rel_tol);

}  // namespace dcs
