#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dcs/path_engine.hpp"

namespace dcs {

// Nonvanishing scale-invariant functions on planar configurations in CP^2.
// The w's are bracket ratios valid for any center; rho needs only the
// configuration; tau reads the fixed center [0:0:1].
struct ScalarFunctional {
  std::string id;
  std::string domain;
  std::array<int, 6> degrees{};  // homogeneity in A1, B1, A2, B2, A3, B3
  std::function<Complex(const Config6&)> eval;
};

const std::vector<ScalarFunctional>& builtin_functionals();
const ScalarFunctional& functional(const std::string& id);
// All bracket functionals; "fiber" is accepted by the relation checks as
// shorthand for the three fiber charts.
std::vector<std::string> functional_ids();

struct WindingOptions {
  int initial = 512;
  std::size_t cap = std::size_t{1} << 20;
  double residual_tol = 0.05;
  double zero_tol = 1e-13;
};

struct WindingResult {
  std::int64_t winding = 0;
  double residual = 0.0;     // |total turns - winding|
  double min_modulus = 0.0;  // over the tracked samples
  std::size_t samples = 0;
  int depth = 0;  // deepest bisection level
  bool indeterminate = false;
};

// Continuous argument tracking of g on [0, 2pi]; intervals whose argument
// increment reaches pi/2 are bisected until the cap.
WindingResult track_winding(const std::function<Complex(double)>& g, const WindingOptions& opt = {});
WindingResult winding(const Path& loop, const ScalarFunctional& f, const WindingOptions& opt = {});

// Affine chart X = C + x I on a fixed line through the center.
struct FiberChart {
  CVector base;
  CVector center;
};
// Charts of the base-point lines for CP^2 (planar), CP^3 (solid) and CP^4.
std::array<FiberChart, 3> fiber_charts(int ambient_dim);
// Coordinate x of X in the chart (least squares on [C I]).
Complex chart_coordinate(const FiberChart& chart, const CVector& x);

struct FiberVector {
  std::array<std::int64_t, 3> k{};
  std::array<WindingResult, 3> detail{};
  bool indeterminate = false;
};

// Per line, winding of chart(B_i) - chart(A_i). The three lines must stay
// fixed along the loop and coincide with the registered chart lines.
FiberVector fiber_winding_vector(const Path& loop, const WindingOptions& opt = {});

// Windings of a loop for the requested functional ids ("fiber" expands to three entries).
struct WindingRow {
  std::vector<std::string> columns;
  std::vector<std::int64_t> values;
  std::vector<double> residuals;
  bool indeterminate = false;
};
WindingRow winding_row(const Path& loop, const std::vector<std::string>& functionals,
                       const WindingOptions& opt = {});

struct RelationReport {
  bool equal = false;
  bool indeterminate = false;
  WindingRow lhs;
  WindingRow rhs;
};
RelationReport check_linear_relation(const Path& lhs, const Path& rhs,
                                     const std::vector<std::string>& functionals,
                                     const WindingOptions& opt = {});

using IntMatrix = std::vector<std::vector<std::int64_t>>;

int integer_rank(const IntMatrix& m);

struct IndependenceReport {
  IntMatrix matrix;
  int rank = 0;
  bool indeterminate = false;
};
IndependenceReport independence_matrix(const std::vector<Path>& loops,
                                       const std::vector<std::string>& functionals,
                                       const WindingOptions& opt = {});

struct NullityReport {
  bool passed = false;
  bool inconclusive = false;
  double min_modulus = 0.0;  // |f| over the disk grid
  std::int64_t winding = 0;
  double residual = 0.0;
  std::string note;
};
// A disk on which f does not vanish has boundary winding 0.
NullityReport disk_winding_nullity(const std::string& disk_item, const ScalarFunctional& f,
                                   const Grid& grid = {}, const WindingOptions& opt = {});
NullityReport disk_winding_nullity(const std::function<Complex(Complex)>& f_on_disk,
                                   const Grid& grid = {}, const WindingOptions& opt = {});

// Integer solution of M x = v (M given by columns), if one exists.
std::optional<std::vector<std::int64_t>> solve_integer(const IntMatrix& columns,
                                                       const std::vector<std::int64_t>& v);

// Class of a loop in the basis (alpha, beta, sigma), read off from the
// windings of `functionals`; empty if not in the integer span.
std::optional<std::vector<std::int64_t>> class_vector(const Path& loop,
                                                      const std::vector<std::string>& functionals,
                                                      const WindingOptions& opt = {});

// Diagonal of the Smith normal form (nonzero entries, ascending divisibility).
std::vector<std::int64_t> smith_diagonal(IntMatrix m);
// Z^n / (row lattice) as {free rank, torsion orders > 1...}.
std::vector<std::int64_t> quotient_invariants(const IntMatrix& relations, int n);

}  // namespace dcs
