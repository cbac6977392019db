#pragma once

#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dcs/atlas.hpp"

namespace dcs {

// Expression tree over atlas ids.
//   expr   := term ('*' term)*
//   term   := primary ('^-1')*
//   primary:= id ['@' number] | '(' expr ')' | fn '(' expr (',' expr)* ')'
// fn is one of concat3, reparam_mid, sim, embed, lines, center.
struct LoopExpr {
  enum class Op { Atom, Concat, Invert, Concat3, ReparamMid, Sim, Embed, Lines, Center };
  Op op = Op::Atom;
  std::string id;
  std::optional<double> slice;  // cylinder time for atoms written id@t
  std::vector<LoopExpr> args;

  std::string str() const;
  // Atlas ids used anywhere in the tree.
  std::vector<std::string> atoms() const;
};

LoopExpr parse_loop(std::string_view text);

// A compiled expression. Loop operators act on arg z in [0, 2pi]; atoms of
// disk items read z directly, so the same object also evaluates fields.
class Path {
 public:
  explicit Path(const LoopExpr& expr, const Tolerances& tol = {});
  explicit Path(std::string_view text, const Tolerances& tol = {})
      : Path(parse_loop(text), tol) {}

  Value operator()(const Sample& s) const { return fn_(s); }
  Value at(double theta, Side side = Side::Right) const {
    return fn_(Sample::circle(theta, 0.0, side));
  }
  ValueKind kind() const { return kind_; }
  const LoopExpr& expr() const { return expr_; }
  std::string str() const { return expr_.str(); }
  // Distance between the values at arg 0 and arg 2pi.
  double closure_gap() const;

 private:
  using Fn = std::function<Value(const Sample&)>;
  static Fn compile(const LoopExpr& e, const Tolerances& tol, ValueKind& kind);

  LoopExpr expr_;
  ValueKind kind_ = ValueKind::Config;
  Fn fn_;
};

struct Grid {
  int circle = 512;
  int disk_angular = 128;
  int disk_radial = 64;
  int cyl_angular = 256;
  int cyl_t = 64;

  Grid doubled() const {
    return {2 * circle, 2 * disk_angular, 2 * disk_radial, 2 * cyl_angular, 2 * cyl_t};
  }
  std::string describe(DomainKind d) const;
};

// theta_k = 2 pi k / n, k = 0..n (closed).
std::vector<double> circle_nodes(int n);
// Polar grid: radii j/(radial-1), angles 2 pi k/angular.
std::vector<Complex> disk_nodes(int angular, int radial);
// Nodes of the item's domain on the given grid (empty for constants).
std::vector<Sample> domain_nodes(DomainKind d, const Grid& g);

struct PointwiseResult {
  double max_dist = 0.0;
  double theta_at_max = 0.0;
  double t_at_max = 0.0;
  Complex z_at_max{};
  std::size_t nodes = 0;
};

// Max value distance of two loops over the closed circle grid (grid_n >= 16).
PointwiseResult pointwise_eq(const Path& p, const Path& q, int grid_n);
// Same, over arbitrary samples (fields on disks or cylinders).
PointwiseResult pointwise_eq_nodes(const Path& p, const Path& q, const std::vector<Sample>& nodes);

struct SweepReport {
  bool verdict = true;
  bool inconclusive = false;
  double margin = std::numeric_limits<double>::infinity();
  double max_residual = 0.0;
  std::size_t nodes = 0;
  std::string first_failure;  // check names and coordinates of the first failing node
};

// Validates the item at every node of its domain grid.
SweepReport check_membership_sweep(const std::string& item_id, const SpaceTag& tag,
                                   const Grid& grid, const Tolerances& tol = {},
                                   double floor = 1e-13);
// Same on explicit parameters (z, t); out-of-domain parameters are an error.
SweepReport check_membership_nodes(const std::string& item_id, const SpaceTag& tag,
                                   const std::vector<std::pair<Complex, double>>& params,
                                   const Tolerances& tol = {}, double floor = 1e-13);

// Membership of an already evaluated value (configuration or line triple).
MembershipReport validate_value(const Value& v, const SpaceTag& tag, const Tolerances& tol = {});

}  // namespace dcs
