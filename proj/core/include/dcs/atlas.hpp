#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dcs/projective.hpp"
#include "dcs/strata.hpp"

namespace dcs {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;
inline constexpr double kPi = 3.141592653589793238462643383279;

// Angle of z in [0, 2pi).
double arg_2pi(Complex z);

enum class DomainKind { Circle, Disk, Cylinder, Constant, Chart };
const char* to_string(DomainKind d);

// Which piece wins at a junction: the one ending there (Left) or the one
// starting there (Right).
enum class Side { Left, Right };

// Evaluation point. theta carries the circle parameter explicitly so that
// theta = 2pi selects the last piece; for disks z is authoritative.
struct Sample {
  double theta = 0.0;
  double t = 0.0;
  Complex z{1.0, 0.0};
  Side side = Side::Right;

  static Sample circle(double theta, double t = 0.0, Side side = Side::Right);
  static Sample disk(Complex z);
  double r() const { return 1.0 - std::abs(z); }
};

struct Hyperplane {
  HPoint covector;
};

using Value = std::variant<Config6, LineTriple, HPoint, Hyperplane, Complex>;

enum class ValueKind { Config, Lines, Point, Hyperplane, Scalar };
const char* to_string(ValueKind k);
ValueKind kind_of(const Value& v);

// Distance between two values of the same kind (chordal for points,
// largest principal-angle sine for lines, modulus for scalars).
double value_dist(const Value& a, const Value& b);
Value embed_value(const Value& v, int extra = 1);

// One closed-form piece on the interval [lo(t), hi(t)] of arg z.
struct Piece {
  std::function<double(double)> lo;
  std::function<double(double)> hi;
  std::function<Complex(const Sample&)> f;
  std::string formula;
};

class PiecewiseScalar {
 public:
  PiecewiseScalar() = default;
  PiecewiseScalar(std::string name, std::vector<Piece> pieces)
      : name_(std::move(name)), pieces_(std::move(pieces)) {}

  const std::string& name() const { return name_; }
  const std::vector<Piece>& pieces() const { return pieces_; }
  Complex operator()(const Sample& s) const;
  // Interior piece boundaries at time t (nondegenerate pieces only).
  std::vector<double> junctions(double t) const;

 private:
  std::string name_;
  std::vector<Piece> pieces_;
};

struct AtlasItem {
  std::string id;
  std::string title;
  std::string anchor;
  DomainKind domain = DomainKind::Circle;
  ValueKind value_kind = ValueKind::Config;
  std::optional<SpaceTag> space;  // target space for configuration-valued items
  std::string target;             // human-readable target description
  std::vector<PiecewiseScalar> piecewise;
  std::function<Value(const Sample&)> fn;
  std::optional<std::string> basepoint;  // id of the constant item loops are based at
};

enum class ClaimKind {
  Membership,
  LiftIdentity,
  BoundaryIdentity,
  PointwiseLoopEquality,
  WindingRelation,
  DiskNullhomotopy,
};
const char* to_string(ClaimKind k);

enum class CheckKind {
  MembershipSweep,
  PointwiseLoops,
  PointwiseFields,
  PiecewiseJunctions,
  WindingEqual,
  FiberVector,
  DiskNullity,
  BasepointClosure,
  HyperplaneContainment,
  PhiChart,
  PsiChart,
  GrProjection,
  ClassVector,      // coordinates in the (alpha, beta, sigma) basis
  SmithNormalForm,  // quotient of Z^3 by the classes of `loops`
  BraidYB3,
  BraidYB4,
};
const char* to_string(CheckKind k);

struct Claim {
  std::string id;      // e.g. "C6.2"
  std::string family;  // e.g. "C6"
  ClaimKind kind = ClaimKind::Membership;
  CheckKind check = CheckKind::MembershipSweep;
  std::string description;
  std::string anchor;
  std::vector<std::string> references;  // atlas ids
  std::string lhs;                      // item id, loop or field expression
  std::string rhs;
  std::optional<SpaceTag> tag;
  std::vector<int> expected;             // integer vectors for winding claims
  std::vector<std::string> functionals;  // functional ids, "fiber" for fiber charts
  std::vector<std::string> loops;        // relation loops for lattice checks
  double tolerance = 1e-9;
  // False for identities found by evaluation where the reference form fails;
  // kept next to the reference claim for comparison.
  bool stated = true;
};

// Registry of the explicit maps and their machine-checkable claims.
class Atlas {
 public:
  static const Atlas& instance();

  std::vector<std::string> list_items() const;
  bool contains(const std::string& id) const { return items_.count(id) != 0; }
  const AtlasItem& item(const std::string& id) const;

  // Public evaluation: z is a point of the item's domain, t the homotopy
  // parameter for cylinders.
  Value eval(const std::string& id, Complex z, double t = 0.0) const;
  Value eval(const std::string& id, const Sample& s) const;

  Config6 basepoint(const SpaceTag& tag) const;

  const std::vector<Claim>& claims() const { return claims_; }
  std::vector<Claim> claims_for(const std::string& item_id) const;
  const Claim& claim(const std::string& claim_id) const;
  std::vector<std::string> families() const;

 private:
  Atlas();
  void add(AtlasItem item);
  void add_claim(Claim c);

  std::map<std::string, AtlasItem> items_;
  std::vector<Claim> claims_;
};

// Canonical base points.
Config6 planar_basepoint();            // D^0 in CP^2, center [0:0:1]
Config6 solid_basepoint();             // CP^3, center [0:0:1:0]
Config6 solid_basepoint_cp4();         // CP^4, center [0:0:1:0:0]
HPoint planar_center();
HPoint planar_center_cp3();
HPoint solid_center();
HPoint solid_center_cp4();

// Trivializations of the projections used in the computations.

// Coordinate form of the center-moving trivialization over X2 != 0.
// The fiber configuration must have center [0:0:1].
Config6 phi_trivialization(const HPoint& center, const Config6& fiber);
// Same map through the geometric construction (projection from Q = l meet I0 I);
// defined only off the lines of the fiber configuration.
Config6 phi_geometric(const HPoint& center, const Config6& fiber, const Tolerances& tol = {});
// Line-moving trivialization: A_i = d_i meet (Q A_i^0).
Config6 psi_trivialization(const LineTriple& lines, const Config6& fiber, const HPoint& q,
                           const Tolerances& tol = {});
// Projection from the subspace Q (column basis) onto the target subspace P.
Config6 gr_projection(const Config6& config, const CMatrix& target_plane, const CMatrix& q,
                      const Tolerances& tol = {});

// Step-by-step projection from Q: C_i^0 = d_i^0 meet l0, C_i = (Q v C_i^0) meet l,
// d_i = I C_i, A_i = (Q_i v A_i^0) meet d_i. `h` is a hyperplane avoiding the center.
Config6 gr_geometric(const Config6& config, const HPoint& center, const CMatrix& target_plane,
                     const CMatrix& h, const CMatrix& q, const Tolerances& tol = {});
// Coordinate display for n = 3 with I = [0:0:0:1], P0: X0 = 0 and P: X0 = p1 X1 + p2 X2,
// read with the index shift that makes it a projection from [1:0:0:0].
Config6 gr_display(const Config6& config, Complex p1, Complex p2);

// Fixed projection center of the psi chart family.
HPoint psi_center_of_projection();
// Lines of the psi chart family at parameter z (d^0 at z = 0).
LineTriple psi_lines(Complex z);
// Center of the phi chart family at parameter z (I^0 at z = 0).
HPoint phi_chart_center(Complex z);

// 2-plane X0 = p1 X1 + p2 X2 + p3 X3 of CP^3 as a column basis.
CMatrix plane_graph_cp3(Complex p1, Complex p2, Complex p3);
// D^0 moved into X0 = 0 by [x0:x1:x2] -> [0:x0:x1:x2] (center [0:0:0:1]).
Config6 gr_frame_basepoint();
HPoint gr_frame_center();

}  // namespace dcs
