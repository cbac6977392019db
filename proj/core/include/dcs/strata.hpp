#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dcs/projective.hpp"

namespace dcs {

enum class SpaceKind {
  Fk,              // F_k(CP^n)
  FkStratum,       // F_k^{i,n}
  DPlanar,         // D^{2,n}
  DPlanarFixed,    // D_I^{2,n}
  DSolid,          // D^{3,n}
  DSolidFixed,     // D_I^{3,n}
  F3LinesThrough,  // three distinct lines through I
};

struct SpaceTag {
  SpaceKind kind = SpaceKind::DPlanar;
  int n = 2;
  int k = 6;
  int i = 2;
  std::optional<HPoint> center;

  static SpaceTag fk(int n, int k);
  static SpaceTag fk_stratum(int n, int k, int i);
  static SpaceTag planar(int n);
  static SpaceTag planar_fixed(int n, HPoint center);
  static SpaceTag solid(int n);
  static SpaceTag solid_fixed(int n, HPoint center);
  static SpaceTag lines_through(HPoint center);

  bool is_desargues() const;
  bool is_solid() const { return kind == SpaceKind::DSolid || kind == SpaceKind::DSolidFixed; }
  bool has_center() const { return center.has_value(); }
  // Same space with the center condition dropped.
  SpaceTag forget_center() const;
  // Throws unless the parameter ranges are valid.
  void check() const;
  std::string name() const;
};

// Points are (A1, B1, A2, B2, A3, B3).
struct Config6 {
  std::array<HPoint, 6> points;

  const HPoint& A(int i) const { return points[static_cast<std::size_t>(2 * (i - 1))]; }
  const HPoint& B(int i) const { return points[static_cast<std::size_t>(2 * (i - 1) + 1)]; }
  int ambient_dim() const { return points[0].ambient_dim(); }

  PLine line(int i) const { return PLine(A(i), B(i)); }
  std::array<PLine, 3> lines() const { return {line(1), line(2), line(3)}; }
  // d1 meet d2; throws if the lines do not meet in a single point.
  HPoint center(const Tolerances& tol = {}) const;

  Config6 embedded(int extra = 1) const;
  Config6 rescaled(const std::array<Complex, 6>& scalars) const;
};

// Largest chordal distance between corresponding points.
double config_dist(const Config6& a, const Config6& b);

struct LineTriple {
  std::array<PLine, 3> lines;
};

double line_triple_dist(const LineTriple& a, const LineTriple& b);

struct SubCheck {
  std::string name;
  bool passed = true;
  double value = 0.0;  // margin for nondegeneracy checks, residual for identities
  bool residual = false;
};

struct MembershipReport {
  bool verdict = true;
  double margin = std::numeric_limits<double>::infinity();  // smallest nondegeneracy quantity
  double max_residual = 0.0; // largest equality defect encountered
  std::vector<std::string> failures;
  std::vector<SubCheck> checks;

  void add_margin(const std::string& name, double value, double threshold);
  void add_residual(const std::string& name, double value, double threshold);
};

MembershipReport in_configuration_space(std::span<const HPoint> points, const Tolerances& tol = {});
int stratum_of(std::span<const HPoint> points, const Tolerances& tol = {});
MembershipReport validate(const Config6& config, const SpaceTag& tag, const Tolerances& tol = {});
double degeneracy_margin(const Config6& config, const SpaceTag& tag, const Tolerances& tol = {});

// Three pairwise-distinct lines through one point (the F_3(CP^1) of lines).
MembershipReport validate_lines(const LineTriple& lines, const std::optional<HPoint>& center,
                                const Tolerances& tol = {});

// Seeded constructive sampler of Desargues configurations.
class ConfigSampler {
 public:
  explicit ConfigSampler(std::uint64_t seed) : rng_(seed) {}

  Complex gaussian();
  HPoint random_point(int n);
  // Random planar configuration in CP^n; center fixed when given.
  Config6 planar(int n, const std::optional<HPoint>& center, const Tolerances& tol = {});
  // Random solid configuration in CP^n (n >= 3).
  Config6 solid(int n, const std::optional<HPoint>& center, const Tolerances& tol = {});

 private:
  Config6 build(int n, const HPoint& center, const std::array<HPoint, 3>& directions);
  std::mt19937_64 rng_;
};

}  // namespace dcs
