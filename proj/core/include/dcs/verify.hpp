#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dcs/invariants.hpp"

namespace dcs {

enum class Verdict { Pass, Fail, Inconclusive };
const char* to_string(Verdict v);

struct VerifyOptions {
  Tolerances tol;
  Grid grid;
  WindingOptions winding;
  double floor = 1e-13;  // distances below this are indistinguishable from rounding
  bool stability = true;  // rerun sampled checks on the doubled grid
  std::uint64_t seed = 20240607;

  // Claim tolerances are stated for proj_eq_tol = 1e-9 and scale with it.
  double scaled(double claim_tol) const { return claim_tol * (tol.proj_eq_tol / 1e-9); }
};

struct ClaimReport {
  std::string claim_id;
  std::string family;
  ClaimKind kind = ClaimKind::Membership;
  CheckKind check = CheckKind::MembershipSweep;
  bool stated = true;
  Verdict verdict = Verdict::Pass;
  std::string description;
  std::string anchor;
  double tolerance = 0.0;
  std::vector<std::pair<std::string, double>> margins;
  std::vector<std::pair<std::string, std::vector<std::int64_t>>> integers;
  std::vector<std::pair<std::string, std::string>> grids;
  int refinements = 0;
  std::vector<std::string> notes;
  std::string error;

  void margin(const std::string& name, double v) { margins.emplace_back(name, v); }
  void ints(const std::string& name, std::vector<std::int64_t> v) {
    integers.emplace_back(name, std::move(v));
  }
  // Worst-of merge: Fail beats Inconclusive beats Pass.
  void downgrade(Verdict v);
};

// d <= tol passes; tol < d <= floor is inconclusive; anything else fails.
Verdict distance_verdict(double d, double tol, double floor);

ClaimReport verify_claim(const Claim& claim, const VerifyOptions& opt = {});

}  // namespace dcs
