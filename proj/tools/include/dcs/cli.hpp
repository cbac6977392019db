#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dcs/verify.hpp"

namespace dcs::cli {

using nlohmann::json;

inline constexpr const char* kSchemaVersion = "dcs-report/1";

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitInconclusive = 2, kExitUsage = 64 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  VerifyOptions opt;
  std::vector<std::string> filter;  // claim ids, families or globs; empty = all
  std::string json_path;
  std::string format = "text";  // text | json
  std::string golden_path;
  bool freeze = false;
  int threads = 0;  // 0: DCS_THREADS, then hardware concurrency

  // caps may not go below a quarter of the defaults
  void check() const;
  // environment echo; also the accepted shape of --config files
  json to_json() const;
  void merge_json(const json& j);
};

std::vector<Claim> select_claims(const std::vector<std::string>& filter);
int resolve_threads(int requested);

struct RunReport {
  json environment;
  std::vector<std::string> filter;
  std::vector<ClaimReport> claims;

  std::size_t count(Verdict v) const;
  int exit_code() const;
  json to_json() const;
  // canonical bytes: what determinism and golden files are about
  std::string dump() const;
};

json claim_json(const ClaimReport& r);
RunReport run_verify(const RunConfig& cfg);

// Numbers compare under rel slack unless both are integers; everything else exactly.
std::vector<std::string> compare_golden(const json& fresh, const json& golden, double rel = 1e-12);

struct MembershipInput {
  Config6 config;
  SpaceTag tag;
};
HPoint point_from_json(const json& j);
json point_json(const HPoint& p);
SpaceTag tag_from_json(const json& j, int ambient);
json tag_json(const SpaceTag& t);
MembershipInput membership_from_json(const json& j);
json membership_json(const MembershipReport& r, const SpaceTag& tag);

json value_json(const Value& v);
json export_atlas();

// whole command line, minus argv[0] handling; returns the exit code
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dcs::cli
