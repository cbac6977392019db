#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "dcs/cli.hpp"

namespace dcs::cli {

namespace {

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << bytes)) throw UsageError("cannot write " + path);
}

std::pair<int, int> parse_grid(const std::string& s) {
  int a = 0, b = 0;
  char x = 0, extra = 0;
  std::istringstream in(s);
  if (!(in >> a >> x >> b) || (x != 'x' && x != 'X') || (in >> extra)) {
    throw UsageError("--grid expects AxB, got " + s);
  }
  return {a, b};
}

std::string short_margins(const ClaimReport& r) {
  std::ostringstream o;
  o << std::setprecision(3);
  for (const auto& [k, v] : r.margins) o << ' ' << k << '=' << v;
  for (const auto& [k, v] : r.integers) {
    o << ' ' << k << "=(";
    for (std::size_t i = 0; i < v.size(); ++i) o << (i ? "," : "") << v[i];
    o << ')';
  }
  return o.str();
}

void print_text(const RunReport& rep, std::ostream& out) {
  for (const auto& c : rep.claims) {
    out << std::left << std::setw(18) << c.claim_id << ' ' << std::setw(12)
        << to_string(c.verdict) << short_margins(c);
    if (!c.stated) out << "  [derived]";
    out << '\n';
    if (!c.error.empty()) out << "    error: " << c.error << '\n';
    if (c.verdict != Verdict::Pass) {
      for (const auto& n : c.notes) out << "    " << n << '\n';
    }
  }
  out << rep.claims.size() << " claims: " << rep.count(Verdict::Pass) << " pass, "
      << rep.count(Verdict::Fail) << " fail, " << rep.count(Verdict::Inconclusive)
      << " inconclusive\n";
}

struct VerifyArgs {
  bool all = false;
  std::vector<std::string> claims;
  std::optional<int> samples;
  std::optional<std::string> grid;
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> json_path, golden, config, format;
  std::optional<int> threads;
  bool freeze = false;
  bool no_stability = false;
};

RunConfig build_config(const VerifyArgs& a) {
  RunConfig cfg;
  if (a.config) cfg.merge_json(read_json_file(*a.config));
  if (!a.claims.empty()) cfg.filter = a.claims;
  if (a.all) cfg.filter.clear();
  if (a.samples) {
    cfg.opt.grid.circle = *a.samples;
    cfg.opt.winding.initial = *a.samples;
  }
  if (a.grid) {
    const auto [x, y] = parse_grid(*a.grid);
    cfg.opt.grid.disk_angular = x;
    cfg.opt.grid.disk_radial = y;
    cfg.opt.grid.cyl_angular = 2 * x;
    cfg.opt.grid.cyl_t = y;
  }
  if (a.tol) cfg.opt.tol.proj_eq_tol = *a.tol;
  if (a.seed) cfg.opt.seed = *a.seed;
  if (a.json_path) cfg.json_path = *a.json_path;
  if (a.golden) cfg.golden_path = *a.golden;
  if (a.format) cfg.format = *a.format;
  if (a.threads) cfg.threads = *a.threads;
  if (a.no_stability) cfg.opt.stability = false;
  cfg.freeze = a.freeze;
  return cfg;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  const RunConfig cfg = build_config(a);
  const RunReport rep = run_verify(cfg);
  const std::string bytes = rep.dump();
  if (!cfg.json_path.empty()) write_file(cfg.json_path, bytes);
  if (cfg.format == "json") {
    out << bytes;
  } else {
    print_text(rep, out);
  }
  int code = rep.exit_code();
  if (cfg.freeze) {
    write_file(cfg.golden_path, bytes);
    err << "golden written to " << cfg.golden_path << '\n';
  } else if (!cfg.golden_path.empty()) {
    const auto diff = compare_golden(json::parse(bytes), read_json_file(cfg.golden_path));
    for (const auto& d : diff) err << "golden mismatch: " << d << '\n';
    if (!diff.empty()) code = kExitFail;
  }
  return code;
}

int cmd_winding(const std::string& expr, const std::vector<std::string>& fns,
                const std::string& format, std::optional<int> samples, std::ostream& out) {
  WindingOptions wo;
  if (samples) {
    if (*samples < wo.initial / 4) throw UsageError("--samples below " + std::to_string(wo.initial / 4));
    wo.initial = *samples;
  }
  LoopExpr parsed;
  try {
    parsed = parse_loop(expr);
  } catch (const Error& e) {
    throw UsageError(std::string("parse error: ") + e.what());
  }
  for (const auto& id : parsed.atoms()) {
    if (!Atlas::instance().contains(id)) throw UsageError("unknown atlas id '" + id + "'");
  }
  for (const auto& f : fns) {
    if (f == "fiber") continue;
    try {
      functional(f);
    } catch (const Error&) {
      throw UsageError("unknown functional '" + f + "'");
    }
  }
  const Path loop(parsed);
  const WindingRow row = winding_row(loop, fns, wo);
  if (format == "json") {
    out << json{{"loop", loop.str()},
                {"functionals", row.columns},
                {"windings", row.values},
                {"residuals", row.residuals},
                {"indeterminate", row.indeterminate}}
               .dump(2)
        << '\n';
  } else {
    out << "loop " << loop.str() << '\n';
    for (std::size_t i = 0; i < row.columns.size(); ++i) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "  %-8s %4lld   residual %.2e\n", row.columns[i].c_str(),
                    static_cast<long long>(row.values[i]), row.residuals[i]);
      out << buf;
    }
    out << "vector (";
    for (std::size_t i = 0; i < row.values.size(); ++i) out << (i ? "," : "") << row.values[i];
    out << ")\n";
  }
  return row.indeterminate ? kExitInconclusive : kExitPass;
}

int cmd_membership(const std::string& file, std::optional<double> tol, std::ostream& out) {
  const MembershipInput in = membership_from_json(read_json_file(file));
  Tolerances t;
  if (tol) t.proj_eq_tol = *tol;
  const MembershipReport r = validate(in.config, in.tag, t);
  out << membership_json(r, in.tag).dump(2) << '\n';
  return r.verdict ? kExitPass : kExitFail;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical checks on six-point configurations on concurrent lines", "dcs"};
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "check registered claims");
  auto* all = verify->add_flag("--all", va.all, "every claim (the default)");
  verify->add_option("--claim", va.claims, "claim ids, families or globs")->excludes(all);
  verify->add_option("--samples", va.samples, "circle samples and initial winding samples");
  verify->add_option("--grid", va.grid, "disk grid AxB (cylinders use 2AxB)");
  verify->add_option("--tol", va.tol, "projective equality tolerance");
  verify->add_option("--seed", va.seed, "seed for random fibres");
  verify->add_option("--json", va.json_path, "write the report here");
  verify->add_option("--golden", va.golden, "golden report to compare against or freeze into");
  verify->add_flag("--freeze", va.freeze, "write the report as the new golden");
  verify->add_option("--config", va.config, "JSON run configuration");
  verify->add_option("--format", va.format, "text or json");
  verify->add_option("--threads", va.threads, "worker count (else DCS_THREADS)");
  verify->add_flag("--no-stability", va.no_stability, "skip the doubled-grid reruns");

  std::string expr;
  std::vector<std::string> fns;
  std::string wformat = "text";
  std::optional<int> wsamples;
  auto* wind = app.add_subcommand("winding", "winding numbers of a loop expression");
  wind->add_option("expr", expr, "loop expression")->required();
  wind->add_option("functionals", fns, "functional ids or 'fiber'")->required();
  wind->add_option("--format", wformat, "text or json");
  wind->add_option("--samples", wsamples, "initial samples");

  std::string mfile;
  std::optional<double> mtol;
  auto* memb = app.add_subcommand("membership", "validate a configuration file");
  memb->add_option("file", mfile, "JSON with points and tag")->required();
  memb->add_option("--tol", mtol, "projective equality tolerance");

  std::optional<std::string> export_path;
  auto* atl = app.add_subcommand("atlas", "atlas queries");
  auto* exp = atl->add_subcommand("export", "dump items and claims as JSON");
  exp->add_option("--json", export_path, "output file (default stdout)");
  atl->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "dcs: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*verify) return cmd_verify(va, out, err);
    if (*wind) return cmd_winding(expr, fns, wformat, wsamples, out);
    if (*memb) return cmd_membership(mfile, mtol, out);
    if (*exp) {
      const std::string bytes = export_atlas().dump(2) + "\n";
      if (export_path) {
        write_file(*export_path, bytes);
      } else {
        out << bytes;
      }
      return kExitPass;
    }
  } catch (const UsageError& e) {
    err << "dcs: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "dcs: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}

}  // namespace dcs::cli
