#include <fnmatch.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <map>
#include <thread>

#include "dcs/cli.hpp"

namespace dcs::cli {

void RunConfig::check() const {
  const VerifyOptions def;
  const Grid& g = opt.grid;
  const Grid& d = def.grid;
  auto need = [](bool ok, const std::string& what) {
    if (!ok) throw UsageError(what);
  };
  need(g.circle >= d.circle / 4, "circle samples below " + std::to_string(d.circle / 4));
  need(g.disk_angular >= d.disk_angular / 4 && g.disk_radial >= d.disk_radial / 4,
       "disk grid below " + d.describe(DomainKind::Disk) + "/4");
  need(g.cyl_angular >= d.cyl_angular / 4 && g.cyl_t >= d.cyl_t / 4,
       "cylinder grid below " + d.describe(DomainKind::Cylinder) + "/4");
  need(opt.winding.initial >= def.winding.initial / 4, "winding samples below default/4");
  need(opt.winding.cap >= def.winding.cap / 4, "refinement cap below default/4");
  need(opt.winding.cap >= static_cast<std::size_t>(opt.winding.initial),
       "refinement cap below the initial sample count");
  need(format == "text" || format == "json", "format must be text or json");
  need(threads >= 0, "threads must be >= 0");
  need(!(freeze && golden_path.empty()), "--freeze needs --golden PATH");
  try {
    opt.tol.check();
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

json RunConfig::to_json() const {
  const Tolerances& t = opt.tol;
  const Grid& g = opt.grid;
  return json{
      {"tolerances",
       {{"proj_eq_tol", t.proj_eq_tol},
        {"rank_rel_tol", t.rank_rel_tol},
        {"margin_warn", t.margin_warn},
        {"inconclusive_floor", opt.floor}}},
      {"grid",
       {{"circle", g.circle},
        {"disk", {g.disk_angular, g.disk_radial}},
        {"cylinder", {g.cyl_angular, g.cyl_t}}}},
      {"winding",
       {{"initial", opt.winding.initial},
        {"cap", opt.winding.cap},
        {"residual_tol", opt.winding.residual_tol}}},
      {"stability", opt.stability},
      {"seed", opt.seed},
  };
}

void RunConfig::merge_json(const json& j) {
  if (!j.is_object()) throw UsageError("config must be a JSON object");
  try {
    if (j.contains("tolerances")) {
      const json& t = j.at("tolerances");
      opt.tol.proj_eq_tol = t.value("proj_eq_tol", opt.tol.proj_eq_tol);
      opt.tol.rank_rel_tol = t.value("rank_rel_tol", opt.tol.rank_rel_tol);
      opt.tol.margin_warn = t.value("margin_warn", opt.tol.margin_warn);
      opt.floor = t.value("inconclusive_floor", opt.floor);
    }
    if (j.contains("grid")) {
      const json& g = j.at("grid");
      opt.grid.circle = g.value("circle", opt.grid.circle);
      if (g.contains("disk")) {
        opt.grid.disk_angular = g.at("disk").at(0).get<int>();
        opt.grid.disk_radial = g.at("disk").at(1).get<int>();
      }
      if (g.contains("cylinder")) {
        opt.grid.cyl_angular = g.at("cylinder").at(0).get<int>();
        opt.grid.cyl_t = g.at("cylinder").at(1).get<int>();
      }
    }
    if (j.contains("winding")) {
      const json& w = j.at("winding");
      opt.winding.initial = w.value("initial", opt.winding.initial);
      opt.winding.cap = w.value("cap", opt.winding.cap);
      opt.winding.residual_tol = w.value("residual_tol", opt.winding.residual_tol);
    }
    opt.stability = j.value("stability", opt.stability);
    opt.seed = j.value("seed", opt.seed);
    if (j.contains("claims")) filter = j.at("claims").get<std::vector<std::string>>();
    json_path = j.value("json", json_path);
    format = j.value("format", format);
    golden_path = j.value("golden", golden_path);
    threads = j.value("threads", threads);
  } catch (const json::exception& e) {
    throw UsageError(std::string("bad config: ") + e.what());
  }
}

namespace {

bool matches(const std::string& pat, const Claim& c) {
  if (pat == c.id || pat == c.family) return true;
  if (c.id.rfind(pat + ".", 0) == 0) return true;
  return fnmatch(pat.c_str(), c.id.c_str(), 0) == 0;
}

}  // namespace

std::vector<Claim> select_claims(const std::vector<std::string>& filter) {
  const auto& all = Atlas::instance().claims();
  if (filter.empty()) return all;
  std::vector<Claim> out;
  for (const auto& c : all) {
    if (std::any_of(filter.begin(), filter.end(), [&](const auto& p) { return matches(p, c); })) {
      out.push_back(c);
    }
  }
  for (const auto& p : filter) {
    if (std::none_of(all.begin(), all.end(), [&](const Claim& c) { return matches(p, c); })) {
      throw UsageError("claim filter matches nothing: " + p);
    }
  }
  return out;
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("DCS_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
    throw UsageError(std::string("DCS_THREADS must be a positive integer, got ") + env);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::size_t RunReport::count(Verdict v) const {
  return static_cast<std::size_t>(
      std::count_if(claims.begin(), claims.end(), [&](const auto& c) { return c.verdict == v; }));
}

int RunReport::exit_code() const {
  if (count(Verdict::Fail)) return kExitFail;
  if (count(Verdict::Inconclusive)) return kExitInconclusive;
  return kExitPass;
}

json claim_json(const ClaimReport& r) {
  json margins = json::object(), ints = json::object(), grids = json::object();
  for (const auto& [k, v] : r.margins) margins[k] = v;
  for (const auto& [k, v] : r.integers) ints[k] = v;
  for (const auto& [k, v] : r.grids) grids[k] = v;
  json j{{"id", r.claim_id},
         {"family", r.family},
         {"kind", to_string(r.kind)},
         {"check", to_string(r.check)},
         {"stated", r.stated},
         {"verdict", to_string(r.verdict)},
         {"description", r.description},
         {"anchor", r.anchor},
         {"tolerance", r.tolerance},
         {"margins", margins},
         {"integers", ints},
         {"grids", grids},
         {"refinements", r.refinements},
         {"notes", r.notes}};
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

json RunReport::to_json() const {
  json cl = json::array();
  json fam = json::object();
  for (const auto& c : claims) {
    cl.push_back(claim_json(c));
    json& f = fam[c.family];
    if (f.is_null()) f = {{"pass", 0}, {"fail", 0}, {"inconclusive", 0}};
    f[to_string(c.verdict)] = f[to_string(c.verdict)].get<int>() + 1;
  }
  return json{{"schema_version", kSchemaVersion},
              {"environment", environment},
              {"filter", filter},
              {"summary",
               {{"claims", claims.size()},
                {"pass", count(Verdict::Pass)},
                {"fail", count(Verdict::Fail)},
                {"inconclusive", count(Verdict::Inconclusive)},
                {"families", fam},
                {"exit_code", exit_code()}}},
              {"claims", cl}};
}

std::string RunReport::dump() const { return to_json().dump(2) + "\n"; }

RunReport run_verify(const RunConfig& cfg) {
  cfg.check();
  const std::vector<Claim> claims = select_claims(cfg.filter);
  RunReport rep;
  rep.environment = cfg.to_json();
  rep.filter = cfg.filter;
  rep.claims.resize(claims.size());

  const int nthreads =
      std::min<int>(resolve_threads(cfg.threads), std::max<std::size_t>(1, claims.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < claims.size(); i = next++) {
      try {
        rep.claims[i] = verify_claim(claims[i], cfg.opt);
      } catch (const std::exception& e) {
        ClaimReport& r = rep.claims[i];
        r.claim_id = claims[i].id;
        r.family = claims[i].family;
        r.kind = claims[i].kind;
        r.check = claims[i].check;
        r.description = claims[i].description;
        r.error = e.what();
        r.verdict = Verdict::Fail;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return rep;
}

namespace {

void compare(const json& a, const json& b, const std::string& path, double rel,
             std::vector<std::string>& out) {
  if (a.is_number() && b.is_number()) {
    if (a.is_number_integer() && b.is_number_integer()) {
      if (a.get<std::int64_t>() != b.get<std::int64_t>()) {
        out.push_back(path + ": " + a.dump() + " != " + b.dump());
      }
      return;
    }
    const double x = a.get<double>(), y = b.get<double>();
    if (x == y) return;
    if (!(std::abs(x - y) <= rel * std::max(std::abs(x), std::abs(y)))) {
      out.push_back(path + ": " + a.dump() + " vs golden " + b.dump());
    }
    return;
  }
  if (a.type() != b.type()) {
    out.push_back(path + ": type differs");
    return;
  }
  if (a.is_object()) {
    for (auto it = a.begin(); it != a.end(); ++it) {
      if (!b.contains(it.key())) {
        out.push_back(path + "/" + it.key() + ": not in golden");
      } else {
        compare(it.value(), b.at(it.key()), path + "/" + it.key(), rel, out);
      }
    }
    for (auto it = b.begin(); it != b.end(); ++it) {
      if (!a.contains(it.key())) out.push_back(path + "/" + it.key() + ": missing");
    }
  } else if (a.is_array()) {
    if (a.size() != b.size()) {
      out.push_back(path + ": length " + std::to_string(a.size()) + " vs golden " +
                    std::to_string(b.size()));
      return;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      compare(a[i], b[i], path + "/" + std::to_string(i), rel, out);
    }
  } else if (a != b) {
    out.push_back(path + ": " + a.dump() + " vs golden " + b.dump());
  }
}

}  // namespace

std::vector<std::string> compare_golden(const json& fresh, const json& golden, double rel) {
  std::vector<std::string> out;
  if (fresh.value("schema_version", "") != golden.value("schema_version", "")) {
    out.push_back("schema_version differs");
    return out;
  }
  if (fresh.at("environment") != golden.at("environment")) {
    out.push_back("environment differs from the golden run");
    return out;
  }
  // claims keyed by id so a filtered run can be checked against a full golden
  std::map<std::string, const json*> byid;
  for (const auto& c : golden.at("claims")) byid[c.at("id").get<std::string>()] = &c;
  for (const auto& c : fresh.at("claims")) {
    const std::string id = c.at("id").get<std::string>();
    auto it = byid.find(id);
    if (it == byid.end()) {
      out.push_back(id + ": not in golden");
      continue;
    }
    compare(c, *it->second, id, rel, out);
  }
  return out;
}

}  // namespace dcs::cli
