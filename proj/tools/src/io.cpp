#include <cmath>

#include "dcs/cli.hpp"

namespace dcs::cli {

namespace {

Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  if (j.is_object() && j.contains("re")) return {j.at("re").get<double>(), j.value("im", 0.0)};
  throw UsageError("coordinate must be a number, [re, im] or {re, im}: " + j.dump());
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

}  // namespace

HPoint point_from_json(const json& j) {
  if (!j.is_array() || j.size() < 2) throw UsageError("point must be an array of >= 2 coordinates");
  CVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<Eigen::Index>(i)] = complex_from_json(j[i]);
  try {
    return HPoint(v);
  } catch (const Error& e) {
    throw UsageError(std::string("bad point: ") + e.what());
  }
}

json point_json(const HPoint& p) {
  // stored raw; only the serialized form is normalized
  const HPoint c = p.canonical();
  json a = json::array();
  for (Eigen::Index i = 0; i < c.coords().size(); ++i) a.push_back(complex_json(c.coords()[i]));
  return a;
}

SpaceTag tag_from_json(const json& j, int ambient) {
  std::string kind;
  int n = ambient;
  std::optional<HPoint> center;
  int k = 6, i = 2;
  if (j.is_string()) {
    kind = j.get<std::string>();
  } else if (j.is_object()) {
    kind = j.value("kind", "");
    n = j.value("n", ambient);
    k = j.value("k", 6);
    i = j.value("i", 2);
    if (j.contains("center")) center = point_from_json(j.at("center"));
  } else {
    throw UsageError("tag must be a string or an object");
  }
  auto need_center = [&]() -> HPoint {
    if (!center) throw UsageError("tag " + kind + " needs a center");
    return *center;
  };
  SpaceTag t;
  if (kind == "fk") t = SpaceTag::fk(n, k);
  else if (kind == "fk_stratum") t = SpaceTag::fk_stratum(n, k, i);
  else if (kind == "planar") t = SpaceTag::planar(n);
  else if (kind == "planar_fixed") t = SpaceTag::planar_fixed(n, need_center());
  else if (kind == "solid") t = SpaceTag::solid(n);
  else if (kind == "solid_fixed") t = SpaceTag::solid_fixed(n, need_center());
  else throw UsageError("unknown tag kind '" + kind + "'");
  try {
    t.check();
  } catch (const Error& e) {
    throw UsageError(std::string("bad tag: ") + e.what());
  }
  return t;
}

json tag_json(const SpaceTag& t) {
  const char* kind = "?";
  switch (t.kind) {
    case SpaceKind::Fk: kind = "fk"; break;
    case SpaceKind::FkStratum: kind = "fk_stratum"; break;
    case SpaceKind::DPlanar: kind = "planar"; break;
    case SpaceKind::DPlanarFixed: kind = "planar_fixed"; break;
    case SpaceKind::DSolid: kind = "solid"; break;
    case SpaceKind::DSolidFixed: kind = "solid_fixed"; break;
    case SpaceKind::F3LinesThrough: kind = "lines_through"; break;
  }
  json j{{"kind", kind}, {"name", t.name()}, {"n", t.n}, {"k", t.k}, {"i", t.i}};
  if (t.center) j["center"] = point_json(*t.center);
  return j;
}

MembershipInput membership_from_json(const json& j) {
  if (!j.is_object() || !j.contains("points") || !j.contains("tag")) {
    throw UsageError("membership file needs \"points\" and \"tag\"");
  }
  const json& pts = j.at("points");
  if (!pts.is_array() || pts.size() != 6) throw UsageError("need exactly 6 points (A1 B1 A2 B2 A3 B3)");
  MembershipInput in;
  for (std::size_t i = 0; i < 6; ++i) in.config.points[i] = point_from_json(pts[i]);
  const int n = in.config.points[0].ambient_dim();
  for (const auto& p : in.config.points) {
    if (p.ambient_dim() != n) throw UsageError("points live in different CP^n");
  }
  in.tag = tag_from_json(j.at("tag"), n);
  if (in.tag.n != n) throw UsageError("tag dimension does not match the points");
  return in;
}

json membership_json(const MembershipReport& r, const SpaceTag& tag) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"passed", c.passed},
                      {c.residual ? "residual" : "margin", c.value}});
  }
  return json{{"tag", tag_json(tag)},
              {"verdict", r.verdict ? "pass" : "fail"},
              {"margin", r.margin},
              {"max_residual", r.max_residual},
              {"failures", r.failures},
              {"checks", checks}};
}

json value_json(const Value& v) {
  return std::visit(
      [](const auto& x) -> json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Config6>) {
          json a = json::array();
          for (const auto& p : x.points) a.push_back(point_json(p));
          return a;
        } else if constexpr (std::is_same_v<T, LineTriple>) {
          json a = json::array();
          for (const auto& l : x.lines) a.push_back({point_json(l.p()), point_json(l.q())});
          return a;
        } else if constexpr (std::is_same_v<T, HPoint>) {
          return point_json(x);
        } else if constexpr (std::is_same_v<T, Hyperplane>) {
          return json{{"covector", point_json(x.covector)}};
        } else {
          return complex_json(x);
        }
      },
      v);
}

json export_atlas() {
  const Atlas& a = Atlas::instance();
  json items = json::array();
  for (const auto& id : a.list_items()) {
    const AtlasItem& it = a.item(id);
    json pw = json::array();
    for (const auto& ps : it.piecewise) {
      json pieces = json::array();
      for (const auto& p : ps.pieces()) pieces.push_back(p.formula);
      pw.push_back({{"name", ps.name()}, {"pieces", pieces}});
    }
    json j{{"id", it.id},
           {"title", it.title},
           {"anchor", it.anchor},
           {"domain", to_string(it.domain)},
           {"value", to_string(it.value_kind)},
           {"target", it.target},
           {"piecewise", pw},
           {"value_at_1", value_json(it.fn(Sample{}))}};
    if (it.space) j["space"] = tag_json(*it.space);
    if (it.basepoint) j["basepoint"] = *it.basepoint;
    items.push_back(std::move(j));
  }
  json claims = json::array();
  for (const auto& c : a.claims()) {
    json j{{"id", c.id},
           {"family", c.family},
           {"kind", to_string(c.kind)},
           {"check", to_string(c.check)},
           {"description", c.description},
           {"anchor", c.anchor},
           {"references", c.references},
           {"lhs", c.lhs},
           {"rhs", c.rhs},
           {"expected", c.expected},
           {"functionals", c.functionals},
           {"loops", c.loops},
           {"tolerance", c.tolerance},
           {"stated", c.stated}};
    if (c.tag) j["tag"] = tag_json(*c.tag);
    claims.push_back(std::move(j));
  }
  json fns = json::array();
  for (const auto& f : builtin_functionals()) {
    fns.push_back({{"id", f.id}, {"domain", f.domain}});
  }
  return json{{"schema_version", kSchemaVersion}, {"items", items}, {"claims", claims},
              {"functionals", fns}};
}

}  // namespace dcs::cli
