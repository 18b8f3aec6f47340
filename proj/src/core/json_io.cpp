#include "core/json_io.hpp"

namespace convexval {

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), static_cast<long>(e.byte));
  }
}

Json rat_to_json(const Rat& q) { return rat_to_string(q); }

Rat rat_from_json(const Json& j) {
  if (!j.is_string()) throw InputError("rational must be a string like \"p/q\"");
  return parse_rat(j.get<std::string>());
}

Json vec_to_json(const Vec& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(rat_to_json(q));
  return a;
}

Vec vec_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("vector must be an array of rationals");
  Vec v;
  for (const auto& e : j) v.push_back(rat_from_json(e));
  return v;
}

Json polytope_to_json(const Polytope& p) {
  Json j;
  j["dim"] = p.n;
  Json vs = Json::array();
  for (const auto& v : p.vertices) vs.push_back(vec_to_json(v));
  j["vertices"] = vs;
  return j;
}

Polytope polytope_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("vertices"))
    throw InputError("polytope needs {\"dim\", \"vertices\"}");
  if (!j["dim"].is_number_integer()) throw InputError("polytope dim must be an integer");
  const int n = j["dim"].get<int>();
  if (n < 1 || n > 4) throw InputError("polytope dim must be in 1..4");
  if (!j["vertices"].is_array() || j["vertices"].empty())
    throw InputError("polytope needs a nonempty vertex array");
  std::vector<Vec> pts;
  for (const auto& e : j["vertices"]) {
    Vec v = vec_from_json(e);
    if (static_cast<int>(v.size()) != n) throw InputError("polytope vertex dimension mismatch");
    pts.push_back(std::move(v));
  }
  return hull(n, pts);
}

Json plconvexs_to_json(const PLConvexS& u) {
  Json pts = Json::array();
  for (const auto& [x, t] : u.graph) {
    Json p;
    p["x"] = vec_to_json(x);
    p["t"] = rat_to_json(t);
    pts.push_back(p);
  }
  Json j;
  j["points"] = pts;
  return j;
}

PLConvexS plconvexs_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("points") || !j["points"].is_array() || j["points"].empty())
    throw InputError("function needs a nonempty \"points\" array");
  std::vector<std::pair<Vec, Rat>> pts;
  int n = -1;
  for (const auto& e : j["points"]) {
    if (!e.is_object() || !e.contains("x") || !e.contains("t"))
      throw InputError("graph point needs {\"x\", \"t\"}");
    Vec x = vec_from_json(e["x"]);
    if (n < 0) n = static_cast<int>(x.size());
    pts.push_back({std::move(x), rat_from_json(e["t"])});
  }
  return make_plconvexs(n, std::move(pts));
}

Json plconvexf_to_json(const PLConvexF& v) {
  Json ps = Json::array();
  for (const auto& [a, b] : v.pieces) {
    Json p;
    p["a"] = vec_to_json(a);
    p["b"] = rat_to_json(b);
    ps.push_back(p);
  }
  Json j;
  j["pieces"] = ps;
  return j;
}

PLConvexF plconvexf_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("pieces") || !j["pieces"].is_array() || j["pieces"].empty())
    throw InputError("function needs a nonempty \"pieces\" array");
  std::vector<std::pair<Vec, Rat>> ps;
  int n = -1;
  for (const auto& e : j["pieces"]) {
    if (!e.is_object() || !e.contains("a") || !e.contains("b"))
      throw InputError("piece needs {\"a\", \"b\"}");
    Vec a = vec_from_json(e["a"]);
    if (n < 0) n = static_cast<int>(a.size());
    ps.push_back({std::move(a), rat_from_json(e["b"])});
  }
  return make_plconvexf(n, std::move(ps));
}

Json logconcave_to_json(const LogConcaveFn& f) {
  Json j;
  j["kind"] = std::string(1, f.kind);
  j["base"] = f.kind == 'S' ? plconvexs_to_json(*f.s) : plconvexf_to_json(*f.f);
  return j;
}

LogConcaveFn logconcave_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.contains("base"))
    throw InputError("log-concave function needs {\"kind\", \"base\"}");
  const std::string kind = j["kind"].is_string() ? j["kind"].get<std::string>() : "";
  if (kind == "S") return make_logconcave_s(plconvexs_from_json(j["base"]));
  if (kind == "F") return make_logconcave_f(plconvexf_from_json(j["base"]));
  throw InputError("log-concave kind must be \"S\" or \"F\"");
}

bool json_is_plconvexs(const Json& j) { return j.is_object() && j.contains("points"); }

}  // namespace convexval
