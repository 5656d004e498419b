#include "folzar/config_io.hpp"

#include <fstream>
#include <sstream>
#include <tuple>

#include "json.hpp"

namespace folzar {

namespace {

using nlohmann::json;

Rat parse_rat(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rat(v.get<long long>());
  if (v.is_string()) {
    try {
      return Rat::parse(v.get<std::string>());
    } catch (const std::exception& e) {
      throw input_error(where + ": bad fraction '" + v.get<std::string>() + "' (" +
                        e.what() + ")");
    }
  }
  if (v.is_number_float())
    throw input_error(where + ": floating-point literals are not accepted; write an "
                              "exact fraction string like \"1/4\"");
  throw input_error(where + ": expected an integer or a fraction string");
}

long long parse_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw input_error(where + ": expected an integer");
  return v.get<long long>();
}

bool parse_bool(const json& v, const std::string& where) {
  if (!v.is_boolean()) throw input_error(where + ": expected a boolean");
  return v.get<bool>();
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                         const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* k : allowed) known = known || it.key() == k;
    if (!known) throw input_error(where + ": unknown key '" + it.key() + "'");
  }
}

SingularityIncidence parse_singularity(const json& s, const std::string& where) {
  if (!s.is_object()) throw input_error(where + ": expected an object");
  reject_unknown_keys(s, {"point", "h", "cs", "z", "reduced_nondegenerate"}, where);
  if (!s.contains("point") || !s["point"].is_string())
    throw input_error(where + ": missing point id");
  SingularityIncidence out;
  out.point_id = s["point"].get<std::string>();
  if (!s.contains("h")) throw input_error(where + ": missing h");
  out.h = parse_int(s["h"], where + ".h");
  if (!s.contains("cs")) throw input_error(where + ": missing cs");
  out.cs = parse_rat(s["cs"], where + ".cs");
  if (s.contains("z")) out.z = parse_int(s["z"], where + ".z");
  if (s.contains("reduced_nondegenerate"))
    out.reduced_nondegenerate =
        parse_bool(s["reduced_nondegenerate"], where + ".reduced_nondegenerate");
  return out;
}

Curve parse_curve(const json& c, const std::string& where) {
  if (!c.is_object()) throw input_error(where + ": expected an object");
  reject_unknown_keys(c,
                      {"id", "self_int", "pa", "geom_genus", "invariant", "kf_dot",
                       "delta_coeff", "kx_dot", "singularities"},
                      where);
  Curve out;
  if (!c.contains("id") || !c["id"].is_string())
    throw input_error(where + ": missing curve id");
  out.id = c["id"].get<std::string>();
  if (!c.contains("self_int")) throw input_error(where + ": missing self_int");
  out.self_int = parse_int(c["self_int"], where + ".self_int");
  out.pa = c.contains("pa") ? parse_int(c["pa"], where + ".pa") : 0;
  out.geom_genus =
      c.contains("geom_genus") ? parse_int(c["geom_genus"], where + ".geom_genus") : out.pa;
  if (!c.contains("invariant")) throw input_error(where + ": missing invariant flag");
  out.invariant = parse_bool(c["invariant"], where + ".invariant");
  if (!c.contains("kf_dot")) throw input_error(where + ": missing kf_dot");
  out.kf_dot = parse_int(c["kf_dot"], where + ".kf_dot");
  if (c.contains("delta_coeff"))
    out.delta_coeff = parse_rat(c["delta_coeff"], where + ".delta_coeff");
  if (c.contains("kx_dot")) out.kx_dot_declared = parse_int(c["kx_dot"], where + ".kx_dot");
  if (c.contains("singularities")) {
    if (!c["singularities"].is_array())
      throw input_error(where + ".singularities: expected an array");
    int k = 0;
    for (const auto& s : c["singularities"])
      out.singularities.push_back(parse_singularity(
          s, where + ".singularities[" + std::to_string(k++) + "]"));
  }
  return out;
}

}  // namespace

ParsedDocument parse_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw input_error(std::string("document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw input_error("document root must be an object");
  reject_unknown_keys(doc, {"curves", "intersections", "globals", "adjoint"}, "document");

  if (!doc.contains("curves") || !doc["curves"].is_array())
    throw input_error("document needs a 'curves' array");
  std::vector<Curve> curves;
  {
    int k = 0;
    for (const auto& c : doc["curves"])
      curves.push_back(parse_curve(c, "curves[" + std::to_string(k++) + "]"));
  }
  std::map<std::string, int> ids;
  for (std::size_t i = 0; i < curves.size(); ++i) {
    if (!ids.emplace(curves[i].id, static_cast<int>(i)).second)
      throw input_error("duplicate curve id '" + curves[i].id + "'");
  }
  auto id_index = [&](const std::string& id, const std::string& where) {
    auto it = ids.find(id);
    if (it == ids.end()) throw input_error(where + ": unknown curve id '" + id + "'");
    return it->second;
  };

  std::vector<std::tuple<int, int, long long>> triples;
  if (doc.contains("intersections")) {
    if (!doc["intersections"].is_array())
      throw input_error("'intersections' must be an array of [id, id, multiplicity]");
    int k = 0;
    for (const auto& t : doc["intersections"]) {
      const std::string where = "intersections[" + std::to_string(k++) + "]";
      if (!t.is_array() || t.size() != 3 || !t[0].is_string() || !t[1].is_string())
        throw input_error(where + ": expected [id, id, multiplicity]");
      triples.emplace_back(id_index(t[0].get<std::string>(), where),
                           id_index(t[1].get<std::string>(), where),
                           parse_int(t[2], where + "[2]"));
    }
  }

  if (!doc.contains("globals") || !doc["globals"].is_object())
    throw input_error("document needs a 'globals' object");
  const json& g = doc["globals"];
  reject_unknown_keys(g, {"kx_self", "chi", "pseudoeffective", "ambient_products"},
                      "globals");
  GlobalInvariants globals;
  if (!g.contains("kx_self")) throw input_error("globals: missing kx_self");
  globals.kx_self = parse_int(g["kx_self"], "globals.kx_self");
  if (!g.contains("chi")) throw input_error("globals: missing chi");
  globals.chi = parse_int(g["chi"], "globals.chi");
  if (g.contains("pseudoeffective"))
    globals.pseudoeffective = parse_bool(g["pseudoeffective"], "globals.pseudoeffective");
  if (g.contains("ambient_products")) {
    const json& a = g["ambient_products"];
    if (!a.is_object()) throw input_error("globals.ambient_products must be an object");
    reject_unknown_keys(a, {"kf_self", "kf_kx"}, "globals.ambient_products");
    if (a.contains("kf_self"))
      globals.ambient.kf_self = parse_rat(a["kf_self"], "ambient_products.kf_self");
    if (a.contains("kf_kx"))
      globals.ambient.kf_kx = parse_rat(a["kf_kx"], "ambient_products.kf_kx");
  }

  AdjointParams params;
  params.epsilon = Rat(0);
  if (doc.contains("adjoint")) {
    const json& a = doc["adjoint"];
    if (!a.is_object()) throw input_error("'adjoint' must be an object");
    reject_unknown_keys(a, {"epsilon", "delta"}, "adjoint");
    if (a.contains("epsilon")) params.epsilon = parse_rat(a["epsilon"], "adjoint.epsilon");
    if (a.contains("delta")) {
      if (!a["delta"].is_object())
        throw input_error("adjoint.delta must map curve ids to coefficients");
      for (auto it = a["delta"].begin(); it != a["delta"].end(); ++it) {
        const int idx = id_index(it.key(), "adjoint.delta");
        params.delta[idx] = parse_rat(it.value(), "adjoint.delta['" + it.key() + "']");
      }
    }
  }

  return ParsedDocument{CurveConfiguration(std::move(curves), triples, std::move(globals)),
                        std::move(params)};
}

ParsedDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

}  // namespace folzar
