#include "surfdyn/io/json_io.hpp"

#include <algorithm>

namespace surfdyn::io {

namespace {

template <typename T>
T get(const json& doc, const char* key, const std::string& where) {
  require(doc.is_object() && doc.contains(key), ErrorCode::InvalidInput, where + ": missing \"" + key + "\"");
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception& e) {
    fail(ErrorCode::InvalidInput, where + ": bad \"" + key + "\": " + e.what());
  }
}

ExactScalar exact_from(const json& v) {
  if (v.is_string()) return Cyclotomic::parse(v.get<std::string>());
  require(v.is_number(), ErrorCode::InvalidInput, "scalar must be a string or a number");
  if (v.is_number_integer()) return ExactScalar(v.get<long>());
  return Cyclotomic(parse_rational(v.dump()));
}

std::vector<std::pair<long, long>> local_from(const json& v) {
  std::vector<std::pair<long, long>> out;
  for (const auto& pair : v) {
    require(pair.is_array() && pair.size() == 2, ErrorCode::InvalidInput, "local invariants are [m, b] pairs");
    out.emplace_back(pair[0].get<long>(), pair[1].get<long>());
  }
  return out;
}

}  // namespace

json scalar_to_json(const ExactScalar& x) { return {{"value", x.to_string()}}; }
json scalar_to_json(const FloatScalar& x) { return {{"re", x.real()}, {"im", x.imag()}}; }

json jet_to_json(const AnyJet& j) {
  return std::visit([](const auto& x) { return jet_to_json(x); }, j);
}

AnyJet jet_from_json(const json& doc) {
  const int d = get<int>(doc, "dimension", "jet");
  const int order = get<int>(doc, "order", "jet");
  require(d >= 1 && order >= 1, ErrorCode::InvalidInput, "jet: dimension and order must be >= 1");
  const json coords = get<json>(doc, "coordinates", "jet");
  require(coords.is_array() && static_cast<int>(coords.size()) == d, ErrorCode::DimensionMismatch,
          "jet: expected one term list per coordinate");
  bool floating = false;
  for (const auto& terms : coords)
    for (const auto& t : terms) floating = floating || t.contains("re") || t.contains("im");

  Jet<ExactScalar> exact(d, order);
  Jet<FloatScalar> approx(d, order);
  for (int k = 0; k < d; ++k) {
    for (const auto& t : coords[static_cast<std::size_t>(k)]) {
      const auto e = get<std::vector<int>>(t, "exponents", "jet term");
      require(static_cast<int>(e.size()) == d, ErrorCode::DimensionMismatch, "jet term: exponent length differs from dimension");
      for (int x : e) require(x >= 0, ErrorCode::InvalidInput, "jet term: negative exponent");
      const MultiIndex n(e);
      require(n.degree() <= order, ErrorCode::InvalidInput, "jet term of degree " + std::to_string(n.degree()) + " exceeds the order");
      if (floating) {
        FloatScalar v;
        if (t.contains("value"))
          v = exact_from(t["value"]).to_complex();
        else
          v = {t.value("re", 0.0), t.value("im", 0.0)};
        approx.set(k, n, approx.coeff(k, n) + v);
      } else {
        exact.set(k, n, exact.coeff(k, n) + exact_from(get<json>(t, "value", "jet term")));
      }
    }
  }
  if (floating) return approx;
  return exact;
}

json group_to_json(const DiagonalGroup& g) { return {{"order", g.order()}, {"weights", g.weights()}}; }

DiagonalGroup group_from_json(const json& doc) {
  return DiagonalGroup(get<long>(doc, "order", "group"), get<std::vector<long>>(doc, "weights", "group"));
}

GermDocument germ_from_json(const json& doc) {
  require(doc.is_object(), ErrorCode::InvalidInput, "germ document must be an object");
  if (!doc.contains("jet")) return {jet_from_json(doc), std::nullopt, std::nullopt};
  GermDocument g{jet_from_json(doc["jet"]), std::nullopt, std::nullopt};
  if (doc.contains("group")) g.group = group_from_json(doc["group"]);
  if (doc.contains("k_twist")) g.k_twist = get<long>(doc, "k_twist", "germ");
  return g;
}

json modulus_to_json(const Modulus& m) {
  if (m.exact) return m.exact->get_str();
  return m.value;
}

Modulus modulus_from_json(const json& doc) {
  if (doc.is_string()) return Modulus::parse(doc.get<std::string>());
  require(doc.is_number(), ErrorCode::InvalidInput, "modulus must be a rational string or a number");
  if (doc.is_number_integer()) return Modulus::rational(mpq_class(doc.get<long>()));
  return Modulus::real(doc.get<double>());
}

json graph_to_json(const DualGraph& g) {
  json vs = json::array();
  for (const auto& v : g.vertices()) {
    json o{{"id", v.id}, {"genus", v.genus}, {"self", v.self}};
    if (v.a) o["a"] = *v.a;
    vs.push_back(std::move(o));
  }
  json es = json::array();
  for (const auto& [a, b] : g.edges()) es.push_back({a, b});
  json out{{"vertices", std::move(vs)}, {"edges", std::move(es)}};
  if (g.dynamics()) {
    json dyn = json::object();
    if (g.dynamics()->center) dyn["center"] = *g.dynamics()->center;
    json corners = json::array();
    for (const auto& c : g.dynamics()->corners)
      corners.push_back({{"edge", {c.edge.first, c.edge.second}},
                         {"mod_lambda", modulus_to_json(c.mod_lambda)},
                         {"mod_mu", modulus_to_json(c.mod_mu)}});
    dyn["corners"] = std::move(corners);
    out["dynamics"] = std::move(dyn);
  }
  return out;
}

DualGraph graph_from_json(const json& doc) {
  std::vector<Vertex> vs;
  for (const auto& v : get<json>(doc, "vertices", "graph")) {
    Vertex x;
    x.id = get<int>(v, "id", "vertex");
    x.genus = v.value("genus", 0);
    x.self = get<long>(v, "self", "vertex " + std::to_string(x.id));
    if (v.contains("a") && !v["a"].is_null()) x.a = v["a"].get<int>();
    vs.push_back(x);
  }
  std::vector<std::pair<int, int>> es;
  for (const auto& e : doc.value("edges", json::array())) {
    require(e.is_array() && e.size() == 2, ErrorCode::InvalidInput, "edges are [i, j] pairs");
    es.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  std::optional<DynamicsAnnotation> dyn;
  if (doc.contains("dynamics") && !doc["dynamics"].is_null()) {
    const json& d = doc["dynamics"];
    dyn = DynamicsAnnotation{};
    if (d.contains("center") && !d["center"].is_null()) dyn->center = d["center"].get<int>();
    for (const auto& c : d.value("corners", json::array())) {
      const auto edge = get<std::vector<int>>(c, "edge", "corner");
      require(edge.size() == 2, ErrorCode::InvalidInput, "corner edge must be [i, j]");
      dyn->corners.push_back({{edge[0], edge[1]},
                              modulus_from_json(get<json>(c, "mod_lambda", "corner")),
                              modulus_from_json(get<json>(c, "mod_mu", "corner"))});
    }
  }
  return DualGraph(std::move(vs), std::move(es), std::move(dyn));
}

json orbifold_to_json(const OrbifoldSurface& s, const std::optional<OrbibundleData>& bundle) {
  json out{{"genus", s.genus}, {"marks", s.marks}};
  if (bundle) {
    json local = json::array();
    for (const auto& [m, b] : bundle->local) local.push_back({m, b});
    out["bundle"] = {{"e", bundle->e}, {"local", std::move(local)}};
  }
  return out;
}

OrbifoldSurface orbifold_from_json(const json& doc) {
  return OrbifoldSurface::make(get<int>(doc, "genus", "orbifold"), doc.value("marks", std::vector<long>{}));
}

std::optional<OrbibundleData> orbibundle_from_json(const json& doc) {
  if (!doc.contains("bundle")) return std::nullopt;
  const json& b = doc["bundle"];
  OrbibundleData out{orbifold_from_json(doc), get<long>(b, "e", "bundle"), local_from(b.value("local", json::array()))};
  out.validate();
  return out;
}

AdmissibleDocument admissible_from_json(const json& doc) {
  require(doc.is_object(), ErrorCode::InvalidInput, "admissible document must be an object");
  AdmissibleDocument out{graph_from_json(get<json>(doc, "graph", "document")), std::nullopt, std::nullopt};
  if (doc.contains("germ") && !doc["germ"].is_null()) {
    const json& g = doc["germ"];
    ChainPayload p;
    if (g.contains("jet")) p.germ = jet_from_json(g["jet"]);
    if (g.contains("group")) p.group = group_from_json(g["group"]);
    if (g.contains("k_twist")) p.k_twist = get<long>(g, "k_twist", "germ");
    out.chain = std::move(p);
  }
  if (doc.contains("central") && !doc["central"].is_null()) {
    const json& c = doc["central"];
    CentralPayload p;
    if (c.contains("finite_order")) p.finite_order = c["finite_order"].get<bool>();
    if (c.contains("order")) p.order = c["order"].get<long>();
    if (c.contains("bundle")) {
      const json& b = c["bundle"];
      if (b.contains("e")) p.e = b["e"].get<long>();
      if (b.contains("local")) p.local = local_from(b["local"]);
    }
    out.central = std::move(p);
  }
  return out;
}

json cycle_certificate_to_json(const CycleCertificate& c) {
  json out{{"exponent", c.exponent},
           {"product_is_one", c.product_is_one},
           {"log_sum", c.log_sum},
           {"corner_holds", c.corner_holds},
           {"infeasible", c.infeasible}};
  if (c.product) out["product"] = c.product->get_str();
  return out;
}

json labeling_to_json(const HyperbolicityLabeling& l) {
  json tags = json::object();
  for (const auto& [v, t] : l.tags) tags[std::to_string(v)] = to_string(t);
  json corners = json::array();
  for (const auto& c : l.corners)
    corners.push_back({{"contracting", c.far}, {"expanding", c.near}, {"at_center", c.near_is_center}});
  return {{"center", l.center}, {"tags", std::move(tags)}, {"corners", std::move(corners)}, {"legs", l.legs}};
}

json classification_to_json(const Classification& c) {
  json out{{"kind", to_string(c.kind)},
           {"shape", to_string(c.shape)},
           {"minimal_model", graph_to_json(c.minimal_model)},
           {"contracted", c.contracted}};
  if (c.cyclic) {
    const auto& v = *c.cyclic;
    json cq{{"m", v.m},
            {"q", v.q},
            {"chain", v.chain},
            {"case", std::string(1, v.germ_case.letter)},
            {"form", to_string(v.germ_case.kind)},
            {"k", v.germ_case.k},
            {"k_assumed", v.k_assumed},
            {"parameters", v.germ_case.parameters}};
    if (v.germ_case.u) cq["u"] = *v.germ_case.u;
    if (v.normalization_path) cq["normalization_path"] = *v.normalization_path;
    if (v.normal_form) cq["normal_form"] = jet_to_json(*v.normal_form);
    out["cyclic_quotient"] = std::move(cq);
  }
  if (c.weighted) {
    const auto& v = *c.weighted;
    json legs = json::array();
    for (const auto& l : v.legs) legs.push_back({l.m, l.q});
    json wh{{"base", orbifold_to_json(v.base, v.bundle)},
            {"geometry", to_string(v.geometry)},
            {"euler_characteristic", euler_characteristic(v.base).get_str()},
            {"orbidegree", v.orbidegree.get_str()},
            {"legs", std::move(legs)},
            {"finite_order", v.finite_order}};
    if (v.twist) wh["twist"] = *v.twist;
    out["weighted_homogeneous"] = std::move(wh);
  }
  return out;
}

json orbit_surface_to_json(const OrbitSurfaceVerdict& v) {
  return {{"kind", to_string(v.kind)}, {"kodaira_dimension", v.kodaira_dimension}, {"kahler", v.kahler}, {"note", v.note}};
}

json report_to_json(const Classification& c) {
  json prov = json::array();
  for (const auto& p : c.provenance) prov.push_back({{"step", p.step}, {"theorem", p.theorem}, {"quote", p.quote}});
  json residuals = json::object();
  for (const auto& [k, v] : c.residuals) residuals[k] = v;
  return {{"classification", classification_to_json(c)},
          {"orbit_surface", orbit_surface_to_json(classify_orbit_surface(c))},
          {"provenance", std::move(prov)},
          {"residuals", std::move(residuals)}};
}

json error_to_json(const Error& e) {
  json out{{"error", std::string(code_name(e.code()))}, {"message", e.what()}};
  if (const auto* cyc = dynamic_cast<const CycleObstructionError*>(&e)) {
    out["cycle"] = cyc->cycle;
    if (cyc->certificate) out["certificate"] = cycle_certificate_to_json(*cyc->certificate);
  }
  return out;
}

}  // namespace surfdyn::io
