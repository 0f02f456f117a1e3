#pragma once

#include <json.hpp>
#include <string>

#include "surfdyn/classify/classify.hpp"
#include "surfdyn/normal_forms/koenigs.hpp"
#include "surfdyn/normal_forms/poincare_dulac.hpp"

namespace surfdyn::io {

using nlohmann::json;

/// Germ input: a jet with an optional group and twist.
struct GermDocument {
  AnyJet jet;
  std::optional<DiagonalGroup> group;
  std::optional<long> k_twist;
};

json scalar_to_json(const ExactScalar& x);
json scalar_to_json(const FloatScalar& x);

template <Scalar F>
json jet_to_json(const Jet<F>& j) {
  json coords = json::array();
  for (int k = 0; k < j.dimension(); ++k) {
    json terms = json::array();
    for (int n = 1; n < j.basis().size(); ++n) {
      if (exactly_zero(j.at(k, n))) continue;
      json t = scalar_to_json(j.at(k, n));
      t["exponents"] = j.basis()[n].exponents();
      terms.push_back(std::move(t));
    }
    coords.push_back(std::move(terms));
  }
  return {{"dimension", j.dimension()}, {"order", j.order()}, {"coordinates", std::move(coords)}};
}

json jet_to_json(const AnyJet& j);
/// Exact unless some coefficient is given as {re, im}.
AnyJet jet_from_json(const json& doc);

json group_to_json(const DiagonalGroup& g);
DiagonalGroup group_from_json(const json& doc);

/// Accepts {"jet", "group"?, "k_twist"?} or a bare jet.
GermDocument germ_from_json(const json& doc);

json modulus_to_json(const Modulus& m);
Modulus modulus_from_json(const json& doc);

json graph_to_json(const DualGraph& g);
DualGraph graph_from_json(const json& doc);

json orbifold_to_json(const OrbifoldSurface& s, const std::optional<OrbibundleData>& bundle = std::nullopt);
OrbifoldSurface orbifold_from_json(const json& doc);
/// The "bundle" member of an orbifold document, when present.
std::optional<OrbibundleData> orbibundle_from_json(const json& doc);

AdmissibleDocument admissible_from_json(const json& doc);

json cycle_certificate_to_json(const CycleCertificate& c);
json labeling_to_json(const HyperbolicityLabeling& l);
json classification_to_json(const Classification& c);
json orbit_surface_to_json(const OrbitSurfaceVerdict& v);
/// {classification, orbit_surface, provenance, residuals}.
json report_to_json(const Classification& c);

template <Scalar F>
json normal_form_to_json(const NormalFormResult<F>& r) {
  json out{{"normal_form", jet_to_json(r.normal_form)},
           {"conjugacy", jet_to_json(r.full_conjugacy)},
           {"path", to_string(r.path)},
           {"group", group_to_json(r.group)},
           {"k_twist", r.k_twist},
           {"residuals",
            {{"conjugacy", r.residual_norm},
             {"normal_form_commutation", r.normal_form_commutation},
             {"conjugacy_commutation", r.conjugacy_commutation}}}};
  if (r.prenormalization) {
    json rows = json::array();
    for (int i = 0; i < r.prenormalization->rows(); ++i) {
      json row = json::array();
      for (int j = 0; j < r.prenormalization->cols(); ++j) row.push_back(scalar_to_json((*r.prenormalization)(i, j)));
      rows.push_back(std::move(row));
    }
    out["prenormalization"] = std::move(rows);
  }
  if (r.resonance) {
    json res = json::array();
    for (const auto& list : r.resonance->resonant) {
      json l = json::array();
      for (const auto& n : list) l.push_back(n.exponents());
      res.push_back(std::move(l));
    }
    out["resonances"] = {{"monomials", std::move(res)}, {"exhaustive", r.resonance->exhaustive}};
  }
  return out;
}

template <Scalar F>
json koenigs_to_json(const KoenigsResult<F>& r) {
  return {{"linearization", jet_to_json(r.linearization)},
          {"alpha", scalar_to_json(r.alpha)},
          {"depth", r.depth},
          {"extrapolated", r.extrapolated},
          {"residual", r.residual}};
}

json error_to_json(const Error& e);

}  // namespace surfdyn::io
