#include "sdg/json_io.hpp"

#include <stdexcept>

namespace sdg {

using nlohmann::json;

json to_json(const Rational& r) {
  return json{{"num", num_str(r)}, {"den", den_str(r)}};
}

Rational rational_from_json(const json& j) {
  Integer num(j.at("num").get<std::string>());
  Integer den(j.at("den").get<std::string>());
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  return Rational(num, den);
}

json to_json(const SmallObject& o) {
  json pairs = json::array();
  for (auto [a, b] : o.forbidden_pairs()) pairs.push_back({a, b});
  return json{{"n", o.gens()}, {"forbidden", pairs}, {"zeroed", o.zeroed_indices()}};
}

SmallObject small_object_from_json(const json& j) {
  std::vector<std::pair<int, int>> pairs;
  for (const auto& p : j.at("forbidden"))
    pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
  std::vector<int> zeroed;
  for (const auto& z : j.at("zeroed")) zeroed.push_back(z.get<int>());
  return SmallObject(j.at("n").get<int>(), pairs, zeroed);
}

json to_json(const WeilPoly& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms())
    terms.push_back({{"monomial", m.indices()}, {"coeff", to_json(c)}});
  return json{{"object", to_json(p.object())}, {"terms", terms}};
}

WeilPoly weil_poly_from_json(const json& j) {
  WeilPoly p(small_object_from_json(j.at("object")));
  for (const auto& t : j.at("terms")) {
    Monomial m = Monomial::one();
    for (const auto& i : t.at("monomial")) m = m.united(Monomial::var(i.get<int>()));
    p.add_term(m, rational_from_json(t.at("coeff")));
  }
  return p;
}

json to_json(const PolyMap& f) {
  json coords = json::array();
  for (const auto& c : f.coords()) {
    json terms = json::array();
    for (const auto& [m, v] : c.terms())
      terms.push_back({{"monomial", m.indices()}, {"coeff", to_json(v)}});
    coords.push_back(terms);
  }
  return json{{"source", to_json(f.source())},
              {"target", to_json(f.target())},
              {"coords", coords}};
}

PolyMap poly_map_from_json(const json& j) {
  SmallObject src = small_object_from_json(j.at("source"));
  SmallObject tgt = small_object_from_json(j.at("target"));
  std::vector<WeilPoly> coords;
  for (const auto& cj : j.at("coords")) {
    WeilPoly c(src);
    for (const auto& t : cj) {
      Monomial m = Monomial::one();
      for (const auto& i : t.at("monomial")) m = m.united(Monomial::var(i.get<int>()));
      c.add_term(m, rational_from_json(t.at("coeff")));
    }
    coords.push_back(std::move(c));
  }
  return PolyMap(src, tgt, std::move(coords));
}

json to_json(const Diagram& d) {
  json legs = json::array();
  for (const auto& leg : d.legs)
    legs.push_back({{"object", to_json(leg.object)}, {"map", to_json(leg.to_apex)}});
  json edges = json::array();
  for (const auto& e : d.edges)
    edges.push_back({{"object", to_json(e.object)},
                     {"a", e.a},
                     {"b", e.b},
                     {"g", to_json(e.to_a)},
                     {"h", to_json(e.to_b)}});
  return json{{"schema", "sdg.diagram/1"},
              {"apex", to_json(d.apex)},
              {"legs", legs},
              {"edges", edges}};
}

Diagram diagram_from_json(const json& j) {
  Diagram d;
  d.apex = small_object_from_json(j.at("apex"));
  for (const auto& lj : j.at("legs"))
    d.legs.push_back({small_object_from_json(lj.at("object")),
                      poly_map_from_json(lj.at("map"))});
  for (const auto& ej : j.at("edges"))
    d.edges.push_back({small_object_from_json(ej.at("object")), ej.at("a").get<int>(),
                       ej.at("b").get<int>(), poly_map_from_json(ej.at("g")),
                       poly_map_from_json(ej.at("h"))});
  return d;
}

json to_json(const ColimitReport& r) {
  json kernel = json::array();
  for (const auto& k : r.kernel_basis) kernel.push_back(to_json(k));
  return json{{"schema", "sdg.colimit_report/1"},
              {"apex_dim", r.apex_dim},
              {"compat_dim", r.compat_dim},
              {"rank", r.rank},
              {"kernel_dim", r.kernel_dim},
              {"exists_for_all", r.exists_for_all},
              {"unique", r.unique},
              {"quasi_colimit", r.quasi_colimit()},
              {"kernel_basis", kernel}};
}

json trace_to_json(const ProofTrace& t) {
  json entries = json::array();
  for (const auto& e : t.entries) {
    json coords = json::array();
    for (int p = 1; p <= e.output.dim(); ++p) {
      const WeilPoly& c = e.output.coord(p);
      if (c.is_zero()) continue;
      json terms = json::array();
      for (const auto& [m, v] : c.terms())
        terms.push_back({{"monomial", m.indices()}, {"coeff", to_json(v)}});
      coords.push_back({{"position", p}, {"terms", terms}});
    }
    entries.push_back({{"tag", e.tag},
                       {"operation", e.operation},
                       {"inputs", e.inputs},
                       {"certificate", e.certificate_ok ? "ok" : "FAILED"},
                       {"output", coords}});
  }
  json vectors = json::array();
  for (std::size_t k = 0; k < t.end_vectors.size(); ++k) {
    json entriesk = json::array();
    for (const auto& [pos, c] : t.end_vectors[k])
      entriesk.push_back({{"position", pos}, {"coeff", to_json(c)}});
    vectors.push_back({{"step", k + 1},
                       {"tag", "t3.2." + std::to_string(7 * k + 7)},
                       {"vector", entriesk}});
  }
  return json{{"schema", "sdg.trace/1"},
              {"entries", entries},
              {"end_vectors", vectors},
              {"total_zero", t.total_zero},
              {"final_tag", "t3.2.85"}};
}

json audit_to_json(const AuditResult& a) {
  json edges = json::array();
  for (const auto& e : a.edges)
    edges.push_back({{"pair", e.edge.pair},
                     {"u", e.edge.u},
                     {"v", e.edge.v},
                     {"holds", e.holds},
                     {"witness", e.witness}});
  return json{{"schema", "sdg.audit/1"},
              {"injections_well_defined", a.injections_well_defined},
              {"injection_defects", a.injection_defects},
              {"edges", edges},
              {"all_edges_hold", a.all_edges_hold},
              {"report", to_json(a.report)},
              {"candidate_kernel_element", a.candidate_kernel_element},
              {"candidate_kernel_element_vanishes", a.candidate_kernel_element_vanishes},
              {"mediate_trials", a.mediate_trials},
              {"mediate_failures", a.mediate_failures},
              {"notes", a.notes}};
}

}  // namespace sdg
