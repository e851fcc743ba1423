#include "kleinian/json_io.hpp"

#include "kleinian/errors.hpp"

namespace kleinian {

json to_json(const Parameters& p) {
  return {{"beta", p.beta}, {"beta_prime", p.beta_prime}, {"gamma", p.gamma}};
}

json to_json(const ExtExp& e) { return e.tag(); }

json to_json(const GroupSpec& g) {
  json exps = json::array();
  for (const auto& e : g.exponents) exps.push_back(e.tag());
  return {{"schema", std::string(schema_name(g.schema))},
          {"exponents", exps},
          {"name", g.to_string()}};
}

json to_json(const Presentation& p) {
  json gens = json::array();
  for (char c : p.generators) gens.push_back(std::string(1, c));
  json rels = json::array();
  for (const auto& r : p.relators) {
    rels.push_back({{"word", r.word.to_string()}, {"exponent", r.exponent.tag()}});
  }
  return {{"generators", gens},
          {"relators", rels},
          {"form", p.form == PresentationForm::Kleinian ? "kleinian" : "abstract"},
          {"text", p.to_string()}};
}

json to_json(const FamilyInstance& inst) {
  json ints = json::object();
  for (const auto& [k, v] : inst.ints) ints[k] = v;
  json ups = json::object();
  for (const auto& [k, v] : inst.upoints) ups[k] = v.to_string();
  return {{"row", inst.id.label()},
          {"group", to_json(inst.group)},
          {"ints", ints},
          {"upoints", ups},
          {"params", to_json(inst.params)},
          {"swapped", inst.swapped},
          {"f_power", inst.f_power},
          {"g_power", inst.g_power}};
}

json to_json(const ClassificationResult& r) {
  json matches = json::array();
  for (const auto& m : r.matches) matches.push_back(to_json(m));
  json j = {{"verdict", std::string(verdict_name(r.verdict))}, {"matches", matches}};
  if (!r.reason.empty()) j["reason"] = r.reason;
  return j;
}

json to_json(const Mat2C& m) {
  json a = json::array();
  for (const auto& z : m.entries()) a.push_back({z.real(), z.imag()});
  return a;
}

json to_json(const MatrixPair& pair) {
  return {{"F", to_json(pair.F)},
          {"G", to_json(pair.G)},
          {"params", to_json(pair.params)},
          {"reducible", pair.reducible}};
}

json to_json(const VerificationReport& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks) {
    const char* kind = c.kind == RelatorCheck::Kind::Identity    ? "identity"
                       : c.kind == RelatorCheck::Kind::Parabolic ? "parabolic"
                                                                 : "loxodromic";
    checks.push_back({{"relator", c.label},
                      {"exponent", c.exponent.tag()},
                      {"kind", kind},
                      {"deviation", c.deviation},
                      {"scale", c.scale},
                      {"ok", c.ok}});
  }
  return {{"coverage", rep.full ? "full" : "partial"},
          {"checks", checks},
          {"max_deviation", rep.max_deviation},
          {"passed", rep.passed}};
}

json to_json(const HalfRoot& h) {
  json j = {{"h", to_json(h.h)},
            {"trace_hg", h.trace_hg},
            {"single_root", h.single_root},
            {"not_unique", h.not_unique}};
  if (h.rejected) {
    j["rejected"] = to_json(*h.rejected);
    j["rejected_trace_hg"] = h.rejected_trace_hg;
  }
  return j;
}

json to_json(const CensusEntry& e) {
  json exps = json::array();
  for (const auto& x : e.group.exponents) exps.push_back(x.tag());
  return {{"schema", std::string(schema_name(e.group.schema))},
          {"exponents", exps},
          {"compact", e.compact}};
}

json to_json(const VertexClass& v) { return v.to_string(); }

json to_json(const RowInfo& r) {
  return {{"row", r.id.label()},
          {"schema", std::string(schema_name(r.id.schema()))},
          {"int_slots", r.int_slots},
          {"upoint_slots", r.upoint_slots},
          {"beta", r.beta_cell},
          {"gamma", r.gamma_cell},
          {"beta_prime", r.beta_prime_cell},
          {"group", r.group_cell}};
}

Parameters parameters_from_json(const json& j) {
  return {j.at("beta").get<double>(), j.at("beta_prime").get<double>(),
          j.at("gamma").get<double>()};
}

Mat2C mat_from_json(const json& j) {
  auto z = [&](int i) { return cplx(j.at(i).at(0).get<double>(), j.at(i).at(1).get<double>()); };
  return {z(0), z(1), z(2), z(3)};
}

SingularGraph graph_from_json(const json& j) {
  SingularGraph g;
  try {
    for (const auto& v : j.at("vertices")) {
      g.vertices.push_back({v.at("id").get<int>(), v.value("fat", false)});
    }
    for (const auto& e : j.at("edges")) {
      const auto& l = e.at("label");
      ExtExp label = ExtExp::inf();
      if (l.is_number_integer()) {
        label = ExtExp::fin(l.get<int>());
      } else if (l == "inf") {
        label = ExtExp::inf();
      } else if (l == "barinf") {
        label = ExtExp::bar_inf();
      } else {
        throw GraphError("edge label must be an integer, \"inf\" or \"barinf\"");
      }
      g.edges.push_back({e.at("a").get<int>(), e.at("b").get<int>(), label,
                         e.value("fat", false)});
    }
  } catch (const json::exception& ex) {
    throw GraphError(std::string("malformed graph JSON: ") + ex.what());
  } catch (const InvalidExponent& ex) {
    throw GraphError(ex.what());
  }
  return g;
}

std::string dump_canonical(const json& j) { return j.dump(); }

}  // namespace kleinian
