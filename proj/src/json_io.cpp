#include "degreecalc/json_io.hpp"

#include "degreecalc/dsl.hpp"

namespace degreecalc {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw MalformedCertificate(what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::vector<std::int64_t> int_list(const Json& j, const char* what) {
  if (!j.is_array()) malformed(std::string(what) + " must be an array of integers");
  std::vector<std::int64_t> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) malformed(std::string(what) + " must be an array of integers");
    out.push_back(v.get<std::int64_t>());
  }
  return out;
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) malformed(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

Expr expr_field(const Json& j, const char* key) {
  try {
    return parse_expr(string_field(j, key));
  } catch (const MalformedCertificate&) {
    throw;
  } catch (const Error& e) {
    malformed(std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace

Json to_json(const DegreeSet& s) {
  Json j;
  if (s.is_all_integers()) {
    j["kind"] = "all_integers";
  } else {
    j["kind"] = "finite";
    j["elements"] = std::vector<std::int64_t>(s.elements().begin(), s.elements().end());
  }
  return j;
}

DegreeSet degree_set_from_json(const Json& j) {
  const std::string kind = string_field(j, "kind");
  if (kind == "all_integers") return DegreeSet::all_integers();
  if (kind != "finite") malformed("unknown set kind '" + kind + "'");
  auto elems = int_list(field(j, "elements"), "elements");
  for (std::size_t i = 1; i < elems.size(); ++i)
    if (elems[i - 1] >= elems[i]) malformed("set elements must be strictly increasing");
  return DegreeSet::of(std::move(elems));
}

Json to_json(const RuleApplication& r) {
  Json j;
  j["rule_id"] = r.rule_id;
  j["paper_ref"] = r.paper_ref;
  j["inputs"] = r.inputs;
  j["produced_set"] = to_json(r.produced_set);
  j["role"] = r.role;
  j["note"] = r.note;
  return j;
}

Json to_json(const std::vector<RuleApplication>& trace) {
  Json j = Json::array();
  for (const auto& r : trace) j.push_back(to_json(r));
  return j;
}

RuleApplication rule_from_json(const Json& j) {
  RuleApplication r;
  r.rule_id = string_field(j, "rule_id");
  r.paper_ref = string_field(j, "paper_ref");
  const Json& in = field(j, "inputs");
  if (!in.is_array()) malformed("inputs must be an array of strings");
  for (const auto& s : in) {
    if (!s.is_string()) malformed("inputs must be an array of strings");
    r.inputs.push_back(s.get<std::string>());
  }
  r.produced_set = degree_set_from_json(field(j, "produced_set"));
  if (j.contains("role")) r.role = string_field(j, "role");
  if (j.contains("note")) r.note = string_field(j, "note");
  return r;
}

Json to_json(const SetBound& b) {
  Json j;
  j["lower"] = to_json(b.lower);
  j["upper"] = b.upper ? to_json(*b.upper) : Json(nullptr);
  j["exact"] = b.exact();
  j["trace"] = to_json(b.trace);
  j["warnings"] = b.warnings;
  return j;
}

Json to_json(const RealisationSpec& spec) {
  Json j;
  j["family"] = family_name(spec);
  if (const auto* s = std::get_if<SumsetFamily>(&spec)) {
    j["d"] = s->d;
    j["n"] = s->n;
    j["n_prime"] = s->nprime;
  } else if (const auto* s = std::get_if<ArithIntervals>(&spec)) {
    Json iv = Json::array();
    for (const auto& [b, c] : s->bounds) iv.push_back({b, c});
    j["intervals"] = iv;
  } else if (const auto* s = std::get_if<SubsetSums>(&spec)) {
    j["values"] = s->values;
  } else {
    j["values"] = std::get<Geometric>(spec).values;
  }
  return j;
}

RealisationSpec spec_from_json(const Json& j) {
  const std::string family = string_field(j, "family");
  if (family == "sumset")
    return SumsetFamily{int_list(field(j, "d"), "d"), int_list(field(j, "n"), "n"),
                        int_list(field(j, "n_prime"), "n_prime")};
  if (family == "arith") {
    const Json& iv = field(j, "intervals");
    if (!iv.is_array()) malformed("intervals must be an array of [b, c] pairs");
    ArithIntervals a;
    for (const auto& p : iv) {
      auto bc = int_list(p, "interval");
      if (bc.size() != 2) malformed("intervals must be an array of [b, c] pairs");
      a.bounds.emplace_back(bc[0], bc[1]);
    }
    return a;
  }
  if (family == "subset_sums") return SubsetSums{int_list(field(j, "values"), "values")};
  if (family == "geometric") return Geometric{int_list(field(j, "values"), "values")};
  malformed("unknown spec family '" + family + "'");
}

Json to_json(const Params& p) {
  Json j = Json::object();
  for (const auto& [k, v] : p)
    std::visit([&, key = k](const auto& x) { j[key] = x; }, v);
  return j;
}

Params params_from_json(const Json& j) {
  if (!j.is_object()) malformed("params must be an object");
  Params p;
  for (const auto& [k, v] : j.items()) {
    if (v.is_boolean())
      p[k] = v.get<bool>();
    else if (v.is_number_integer())
      p[k] = v.get<std::int64_t>();
    else if (v.is_array())
      p[k] = int_list(v, "param list");
    else
      malformed("param '" + k + "' must be a boolean, an integer or an integer list");
  }
  return p;
}

Json to_json(const Certificate& c) {
  Json j;
  j["spec"] = to_json(c.spec);
  j["target"] = to_json(c.target);
  j["M"] = print_expr(c.M);
  j["N"] = print_expr(c.N);
  j["params"] = to_json(c.params);
  j["derivation"] = to_json(c.derivation);
  return j;
}

Certificate certificate_from_json(const Json& j) {
  if (!j.is_object()) malformed("certificate must be a JSON object");
  RealisationSpec spec = spec_from_json(field(j, "spec"));
  DegreeSet target = degree_set_from_json(field(j, "target"));
  Expr m = expr_field(j, "M");
  Expr n = expr_field(j, "N");
  Params params = params_from_json(field(j, "params"));
  const Json& d = field(j, "derivation");
  if (!d.is_array()) malformed("derivation must be an array");
  std::vector<RuleApplication> derivation;
  for (const auto& r : d) derivation.push_back(rule_from_json(r));
  return Certificate{std::move(spec), std::move(target), std::move(m),
                     std::move(n),    std::move(params), std::move(derivation)};
}

Json to_json(const Report& r) {
  Json j;
  j["ok"] = r.ok;
  if (r.engine_set) {
    Json e;
    e["lower"] = to_json(r.engine_set->lower);
    e["upper"] = r.engine_set->upper ? to_json(*r.engine_set->upper) : Json(nullptr);
    e["exact"] = r.engine_set->exact();
    j["engine_set"] = e;
  } else {
    j["engine_set"] = nullptr;
  }
  j["oracle_set"] = r.oracle_set ? to_json(*r.oracle_set) : Json(nullptr);
  Json ms = Json::array();
  for (const auto& m : r.mismatches) ms.push_back({{"check", m.check}, {"detail", m.detail}});
  j["mismatches"] = ms;
  return j;
}

}  // namespace degreecalc
