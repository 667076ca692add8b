#pragma once

#include <json.hpp>

#include "degreecalc/engine.hpp"
#include "degreecalc/intset.hpp"
#include "degreecalc/realiser.hpp"
#include "degreecalc/verify.hpp"

namespace degreecalc {

using Json = nlohmann::ordered_json;

// Wire formats. Object keys are emitted in a fixed order so files diff cleanly.
//
//   DegreeSet   {"kind":"finite","elements":[...]} | {"kind":"all_integers"}
//   trace entry {rule_id, paper_ref, inputs, produced_set, role, note}
//   Certificate {spec, target, M, N, params, derivation}

Json to_json(const DegreeSet& s);
Json to_json(const RuleApplication& r);
Json to_json(const std::vector<RuleApplication>& trace);
Json to_json(const SetBound& b);
Json to_json(const RealisationSpec& spec);
Json to_json(const Params& p);
Json to_json(const Certificate& c);
Json to_json(const Report& r);

// Readers throw MalformedCertificate on schema violations.
DegreeSet degree_set_from_json(const Json& j);
RuleApplication rule_from_json(const Json& j);
RealisationSpec spec_from_json(const Json& j);
Params params_from_json(const Json& j);
Certificate certificate_from_json(const Json& j);

}  // namespace degreecalc
