#pragma once

#include <string>

#include <json.hpp>

#include "ja/agenda.hpp"
#include "ja/agenda_analysis.hpp"
#include "ja/aggregators.hpp"
#include "ja/preference.hpp"
#include "ja/properties.hpp"

namespace ja::io {

using json = nlohmann::json;

// Serialization. Keys are emitted sorted (nlohmann object ordering), sets in
// canonical order, so identical inputs yield identical bytes.
json judgment_to_json(const JudgmentSet& j, const Agenda& agenda);
json agenda_to_json(const Agenda& agenda);
json profile_to_json(const Profile& p);
json outcome_to_json(const Outcome& o, const Agenda& agenda);
json partial_to_json(const PartialResult& r, const Agenda& agenda);
json binary_to_json(const BinaryProblem& b);
json agenda_report_to_json(const AgendaReport& r, const Agenda& agenda);
json domain_report_to_json(const RestrictedDomainReport& r, const Agenda& agenda);
json verdict_to_json(const PropertyVerdict& v);
json comparison_to_json(const ComparisonResult& c, const RuleSpec& r1, const RuleSpec& r2);

// Parsing. Throws input_error on malformed data.
Agenda agenda_from_json(const json& j, const Limits& limits);
Profile profile_from_json(const json& j, ProfileMode mode, const Limits& limits);
VoteProfile votes_from_json(const json& j);
BinaryProblem binary_from_json(const json& j);

json load_json_file(const std::string& path);

// Stable content digest (FNV-1a) used in run reports.
std::string file_digest(const std::string& path);

} // namespace ja::io
