#include "ja/io.hpp"

#include <fstream>
#include <sstream>

#include "ja/errors.hpp"

namespace ja::io {

json judgment_to_json(const JudgmentSet& j, const Agenda& agenda) {
    json signs = json::array();
    json held = json::array();
    for (std::size_t i = 0; i < j.issue_count(); ++i) {
        signs.push_back(static_cast<int>(j.at(i)));
        if (j.at(i) != Sign::Absent)
            held.push_back(to_string(agenda.issue_formula(i, j.at(i))));
    }
    return json{{"signs", signs}, {"judgments", held}};
}

json agenda_to_json(const Agenda& agenda) {
    json pre = json::array();
    for (const auto& f : agenda.pre_agenda()) pre.push_back(to_string(f));
    json gamma = json::array();
    for (const auto& f : agenda.constraints()) gamma.push_back(to_string(f));
    return json{{"pre_agenda", pre}, {"constraints", gamma}};
}

json profile_to_json(const Profile& p) {
    json agents = json::array();
    for (const auto& j : p.agents()) {
        json row = json::array();
        for (std::size_t i = 0; i < j.issue_count(); ++i)
            row.push_back(static_cast<int>(j.at(i)));
        agents.push_back(row);
    }
    return json{{"agenda", agenda_to_json(p.agenda())}, {"agents", agents}};
}

json outcome_to_json(const Outcome& o, const Agenda& agenda) {
    json sets = json::array();
    for (const auto& j : o.sets) sets.push_back(judgment_to_json(j, agenda));
    json out{{"rule", o.rule_name}, {"sets", sets}, {"count", o.sets.size()}};
    if (!o.note.empty()) out["note"] = o.note;
    return out;
}

json partial_to_json(const PartialResult& r, const Agenda& agenda) {
    json out = judgment_to_json(r.set, agenda);
    out["rule"] = r.rule_name;
    out["consistent"] = r.consistent;
    out["complete"] = r.set.complete();
    return out;
}

json binary_to_json(const BinaryProblem& b) {
    json ic = json::array();
    for (const auto& f : b.integrity_constraints) ic.push_back(to_string(f));
    return json{{"variables", b.variables}, {"integrity_constraints", ic},
                {"ballots", b.ballots}};
}

namespace {

json signed_list(const std::vector<SignedJudgment>& list, const Agenda& agenda) {
    json out = json::array();
    for (const auto& s : list)
        out.push_back(to_string(agenda.issue_formula(s.issue, s.sign)));
    return out;
}

} // namespace

json agenda_report_to_json(const AgendaReport& r, const Agenda& agenda) {
    json mis = json::array();
    for (const auto& subset : r.minimal_inconsistent_subsets)
        mis.push_back(signed_list(subset, agenda));
    return json{{"closed_under_atoms", r.closed_under_atoms},
                {"minimal_inconsistent_subsets", mis},
                {"simple", r.simple},
                {"smallest_k_median", r.smallest_k_median},
                {"path_connected", r.path_connected}};
}

json domain_report_to_json(const RestrictedDomainReport& r, const Agenda& agenda) {
    json out{{"single_plateaued", r.single_plateaued},
             {"single_canyoned", r.single_canyoned},
             {"unidimensionally_aligned", r.unidimensionally_aligned},
             {"unidimensionally_ordered", r.unidimensionally_ordered}};
    if (r.plateau_order) out["plateau_order"] = signed_list(*r.plateau_order, agenda);
    if (r.canyon_order) out["canyon_order"] = signed_list(*r.canyon_order, agenda);
    if (r.aligned_agent_order) out["aligned_agent_order"] = *r.aligned_agent_order;
    if (r.ordered_agent_order) out["ordered_agent_order"] = *r.ordered_agent_order;
    return out;
}

json verdict_to_json(const PropertyVerdict& v) {
    json out{{"property", v.property}, {"rule", v.rule}, {"holds", v.holds_on_instance}};
    if (!v.search_bounds.empty()) out["search_bounds"] = v.search_bounds;
    if (v.witness) {
        json w{{"description", v.witness->description}};
        for (const auto& [label, p] : v.witness->profiles) w[label] = profile_to_json(p);
        for (const auto& [label, o] : v.witness->outcomes)
            w[label] = outcome_to_json(o, v.witness->profiles.front().second.agenda());
        if (v.witness->issue_split) {
            w["split_first"] = json(v.witness->issue_split->first);
            w["split_second"] = json(v.witness->issue_split->second);
        }
        if (v.witness->judgment) {
            const auto& agenda = v.witness->profiles.front().second.agenda();
            w["judgment"] =
                to_string(agenda.issue_formula(v.witness->judgment->first,
                                               v.witness->judgment->second));
        }
        if (v.witness->parameter) w["parameter"] = *v.witness->parameter;
        out["witness"] = w;
    }
    return out;
}

json comparison_to_json(const ComparisonResult& c, const RuleSpec& r1, const RuleSpec& r2) {
    const char* rel = nullptr;
    switch (c.relation) {
    case RuleRelation::Equal: rel = "equal"; break;
    case RuleRelation::Refines: rel = "refines"; break;
    case RuleRelation::RefinedBy: rel = "refined_by"; break;
    case RuleRelation::Different: rel = "different"; break;
    }
    json out{{"rule1", r1.name}, {"rule2", r2.name}, {"relation", rel}, {"bounds", c.bounds}};
    if (c.witness) {
        json w{{"description", c.witness->description}};
        for (const auto& [label, p] : c.witness->profiles) w[label] = profile_to_json(p);
        for (const auto& [label, o] : c.witness->outcomes)
            w[label] = outcome_to_json(o, c.witness->profiles.front().second.agenda());
        out["witness"] = w;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {

std::vector<Formula> parse_formula_list(const json& j, const char* what) {
    if (!j.is_array()) throw input_error(std::string(what) + " must be an array of formulas");
    std::vector<Formula> out;
    for (const auto& item : j) {
        if (!item.is_string()) throw input_error(std::string(what) + " entries must be strings");
        out.push_back(parse_formula(item.get<std::string>()));
    }
    return out;
}

} // namespace

Agenda agenda_from_json(const json& j, const Limits& limits) {
    if (!j.is_object() || !j.contains("pre_agenda"))
        throw input_error("agenda object needs a pre_agenda array");
    std::vector<Formula> pre = parse_formula_list(j.at("pre_agenda"), "pre_agenda");
    std::vector<Formula> gamma;
    if (j.contains("constraints")) gamma = parse_formula_list(j.at("constraints"), "constraints");
    return Agenda::make(std::move(pre), std::move(gamma), limits);
}

Profile profile_from_json(const json& j, ProfileMode mode, const Limits& limits) {
    if (!j.is_object() || !j.contains("agenda") || !j.contains("agents"))
        throw input_error("profile object needs agenda and agents");
    Agenda agenda = agenda_from_json(j.at("agenda"), limits);
    const json& agents_json = j.at("agents");
    if (!agents_json.is_array()) throw input_error("agents must be an array");
    std::vector<JudgmentSet> agents;
    for (const auto& row : agents_json) {
        if (!row.is_array() || row.size() != agenda.issue_count())
            throw input_error("each agent needs one verdict per issue");
        JudgmentSet set(agenda.issue_count());
        for (std::size_t i = 0; i < row.size(); ++i) {
            int v = row[i].get<int>();
            if (v != -1 && v != 0 && v != 1)
                throw input_error("verdicts are +1 (accept), -1 (reject) or 0 (absent)");
            set.set(i, static_cast<Sign>(v));
        }
        agents.push_back(std::move(set));
    }
    return Profile::make(std::move(agenda), std::move(agents), mode, limits);
}

VoteProfile votes_from_json(const json& j) {
    if (!j.is_object() || !j.contains("options") || !j.contains("ballots"))
        throw input_error("votes object needs options and ballots");
    VoteProfile v;
    v.options = j.at("options").get<std::vector<std::string>>();
    v.ballots = j.at("ballots").get<std::vector<std::vector<std::string>>>();
    v.validate();
    return v;
}

BinaryProblem binary_from_json(const json& j) {
    if (!j.is_object() || !j.contains("variables") || !j.contains("ballots"))
        throw input_error("binary problem needs variables and ballots");
    BinaryProblem b;
    b.variables = j.at("variables").get<std::vector<std::string>>();
    if (j.contains("integrity_constraints"))
        b.integrity_constraints =
            parse_formula_list(j.at("integrity_constraints"), "integrity_constraints");
    b.ballots = j.at("ballots").get<std::vector<std::vector<int>>>();
    return b;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw input_error("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

std::string file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open file: " + path);
    std::uint64_t hash = 1469598103934665603ull;
    char c;
    while (in.get(c)) {
        hash ^= static_cast<unsigned char>(c);
        hash *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << hash;
    return os.str();
}

} // namespace ja::io
