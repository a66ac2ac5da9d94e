#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ja/agenda.hpp"
#include "ja/metrics.hpp"

namespace ja {

// Dispatch record for a rule invocation. Parameters are validated per rule
// before aggregation.
struct RuleSpec {
    std::string name; // majority|pbp|cbp|ecbp|quota|unanimity|mc|mcc|ra|leximax|
                      // med|young|dist|scoring|full|mrv
    std::optional<int> quota;
    std::set<std::size_t> premises;    // pbp
    std::set<std::size_t> conclusions; // cbp / ecbp
    Distance distance = Distance::Hamming;
    Norm norm = Norm::Sum;
    ScoringKind scoring = ScoringKind::Simple;
    enum class IdealClass { MajorityConsistent, Unanimous };
    IdealClass ideal = IdealClass::MajorityConsistent; // full
};

// Result of a partial rule: a possibly incomplete judgment set, flagged with
// its consistency against the constraints.
struct PartialResult {
    JudgmentSet set;
    bool consistent = true;
    std::string rule_name;
};

// --- Partial rules -----------------------------------------------------------
PartialResult rule_majority(const Profile& p);
PartialResult rule_cbp(const Profile& p, const std::set<std::size_t>& conclusions);
PartialResult rule_quota(const Profile& p, int k);
PartialResult rule_unanimity(const Profile& p);

// --- Irresolute rules --------------------------------------------------------
Outcome rule_pbp(const Profile& p, const std::set<std::size_t>& premises);
Outcome rule_extended_cbp(const Profile& p, const std::set<std::size_t>& conclusions,
                          Distance d, Norm norm, const Limits& limits);
Outcome rule_mc(const Profile& p);
Outcome rule_mcc(const Profile& p);
Outcome rule_ra(const Profile& p);
Outcome rule_leximax(const Profile& p);
Outcome rule_med(const Profile& p);
Outcome rule_young(const Profile& p, const Limits& limits);
std::pair<Outcome, int> rule_young_detail(const Profile& p, const Limits& limits);
Outcome rule_distance_based(const Profile& p, Distance d, Norm norm);
Outcome rule_scoring(const Profile& p, ScoringKind kind);
Outcome rule_full(const Profile& p, Distance d, Norm norm, RuleSpec::IdealClass ideal,
                  const Limits& limits);
Outcome rule_mrv(const Profile& p, Distance d, Norm norm);

// Maximal constraint-consistent subsets of the majoritarian set (inclusion),
// as partial judgment sets in canonical order.
std::vector<JudgmentSet> max_consistent_subsets(const Profile& p);

// Summed support of a complete set (the median-rule value).
long long med_value(const Profile& p, const JudgmentSet& j);

// Total profile score of a candidate under a scoring function.
long long scoring_value(const Profile& p, const JudgmentSet& j, ScoringKind kind);

bool rule_is_partial(const std::string& name);

// Dispatch an Outcome-valued rule; partial rules are rejected here.
Outcome apply_rule(const Profile& p, const RuleSpec& spec, const Limits& limits);

PartialResult apply_partial_rule(const Profile& p, const RuleSpec& spec);

// Optional deterministic tie-break: the canonically smallest outcome set.
Outcome tie_break(const Outcome& o);

} // namespace ja
