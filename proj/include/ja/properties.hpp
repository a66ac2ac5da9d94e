#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ja/agenda.hpp"
#include "ja/aggregators.hpp"

namespace ja {

// Witness material for a failed property check; everything needed to replay
// the instance through the corresponding checker.
struct Witness {
    std::string description;
    std::vector<std::pair<std::string, Profile>> profiles;
    std::vector<std::pair<std::string, Outcome>> outcomes;
    std::optional<std::pair<std::set<std::size_t>, std::set<std::size_t>>> issue_split;
    std::optional<std::pair<std::size_t, Sign>> judgment;
    std::optional<int> parameter; // k for homogeneity, removals, ...
};

struct PropertyVerdict {
    std::string property;
    std::string rule;
    bool holds_on_instance = true;
    std::optional<Witness> witness;
    std::string search_bounds; // non-empty for bounded searches
};

// --- Instance checkers -------------------------------------------------------

PropertyVerdict check_majority_preservation(const RuleSpec& rule, const Profile& p,
                                            const Limits& limits);

enum class UnanimityMode { Weak, Strong };
PropertyVerdict check_unanimity(const RuleSpec& rule, const Profile& p, UnanimityMode mode,
                                const Limits& limits);

// Validates that `strengthened` differs from `p` on exactly one judgment in
// exactly one judgment set and returns the strengthened judgment.
std::pair<std::size_t, Sign> validate_strengthening(const Profile& p,
                                                    const Profile& strengthened);

PropertyVerdict check_monotonicity(const RuleSpec& rule, const Profile& p,
                                   const Profile& strengthened, const Limits& limits);

PropertyVerdict check_agenda_separability(const RuleSpec& rule, const Profile& p,
                                          const std::set<std::size_t>& part1,
                                          const std::set<std::size_t>& part2,
                                          const Limits& limits);

PropertyVerdict check_oas(const RuleSpec& rule, const Profile& p,
                          const std::set<std::size_t>& a1, const std::set<std::size_t>& a2,
                          const Limits& limits);

PropertyVerdict check_reinforcement(const RuleSpec& rule, const Profile& p1, const Profile& p2,
                                    const Limits& limits);

PropertyVerdict check_homogeneity(const RuleSpec& rule, const Profile& p, int k,
                                  const Limits& limits);

enum class SenVariant { Alpha, Beta };
PropertyVerdict check_sen(const RuleSpec& rule, const Profile& p,
                          const std::set<std::size_t>& subagenda, SenVariant variant,
                          const Limits& limits);

PropertyVerdict check_anonymity(const RuleSpec& rule, const Profile& p, const Limits& limits);

// --- Bounded instance streams ------------------------------------------------

struct SearchBounds {
    int max_atoms = 3;
    int max_issues = 4;
    int max_agents = 3;
    int random_instances = 200;
    std::uint64_t seed = 1;

    std::string describe() const;
};

// Deterministic exhaustive agenda family within the bounds: subsets of a
// fixed formula pool plus a few constrained shapes.
std::vector<Agenda> agenda_family(const SearchBounds& bounds, const Limits& limits);

// All multisets of codomain members with 1..max_agents agents.
void for_each_profile(const Agenda& agenda, const SearchBounds& bounds, const Limits& limits,
                      const std::function<bool(const Profile&)>& visit); // visit -> false stops

// Seeded random profiles over random family agendas.
void for_each_random_profile(const SearchBounds& bounds, const Limits& limits,
                             const std::function<bool(const Profile&)>& visit);

// --- Search and comparison ---------------------------------------------------

// Supported names: majority-preservation, unanimity-weak, unanimity-strong,
// monotonicity, agenda-separability, oas, reinforcement, homogeneity,
// sen-alpha, sen-beta, anonymity.
PropertyVerdict search_counterexample(const RuleSpec& rule, const std::string& property,
                                      const SearchBounds& bounds, const Limits& limits);

// Runs the named property check on one concrete instance.
PropertyVerdict check_property_on_instance(const RuleSpec& rule, const std::string& property,
                                           const std::vector<Profile>& inputs,
                                           const std::optional<std::pair<std::set<std::size_t>,
                                                                         std::set<std::size_t>>>&
                                               issue_split,
                                           std::optional<int> k, const Limits& limits);

enum class RuleRelation { Equal, Refines, RefinedBy, Different };

struct ComparisonResult {
    RuleRelation relation = RuleRelation::Equal;
    std::string bounds;
    std::optional<Witness> witness; // for Different
};

ComparisonResult compare_rules(const RuleSpec& rule1, const RuleSpec& rule2,
                               const SearchBounds& bounds, const Limits& limits);

} // namespace ja
