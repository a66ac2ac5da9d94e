#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ja/agenda.hpp"
#include "ja/aggregators.hpp"

namespace ja {

// Voting profile: total strict orders over a fixed option list.
struct VoteProfile {
    std::vector<std::string> options;
    std::vector<std::vector<std::string>> ballots; // each a permutation of options

    void validate() const; // throws input_error
};

enum class GammaMode { Tr, W };
GammaMode gamma_mode_from_name(const std::string& name); // tr|w

struct MajorityGraph {
    std::vector<std::string> nodes;
    std::vector<std::pair<std::string, std::string>> edges; // (x, y): majority ranks x above y
};

// Pairwise preference agenda: one atom per unordered option pair, oriented by
// option list order, with transitivity (Tr) or undominated-winner (W)
// constraints.
Agenda preference_agenda(const std::vector<std::string>& options, GammaMode mode,
                         const Limits& limits);

// Canonical atom name for "x preferred to y" with x earlier in the list.
std::string preference_atom(const std::string& x, const std::string& y);

Profile votes_to_profile(const VoteProfile& v, GammaMode mode, const Limits& limits);

MajorityGraph majority_graph(const VoteProfile& v);
std::optional<std::string> condorcet_winner(const VoteProfile& v);

struct BordaResult {
    std::map<std::string, int> scores;
    std::set<std::string> winners;
};
BordaResult borda(const VoteProfile& v);

// Undominated options of the order a complete preference judgment set encodes.
std::set<std::string> winners(const JudgmentSet& j, const std::vector<std::string>& options);

// Union of winners over the outcome of a judgment rule on the translated
// profile.
std::set<std::string> vote_via_ja(const VoteProfile& v, const RuleSpec& rule, GammaMode mode,
                                  const Limits& limits);

enum class ReferenceMethod { Condorcet, Borda };

// Compares via-judgment winners with the reference method on this instance;
// the Condorcet comparison is skipped (true) when no Condorcet winner exists.
bool check_generalization(const VoteProfile& v, const RuleSpec& rule, ReferenceMethod reference,
                          GammaMode mode, const Limits& limits);

} // namespace ja
