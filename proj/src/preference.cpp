#include "ja/preference.hpp"

#include <algorithm>
#include <cctype>

#include "ja/errors.hpp"

namespace ja {

namespace {

bool valid_option_name(const std::string& s) {
    if (s.empty() || s[0] < 'a' || s[0] > 'z') return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

} // namespace

void VoteProfile::validate() const {
    if (options.size() < 2) throw input_error("need at least two options");
    std::set<std::string> seen;
    for (const auto& o : options) {
        if (!valid_option_name(o))
            throw input_error("option name does not fit the atom grammar: " + o);
        if (!seen.insert(o).second) throw input_error("duplicate option: " + o);
    }
    for (const auto& ballot : ballots) {
        if (ballot.size() != options.size())
            throw input_error("ballot is not a permutation of the options");
        std::set<std::string> b(ballot.begin(), ballot.end());
        if (b != seen) throw input_error("ballot is not a permutation of the options");
    }
}

GammaMode gamma_mode_from_name(const std::string& name) {
    if (name == "tr") return GammaMode::Tr;
    if (name == "w") return GammaMode::W;
    throw input_error("unknown gamma mode: " + name);
}

std::string preference_atom(const std::string& x, const std::string& y) {
    return x + "_P_" + y;
}

namespace {

// Literal for "x preferred to y" through the canonical orientation.
Formula preference_literal(const std::vector<std::string>& options, std::size_t x,
                           std::size_t y) {
    if (x < y) return Formula::atom(preference_atom(options[x], options[y]));
    return Formula::negation(Formula::atom(preference_atom(options[y], options[x])));
}

} // namespace

Agenda preference_agenda(const std::vector<std::string>& options, GammaMode mode,
                         const Limits& limits) {
    std::size_t m = options.size();
    if (m < 2) throw input_error("need at least two options");
    if (static_cast<int>(m * (m - 1) / 2) > limits.max_issues)
        throw cap_exceeded("preference agenda needs " + std::to_string(m * (m - 1) / 2) +
                           " issues, over the cap of " + std::to_string(limits.max_issues));

    std::vector<Formula> pre;
    std::set<std::string> atom_names;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            std::string name = preference_atom(options[i], options[j]);
            if (!atom_names.insert(name).second)
                throw input_error("option names collide in atom " + name);
            pre.push_back(Formula::atom(name));
        }

    std::vector<Formula> gamma;
    if (mode == GammaMode::Tr) {
        // (xPy & yPz) -> xPz over ordered triples of distinct options.
        for (std::size_t x = 0; x < m; ++x)
            for (std::size_t y = 0; y < m; ++y)
                for (std::size_t z = 0; z < m; ++z) {
                    if (x == y || y == z || x == z) continue;
                    Formula antecedent =
                        Formula::binary(Formula::Kind::And, preference_literal(options, x, y),
                                        preference_literal(options, y, z));
                    gamma.push_back(Formula::binary(Formula::Kind::Implies, antecedent,
                                                    preference_literal(options, x, z)));
                }
    } else {
        // Some option beats every other.
        Formula disjunction;
        for (std::size_t x = 0; x < m; ++x) {
            Formula conj;
            for (std::size_t y = 0; y < m; ++y) {
                if (x == y) continue;
                Formula lit = preference_literal(options, x, y);
                conj = conj.valid() ? Formula::binary(Formula::Kind::And, conj, lit) : lit;
            }
            disjunction =
                disjunction.valid() ? Formula::binary(Formula::Kind::Or, disjunction, conj) : conj;
        }
        gamma.push_back(disjunction);
    }
    return Agenda::make(std::move(pre), std::move(gamma), limits);
}

Profile votes_to_profile(const VoteProfile& v, GammaMode mode, const Limits& limits) {
    v.validate();
    Agenda agenda = preference_agenda(v.options, mode, limits);
    std::size_t m = v.options.size();

    std::vector<JudgmentSet> agents;
    for (const auto& ballot : v.ballots) {
        std::map<std::string, std::size_t> rank;
        for (std::size_t r = 0; r < ballot.size(); ++r) rank[ballot[r]] = r;
        JudgmentSet j(agenda.issue_count());
        std::size_t issue = 0;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t k = i + 1; k < m; ++k) {
                bool prefers = rank[v.options[i]] < rank[v.options[k]];
                j.set(issue++, prefers ? Sign::Accept : Sign::Reject);
            }
        agents.push_back(std::move(j));
    }
    return Profile::make(std::move(agenda), std::move(agents), ProfileMode::Strict, limits);
}

MajorityGraph majority_graph(const VoteProfile& v) {
    v.validate();
    MajorityGraph g;
    g.nodes = v.options;
    std::size_t m = v.options.size();
    std::size_t n = v.ballots.size();

    std::vector<std::map<std::string, std::size_t>> ranks;
    for (const auto& ballot : v.ballots) {
        std::map<std::string, std::size_t> rank;
        for (std::size_t r = 0; r < ballot.size(); ++r) rank[ballot[r]] = r;
        ranks.push_back(std::move(rank));
    }

    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (i == j) continue;
            std::size_t above = 0;
            for (const auto& rank : ranks)
                if (rank.at(v.options[i]) < rank.at(v.options[j])) ++above;
            if (2 * above > n) g.edges.push_back({v.options[i], v.options[j]});
        }
    return g;
}

std::optional<std::string> condorcet_winner(const VoteProfile& v) {
    MajorityGraph g = majority_graph(v);
    for (const auto& x : g.nodes) {
        bool incoming = false;
        std::size_t outgoing = 0;
        for (const auto& [from, to] : g.edges) {
            if (to == x) incoming = true;
            if (from == x) ++outgoing;
        }
        if (!incoming && outgoing == g.nodes.size() - 1) return x;
    }
    return std::nullopt;
}

BordaResult borda(const VoteProfile& v) {
    v.validate();
    BordaResult result;
    std::size_t m = v.options.size();
    for (const auto& o : v.options) result.scores[o] = 0;
    for (const auto& ballot : v.ballots)
        for (std::size_t r = 0; r < ballot.size(); ++r)
            result.scores[ballot[r]] += static_cast<int>(m - 1 - r);
    int best = 0;
    for (const auto& [o, s] : result.scores) best = std::max(best, s);
    for (const auto& [o, s] : result.scores)
        if (s == best) result.winners.insert(o);
    return result;
}

std::set<std::string> winners(const JudgmentSet& j, const std::vector<std::string>& options) {
    std::size_t m = options.size();
    if (j.issue_count() != m * (m - 1) / 2 || !j.complete())
        throw precondition_error("winner extraction needs a complete preference judgment set");
    // dominated[x] once some y P x is held.
    std::vector<bool> dominated(m, false);
    std::size_t issue = 0;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = i + 1; k < m; ++k) {
            Sign s = j.at(issue++);
            if (s == Sign::Accept) dominated[k] = true;
            else dominated[i] = true;
        }
    std::set<std::string> out;
    for (std::size_t x = 0; x < m; ++x)
        if (!dominated[x]) out.insert(options[x]);
    return out;
}

std::set<std::string> vote_via_ja(const VoteProfile& v, const RuleSpec& rule, GammaMode mode,
                                  const Limits& limits) {
    Profile p = votes_to_profile(v, mode, limits);
    Outcome outcome = apply_rule(p, rule, limits);
    std::set<std::string> out;
    for (const auto& j : outcome.sets) {
        auto w = winners(j, v.options);
        out.insert(w.begin(), w.end());
    }
    return out;
}

bool check_generalization(const VoteProfile& v, const RuleSpec& rule, ReferenceMethod reference,
                          GammaMode mode, const Limits& limits) {
    std::set<std::string> reference_winners;
    if (reference == ReferenceMethod::Condorcet) {
        auto w = condorcet_winner(v);
        if (!w) return true; // comparison defined only when a winner exists
        reference_winners = {*w};
    } else {
        reference_winners = borda(v).winners;
    }
    return vote_via_ja(v, rule, mode, limits) == reference_winners;
}

} // namespace ja
