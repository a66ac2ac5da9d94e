#include "ja/aggregators.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <limits>
#include <map>

#include "ja/errors.hpp"
#include "ja/parallel.hpp"

namespace ja {

namespace {

constexpr long long kExcluded = std::numeric_limits<long long>::max();

void require_strict(const Profile& p, const char* rule) {
    if (p.mode() != ProfileMode::Strict)
        throw precondition_error(std::string(rule) + " needs a strict-mode profile");
}

void require_nonempty(const Profile& p) {
    if (p.agent_count() == 0) throw precondition_error("empty profile");
}

std::uint32_t full_mask(std::size_t m) { return m >= 32 ? ~0u : (1u << m) - 1; }

Outcome finish(std::vector<std::uint32_t> masks, const Agenda& agenda, std::string name,
               std::string note = {}) {
    std::vector<JudgmentSet> sets;
    sets.reserve(masks.size());
    for (std::uint32_t mask : masks) sets.push_back(agenda.set_from_mask(mask));
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    if (sets.empty()) throw error("aggregation produced an empty outcome");
    return Outcome{std::move(sets), std::move(name), std::move(note)};
}

std::vector<std::uint32_t> ext_masks(const Agenda& agenda, std::uint32_t decided,
                                     std::uint32_t accept) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t mask : agenda.codomain_masks())
        if ((mask & decided) == (accept & decided)) out.push_back(mask);
    return out;
}

void validate_issue_subset(const Profile& p, const std::set<std::size_t>& issues,
                           const char* what, bool strict_subset) {
    std::size_t m = p.agenda().issue_count();
    if (issues.empty()) throw precondition_error(std::string(what) + " set is empty");
    for (std::size_t i : issues)
        if (i >= m) throw precondition_error(std::string(what) + " index out of range");
    if (strict_subset && issues.size() >= m)
        throw precondition_error(std::string(what) + " set must be a strict subset of the issues");
}

// Agent-wise distance between a (possibly partial, open mode) judgment set
// and a rational candidate mask.
struct AgentView {
    std::uint32_t decided;
    std::uint32_t accept;
    bool complete;
};

AgentView view_of(const JudgmentSet& j) {
    return {j.decided_mask(), j.accept_mask(), j.complete()};
}

long long agent_distance(const AgentView& a, std::uint32_t candidate, Distance d,
                         const AgendaGraph* graph, std::uint32_t m_bits) {
    switch (d) {
    case Distance::Drastic:
        return (a.complete && a.accept == candidate) ? 0 : 1;
    case Distance::Hamming:
        return std::popcount((a.accept ^ candidate) & m_bits);
    case Distance::Geodesic: {
        int va = graph->vertex_of(a.accept);
        int vb = graph->vertex_of(candidate);
        if (va < 0 || vb < 0) throw precondition_error("geodesic distance on irrational set");
        int dist = graph->dist[va][vb];
        if (dist < 0)
            throw precondition_error("geodesic rule needs all agents in one graph component");
        return dist;
    }
    }
    throw error("bad distance");
}

} // namespace

// ---------------------------------------------------------------------------
// Partial rules
// ---------------------------------------------------------------------------

PartialResult rule_majority(const Profile& p) {
    auto [set, consistent] = majoritarian_set(p);
    return {std::move(set), consistent, "majority"};
}

PartialResult rule_cbp(const Profile& p, const std::set<std::size_t>& conclusions) {
    require_strict(p, "cbp");
    validate_issue_subset(p, conclusions, "conclusion", false);
    auto [set, consistent] = majoritarian_set(restrict_profile(p, conclusions));
    return {std::move(set), consistent, "cbp"};
}

PartialResult rule_quota(const Profile& p, int k) {
    int n = static_cast<int>(p.agent_count());
    if (k <= 0 || k > n) throw precondition_error("quota must satisfy 0 < k <= n");
    auto counts = support_counts(p);
    JudgmentSet set(p.agenda().issue_count());
    for (std::size_t i = 0; i < counts.size(); ++i) {
        // Below the majority threshold both signs of an issue can clear the
        // quota; that collection is no longer a verdict per issue.
        if (counts[i][1] > k && counts[i][0] > k)
            throw precondition_error("quota " + std::to_string(k) +
                                     " admits both signs of issue " + std::to_string(i));
        if (counts[i][1] > k) set.set(i, Sign::Accept);
        else if (counts[i][0] > k) set.set(i, Sign::Reject);
    }
    bool consistent = p.agenda().partial_consistent(set.decided_mask(), set.accept_mask());
    return {std::move(set), consistent, "quota"};
}

PartialResult rule_unanimity(const Profile& p) {
    JudgmentSet set = unanimity_set(p);
    bool consistent = p.agenda().partial_consistent(set.decided_mask(), set.accept_mask());
    return {std::move(set), consistent, "unanimity"};
}

// ---------------------------------------------------------------------------
// Premise-based and conclusion-based procedures
// ---------------------------------------------------------------------------

Outcome rule_pbp(const Profile& p, const std::set<std::size_t>& premises) {
    require_strict(p, "pbp");
    require_nonempty(p);
    validate_issue_subset(p, premises, "premise", true);
    auto [mset, consistent] = majoritarian_set(restrict_profile(p, premises));
    if (!consistent) throw precondition_error("premise majority inconsistent");
    return finish(ext_masks(p.agenda(), mset.decided_mask(), mset.accept_mask()), p.agenda(),
                  "pbp");
}

Outcome rule_extended_cbp(const Profile& p, const std::set<std::size_t>& conclusions,
                          Distance d, Norm norm, const Limits& limits) {
    require_strict(p, "ecbp");
    require_nonempty(p);
    validate_issue_subset(p, conclusions, "conclusion", false);
    if (d == Distance::Geodesic)
        throw precondition_error("the geodesic distance cannot compare irrational sets");

    // Step 1: aggregate the conclusions with the distance-based rule.
    Profile sub = project_profile(p, conclusions, limits);
    Outcome step1 = rule_distance_based(sub, d, norm);

    // Step 2: add the disjunction of the step-1 sets to the constraints and
    // re-aggregate the full profile against the shrunken codomain, comparing
    // with agents by raw distance (agents may be irrational for the new
    // constraints).
    std::vector<std::size_t> order(conclusions.begin(), conclusions.end());
    Formula disjunction;
    for (const auto& s : step1.sets) {
        Formula conj;
        for (std::size_t t = 0; t < order.size(); ++t) {
            Formula lit = p.agenda().issue_formula(order[t], s.at(t));
            conj = conj.valid() ? Formula::binary(Formula::Kind::And, conj, lit) : lit;
        }
        disjunction =
            disjunction.valid() ? Formula::binary(Formula::Kind::Or, disjunction, conj) : conj;
    }
    std::vector<Formula> gamma = p.agenda().constraints();
    gamma.push_back(disjunction);
    Agenda narrowed = Agenda::make_relaxed(p.agenda().pre_agenda(), std::move(gamma), limits);

    std::uint32_t m_bits = full_mask(p.agenda().issue_count());
    std::vector<AgentView> agents;
    for (const auto& j : p.agents()) agents.push_back(view_of(j));
    const auto& candidates = narrowed.codomain_masks();
    if (candidates.empty()) throw error("extended constraints admit no rational set");
    auto score = [&](std::uint64_t idx) {
        std::uint32_t candidate = candidates[idx];
        long long acc = 0;
        for (const auto& a : agents) {
            long long v = agent_distance(a, candidate, d, nullptr, m_bits);
            acc = norm == Norm::Sum ? acc + v : std::max(acc, v);
        }
        return acc;
    };
    auto [best, winners] = par::argmin<long long>(candidates.size(), score);
    (void)best;
    std::vector<std::uint32_t> masks;
    for (auto idx : winners) masks.push_back(candidates[idx]);
    return finish(std::move(masks), p.agenda(), "ecbp");
}

// ---------------------------------------------------------------------------
// Majority-preserving family
// ---------------------------------------------------------------------------

namespace {

// For each codomain member, the subset of the majoritarian set it retains,
// as a bitmask over decided majority issues.
std::vector<std::uint32_t> majority_agreement_masks(const Profile& p, std::uint32_t& mdec_out,
                                                    std::uint32_t& macc_out) {
    auto [mset, consistent] = majoritarian_set(p);
    (void)consistent;
    std::uint32_t mdec = mset.decided_mask();
    std::uint32_t macc = mset.accept_mask();
    mdec_out = mdec;
    macc_out = macc;
    const auto& cod = p.agenda().codomain_masks();
    std::vector<std::uint32_t> agree(cod.size());
    for (std::size_t i = 0; i < cod.size(); ++i) agree[i] = ~(cod[i] ^ macc) & mdec;
    return agree;
}

std::vector<std::uint32_t> inclusion_maximal(std::vector<std::uint32_t> masks) {
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    std::vector<std::uint32_t> maximal;
    for (std::uint32_t a : masks) {
        bool dominated = false;
        for (std::uint32_t b : masks)
            if (a != b && (a & b) == a) {
                dominated = true;
                break;
            }
        if (!dominated) maximal.push_back(a);
    }
    return maximal;
}

} // namespace

std::vector<JudgmentSet> max_consistent_subsets(const Profile& p) {
    require_nonempty(p);
    std::uint32_t mdec = 0, macc = 0;
    auto agree = majority_agreement_masks(p, mdec, macc);
    auto maximal = inclusion_maximal(agree);
    std::vector<JudgmentSet> out;
    std::size_t m = p.agenda().issue_count();
    for (std::uint32_t mask : maximal) {
        JudgmentSet s(m);
        for (std::size_t i = 0; i < m; ++i)
            if ((mask >> i) & 1u)
                s.set(i, ((macc >> i) & 1u) ? Sign::Accept : Sign::Reject);
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Outcome rule_mc(const Profile& p) {
    require_nonempty(p);
    std::uint32_t mdec = 0, macc = 0;
    auto agree = majority_agreement_masks(p, mdec, macc);
    auto maximal = inclusion_maximal(agree);
    const auto& cod = p.agenda().codomain_masks();
    std::vector<std::uint32_t> winners;
    for (std::size_t i = 0; i < cod.size(); ++i)
        if (std::find(maximal.begin(), maximal.end(), agree[i]) != maximal.end())
            winners.push_back(cod[i]);
    return finish(std::move(winners), p.agenda(), "mc");
}

Outcome rule_mcc(const Profile& p) {
    require_nonempty(p);
    std::uint32_t mdec = 0, macc = 0;
    auto agree = majority_agreement_masks(p, mdec, macc);
    int best = -1;
    for (std::uint32_t a : agree) best = std::max(best, std::popcount(a));
    const auto& cod = p.agenda().codomain_masks();
    std::vector<std::uint32_t> winners;
    for (std::size_t i = 0; i < cod.size(); ++i)
        if (std::popcount(agree[i]) == best) winners.push_back(cod[i]);
    return finish(std::move(winners), p.agenda(), "mcc");
}

namespace {

struct PartialState {
    std::uint32_t decided;
    std::uint32_t accept;
    friend auto operator<=>(const PartialState&, const PartialState&) = default;
};

// All maximal consistent extensions of `state` inside `block` (judgments as
// (issue, sign) pairs). Equivalent to running the greedy acceptance loop over
// every permutation of the equal-support block.
void maximal_block_extensions(const Agenda& agenda, const PartialState& state,
                              const std::vector<std::pair<std::size_t, Sign>>& block,
                              std::set<PartialState>& out) {
    // Fast path: the whole block fits.
    PartialState whole = state;
    bool whole_ok = true;
    for (auto [issue, sign] : block) {
        std::uint32_t bit = 1u << issue;
        std::uint32_t want = sign == Sign::Accept ? bit : 0;
        if ((whole.decided & bit) && (whole.accept & bit) != want) {
            whole_ok = false;
            break;
        }
        whole.decided |= bit;
        whole.accept = (whole.accept & ~bit) | want;
    }
    if (whole_ok && agenda.partial_consistent(whole.decided, whole.accept)) {
        out.insert(whole);
        return;
    }

    // Branch over include/exclude per element, keeping consistent states;
    // maximality is enforced by post-filtering.
    std::set<PartialState> states{state};
    for (auto [issue, sign] : block) {
        std::uint32_t bit = 1u << issue;
        std::uint32_t want = sign == Sign::Accept ? bit : 0;
        std::set<PartialState> next;
        for (const auto& s : states) {
            next.insert(s); // exclude
            if ((s.decided & bit) && (s.accept & bit) != want) continue;
            PartialState t{s.decided | bit, (s.accept & ~bit) | want};
            if (agenda.partial_consistent(t.decided, t.accept)) next.insert(t); // include
        }
        states = std::move(next);
    }
    // Keep extensions maximal within the block: no other reachable state
    // strictly extends them.
    for (const auto& s : states) {
        bool dominated = false;
        for (const auto& t : states) {
            if (t.decided == s.decided) continue;
            if ((t.decided & s.decided) == s.decided &&
                ((t.accept ^ s.accept) & s.decided) == 0) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.insert(s);
    }
}

} // namespace

Outcome rule_ra(const Profile& p) {
    require_nonempty(p);
    std::size_t m = p.agenda().issue_count();
    auto counts = support_counts(p);

    // Blocks of signed judgments by descending support.
    std::map<int, std::vector<std::pair<std::size_t, Sign>>, std::greater<>> blocks;
    for (std::size_t i = 0; i < m; ++i) {
        blocks[counts[i][1]].push_back({i, Sign::Accept});
        blocks[counts[i][0]].push_back({i, Sign::Reject});
    }

    std::set<PartialState> states{PartialState{0, 0}};
    for (const auto& [support_level, block] : blocks) {
        (void)support_level;
        std::set<PartialState> next;
        for (const auto& s : states) maximal_block_extensions(p.agenda(), s, block, next);
        states = std::move(next);
    }

    std::vector<std::uint32_t> winners;
    std::uint32_t bits = full_mask(m);
    for (const auto& s : states) {
        if ((s.decided & bits) != bits) throw error("ranked agenda ended on a partial set");
        winners.push_back(s.accept & bits);
    }
    return finish(std::move(winners), p.agenda(), "ra");
}

Outcome rule_leximax(const Profile& p) {
    require_nonempty(p);
    std::size_t m = p.agenda().issue_count();
    int n = static_cast<int>(p.agent_count());
    auto counts = support_counts(p);

    // Support levels from n down to the strict-majority threshold.
    int lowest = n / 2 + 1;
    std::vector<int> levels;
    for (int k = n; k >= lowest; --k) levels.push_back(k);

    const auto& cod = p.agenda().codomain_masks();
    auto vector_for = [&](std::uint32_t mask) {
        std::vector<int> v(levels.size(), 0);
        for (std::size_t i = 0; i < m; ++i) {
            int sup = ((mask >> i) & 1u) ? counts[i][1] : counts[i][0];
            if (sup >= lowest) v[static_cast<std::size_t>(n - sup)] += 1;
        }
        return v;
    };

    std::vector<int> best;
    std::vector<std::uint32_t> winners;
    for (std::uint32_t mask : cod) {
        auto v = vector_for(mask);
        if (winners.empty() || v > best) {
            best = v;
            winners.assign(1, mask);
        } else if (v == best) {
            winners.push_back(mask);
        }
    }
    return finish(std::move(winners), p.agenda(), "leximax");
}

long long med_value(const Profile& p, const JudgmentSet& j) {
    if (!j.complete()) throw precondition_error("median value needs a complete set");
    auto counts = support_counts(p);
    long long v = 0;
    for (std::size_t i = 0; i < counts.size(); ++i)
        v += j.at(i) == Sign::Accept ? counts[i][1] : counts[i][0];
    return v;
}

Outcome rule_med(const Profile& p) {
    require_nonempty(p);
    auto counts = support_counts(p);
    const auto& cod = p.agenda().codomain_masks();
    auto score = [&](std::uint64_t idx) {
        std::uint32_t mask = cod[idx];
        long long v = 0;
        for (std::size_t i = 0; i < counts.size(); ++i)
            v += ((mask >> i) & 1u) ? counts[i][1] : counts[i][0];
        return v;
    };
    auto [best, idx] = par::argmax<long long>(cod.size(), score);
    (void)best;
    std::vector<std::uint32_t> winners;
    for (auto i : idx) winners.push_back(cod[i]);
    return finish(std::move(winners), p.agenda(), "med");
}

std::pair<Outcome, int> rule_young_detail(const Profile& p, const Limits& limits) {
    require_nonempty(p);
    int n = static_cast<int>(p.agent_count());
    if (n > limits.max_agents)
        throw cap_exceeded("young search over " + std::to_string(n) + " agents exceeds cap of " +
                           std::to_string(limits.max_agents));
    std::size_t m = p.agenda().issue_count();

    // Group all removal subsets by size, ascending; stop at the first size
    // admitting a majority-consistent sub-profile and union the extensions of
    // every witness at that size.
    std::vector<std::vector<std::uint32_t>> by_count(static_cast<std::size_t>(n) + 1);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
        by_count[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);

    auto base = support_counts(p);
    for (int removed = 0; removed <= n; ++removed) {
        std::vector<std::uint32_t> winners;
        for (std::uint32_t removal : by_count[static_cast<std::size_t>(removed)]) {
            auto counts = base;
            for (int a = 0; a < n; ++a) {
                if (!((removal >> a) & 1u)) continue;
                const auto& j = p.agents()[static_cast<std::size_t>(a)];
                for (std::size_t i = 0; i < m; ++i) {
                    if (j.at(i) == Sign::Accept) --counts[i][1];
                    else if (j.at(i) == Sign::Reject) --counts[i][0];
                }
            }
            int remaining = n - removed;
            std::uint32_t decided = 0, accept = 0;
            for (std::size_t i = 0; i < m; ++i) {
                if (2 * counts[i][1] > remaining) {
                    decided |= 1u << i;
                    accept |= 1u << i;
                } else if (2 * counts[i][0] > remaining) {
                    decided |= 1u << i;
                }
            }
            if (!p.agenda().partial_consistent(decided, accept)) continue;
            auto exts = ext_masks(p.agenda(), decided, accept);
            winners.insert(winners.end(), exts.begin(), exts.end());
        }
        if (!winners.empty()) {
            Outcome o = finish(std::move(winners), p.agenda(), "young",
                               "removals=" + std::to_string(removed));
            return {std::move(o), removed};
        }
    }
    throw error("young rule found no consistent sub-profile");
}

Outcome rule_young(const Profile& p, const Limits& limits) {
    return rule_young_detail(p, limits).first;
}

// ---------------------------------------------------------------------------
// Value rules
// ---------------------------------------------------------------------------

Outcome rule_distance_based(const Profile& p, Distance d, Norm norm) {
    require_nonempty(p);
    if (d != Distance::Drastic) require_strict(p, "distance rule");
    const auto& cod = p.agenda().codomain_masks();
    std::uint32_t m_bits = full_mask(p.agenda().issue_count());

    AgendaGraph graph;
    const AgendaGraph* graph_ptr = nullptr;
    std::vector<bool> candidate_ok(cod.size(), true);
    if (d == Distance::Geodesic) {
        graph = build_agenda_graph(p.agenda());
        graph_ptr = &graph;
        // All agents must share one component; candidates outside it have no
        // defined distance and cannot compete.
        int component_vertex = graph.vertex_of(p.agents()[0].accept_mask());
        for (const auto& j : p.agents()) {
            int v = graph.vertex_of(j.accept_mask());
            if (graph.dist[static_cast<std::size_t>(component_vertex)]
                          [static_cast<std::size_t>(v)] < 0)
                throw precondition_error("geodesic rule needs all agents in one graph component");
        }
        for (std::size_t c = 0; c < cod.size(); ++c)
            candidate_ok[c] = graph.dist[static_cast<std::size_t>(component_vertex)][c] >= 0;
    }

    std::vector<AgentView> agents;
    for (const auto& j : p.agents()) agents.push_back(view_of(j));
    auto score = [&](std::uint64_t idx) {
        if (!candidate_ok[idx]) return kExcluded;
        std::uint32_t candidate = cod[idx];
        long long acc = 0;
        for (const auto& a : agents) {
            long long v = agent_distance(a, candidate, d, graph_ptr, m_bits);
            acc = norm == Norm::Sum ? acc + v : std::max(acc, v);
        }
        return acc;
    };
    auto [best, idx] = par::argmin<long long>(cod.size(), score);
    if (best == kExcluded) throw precondition_error("no candidate reachable in the agenda graph");
    std::vector<std::uint32_t> winners;
    for (auto i : idx) winners.push_back(cod[i]);
    return finish(std::move(winners), p.agenda(), "dist");
}

long long scoring_value(const Profile& p, const JudgmentSet& j, ScoringKind kind) {
    if (!j.complete()) throw precondition_error("scoring value needs a complete set");
    std::size_t m = p.agenda().issue_count();
    long long total = 0;
    for (const auto& agent : p.agents()) {
        for (std::size_t i = 0; i < m; ++i) {
            if (agent.at(i) == Sign::Absent || agent.at(i) != j.at(i)) continue;
            total += kind == ScoringKind::Simple
                         ? 1
                         : score_reversal(i, agent.at(i), agent, p.agenda());
        }
    }
    return total;
}

Outcome rule_scoring(const Profile& p, ScoringKind kind) {
    require_strict(p, "scoring rule");
    require_nonempty(p);
    std::size_t m = p.agenda().issue_count();
    const auto& cod = p.agenda().codomain_masks();

    // Score table per distinct agent set: s(phi, J_i) for the judgments the
    // agent actually holds.
    std::map<std::uint32_t, std::vector<long long>> tables;
    for (const auto& agent : p.agents()) {
        std::uint32_t mask = agent.accept_mask();
        if (tables.count(mask)) continue;
        std::vector<long long> t(m);
        for (std::size_t i = 0; i < m; ++i)
            t[i] = kind == ScoringKind::Simple
                       ? 1
                       : score_reversal(i, agent.at(i), agent, p.agenda());
        tables.emplace(mask, std::move(t));
    }

    std::vector<const std::vector<long long>*> agent_tables;
    std::vector<std::uint32_t> agent_masks;
    for (const auto& agent : p.agents()) {
        agent_masks.push_back(agent.accept_mask());
        agent_tables.push_back(&tables.at(agent.accept_mask()));
    }

    auto score = [&](std::uint64_t idx) {
        std::uint32_t candidate = cod[idx];
        long long total = 0;
        for (std::size_t a = 0; a < agent_masks.size(); ++a) {
            std::uint32_t same = ~(agent_masks[a] ^ candidate) & full_mask(m);
            const auto& t = *agent_tables[a];
            for (std::size_t i = 0; i < m; ++i)
                if ((same >> i) & 1u) total += t[i];
        }
        return total;
    };
    auto [best, idx] = par::argmax<long long>(cod.size(), score);
    (void)best;
    std::vector<std::uint32_t> winners;
    for (auto i : idx) winners.push_back(cod[i]);
    return finish(std::move(winners), p.agenda(), "scoring");
}

Outcome rule_full(const Profile& p, Distance d, Norm norm, RuleSpec::IdealClass ideal,
                  const Limits& limits) {
    require_strict(p, "full");
    require_nonempty(p);
    int n = static_cast<int>(p.agent_count());
    const auto& cod = p.agenda().codomain_masks();
    if (n > limits.full_max_agents)
        throw cap_exceeded("full rule over " + std::to_string(n) + " agents exceeds cap of " +
                           std::to_string(limits.full_max_agents));
    if (static_cast<int>(cod.size()) > limits.full_max_codomain)
        throw cap_exceeded("full rule over a codomain of " + std::to_string(cod.size()) +
                           " exceeds cap of " + std::to_string(limits.full_max_codomain));

    AgendaGraph graph;
    const AgendaGraph* graph_ptr = nullptr;
    if (d == Distance::Geodesic) {
        graph = build_agenda_graph(p.agenda());
        graph_ptr = &graph;
    }

    std::size_t m = p.agenda().issue_count();
    std::uint32_t m_bits = full_mask(m);
    std::vector<AgentView> agents;
    for (const auto& j : p.agents()) agents.push_back(view_of(j));

    std::uint64_t space = 1;
    for (int i = 0; i < n; ++i) space *= cod.size();

    auto score = [&](std::uint64_t flat) {
        std::uint64_t rest = flat;
        std::array<std::uint32_t, 32> picks{};
        for (int a = 0; a < n; ++a) {
            picks[static_cast<std::size_t>(a)] = cod[rest % cod.size()];
            rest /= cod.size();
        }
        // Ideal-class membership.
        if (ideal == RuleSpec::IdealClass::Unanimous) {
            for (int a = 1; a < n; ++a)
                if (picks[static_cast<std::size_t>(a)] != picks[0]) return kExcluded;
        } else {
            std::uint32_t decided = 0, accept = 0;
            for (std::size_t i = 0; i < m; ++i) {
                int yes = 0;
                for (int a = 0; a < n; ++a)
                    yes += (picks[static_cast<std::size_t>(a)] >> i) & 1u;
                if (2 * yes > n) {
                    decided |= 1u << i;
                    accept |= 1u << i;
                } else if (2 * (n - yes) > n) {
                    decided |= 1u << i;
                }
            }
            if (!p.agenda().partial_consistent(decided, accept)) return kExcluded;
        }
        long long acc = 0;
        for (int a = 0; a < n; ++a) {
            long long v =
                agent_distance(agents[static_cast<std::size_t>(a)],
                               picks[static_cast<std::size_t>(a)], d, graph_ptr, m_bits);
            acc = norm == Norm::Sum ? acc + v : std::max(acc, v);
        }
        return acc;
    };

    auto [best, winners_flat] = par::argmin<long long>(space, score);
    if (best == kExcluded) throw error("no ideal profile within the search space");

    std::vector<std::uint32_t> winners;
    for (std::uint64_t flat : winners_flat) {
        std::uint64_t rest = flat;
        std::vector<std::uint32_t> picks(static_cast<std::size_t>(n));
        for (int a = 0; a < n; ++a) {
            picks[static_cast<std::size_t>(a)] = cod[rest % cod.size()];
            rest /= cod.size();
        }
        if (ideal == RuleSpec::IdealClass::Unanimous) {
            winners.push_back(picks[0]);
            continue;
        }
        std::uint32_t decided = 0, accept = 0;
        for (std::size_t i = 0; i < m; ++i) {
            int yes = 0;
            for (int a = 0; a < n; ++a) yes += (picks[static_cast<std::size_t>(a)] >> i) & 1u;
            if (2 * yes > n) {
                decided |= 1u << i;
                accept |= 1u << i;
            } else if (2 * (n - yes) > n) {
                decided |= 1u << i;
            }
        }
        auto exts = ext_masks(p.agenda(), decided, accept);
        winners.insert(winners.end(), exts.begin(), exts.end());
    }
    return finish(std::move(winners), p.agenda(), "full");
}

Outcome rule_mrv(const Profile& p, Distance d, Norm norm) {
    require_strict(p, "mrv");
    require_nonempty(p);
    std::uint32_t m_bits = full_mask(p.agenda().issue_count());

    std::vector<std::uint32_t> candidates;
    for (const auto& j : p.agents()) candidates.push_back(j.accept_mask());
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    AgendaGraph graph;
    const AgendaGraph* graph_ptr = nullptr;
    if (d == Distance::Geodesic) {
        graph = build_agenda_graph(p.agenda());
        graph_ptr = &graph;
    }

    std::vector<AgentView> agents;
    for (const auto& j : p.agents()) agents.push_back(view_of(j));
    auto score = [&](std::uint64_t idx) {
        std::uint32_t candidate = candidates[idx];
        long long acc = 0;
        for (const auto& a : agents) {
            long long v = agent_distance(a, candidate, d, graph_ptr, m_bits);
            acc = norm == Norm::Sum ? acc + v : std::max(acc, v);
        }
        return acc;
    };
    auto [best, idx] = par::argmin<long long>(candidates.size(), score);
    (void)best;
    std::vector<std::uint32_t> winners;
    for (auto i : idx) winners.push_back(candidates[i]);
    return finish(std::move(winners), p.agenda(), "mrv");
}

// ---------------------------------------------------------------------------
// Dispatch
// ---------------------------------------------------------------------------

bool rule_is_partial(const std::string& name) {
    return name == "majority" || name == "cbp" || name == "quota" || name == "unanimity";
}

Outcome apply_rule(const Profile& p, const RuleSpec& spec, const Limits& limits) {
    if (spec.name == "pbp") return rule_pbp(p, spec.premises);
    if (spec.name == "ecbp")
        return rule_extended_cbp(p, spec.conclusions, spec.distance, spec.norm, limits);
    if (spec.name == "mc") return rule_mc(p);
    if (spec.name == "mcc") return rule_mcc(p);
    if (spec.name == "ra") return rule_ra(p);
    if (spec.name == "leximax") return rule_leximax(p);
    if (spec.name == "med") return rule_med(p);
    if (spec.name == "young") return rule_young(p, limits);
    if (spec.name == "dist") return rule_distance_based(p, spec.distance, spec.norm);
    if (spec.name == "scoring") return rule_scoring(p, spec.scoring);
    if (spec.name == "full") return rule_full(p, spec.distance, spec.norm, spec.ideal, limits);
    if (spec.name == "mrv") return rule_mrv(p, spec.distance, spec.norm);
    if (rule_is_partial(spec.name))
        throw precondition_error("rule " + spec.name + " returns a partial set, not an outcome");
    throw input_error("unknown rule: " + spec.name);
}

PartialResult apply_partial_rule(const Profile& p, const RuleSpec& spec) {
    if (spec.name == "majority") return rule_majority(p);
    if (spec.name == "cbp") return rule_cbp(p, spec.conclusions);
    if (spec.name == "quota") {
        if (!spec.quota) throw precondition_error("quota rule needs --k");
        return rule_quota(p, *spec.quota);
    }
    if (spec.name == "unanimity") return rule_unanimity(p);
    throw input_error("not a partial rule: " + spec.name);
}

Outcome tie_break(const Outcome& o) {
    if (o.sets.empty()) throw error("empty outcome");
    Outcome out;
    out.sets = {o.sets.front()};
    out.rule_name = o.rule_name;
    out.note = o.note.empty() ? "tie-break=lexicographic" : o.note + ";tie-break=lexicographic";
    return out;
}

} // namespace ja
