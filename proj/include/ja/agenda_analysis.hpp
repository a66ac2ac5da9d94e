#pragma once

#include <optional>
#include <set>
#include <vector>

#include "ja/agenda.hpp"

namespace ja {

struct SignedJudgment {
    std::size_t issue;
    Sign sign; // Accept or Reject
    friend auto operator<=>(const SignedJudgment&, const SignedJudgment&) = default;
};

struct AgendaReport {
    bool closed_under_atoms = false;
    // Every minimally inconsistent agenda subset, smallest first, each sorted;
    // includes the trivial {phi, !phi} pairs when those are genuinely minimal.
    std::vector<std::vector<SignedJudgment>> minimal_inconsistent_subsets;
    bool simple = false;        // no MIS of size >= 3
    int smallest_k_median = 2;  // size of the largest MIS
    bool path_connected = false;
};

AgendaReport agenda_report(const Agenda& agenda, const Limits& limits);

// Semantic independence: every pair of rational sub-assignments unions to a
// rational set. The syntactic variant (disjoint atoms) is defined only for
// trivial constraints and reported as nullopt otherwise.
struct PartitionCheck {
    bool semantic = false;
    std::optional<bool> syntactic;
};
PartitionCheck check_independent_partition(const Agenda& agenda,
                                           const std::set<std::size_t>& part1,
                                           const std::set<std::size_t>& part2,
                                           const Limits& limits);

// Independent overlapping decomposition: agreement on the overlap implies the
// union is rational.
bool check_iod(const Agenda& agenda, const std::set<std::size_t>& a1,
               const std::set<std::size_t>& a2, const Limits& limits);

struct RestrictedDomainReport {
    bool single_plateaued = false;
    std::optional<std::vector<SignedJudgment>> plateau_order;
    bool single_canyoned = false;
    std::optional<std::vector<SignedJudgment>> canyon_order;
    bool unidimensionally_aligned = false;
    std::optional<std::vector<std::size_t>> aligned_agent_order;
    bool unidimensionally_ordered = false;
    std::optional<std::vector<std::size_t>> ordered_agent_order;
};

RestrictedDomainReport restricted_domain_report(const Profile& p, const Limits& limits);

} // namespace ja
