#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ja/formula.hpp"
#include "ja/limits.hpp"
#include "ja/logic.hpp"

namespace ja {

enum class Sign : std::int8_t { Reject = -1, Absent = 0, Accept = 1 };

inline Sign flip(Sign s) {
    return s == Sign::Accept ? Sign::Reject : (s == Sign::Reject ? Sign::Accept : Sign::Absent);
}

// One signed verdict per pre-agenda issue, Absent when undecided. Judgments
// are identified by (issue index, sign), never by re-parsed formulas.
class JudgmentSet {
public:
    JudgmentSet() = default;
    explicit JudgmentSet(std::size_t issue_count)
        : signs_(issue_count, Sign::Absent) {}
    JudgmentSet(std::size_t issue_count, std::uint32_t accept_mask); // complete set from bits

    std::size_t issue_count() const { return signs_.size(); }
    Sign at(std::size_t issue) const { return signs_.at(issue); }
    void set(std::size_t issue, Sign s) { signs_.at(issue) = s; }

    bool complete() const;
    std::size_t decided_count() const;
    // Every decided verdict of this set appears identically in other.
    bool subset_of(const JudgmentSet& other) const;

    std::uint32_t decided_mask() const;
    std::uint32_t accept_mask() const; // bits only meaningful under decided_mask

    // Canonical order: sign vectors read as binary numbers, first issue most
    // significant, accept = 1 (Reject < Absent < Accept per issue).
    friend std::strong_ordering operator<=>(const JudgmentSet& a, const JudgmentSet& b);
    friend bool operator==(const JudgmentSet& a, const JudgmentSet& b) = default;

private:
    std::vector<Sign> signs_;
};

// Agenda: ordered pre-agenda of contingent formulas plus consistent
// constraints. Immutable after construction; the codomain (all rational sign
// patterns, as accept masks in canonical order) is computed once and shared.
class Agenda {
public:
    Agenda() = default;

    // Validates: contingent issues, pairwise distinct issues, consistent and
    // relevant constraints, no issue resolved by the constraints.
    static Agenda make(std::vector<Formula> pre, std::vector<Formula> gamma,
                       const Limits& limits);

    // Skips the contingency/relevance/resolved-issue checks. Used where a
    // rule narrows the constraints of an existing agenda (extended CBP adds a
    // disjunction that may resolve a conclusion issue on purpose).
    static Agenda make_relaxed(std::vector<Formula> pre, std::vector<Formula> gamma,
                               const Limits& limits);

    bool valid() const { return impl_ != nullptr; }
    std::size_t issue_count() const;
    const std::vector<Formula>& pre_agenda() const;
    const std::vector<Formula>& constraints() const;
    const AtomUniverse& universe() const;
    bool constraints_trivial() const; // gamma is {true} (or empty)

    Formula issue_formula(std::size_t issue, Sign sign) const; // phi_i or !phi_i

    // All rational complete sign patterns (accept masks), canonical order.
    const std::vector<std::uint32_t>& codomain_masks() const;

    // Partial judgment consistency with the constraints: some codomain member
    // matches all decided bits.
    bool partial_consistent(std::uint32_t decided, std::uint32_t accept) const;

    JudgmentSet set_from_mask(std::uint32_t accept_mask) const;

    // Same pre-agenda and constraints, structurally.
    friend bool operator==(const Agenda& a, const Agenda& b);

    // Sub-agenda over the given issue indices (ascending), same constraints.
    // Returns the new agenda plus the original index of each kept issue.
    std::pair<Agenda, std::vector<std::size_t>> project(const std::set<std::size_t>& issues,
                                                        const Limits& limits) const;

private:
    struct Impl;
    static Agenda make_impl(std::vector<Formula> pre, std::vector<Formula> gamma,
                            const Limits& limits, bool relaxed);
    std::shared_ptr<const Impl> impl_;
};

enum class ProfileMode { Strict, Open };

// Ordered list of judgment sets over one agenda; agents are positional.
class Profile {
public:
    Profile() = default;
    static Profile make(Agenda agenda, std::vector<JudgmentSet> agents, ProfileMode mode,
                        const Limits& limits);

    const Agenda& agenda() const { return agenda_; }
    const std::vector<JudgmentSet>& agents() const { return agents_; }
    std::size_t agent_count() const { return agents_.size(); }
    ProfileMode mode() const { return mode_; }

private:
    Agenda agenda_;
    std::vector<JudgmentSet> agents_;
    ProfileMode mode_ = ProfileMode::Strict;
};

// Irresolute aggregation result: non-empty, canonically ordered rational sets.
struct Outcome {
    std::vector<JudgmentSet> sets;
    std::string rule_name;
    std::string note;
};

// Binary-framework problem <Phi, IC, B>.
struct BinaryProblem {
    std::vector<std::string> variables;
    std::vector<Formula> integrity_constraints;
    std::vector<std::vector<int>> ballots; // 0/1 per variable
};

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

std::vector<JudgmentSet> codomain(const Agenda& agenda);

bool is_rational(const JudgmentSet& j, const Agenda& agenda);

// All rational supersets of a consistent (possibly partial) judgment set.
std::vector<JudgmentSet> ext(const JudgmentSet& j, const Agenda& agenda);

int support(const Profile& p, std::size_t issue, Sign sign);

// counts[issue][0] = rejects, counts[issue][1] = accepts.
std::vector<std::array<int, 2>> support_counts(const Profile& p);

// The partial set of judgments with strict-majority support, plus whether it
// is consistent with the constraints.
std::pair<JudgmentSet, bool> majoritarian_set(const Profile& p);

JudgmentSet unanimity_set(const Profile& p);

// Verdicts outside the issue subset become absent; result is an open-mode
// profile over the same agenda.
Profile restrict_profile(const Profile& p, const std::set<std::size_t>& issues);

// Profile over the projected sub-agenda (strict mode preserved).
Profile project_profile(const Profile& p, const std::set<std::size_t>& issues,
                        const Limits& limits);

Profile sum_profiles(const Profile& p1, const Profile& p2, const Limits& limits);

// Multiset containment / intersection of agent occurrences. set_semantics
// switches common_agents to plain set intersection (one occurrence each).
bool is_subprofile(const Profile& p1, const Profile& p2);
Profile common_agents(const Profile& p1, const Profile& p2, const Limits& limits,
                      bool set_semantics = false);

BinaryProblem to_binary(const Profile& p);
std::pair<Agenda, Profile> from_binary(const BinaryProblem& b, const Limits& limits);

} // namespace ja
