#include "ja/agenda_analysis.hpp"

#include <algorithm>
#include <map>

#include "ja/errors.hpp"

namespace ja {

namespace {

// Partial sign selections are (decided, accept) mask pairs throughout.
struct PartialMask {
    std::uint32_t decided = 0;
    std::uint32_t accept = 0;
};

bool matches(std::uint32_t codomain_mask, const PartialMask& s) {
    return (codomain_mask & s.decided) == (s.accept & s.decided);
}

// Enumerates all 3^m partial sign selections.
template <class Fn>
void for_each_partial(std::size_t m, Fn&& fn) {
    std::vector<int> trits(m, 0); // 0 absent, 1 accept, 2 reject
    while (true) {
        PartialMask s;
        for (std::size_t i = 0; i < m; ++i) {
            if (trits[i] == 1) {
                s.decided |= 1u << i;
                s.accept |= 1u << i;
            } else if (trits[i] == 2) {
                s.decided |= 1u << i;
            }
        }
        fn(s);
        std::size_t i = 0;
        while (i < m && trits[i] == 2) trits[i++] = 0;
        if (i == m) return;
        ++trits[i];
    }
}

std::vector<SignedJudgment> to_signed(const PartialMask& s, std::size_t m) {
    std::vector<SignedJudgment> out;
    for (std::size_t i = 0; i < m; ++i)
        if ((s.decided >> i) & 1u)
            out.push_back({i, ((s.accept >> i) & 1u) ? Sign::Accept : Sign::Reject});
    return out;
}

void require_analysis_cap(const Agenda& agenda, const Limits& limits) {
    if (static_cast<int>(agenda.issue_count()) > limits.analysis_max_issues)
        throw cap_exceeded("agenda analysis over " + std::to_string(agenda.issue_count()) +
                           " issues exceeds cap of " + std::to_string(limits.analysis_max_issues));
}

} // namespace

AgendaReport agenda_report(const Agenda& agenda, const Limits& limits) {
    require_analysis_cap(agenda, limits);
    std::size_t m = agenda.issue_count();
    const auto& cod = agenda.codomain_masks();
    AgendaReport report;

    // Closure under propositional variables: each atom of an agenda formula
    // is itself an issue.
    report.closed_under_atoms = true;
    for (const auto& name : atoms(agenda.pre_agenda())) {
        bool found = false;
        for (const auto& f : agenda.pre_agenda())
            if (f.kind() == Formula::Kind::Atom && f.atom_name() == name) found = true;
        if (!found) {
            report.closed_under_atoms = false;
            break;
        }
    }

    // Minimally inconsistent subsets. Any subset holding both signs of an
    // issue contains the trivial pair, so beyond those pairs it is enough to
    // scan one-sign-per-issue selections.
    std::vector<std::vector<SignedJudgment>> mis;
    auto consistent = [&](const PartialMask& s) {
        return agenda.partial_consistent(s.decided, s.accept);
    };
    for (std::size_t i = 0; i < m; ++i) {
        PartialMask acc{1u << i, 1u << i};
        PartialMask rej{1u << i, 0};
        if (consistent(acc) && consistent(rej))
            mis.push_back({{i, Sign::Accept}, {i, Sign::Reject}});
    }
    for_each_partial(m, [&](const PartialMask& s) {
        if (s.decided == 0 || consistent(s)) return;
        // Minimal iff dropping any single judgment restores consistency.
        for (std::size_t i = 0; i < m; ++i) {
            if (!((s.decided >> i) & 1u)) continue;
            PartialMask reduced{s.decided & ~(1u << i), s.accept & ~(1u << i)};
            if (!consistent(reduced)) return;
        }
        mis.push_back(to_signed(s, m));
    });
    std::sort(mis.begin(), mis.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    report.minimal_inconsistent_subsets = std::move(mis);

    report.simple = true;
    std::size_t largest = 2;
    for (const auto& s : report.minimal_inconsistent_subsets) {
        largest = std::max(largest, s.size());
        if (s.size() >= 3) report.simple = false;
    }
    report.smallest_k_median = static_cast<int>(largest);

    // Path-connectivity via conditional entailments phi |-* psi, then the
    // transitive closure over all 2m judgments.
    std::size_t nodes = 2 * m;
    auto node_of = [m](std::size_t issue, bool accept) { return issue + (accept ? 0 : m); };
    std::vector<std::vector<bool>> reach(nodes, std::vector<bool>(nodes, false));
    std::vector<std::uint32_t> match_buf;
    for_each_partial(m, [&](const PartialMask& s) {
        match_buf.clear();
        for (std::uint32_t mask : cod)
            if (matches(mask, s)) match_buf.push_back(mask);
        if (match_buf.empty()) return; // S itself inconsistent
        for (std::size_t pi = 0; pi < m; ++pi) {
            for (bool pa : {true, false}) {
                // {phi} u S must be consistent.
                std::vector<std::uint32_t> with_phi;
                for (std::uint32_t mask : match_buf)
                    if ((((mask >> pi) & 1u) != 0) == pa) with_phi.push_back(mask);
                if (with_phi.empty()) continue;
                for (std::size_t qi = 0; qi < m; ++qi) {
                    for (bool qa : {true, false}) {
                        if (reach[node_of(pi, pa)][node_of(qi, qa)]) continue;
                        // S must be consistent with !psi.
                        bool any_not_psi = false;
                        for (std::uint32_t mask : match_buf)
                            if ((((mask >> qi) & 1u) != 0) != qa) {
                                any_not_psi = true;
                                break;
                            }
                        if (!any_not_psi) continue;
                        bool entails_psi = true;
                        for (std::uint32_t mask : with_phi)
                            if ((((mask >> qi) & 1u) != 0) != qa) {
                                entails_psi = false;
                                break;
                            }
                        if (entails_psi) reach[node_of(pi, pa)][node_of(qi, qa)] = true;
                    }
                }
            }
        }
    });
    for (std::size_t k = 0; k < nodes; ++k)
        for (std::size_t i = 0; i < nodes; ++i)
            if (reach[i][k])
                for (std::size_t j = 0; j < nodes; ++j)
                    if (reach[k][j]) reach[i][j] = true;
    report.path_connected = true;
    for (std::size_t i = 0; i < nodes && report.path_connected; ++i)
        for (std::size_t j = 0; j < nodes; ++j)
            if (i != j && !reach[i][j]) {
                report.path_connected = false;
                break;
            }

    return report;
}

namespace {

// Distinct projections of the codomain onto an issue subset: exactly the
// rational complete assignments over that sub-agenda.
std::vector<PartialMask> sub_codomain(const Agenda& agenda, std::uint32_t issue_mask) {
    std::vector<std::uint32_t> seen;
    for (std::uint32_t mask : agenda.codomain_masks()) seen.push_back(mask & issue_mask);
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    std::vector<PartialMask> out;
    out.reserve(seen.size());
    for (std::uint32_t accept : seen) out.push_back({issue_mask, accept});
    return out;
}

std::uint32_t mask_of(const std::set<std::size_t>& issues, std::size_t m) {
    std::uint32_t mask = 0;
    for (std::size_t i : issues) {
        if (i >= m) throw precondition_error("issue index out of range");
        mask |= 1u << i;
    }
    return mask;
}

} // namespace

PartitionCheck check_independent_partition(const Agenda& agenda,
                                           const std::set<std::size_t>& part1,
                                           const std::set<std::size_t>& part2,
                                           const Limits& limits) {
    (void)limits;
    std::size_t m = agenda.issue_count();
    std::uint32_t m1 = mask_of(part1, m);
    std::uint32_t m2 = mask_of(part2, m);
    std::uint32_t full = m == 32 ? ~0u : (1u << m) - 1;
    if (part1.empty() || part2.empty() || (m1 & m2) != 0 || (m1 | m2) != full)
        throw precondition_error("not a partition of the agenda");

    PartitionCheck result;
    result.semantic = true;
    auto side1 = sub_codomain(agenda, m1);
    auto side2 = sub_codomain(agenda, m2);
    for (const auto& s1 : side1) {
        for (const auto& s2 : side2) {
            std::uint32_t accept = (s1.accept & m1) | (s2.accept & m2);
            const auto& cod = agenda.codomain_masks();
            if (std::find(cod.begin(), cod.end(), accept) == cod.end()) {
                result.semantic = false;
                break;
            }
        }
        if (!result.semantic) break;
    }

    if (agenda.constraints_trivial()) {
        std::vector<Formula> f1, f2;
        for (std::size_t i : part1) f1.push_back(agenda.pre_agenda()[i]);
        for (std::size_t i : part2) f2.push_back(agenda.pre_agenda()[i]);
        auto a1 = atoms(f1);
        auto a2 = atoms(f2);
        std::vector<std::string> shared;
        std::set_intersection(a1.begin(), a1.end(), a2.begin(), a2.end(),
                              std::back_inserter(shared));
        result.syntactic = shared.empty();
    }
    return result;
}

bool check_iod(const Agenda& agenda, const std::set<std::size_t>& a1,
               const std::set<std::size_t>& a2, const Limits& limits) {
    (void)limits;
    std::size_t m = agenda.issue_count();
    std::uint32_t m1 = mask_of(a1, m);
    std::uint32_t m2 = mask_of(a2, m);
    std::uint32_t full = m == 32 ? ~0u : (1u << m) - 1;
    if (a1.empty() || a2.empty() || (m1 | m2) != full)
        throw precondition_error("subsets do not cover the agenda");

    std::uint32_t overlap = m1 & m2;
    auto side1 = sub_codomain(agenda, m1);
    auto side2 = sub_codomain(agenda, m2);
    const auto& cod = agenda.codomain_masks();
    for (const auto& s1 : side1) {
        for (const auto& s2 : side2) {
            if ((s1.accept & overlap) != (s2.accept & overlap)) continue;
            std::uint32_t accept = (s1.accept & m1) | (s2.accept & m2);
            if (std::find(cod.begin(), cod.end(), accept) == cod.end()) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Restricted domains (single-plateaued / canyoned, unidimensional orders)
// ---------------------------------------------------------------------------

namespace {

// Finds a linear order of all 2m signed judgments making every given subset
// contiguous (consecutive-ones under row permutation). Backtracking over the
// next judgment to place, pruning on broken runs, memoizing failed frontiers.
class ContiguitySearch {
public:
    ContiguitySearch(std::size_t judgment_count, std::vector<std::vector<bool>> membership)
        : count_(judgment_count), member_(std::move(membership)) {}

    std::optional<std::vector<std::size_t>> run() {
        placed_.assign(count_, false);
        remaining_.resize(member_.size());
        open_.assign(member_.size(), false);
        closed_.assign(member_.size(), false);
        for (std::size_t a = 0; a < member_.size(); ++a)
            remaining_[a] = std::count(member_[a].begin(), member_[a].end(), true);
        order_.clear();
        failed_.clear();
        if (dfs()) return order_;
        return std::nullopt;
    }

private:
    bool dfs() {
        if (order_.size() == count_) return true;
        std::uint64_t key = frontier_key();
        if (failed_.count(key)) return false;
        for (std::size_t x = 0; x < count_; ++x) {
            if (placed_[x]) continue;
            if (!can_place(x)) continue;
            auto saved_open = open_;
            auto saved_closed = closed_;
            place(x);
            if (dfs()) return true;
            open_ = std::move(saved_open);
            closed_ = std::move(saved_closed);
            placed_[x] = false;
            order_.pop_back();
            for (std::size_t a = 0; a < member_.size(); ++a)
                if (member_[a][x]) ++remaining_[a];
        }
        failed_.insert(key);
        return false;
    }

    bool can_place(std::size_t x) const {
        for (std::size_t a = 0; a < member_.size(); ++a) {
            if (member_[a][x]) {
                if (closed_[a]) return false;
            } else {
                if (open_[a] && remaining_[a] > 0) return false;
            }
        }
        return true;
    }

    void place(std::size_t x) {
        placed_[x] = true;
        order_.push_back(x);
        for (std::size_t a = 0; a < member_.size(); ++a) {
            if (member_[a][x]) {
                open_[a] = true;
                --remaining_[a];
            } else if (open_[a]) {
                open_[a] = false;
                closed_[a] = true;
            }
        }
    }

    std::uint64_t frontier_key() const {
        // The set of placed judgments determines run states for any feasible
        // prefix, so it is a sound memo key.
        std::uint64_t key = 0;
        for (std::size_t x = 0; x < count_; ++x)
            if (placed_[x]) key |= std::uint64_t{1} << x;
        return key;
    }

    std::size_t count_;
    std::vector<std::vector<bool>> member_;
    std::vector<bool> placed_;
    std::vector<std::size_t> remaining_;
    std::vector<bool> open_, closed_;
    std::vector<std::size_t> order_;
    std::set<std::uint64_t> failed_;
};

bool between_masks(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t full) {
    // b contains every judgment a and c share.
    std::uint32_t agree = ~(a ^ c) & full;
    return ((a ^ b) & agree) == 0;
}

} // namespace

RestrictedDomainReport restricted_domain_report(const Profile& p, const Limits& limits) {
    if (p.mode() != ProfileMode::Strict)
        throw precondition_error("restricted-domain analysis needs a strict-mode profile");
    std::size_t m = p.agenda().issue_count();
    std::size_t n = p.agent_count();
    if (static_cast<int>(m) > limits.domain_search_max ||
        static_cast<int>(n) > limits.domain_search_max)
        throw cap_exceeded("restricted-domain search caps at " +
                           std::to_string(limits.domain_search_max) + " issues and agents");
    if (n == 0) throw precondition_error("empty profile");

    RestrictedDomainReport report;

    // Distinct agent masks; duplicates impose identical contiguity constraints.
    std::vector<std::uint32_t> distinct;
    for (const auto& j : p.agents()) distinct.push_back(j.accept_mask());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

    // Judgment x of 2m: issue x%m, accepted when x < m.
    auto member_of = [&](std::uint32_t agent_mask, bool complemented) {
        std::vector<bool> row(2 * m, false);
        for (std::size_t i = 0; i < m; ++i) {
            bool accepts = (agent_mask >> i) & 1u;
            if (complemented) accepts = !accepts;
            row[accepts ? i : i + m] = true;
        }
        return row;
    };

    auto signed_order = [&](const std::vector<std::size_t>& order) {
        std::vector<SignedJudgment> out;
        for (std::size_t x : order)
            out.push_back({x % m, x < m ? Sign::Accept : Sign::Reject});
        return out;
    };

    {
        std::vector<std::vector<bool>> rows;
        for (std::uint32_t mask : distinct) rows.push_back(member_of(mask, false));
        ContiguitySearch search(2 * m, std::move(rows));
        if (auto order = search.run()) {
            report.single_plateaued = true;
            report.plateau_order = signed_order(*order);
        }
    }
    {
        std::vector<std::vector<bool>> rows;
        for (std::uint32_t mask : distinct) rows.push_back(member_of(mask, true));
        ContiguitySearch search(2 * m, std::move(rows));
        if (auto order = search.run()) {
            report.single_canyoned = true;
            report.canyon_order = signed_order(*order);
        }
    }

    // Agent-order searches, brute force over permutations.
    std::uint32_t full = m == 32 ? ~0u : (1u << m) - 1;
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::vector<std::uint32_t> agent_masks;
    for (const auto& j : p.agents()) agent_masks.push_back(j.accept_mask());

    std::vector<std::size_t> aligned_witness, ordered_witness;
    std::vector<std::size_t> scratch = perm;
    do {
        if (aligned_witness.empty()) {
            bool ok = true;
            for (std::size_t i = 1; i + 1 < n && ok; ++i)
                ok = between_masks(agent_masks[scratch[i - 1]], agent_masks[scratch[i]],
                                   agent_masks[scratch[i + 1]], full);
            if (ok && n >= 1) aligned_witness = scratch;
        }
        if (ordered_witness.empty()) {
            bool ok = true;
            for (std::size_t i = 0; i < m && ok; ++i) {
                for (bool accept : {true, false}) {
                    int first = -1, last = -1, count = 0;
                    for (std::size_t k = 0; k < n; ++k) {
                        bool has = (((agent_masks[scratch[k]] >> i) & 1u) != 0) == accept;
                        if (has) {
                            if (first < 0) first = static_cast<int>(k);
                            last = static_cast<int>(k);
                            ++count;
                        }
                    }
                    if (count > 0 && last - first + 1 != count) {
                        ok = false;
                        break;
                    }
                }
            }
            if (ok) ordered_witness = scratch;
        }
        if (!aligned_witness.empty() && !ordered_witness.empty()) break;
    } while (std::next_permutation(scratch.begin(), scratch.end()));

    if (!aligned_witness.empty()) {
        report.unidimensionally_aligned = true;
        report.aligned_agent_order = aligned_witness;
    }
    if (!ordered_witness.empty()) {
        report.unidimensionally_ordered = true;
        report.ordered_agent_order = ordered_witness;
    }
    return report;
}

} // namespace ja
