#include "ja/agenda.hpp"

#include <algorithm>
#include <map>

#include "ja/errors.hpp"
#include "ja/parallel.hpp"

namespace ja {

JudgmentSet::JudgmentSet(std::size_t issue_count, std::uint32_t accept_mask)
    : signs_(issue_count) {
    for (std::size_t i = 0; i < issue_count; ++i)
        signs_[i] = (accept_mask >> i) & 1u ? Sign::Accept : Sign::Reject;
}

bool JudgmentSet::complete() const {
    for (Sign s : signs_)
        if (s == Sign::Absent) return false;
    return true;
}

std::size_t JudgmentSet::decided_count() const {
    std::size_t n = 0;
    for (Sign s : signs_)
        if (s != Sign::Absent) ++n;
    return n;
}

bool JudgmentSet::subset_of(const JudgmentSet& other) const {
    if (signs_.size() != other.signs_.size()) return false;
    for (std::size_t i = 0; i < signs_.size(); ++i)
        if (signs_[i] != Sign::Absent && other.signs_[i] != signs_[i]) return false;
    return true;
}

std::uint32_t JudgmentSet::decided_mask() const {
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < signs_.size(); ++i)
        if (signs_[i] != Sign::Absent) m |= 1u << i;
    return m;
}

std::uint32_t JudgmentSet::accept_mask() const {
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < signs_.size(); ++i)
        if (signs_[i] == Sign::Accept) m |= 1u << i;
    return m;
}

std::strong_ordering operator<=>(const JudgmentSet& a, const JudgmentSet& b) {
    if (auto c = a.signs_.size() <=> b.signs_.size(); c != 0) return c;
    for (std::size_t i = 0; i < a.signs_.size(); ++i) {
        auto c = static_cast<int>(a.signs_[i]) <=> static_cast<int>(b.signs_[i]);
        if (c != 0) return c;
    }
    return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Agenda
// ---------------------------------------------------------------------------

struct Agenda::Impl {
    std::vector<Formula> pre;
    std::vector<Formula> gamma;
    AtomUniverse universe;
    bool gamma_trivial = false;
    std::vector<std::uint32_t> codomain; // accept masks, canonical order
};

namespace {

bool is_true_constant(const Formula& f) {
    return f.kind() == Formula::Kind::Constant && f.constant_value();
}

// Canonical key: first issue as the most significant bit.
std::uint32_t canon_key(std::uint32_t mask, std::size_t m) {
    std::uint32_t key = 0;
    for (std::size_t i = 0; i < m; ++i) key = (key << 1) | ((mask >> i) & 1u);
    return key;
}

} // namespace

Agenda Agenda::make_relaxed(std::vector<Formula> pre, std::vector<Formula> gamma,
                            const Limits& limits) {
    return make_impl(std::move(pre), std::move(gamma), limits, true);
}

Agenda Agenda::make(std::vector<Formula> pre, std::vector<Formula> gamma, const Limits& limits) {
    return make_impl(std::move(pre), std::move(gamma), limits, false);
}

Agenda Agenda::make_impl(std::vector<Formula> pre, std::vector<Formula> gamma,
                         const Limits& limits, bool relaxed) {
    if (pre.empty()) throw input_error("empty pre-agenda");
    if (static_cast<int>(pre.size()) > limits.max_issues)
        throw cap_exceeded("agenda of " + std::to_string(pre.size()) + " issues exceeds cap of " +
                           std::to_string(limits.max_issues));
    if (gamma.empty()) gamma.push_back(Formula::constant(true));

    auto impl = std::make_shared<Impl>();
    impl->pre = std::move(pre);
    impl->gamma = std::move(gamma);

    std::set<std::string> all_atoms = atoms(impl->pre);
    std::set<std::string> gamma_atoms = atoms(impl->gamma);
    std::set<std::string> pre_atoms = all_atoms;
    all_atoms.insert(gamma_atoms.begin(), gamma_atoms.end());
    impl->universe = AtomUniverse(all_atoms);
    if (static_cast<int>(impl->universe.size()) > limits.max_atoms)
        throw cap_exceeded("atom universe of " + std::to_string(impl->universe.size()) +
                           " exceeds cap of " + std::to_string(limits.max_atoms));

    impl->gamma_trivial = std::all_of(impl->gamma.begin(), impl->gamma.end(), is_true_constant);

    // Issues must be contingent and pairwise distinct.
    for (std::size_t i = 0; i < impl->pre.size(); ++i) {
        const Formula& f = impl->pre[i];
        if (!relaxed) {
            std::vector<Formula> single{f};
            if (!is_consistent_set(single, limits))
                throw input_error("issue " + to_string(f) + " is a contradiction");
            single[0] = Formula::negation(f);
            if (!is_consistent_set(single, limits))
                throw input_error("issue " + to_string(f) + " is a tautology");
        }
        for (std::size_t j = i + 1; j < impl->pre.size(); ++j)
            if (impl->pre[j] == f)
                throw input_error("duplicate issue " + to_string(f));
    }

    if (!is_consistent_set(impl->gamma, impl->universe, limits))
        throw input_error("inconsistent constraints");

    if (!impl->gamma_trivial && !relaxed) {
        // Constraints must be relevant and must not resolve an issue.
        std::vector<std::string> shared;
        std::set_intersection(pre_atoms.begin(), pre_atoms.end(), gamma_atoms.begin(),
                              gamma_atoms.end(), std::back_inserter(shared));
        if (shared.empty())
            throw input_error("constraints share no atom with the pre-agenda");
        for (const Formula& g : impl->gamma) {
            for (const Formula& f : impl->pre) {
                if (g == f || is_negation_of(g, f))
                    throw input_error("issue " + to_string(f) + " resolved by constraints");
            }
        }
    }

    // Codomain as the image of the constraint models: each satisfying
    // valuation induces one complete sign pattern.
    std::size_t m = impl->pre.size();
    auto gamma_compiled = compile_all(impl->gamma, impl->universe);
    auto pre_compiled = compile_all(impl->pre, impl->universe);
    std::uint64_t scan = impl->universe.valuation_count();
    auto satisfies_gamma = [&](std::uint64_t v) {
        for (const auto& c : gamma_compiled)
            if (!c.eval(v)) return false;
        return true;
    };
    std::vector<std::uint64_t> models = par::filter_indices(scan, satisfies_gamma);
    std::vector<std::uint32_t> masks;
    masks.reserve(models.size());
    for (std::uint64_t v : models) {
        std::uint32_t mask = 0;
        for (std::size_t i = 0; i < m; ++i)
            if (pre_compiled[i].eval(v)) mask |= 1u << i;
        masks.push_back(mask);
    }
    std::sort(masks.begin(), masks.end(),
              [m](std::uint32_t a, std::uint32_t b) { return canon_key(a, m) < canon_key(b, m); });
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    impl->codomain = std::move(masks);

    Agenda a;
    a.impl_ = std::move(impl);
    return a;
}

std::size_t Agenda::issue_count() const { return impl_->pre.size(); }
const std::vector<Formula>& Agenda::pre_agenda() const { return impl_->pre; }
const std::vector<Formula>& Agenda::constraints() const { return impl_->gamma; }
const AtomUniverse& Agenda::universe() const { return impl_->universe; }
bool Agenda::constraints_trivial() const { return impl_->gamma_trivial; }

Formula Agenda::issue_formula(std::size_t issue, Sign sign) const {
    const Formula& f = impl_->pre.at(issue);
    return sign == Sign::Accept ? f : Formula::negation(f);
}

const std::vector<std::uint32_t>& Agenda::codomain_masks() const { return impl_->codomain; }

bool Agenda::partial_consistent(std::uint32_t decided, std::uint32_t accept) const {
    for (std::uint32_t mask : impl_->codomain)
        if ((mask & decided) == (accept & decided)) return true;
    return false;
}

JudgmentSet Agenda::set_from_mask(std::uint32_t accept_mask) const {
    return JudgmentSet(issue_count(), accept_mask);
}

bool operator==(const Agenda& a, const Agenda& b) {
    if (a.impl_ == b.impl_) return true;
    if (!a.impl_ || !b.impl_) return false;
    return a.impl_->pre == b.impl_->pre && a.impl_->gamma == b.impl_->gamma;
}

std::pair<Agenda, std::vector<std::size_t>> Agenda::project(const std::set<std::size_t>& issues,
                                                            const Limits& limits) const {
    if (issues.empty()) throw precondition_error("empty issue subset");
    std::vector<Formula> pre;
    std::vector<std::size_t> kept;
    for (std::size_t i : issues) {
        if (i >= issue_count()) throw precondition_error("issue index out of range");
        pre.push_back(impl_->pre[i]);
        kept.push_back(i);
    }
    // The parent agenda already validated issues and constraints; relaxed
    // construction keeps sub-agendas legal even when the constraints lose
    // every shared atom under the restriction.
    return {Agenda::make_relaxed(std::move(pre), impl_->gamma, limits), std::move(kept)};
}

// ---------------------------------------------------------------------------
// Profile
// ---------------------------------------------------------------------------

Profile Profile::make(Agenda agenda, std::vector<JudgmentSet> agents, ProfileMode mode,
                      const Limits& limits) {
    (void)limits;
    std::size_t m = agenda.issue_count();
    for (std::size_t i = 0; i < agents.size(); ++i) {
        if (agents[i].issue_count() != m)
            throw input_error("agent " + std::to_string(i) + " has wrong issue count");
        if (mode == ProfileMode::Strict && !is_rational(agents[i], agenda))
            throw precondition_error("agent " + std::to_string(i) +
                                     " is not rational (strict mode)");
    }
    Profile p;
    p.agenda_ = std::move(agenda);
    p.agents_ = std::move(agents);
    p.mode_ = mode;
    return p;
}

std::vector<JudgmentSet> codomain(const Agenda& agenda) {
    std::vector<JudgmentSet> out;
    out.reserve(agenda.codomain_masks().size());
    for (std::uint32_t mask : agenda.codomain_masks()) out.push_back(agenda.set_from_mask(mask));
    return out;
}

bool is_rational(const JudgmentSet& j, const Agenda& agenda) {
    if (j.issue_count() != agenda.issue_count() || !j.complete()) return false;
    std::uint32_t mask = j.accept_mask();
    const auto& cod = agenda.codomain_masks();
    return std::find(cod.begin(), cod.end(), mask) != cod.end();
}

std::vector<JudgmentSet> ext(const JudgmentSet& j, const Agenda& agenda) {
    if (j.issue_count() != agenda.issue_count())
        throw precondition_error("judgment set does not match the agenda");
    std::uint32_t decided = j.decided_mask();
    std::uint32_t accept = j.accept_mask();
    if (!agenda.partial_consistent(decided, accept))
        throw precondition_error("cannot extend an inconsistent judgment set");
    std::vector<JudgmentSet> out;
    for (std::uint32_t mask : agenda.codomain_masks())
        if ((mask & decided) == (accept & decided)) out.push_back(agenda.set_from_mask(mask));
    return out;
}

int support(const Profile& p, std::size_t issue, Sign sign) {
    if (issue >= p.agenda().issue_count()) throw precondition_error("issue index out of range");
    if (sign == Sign::Absent) throw precondition_error("support needs a signed judgment");
    int n = 0;
    for (const auto& j : p.agents())
        if (j.at(issue) == sign) ++n;
    return n;
}

std::vector<std::array<int, 2>> support_counts(const Profile& p) {
    std::vector<std::array<int, 2>> counts(p.agenda().issue_count(), {0, 0});
    for (const auto& j : p.agents()) {
        for (std::size_t i = 0; i < counts.size(); ++i) {
            Sign s = j.at(i);
            if (s == Sign::Reject) ++counts[i][0];
            else if (s == Sign::Accept) ++counts[i][1];
        }
    }
    return counts;
}

std::pair<JudgmentSet, bool> majoritarian_set(const Profile& p) {
    std::size_t m = p.agenda().issue_count();
    auto counts = support_counts(p);
    int n = static_cast<int>(p.agent_count());
    JudgmentSet result(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (2 * counts[i][1] > n) result.set(i, Sign::Accept);
        else if (2 * counts[i][0] > n) result.set(i, Sign::Reject);
    }
    bool consistent = p.agenda().partial_consistent(result.decided_mask(), result.accept_mask());
    return {std::move(result), consistent};
}

JudgmentSet unanimity_set(const Profile& p) {
    std::size_t m = p.agenda().issue_count();
    auto counts = support_counts(p);
    int n = static_cast<int>(p.agent_count());
    JudgmentSet result(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (n > 0 && counts[i][1] == n) result.set(i, Sign::Accept);
        else if (n > 0 && counts[i][0] == n) result.set(i, Sign::Reject);
    }
    return result;
}

Profile restrict_profile(const Profile& p, const std::set<std::size_t>& issues) {
    for (std::size_t i : issues)
        if (i >= p.agenda().issue_count()) throw precondition_error("issue index out of range");
    std::vector<JudgmentSet> agents = p.agents();
    for (auto& j : agents)
        for (std::size_t i = 0; i < j.issue_count(); ++i)
            if (!issues.count(i)) j.set(i, Sign::Absent);
    Profile out;
    out = Profile::make(p.agenda(), std::move(agents), ProfileMode::Open, Limits{});
    return out;
}

Profile project_profile(const Profile& p, const std::set<std::size_t>& issues,
                        const Limits& limits) {
    auto [sub, kept] = p.agenda().project(issues, limits);
    std::vector<JudgmentSet> agents;
    agents.reserve(p.agent_count());
    for (const auto& j : p.agents()) {
        JudgmentSet s(kept.size());
        for (std::size_t t = 0; t < kept.size(); ++t) s.set(t, j.at(kept[t]));
        agents.push_back(std::move(s));
    }
    return Profile::make(sub, std::move(agents), p.mode(), limits);
}

Profile sum_profiles(const Profile& p1, const Profile& p2, const Limits& limits) {
    if (!(p1.agenda() == p2.agenda())) throw precondition_error("agenda mismatch");
    std::vector<JudgmentSet> agents = p1.agents();
    agents.insert(agents.end(), p2.agents().begin(), p2.agents().end());
    ProfileMode mode = (p1.mode() == ProfileMode::Open || p2.mode() == ProfileMode::Open)
                           ? ProfileMode::Open
                           : ProfileMode::Strict;
    return Profile::make(p1.agenda(), std::move(agents), mode, limits);
}

namespace {

std::map<JudgmentSet, int> occurrences(const Profile& p) {
    std::map<JudgmentSet, int> m;
    for (const auto& j : p.agents()) ++m[j];
    return m;
}

} // namespace

bool is_subprofile(const Profile& p1, const Profile& p2) {
    if (!(p1.agenda() == p2.agenda())) throw precondition_error("agenda mismatch");
    auto m1 = occurrences(p1);
    auto m2 = occurrences(p2);
    for (const auto& [j, count] : m1) {
        auto it = m2.find(j);
        if (it == m2.end() || it->second < count) return false;
    }
    return true;
}

Profile common_agents(const Profile& p1, const Profile& p2, const Limits& limits,
                      bool set_semantics) {
    if (!(p1.agenda() == p2.agenda())) throw precondition_error("agenda mismatch");
    auto m2 = occurrences(p2);
    std::map<JudgmentSet, int> taken;
    std::vector<JudgmentSet> agents;
    for (const auto& j : p1.agents()) {
        auto it = m2.find(j);
        if (it == m2.end()) continue;
        int limit = set_semantics ? 1 : it->second;
        if (taken[j] < limit) {
            ++taken[j];
            agents.push_back(j);
        }
    }
    ProfileMode mode = (p1.mode() == ProfileMode::Open || p2.mode() == ProfileMode::Open)
                           ? ProfileMode::Open
                           : ProfileMode::Strict;
    return Profile::make(p1.agenda(), std::move(agents), mode, limits);
}

// ---------------------------------------------------------------------------
// Binary framework conversion
// ---------------------------------------------------------------------------

BinaryProblem to_binary(const Profile& p) {
    if (p.mode() != ProfileMode::Strict)
        throw precondition_error("binary conversion needs a strict-mode profile");
    const Agenda& a = p.agenda();
    std::size_t m = a.issue_count();

    BinaryProblem b;
    b.variables.reserve(m);
    for (std::size_t i = 0; i < m; ++i) b.variables.push_back("x" + std::to_string(i + 1));

    // IC is the projection of the constraint models onto the issue variables:
    // one disjunct per codomain member. Succinctness is out of scope.
    Formula ic;
    for (std::uint32_t mask : a.codomain_masks()) {
        Formula conj;
        for (std::size_t i = 0; i < m; ++i) {
            Formula lit = Formula::atom(b.variables[i]);
            if (((mask >> i) & 1u) == 0) lit = Formula::negation(lit);
            conj = conj.valid() ? Formula::binary(Formula::Kind::And, conj, lit) : lit;
        }
        ic = ic.valid() ? Formula::binary(Formula::Kind::Or, ic, conj) : conj;
    }
    b.integrity_constraints.push_back(ic);

    for (const auto& j : p.agents()) {
        std::vector<int> ballot(m);
        for (std::size_t i = 0; i < m; ++i) ballot[i] = j.at(i) == Sign::Accept ? 1 : 0;
        b.ballots.push_back(std::move(ballot));
    }
    return b;
}

std::pair<Agenda, Profile> from_binary(const BinaryProblem& b, const Limits& limits) {
    std::vector<Formula> pre;
    pre.reserve(b.variables.size());
    for (const auto& v : b.variables) pre.push_back(Formula::atom(v));
    Agenda agenda = Agenda::make(std::move(pre), b.integrity_constraints, limits);
    std::vector<JudgmentSet> agents;
    for (const auto& ballot : b.ballots) {
        if (ballot.size() != b.variables.size()) throw input_error("ballot length mismatch");
        JudgmentSet j(ballot.size());
        for (std::size_t i = 0; i < ballot.size(); ++i)
            j.set(i, ballot[i] ? Sign::Accept : Sign::Reject);
        agents.push_back(std::move(j));
    }
    return {agenda, Profile::make(agenda, std::move(agents), ProfileMode::Strict, limits)};
}

} // namespace ja
