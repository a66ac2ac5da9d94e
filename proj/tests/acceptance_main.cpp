// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. Everything runs at desk scale against the worked examples
// and the bounded property domains.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "ja/agenda_analysis.hpp"
#include "ja/aggregators.hpp"
#include "ja/cli.hpp"
#include "ja/metrics.hpp"
#include "ja/parallel.hpp"
#include "ja/preference.hpp"
#include "ja/properties.hpp"

using namespace ja;
using namespace fixtures;

namespace {

const Limits kLimits{};

int g_failures = 0;

void report(int criterion, const std::string& label, bool ok, const std::string& detail = "") {
    if (ok) {
        std::cout << "PASS criterion-" << criterion << ": " << label << '\n';
    } else {
        ++g_failures;
        std::cout << "FAIL criterion-" << criterion << ": " << label;
        if (!detail.empty()) std::cout << " (" << detail << ")";
        std::cout << '\n';
    }
}

std::vector<JudgmentSet> sorted(std::vector<JudgmentSet> sets) {
    std::sort(sets.begin(), sets.end());
    return sets;
}

std::vector<JudgmentSet> sets_of(std::vector<std::vector<int>> rows) {
    std::vector<JudgmentSet> out;
    for (const auto& r : rows) out.push_back(row(r));
    return sorted(out);
}

bool outcome_equals(const Outcome& o, std::vector<std::vector<int>> rows) {
    return sorted(o.sets) == sets_of(std::move(rows));
}

bool subset_of(const Outcome& a, const Outcome& b) {
    auto bs = sorted(b.sets);
    for (const auto& j : a.sets)
        if (!std::binary_search(bs.begin(), bs.end(), j)) return false;
    return true;
}

RuleSpec named(const char* name) {
    RuleSpec s;
    s.name = name;
    return s;
}

// --------------------------------------------------------------------------

void criterion_1() {
    auto p = doctrinal_profile(kLimits);
    auto m = rule_majority(p);
    report(1, "doctrinal majoritarian set {p, q, !d} flagged inconsistent",
           m.set == row({1, 1, -1}) && !m.consistent);
    report(1, "doctrinal premise-based procedure gives {p, q, d}",
           outcome_equals(rule_pbp(p, {0, 1}), {{1, 1, 1}}));
    auto cbp = rule_cbp(p, {2});
    report(1, "doctrinal conclusion-based procedure gives {!d}", cbp.set == row({0, 0, -1}));
}

void criterion_2() {
    auto p = seventeen_profile(kLimits);
    auto m = rule_majority(p);
    report(2, "running-example majoritarian set inconsistent",
           m.set == row({1, 1, 1, -1, 1}) && !m.consistent);
    report(2, "three maximal consistent subsets of m(P)",
           sorted(max_consistent_subsets(p)) ==
               sets_of({{1, 1, 1, 0, 1}, {1, 1, 0, -1, 1}, {0, 0, 1, -1, 1}}));
    report(2, "mc returns the three listed extensions",
           outcome_equals(rule_mc(p),
                          {{1, 1, 1, 1, 1}, {1, 1, -1, -1, 1}, {-1, -1, 1, -1, 1}}));
    report(2, "mcc keeps the two maximum-cardinality extensions",
           outcome_equals(rule_mcc(p), {{1, 1, 1, 1, 1}, {1, 1, -1, -1, 1}}));
}

void criterion_3() {
    report(3, "ranked agenda on the running example",
           outcome_equals(rule_ra(seventeen_profile(kLimits)), {{-1, -1, 1, -1, 1}}));
    report(3, "ranked agenda forks into the three listed sets",
           outcome_equals(rule_ra(fifteen_profile(kLimits)),
                          {{1, 1, 1, 1, 1, 1}, {-1, 1, -1, 1, -1, 1}, {-1, -1, 1, -1, 1, 1}}));
    report(3, "leximax keeps only the all-accepting set",
           outcome_equals(rule_leximax(fifteen_profile(kLimits)), {{1, 1, 1, 1, 1, 1}}));
}

void criterion_4() {
    auto p = seventeen_profile(kLimits);
    report(4, "median value 49", med_value(p, row({1, 1, 1, 1, 1})) == 49);
    report(4, "median value 48", med_value(p, row({-1, -1, 1, -1, 1})) == 48);
    report(4, "median value 45", med_value(p, row({1, 1, -1, -1, 1})) == 45);
    report(4, "median rule selects the top-valued set",
           outcome_equals(rule_med(p), {{1, 1, 1, 1, 1}}));
}

void criterion_5() {
    auto [outcome, removals] = rule_young_detail(seventeen_profile(kLimits), kLimits);
    report(5, "minimal removal count is three", removals == 3);
    report(5, "young returns both extensions of {q, !(p & q)}",
           outcome_equals(outcome, {{-1, -1, 1, -1, 1}, {-1, -1, 1, -1, -1}}));
}

void criterion_6() {
    auto agenda = doctrinal_agenda(kLimits);
    // Rows: codomain sets; columns: p, !p, q, !q, d, !d. Values computed from
    // the reversal-score definition (fewest flips reaching a rational set
    // holding the opposite sign).
    struct Row {
        std::vector<int> set;
        std::array<int, 6> scores;
    };
    std::vector<Row> table{
        {{1, 1, 1}, {2, 0, 2, 0, 2, 0}},
        {{1, -1, -1}, {1, 0, 0, 2, 0, 2}},
        {{-1, 1, -1}, {0, 2, 1, 0, 0, 2}},
        {{-1, -1, -1}, {0, 1, 0, 1, 0, 3}},
    };
    bool ok = true;
    std::ostringstream detail;
    for (const auto& r : table) {
        JudgmentSet j = row(r.set);
        for (std::size_t i = 0; i < 3; ++i) {
            int accept = score_reversal(i, Sign::Accept, j, agenda);
            int reject = score_reversal(i, Sign::Reject, j, agenda);
            if (accept != r.scores[2 * i] || reject != r.scores[2 * i + 1]) {
                ok = false;
                detail << " issue " << i << " of set " << j.accept_mask();
            }
        }
    }
    report(6, "all 24 reversal scores on the doctrinal codomain", ok, detail.str());
}

void criterion_7() {
    auto outcome =
        rule_extended_cbp(doctrinal_profile(kLimits), {2}, Distance::Hamming, Norm::Sum, kLimits);
    report(7, "extended conclusion-based procedure gives {!p q !d} and {p !q !d}",
           outcome_equals(outcome, {{-1, 1, -1}, {1, -1, -1}}));
}

void criterion_8() {
    auto p = contrast_profile(kLimits);
    Outcome ra = rule_ra(p);
    Outcome mcc = rule_mcc(p);
    Outcome mc = rule_mc(p);

    bool p_in_all_ra = true;
    for (const auto& j : ra.sets)
        if (j.at(0) != Sign::Accept) p_in_all_ra = false;
    report(8, "unanimous p is in every ranked-agenda set", p_in_all_ra);

    bool p_absent_mcc = true;
    for (const auto& j : mcc.sets)
        if (j.at(0) == Sign::Accept) p_absent_mcc = false;
    report(8, "unanimous p is in no maxcard set", p_absent_mcc);

    std::vector<JudgmentSet> unioned = mcc.sets;
    unioned.insert(unioned.end(), ra.sets.begin(), ra.sets.end());
    std::sort(unioned.begin(), unioned.end());
    unioned.erase(std::unique(unioned.begin(), unioned.end()), unioned.end());
    report(8, "mc equals mcc union ra on this profile", sorted(mc.sets) == unioned);
}

void criterion_9() {
    VoteProfile v1{{"a", "b", "c", "d"},
                   {{"a", "c", "d", "b"},
                    {"b", "c", "d", "a"},
                    {"d", "a", "c", "b"},
                    {"a", "b", "d", "c"},
                    {"d", "a", "c", "b"}}};
    VoteProfile v2{{"a", "b", "c"}, {{"a", "b", "c"}, {"b", "c", "a"}, {"c", "a", "b"}}};

    auto w1 = condorcet_winner(v1);
    report(9, "condorcet winner of V1 is d", w1.has_value() && *w1 == "d");
    report(9, "V2 has no condorcet winner", !condorcet_winner(v2).has_value());

    auto b = borda(v1);
    report(9, "borda scores on V1 are a:10 b:5 c:6 d:9",
           b.scores.at("a") == 10 && b.scores.at("b") == 5 && b.scores.at("c") == 6 &&
               b.scores.at("d") == 9 && b.winners == std::set<std::string>{"a"});

    RuleSpec rev = named("scoring");
    rev.scoring = ScoringKind::Reversal;
    bool on_v1 = check_generalization(v1, rev, ReferenceMethod::Borda, GammaMode::Tr, kLimits);

    std::mt19937_64 rng(kLimits.seed);
    bool on_random = true;
    for (int i = 0; i < 50 && on_random; ++i) {
        int m = 2 + static_cast<int>(rng() % 3);
        int n = 1 + static_cast<int>(rng() % 5);
        std::vector<std::string> options;
        for (int t = 0; t < m; ++t) options.push_back(std::string(1, static_cast<char>('a' + t)));
        VoteProfile v;
        v.options = options;
        for (int t = 0; t < n; ++t) {
            std::vector<std::string> ballot = options;
            for (std::size_t s = ballot.size(); s > 1; --s)
                std::swap(ballot[s - 1], ballot[rng() % s]);
            v.ballots.push_back(std::move(ballot));
        }
        if (!check_generalization(v, rev, ReferenceMethod::Borda, GammaMode::Tr, kLimits))
            on_random = false;
    }
    report(9, "reversal scoring reproduces borda winners on V1 and 50 seeded profiles",
           on_v1 && on_random);
}

void criterion_10() {
    SearchBounds bounds;
    bounds.max_atoms = 3;
    bounds.max_issues = 4;
    bounds.max_agents = 3;
    bounds.random_instances = 200;
    bounds.seed = kLimits.seed;

    long long instances = 0;
    bool refinement_ok = true, equality_ok = true, preservation_ok = true;

    auto visit = [&](const Profile& p) {
        ++instances;
        Outcome mc = rule_mc(p);
        Outcome mcc = rule_mcc(p);
        Outcome ra = rule_ra(p);
        Outcome leximax = rule_leximax(p);
        Outcome med = rule_med(p);
        Outcome young = rule_young(p, kLimits);
        Outcome dist = rule_distance_based(p, Distance::Hamming, Norm::Sum);
        Outcome simple = rule_scoring(p, ScoringKind::Simple);

        if (!subset_of(mcc, mc) || !subset_of(leximax, ra) || !subset_of(ra, mc) ||
            !subset_of(med, mc))
            refinement_ok = false;
        if (sorted(med.sets) != sorted(dist.sets) || sorted(med.sets) != sorted(simple.sets))
            equality_ok = false;

        auto [mset, consistent] = majoritarian_set(p);
        if (consistent) {
            auto expected = sorted(ext(mset, p.agenda()));
            for (const Outcome* o : {&mc, &mcc, &ra, &leximax, &med, &young})
                if (sorted(o->sets) != expected) preservation_ok = false;
        }
        return refinement_ok && equality_ok && preservation_ok;
    };

    for (const auto& agenda : agenda_family(bounds, kLimits)) {
        for_each_profile(agenda, bounds, kLimits, visit);
        if (!(refinement_ok && equality_ok && preservation_ok)) break;
    }
    if (refinement_ok && equality_ok && preservation_ok)
        for_each_random_profile(bounds, kLimits, visit);

    std::ostringstream scale;
    scale << instances << " instances";
    report(10, "refinements mcc<=mc, leximax<=ra<=mc, med<=mc (" + scale.str() + ")",
           refinement_ok);
    report(10, "simple scoring = med = hamming-sum distance rule", equality_ok);
    report(10, "mc/mcc/ra/leximax/med/young preserve consistent majorities", preservation_ok);

    // Hamming dominates geodesic and both satisfy the metric axioms.
    bool metric_ok = true;
    for (const auto& agenda : agenda_family(bounds, kLimits)) {
        auto graph = build_agenda_graph(agenda);
        const auto& v = graph.vertices;
        for (std::size_t a = 0; a < v.size() && metric_ok; ++a)
            for (std::size_t b = 0; b < v.size() && metric_ok; ++b) {
                int dh = std::popcount(v[a] ^ v[b]);
                int dg = graph.dist[a][b];
                if (dg < 0 || dg > dh) metric_ok = false;
                if ((dg == 0) != (a == b)) metric_ok = false;
                if (dg != graph.dist[b][a]) metric_ok = false;
                for (std::size_t c = 0; c < v.size() && metric_ok; ++c)
                    if (graph.dist[a][c] > graph.dist[a][b] + graph.dist[b][c])
                        metric_ok = false;
            }
    }
    report(10, "metric axioms and d_H >= d_G on every family codomain", metric_ok);

    // Anonymity across the rule inventory on the seeded random stream.
    bool anonymity_ok = true;
    std::vector<RuleSpec> rules;
    for (const auto* name : {"mc", "mcc", "ra", "leximax", "med", "young", "mrv"})
        rules.push_back(named(name));
    RuleSpec dist_max = named("dist");
    dist_max.norm = Norm::Max;
    rules.push_back(dist_max);
    RuleSpec dist_drastic = named("dist");
    dist_drastic.distance = Distance::Drastic;
    rules.push_back(dist_drastic);
    rules.push_back(named("dist"));
    RuleSpec rev = named("scoring");
    rev.scoring = ScoringKind::Reversal;
    rules.push_back(rev);
    rules.push_back(named("scoring"));

    SearchBounds anon_bounds = bounds;
    anon_bounds.random_instances = 60;
    for_each_random_profile(anon_bounds, kLimits, [&](const Profile& p) {
        for (const auto& spec : rules)
            if (!check_anonymity(spec, p, kLimits).holds_on_instance) anonymity_ok = false;
        return anonymity_ok;
    });
    report(10, "anonymity holds for every rule on the seeded stream", anonymity_ok);

    // Condorcet existence <=> majority consistency of the translated profile,
    // checked in both directions exactly as stated.
    bool condorcet_ok = true;
    std::string condorcet_detail;
    auto note_condorcet = [&](const VoteProfile& v, bool winner, bool consistent) {
        if (winner == consistent) return;
        condorcet_ok = false;
        if (condorcet_detail.empty()) {
            std::ostringstream os;
            os << "counterexample:";
            for (const auto& ballot : v.ballots) {
                os << ' ';
                for (const auto& o : ballot) os << o;
            }
            os << (winner ? "; winner above a majority cycle"
                          : "; pairwise tie without a winner");
            condorcet_detail = os.str();
        }
    };
    {
        // Exhaustive over three options and up to three ballots.
        std::vector<std::string> options{"a", "b", "c"};
        std::vector<std::vector<std::string>> orders;
        std::vector<std::string> perm = options;
        std::sort(perm.begin(), perm.end());
        do orders.push_back(perm);
        while (std::next_permutation(perm.begin(), perm.end()));
        for (std::size_t count = 1; count <= 3 && condorcet_ok; ++count) {
            std::vector<std::size_t> pick(count, 0);
            while (condorcet_ok) {
                VoteProfile v;
                v.options = options;
                for (std::size_t i : pick) v.ballots.push_back(orders[i]);
                Profile p = votes_to_profile(v, GammaMode::Tr, kLimits);
                auto [mset, consistent] = majoritarian_set(p);
                (void)mset;
                note_condorcet(v, condorcet_winner(v).has_value(), consistent);
                std::size_t pos = count;
                while (pos > 0 && pick[pos - 1] == orders.size() - 1) pick[--pos] = 0;
                if (pos == 0) break;
                ++pick[pos - 1];
            }
        }
        // Plus the seeded stream up to four options and five ballots.
        std::mt19937_64 rng(kLimits.seed + 1);
        for (int i = 0; i < 50 && condorcet_ok; ++i) {
            int m = 2 + static_cast<int>(rng() % 3);
            int n = 1 + static_cast<int>(rng() % 5);
            VoteProfile v;
            for (int t = 0; t < m; ++t)
                v.options.push_back(std::string(1, static_cast<char>('a' + t)));
            for (int t = 0; t < n; ++t) {
                std::vector<std::string> ballot = v.options;
                for (std::size_t s = ballot.size(); s > 1; --s)
                    std::swap(ballot[s - 1], ballot[rng() % s]);
                v.ballots.push_back(std::move(ballot));
            }
            Profile p = votes_to_profile(v, GammaMode::Tr, kLimits);
            auto [mset, consistent] = majoritarian_set(p);
            (void)mset;
            note_condorcet(v, condorcet_winner(v).has_value(), consistent);
        }
    }
    report(10, "condorcet winner exists iff the translated profile is majority-consistent",
           condorcet_ok, condorcet_detail);

    auto y_verdict = check_agenda_separability(named("young"), seventeen_profile(kLimits),
                                               {0, 1, 2, 3}, {4}, kLimits);
    report(10, "young agenda-separability counterexample reproduced on the running partition",
           !y_verdict.holds_on_instance && y_verdict.witness.has_value());
}

void criterion_11() {
    std::string dir = JA_FIXTURES_DIR;
    std::vector<std::vector<std::string>> commands{
        {"aggregate", "--rule", "med", "--input", dir + "/p17.json"},
        {"aggregate", "--rule", "ra", "--input", dir + "/p15.json"},
        {"aggregate", "--rule", "young", "--input", dir + "/p17.json"},
        {"aggregate", "--rule", "full", "--input", dir + "/pdp.json"},
        {"aggregate", "--rule", "ecbp", "--conclusions", "2", "--input", dir + "/pdp.json"},
        {"codomain", "--input", dir + "/doctrinal_agenda.json"},
        {"agenda-props", "--input", dir + "/doctrinal_agenda.json"},
        {"vote", "--method", "borda", "--input", dir + "/v1.json"},
        {"vote", "--method", "via-ja:scoring", "--scoring", "reversal", "--input",
         dir + "/v1.json"},
        {"convert", "--to", "binary", "--input", dir + "/p17.json"},
        {"check", "--rule", "mc", "--property", "majority-preservation", "--bounds",
         "a=2,m=2,n=2,random=10", "--seed", "5"},
    };
    bool ok = true;
    for (const auto& cmd : commands) {
        auto run_once = [&](const char* threads) {
            setenv("JA_THREADS", threads, 1);
            std::ostringstream out, err;
            int code = ja::cli::run(cmd, out, err);
            return std::pair<int, std::string>{code, out.str()};
        };
        auto first = run_once("1");
        auto second = run_once("1");
        auto threaded = run_once("4");
        unsetenv("JA_THREADS");
        par::init_from_env();
        if (first.first != 0 || first.second != second.second ||
            first.second != threaded.second)
            ok = false;
    }
    report(11, "golden commands byte-identical across runs and thread counts", ok);
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();

    if (g_failures == 0) {
        std::cout << "ACCEPTANCE: all criteria passed\n";
        return 0;
    }
    std::cout << "ACCEPTANCE: " << g_failures << " criterion check(s) failed\n";
    return 1;
}
