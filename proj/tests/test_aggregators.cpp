#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "ja/aggregators.hpp"
#include "ja/errors.hpp"

using namespace ja;
using namespace fixtures;

namespace {

const Limits kLimits{};

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

Profile unanimous_profile(const Agenda& agenda, const JudgmentSet& j, int n) {
    return Profile::make(agenda, std::vector<JudgmentSet>(static_cast<std::size_t>(n), j),
                         ProfileMode::Strict, kLimits);
}

} // namespace

TEST_CASE("majority rule") {
    auto r = rule_majority(doctrinal_profile(kLimits));
    CHECK(r.set == row({1, 1, -1}));
    CHECK_FALSE(r.consistent);

    auto r17 = rule_majority(seventeen_profile(kLimits));
    CHECK(r17.set == row({1, 1, 1, -1, 1}));
    CHECK_FALSE(r17.consistent);
}

TEST_CASE("premise-based procedure") {
    auto p = doctrinal_profile(kLimits);
    CHECK(outcome_equals(rule_pbp(p, {0, 1}), {{1, 1, 1}}));
    CHECK(outcome_equals(rule_pbp(p, {2}), {{1, -1, -1}, {-1, 1, -1}, {-1, -1, -1}}));

    auto agenda = doctrinal_agenda(kLimits);
    Profile unanimous = unanimous_profile(agenda, row({1, -1, -1}), 3);
    CHECK(outcome_equals(rule_pbp(unanimous, {0, 1}), {{1, -1, -1}}));

    CHECK_THROWS_AS(rule_pbp(p, {0, 1, 2}), precondition_error); // not a strict subset
    CHECK_THROWS_AS(rule_pbp(p, {}), precondition_error);

    // Inconsistent premise majority is an error, not a silent repair.
    CHECK_THROWS_AS(rule_pbp(seventeen_profile(kLimits), {0, 1, 2, 3}), precondition_error);
}

TEST_CASE("conclusion-based procedure") {
    auto p = doctrinal_profile(kLimits);
    auto r = rule_cbp(p, {2});
    CHECK(r.set == row({0, 0, -1}));
    CHECK(r.consistent);

    // Degenerate split: all issues as conclusions gives m(P).
    auto all = rule_cbp(p, {0, 1, 2});
    CHECK(all.set == rule_majority(p).set);

    // Even-n ties leave the conclusion absent.
    auto agenda = doctrinal_agenda(kLimits);
    Profile split = Profile::make(agenda, {row({1, 1, 1}), row({1, -1, -1})},
                                  ProfileMode::Strict, kLimits);
    CHECK(rule_cbp(split, {2}).set == row({0, 0, 0}));
}

TEST_CASE("extended conclusion-based procedure") {
    auto p = doctrinal_profile(kLimits);
    auto outcome = rule_extended_cbp(p, {2}, Distance::Hamming, Norm::Sum, kLimits);
    CHECK(outcome_equals(outcome, {{-1, 1, -1}, {1, -1, -1}}));

    // Step-2 value check: the all-reject candidate sums 3+1+1 = 5 against the
    // profile while the two winners each sum 4.
    auto dp = doctrinal_agenda(kLimits);
    auto sum_to = [&](const JudgmentSet& candidate) {
        Profile unanimous = Profile::make(dp, std::vector<JudgmentSet>(3, candidate),
                                          ProfileMode::Strict, kLimits);
        return profile_distance(p, unanimous, Distance::Hamming, Norm::Sum);
    };
    CHECK(sum_to(row({-1, -1, -1})) == 5);
    CHECK(sum_to(row({-1, 1, -1})) == 4);
    CHECK(sum_to(row({1, -1, -1})) == 4);

    auto agenda = doctrinal_agenda(kLimits);
    Profile unanimous = unanimous_profile(agenda, row({-1, 1, -1}), 3);
    CHECK(outcome_equals(rule_extended_cbp(unanimous, {2}, Distance::Hamming, Norm::Sum, kLimits),
                         {{-1, 1, -1}}));

    CHECK_THROWS_AS(rule_extended_cbp(p, {2}, Distance::Geodesic, Norm::Sum, kLimits),
                    precondition_error);
}

TEST_CASE("quota rules") {
    auto p17 = seventeen_profile(kLimits);
    auto uq12 = rule_quota(p17, 12);
    CHECK(uq12.set == row({0, 0, 1, 0, 0}));
    auto uq16 = rule_quota(p17, 16);
    CHECK(uq16.set == row({0, 0, 0, 0, 0}));

    // k = floor(n/2) coincides with majority for odd n.
    auto uq8 = rule_quota(p17, 8);
    CHECK(uq8.set == rule_majority(p17).set);

    CHECK_THROWS_AS(rule_quota(p17, 0), precondition_error);
    CHECK_THROWS_AS(rule_quota(p17, 18), precondition_error);

    // Below the majority threshold an issue can clear the quota with both
    // signs; the result is no longer a verdict per issue and is refused.
    auto agenda = doctrinal_agenda(kLimits);
    Profile five = Profile::make(agenda,
                                 {row({1, 1, 1}), row({1, 1, 1}), row({1, -1, -1}),
                                  row({-1, 1, -1}), row({-1, -1, -1})},
                                 ProfileMode::Strict, kLimits);
    CHECK_THROWS_AS(rule_quota(five, 1), precondition_error);
    auto uq2 = rule_quota(five, 2);
    CHECK(uq2.set == row({1, 1, -1}));
    CHECK_FALSE(uq2.consistent);
}

TEST_CASE("issue-by-issue unanimity") {
    CHECK(rule_unanimity(doctrinal_profile(kLimits)).set == row({0, 0, 0}));
    auto contrast = contrast_profile(kLimits);
    auto r = rule_unanimity(contrast);
    CHECK(r.set.at(0) == Sign::Accept);
    CHECK(r.set.decided_count() == 1);
}

TEST_CASE("maximum Condorcet rule") {
    auto p17 = seventeen_profile(kLimits);

    auto subsets = max_consistent_subsets(p17);
    CHECK(sorted(subsets) == sets_of({{1, 1, 1, 0, 1}, {1, 1, 0, -1, 1}, {0, 0, 1, -1, 1}}));

    CHECK(outcome_equals(rule_mc(p17), {{1, 1, 1, 1, 1}, {1, 1, -1, -1, 1}, {-1, -1, 1, -1, 1}}));

    // Majority-consistent profiles reduce to ext(m(P)).
    auto agenda = doctrinal_agenda(kLimits);
    Profile unanimous = unanimous_profile(agenda, row({1, 1, 1}), 3);
    CHECK(outcome_equals(rule_mc(unanimous), {{1, 1, 1}}));
}

TEST_CASE("maxcard Condorcet rule") {
    auto p17 = seventeen_profile(kLimits);
    CHECK(outcome_equals(rule_mcc(p17), {{1, 1, 1, 1, 1}, {1, 1, -1, -1, 1}}));

    // MCC refines MC here.
    auto mc = sorted(rule_mc(p17).sets);
    for (const auto& j : rule_mcc(p17).sets)
        CHECK(std::binary_search(mc.begin(), mc.end(), j));

    // The contrast profile: MCC keeps only the !p set, dropping unanimous p.
    auto contrast = contrast_profile(kLimits);
    auto mcc = rule_mcc(contrast);
    REQUIRE(mcc.sets.size() == 1);
    CHECK(mcc.sets[0].at(0) == Sign::Reject);
}

TEST_CASE("ranked agenda rule") {
    auto p17 = seventeen_profile(kLimits);
    CHECK(outcome_equals(rule_ra(p17), {{-1, -1, 1, -1, 1}}));

    auto p15 = fifteen_profile(kLimits);
    CHECK(outcome_equals(rule_ra(p15), {{1, 1, 1, 1, 1, 1},
                                        {-1, 1, -1, 1, -1, 1},
                                        {-1, -1, 1, -1, 1, 1}}));

    auto agenda = doctrinal_agenda(kLimits);
    Profile unanimous = unanimous_profile(agenda, row({-1, 1, -1}), 2);
    CHECK(outcome_equals(rule_ra(unanimous), {{-1, 1, -1}}));
}

TEST_CASE("leximax rule") {
    auto p15 = fifteen_profile(kLimits);
    CHECK(outcome_equals(rule_leximax(p15), {{1, 1, 1, 1, 1, 1}}));

    // leximax refines ra on the fixtures.
    for (auto make_profile : {seventeen_profile, fifteen_profile, doctrinal_profile}) {
        Profile p = make_profile(kLimits);
        auto ra = sorted(rule_ra(p).sets);
        for (const auto& j : rule_leximax(p).sets)
            CHECK(std::binary_search(ra.begin(), ra.end(), j));
    }

    auto agenda = doctrinal_agenda(kLimits);
    Profile unanimous = unanimous_profile(agenda, row({1, 1, 1}), 3);
    CHECK(outcome_equals(rule_leximax(unanimous), {{1, 1, 1}}));
}

TEST_CASE("median rule values match the worked table") {
    auto p17 = seventeen_profile(kLimits);
    CHECK(med_value(p17, row({1, 1, 1, 1, 1})) == 49);
    CHECK(med_value(p17, row({-1, -1, 1, -1, 1})) == 48);
    CHECK(med_value(p17, row({1, 1, -1, -1, 1})) == 45);
    CHECK(med_value(p17, row({1, 1, 1, 1, -1})) == 46);
    CHECK(med_value(p17, row({-1, -1, -1, -1, -1})) == 36);
    CHECK(outcome_equals(rule_med(p17), {{1, 1, 1, 1, 1}}));
}

TEST_CASE("young rule") {
    auto p17 = seventeen_profile(kLimits);
    auto [outcome, removals] = rule_young_detail(p17, kLimits);
    CHECK(removals == 3);
    CHECK(outcome_equals(outcome, {{-1, -1, 1, -1, 1}, {-1, -1, 1, -1, -1}}));

    // Majority-consistent profiles need zero removals.
    auto agenda = doctrinal_agenda(kLimits);
    Profile unanimous = unanimous_profile(agenda, row({1, 1, 1}), 3);
    auto [ou, ru] = rule_young_detail(unanimous, kLimits);
    CHECK(ru == 0);
    CHECK(outcome_equals(ou, {{1, 1, 1}}));

    // Young differs from MC on the running example.
    CHECK(sorted(rule_young(p17, kLimits).sets) != sorted(rule_mc(p17).sets));
}

TEST_CASE("distance-based rules") {
    auto p17 = seventeen_profile(kLimits);
    CHECK(sorted(rule_distance_based(p17, Distance::Hamming, Norm::Sum).sets) ==
          sorted(rule_med(p17).sets));

    // Drastic-sum picks plurality sets.
    auto agenda = doctrinal_agenda(kLimits);
    Profile plur = Profile::make(
        agenda, {row({1, 1, 1}), row({1, 1, 1}), row({1, -1, -1}), row({-1, 1, -1})},
        ProfileMode::Strict, kLimits);
    CHECK(outcome_equals(rule_distance_based(plur, Distance::Drastic, Norm::Sum), {{1, 1, 1}}));

    // Unanimity for every distance/norm combination.
    for (Distance d : {Distance::Drastic, Distance::Hamming, Distance::Geodesic})
        for (Norm n : {Norm::Sum, Norm::Max}) {
            Profile unanimous = unanimous_profile(agenda, row({1, -1, -1}), 3);
            CHECK(outcome_equals(rule_distance_based(unanimous, d, n), {{1, -1, -1}}));
        }
}

TEST_CASE("scoring rules") {
    auto p17 = seventeen_profile(kLimits);
    CHECK(sorted(rule_scoring(p17, ScoringKind::Simple).sets) == sorted(rule_med(p17).sets));

    // Reversal scoring on the doctrinal profile, against hand-computed sums.
    auto p = doctrinal_profile(kLimits);
    CHECK(scoring_value(p, row({1, 1, 1}), ScoringKind::Reversal) == 6 + 1 + 1);
    CHECK(scoring_value(p, row({1, -1, -1}), ScoringKind::Reversal) == 2 + 5 + 2);
    CHECK(scoring_value(p, row({-1, 1, -1}), ScoringKind::Reversal) == 2 + 2 + 5);
    CHECK(scoring_value(p, row({-1, -1, -1}), ScoringKind::Reversal) == 0 + 4 + 4);
    CHECK(outcome_equals(rule_scoring(p, ScoringKind::Reversal),
                         {{1, -1, -1}, {-1, 1, -1}}));

    auto agenda = doctrinal_agenda(kLimits);
    Profile unanimous = unanimous_profile(agenda, row({-1, -1, -1}), 2);
    CHECK(outcome_equals(rule_scoring(unanimous, ScoringKind::Reversal), {{-1, -1, -1}}));
}

TEST_CASE("full rule") {
    auto p = doctrinal_profile(kLimits);
    auto outcome = rule_full(p, Distance::Hamming, Norm::Sum,
                             RuleSpec::IdealClass::MajorityConsistent, kLimits);
    // Exhaustive search over the 64 candidate profiles: the two distance-1
    // repairs flip one agent to the codomain set at Hamming distance one.
    CHECK(outcome_equals(outcome, {{1, -1, -1}, {-1, 1, -1}}));

    // Majority-consistent profiles are their own nearest ideal profile.
    auto agenda = doctrinal_agenda(kLimits);
    Profile unanimous = unanimous_profile(agenda, row({1, 1, 1}), 3);
    CHECK(outcome_equals(rule_full(unanimous, Distance::Hamming, Norm::Sum,
                                   RuleSpec::IdealClass::MajorityConsistent, kLimits),
                         {{1, 1, 1}}));

    // The unanimous ideal class collapses to the plain distance rule.
    for (Norm n : {Norm::Sum, Norm::Max}) {
        auto lhs = rule_full(p, Distance::Hamming, n, RuleSpec::IdealClass::Unanimous, kLimits);
        auto rhs = rule_distance_based(p, Distance::Hamming, n);
        CHECK(sorted(lhs.sets) == sorted(rhs.sets));
    }

    Limits tight = kLimits;
    tight.full_max_agents = 2;
    CHECK_THROWS_AS(
        rule_full(p, Distance::Hamming, Norm::Sum, RuleSpec::IdealClass::MajorityConsistent,
                  tight),
        cap_exceeded);
}

TEST_CASE("most representative voter") {
    auto p17 = seventeen_profile(kLimits);
    auto outcome = rule_mrv(p17, Distance::Hamming, Norm::Sum);
    CHECK(outcome_equals(outcome, {{1, 1, 1, 1, 1}}));

    auto agenda = doctrinal_agenda(kLimits);
    Profile single = Profile::make(agenda, {row({-1, 1, -1})}, ProfileMode::Strict, kLimits);
    CHECK(outcome_equals(rule_mrv(single, Distance::Hamming, Norm::Sum), {{-1, 1, -1}}));
}

TEST_CASE("open-mode aggregation uses raw support counts") {
    auto agenda = doctrinal_agenda(kLimits);
    // Two partial agents and one inconsistent one.
    Profile open = Profile::make(
        agenda, {row({1, 0, 0}), row({1, 1, -1}), row({0, 0, -1})}, ProfileMode::Open, kLimits);
    for (const auto* name : {"mc", "mcc", "ra", "leximax", "med", "young"}) {
        RuleSpec spec;
        spec.name = name;
        Outcome o = apply_rule(open, spec, kLimits);
        CHECK(!o.sets.empty());
        for (const auto& j : o.sets) CHECK(is_rational(j, agenda));
    }
    // Strict-mode rules refuse open profiles.
    CHECK_THROWS_AS(rule_scoring(open, ScoringKind::Simple), precondition_error);
    CHECK_THROWS_AS(rule_distance_based(open, Distance::Hamming, Norm::Sum),
                    precondition_error);
    // Drastic distance accepts any mode.
    CHECK_NOTHROW(rule_distance_based(open, Distance::Drastic, Norm::Sum));
}

TEST_CASE("ranked agenda branches across all exclusion patterns") {
    // On the ten-issue contrast profile the tie block of support two forks
    // three ways per implication group: keep the implication and one
    // positive disjunct (two ways) or reject the implication outright.
    auto outcome = rule_ra(contrast_profile(kLimits));
    CHECK(outcome.sets.size() == 27);
    for (const auto& j : outcome.sets) CHECK(j.at(0) == Sign::Accept);
}

TEST_CASE("outcomes are canonically ordered and rational") {
    for (auto make_profile : {seventeen_profile, fifteen_profile, doctrinal_profile}) {
        Profile p = make_profile(kLimits);
        for (const auto* name : {"mc", "mcc", "ra", "leximax", "med", "young"}) {
            RuleSpec spec;
            spec.name = name;
            Outcome o = apply_rule(p, spec, kLimits);
            CHECK(std::is_sorted(o.sets.begin(), o.sets.end()));
            CHECK(!o.sets.empty());
            for (const auto& j : o.sets) CHECK(is_rational(j, p.agenda()));
        }
    }
}

TEST_CASE("tie-break post-processing") {
    auto p = doctrinal_profile(kLimits);
    auto full = rule_extended_cbp(p, {2}, Distance::Hamming, Norm::Sum, kLimits);
    REQUIRE(full.sets.size() == 2);
    auto broken = tie_break(full);
    CHECK(broken.sets.size() == 1);
    CHECK(broken.sets[0] == full.sets[0]);
}
