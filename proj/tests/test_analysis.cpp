#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "ja/agenda_analysis.hpp"
#include "ja/errors.hpp"
#include "ja/preference.hpp"

using namespace ja;
using namespace fixtures;

namespace {
const Limits kLimits{};
}

TEST_CASE("agenda report for the doctrinal agenda") {
    auto report = agenda_report(doctrinal_agenda(kLimits), kLimits);
    CHECK(report.closed_under_atoms);
    CHECK_FALSE(report.simple); // {p, q, !d} is minimally inconsistent
    CHECK(report.smallest_k_median == 3);

    bool found_pqnd = false;
    for (const auto& mis : report.minimal_inconsistent_subsets) {
        if (mis == std::vector<SignedJudgment>{{0, Sign::Accept},
                                               {1, Sign::Accept},
                                               {2, Sign::Reject}})
            found_pqnd = true;
    }
    CHECK(found_pqnd);
}

TEST_CASE("single-atom agendas are simple") {
    auto agenda = Agenda::make({parse_formula("p")}, {}, kLimits);
    auto report = agenda_report(agenda, kLimits);
    CHECK(report.simple);
    CHECK(report.smallest_k_median == 2);
    // The only minimal inconsistency is the trivial pair.
    REQUIRE(report.minimal_inconsistent_subsets.size() == 1);
    CHECK(report.minimal_inconsistent_subsets[0].size() == 2);
}

TEST_CASE("path-connectivity") {
    // t is isolated on the running agenda.
    CHECK_FALSE(agenda_report(seventeen_agenda(kLimits), kLimits).path_connected);
    // Doctrinal negatives never conditionally entail a positive judgment.
    CHECK_FALSE(agenda_report(doctrinal_agenda(kLimits), kLimits).path_connected);
    // The pairwise-preference agenda over three options is totally blocked.
    auto pref = preference_agenda({"a", "b", "c"}, GammaMode::Tr, kLimits);
    CHECK(agenda_report(pref, kLimits).path_connected);

    // The co2 agenda is not closed under atoms.
    auto co2 = Agenda::make(
        {parse_formula("p"), parse_formula("(p & r) -> q"), parse_formula("q")}, {}, kLimits);
    CHECK_FALSE(agenda_report(co2, kLimits).closed_under_atoms);
    CHECK(agenda_report(doctrinal_agenda(kLimits), kLimits).closed_under_atoms);
}

TEST_CASE("independent partitions") {
    SUBCASE("party-goers splits into drinks and snacks") {
        auto result = check_independent_partition(party_agenda(kLimits), {0, 1}, {2, 3}, kLimits);
        CHECK(result.semantic);
        CHECK_FALSE(result.syntactic.has_value()); // constraints are not trivial
    }
    SUBCASE("running agenda splits off t") {
        auto result =
            check_independent_partition(seventeen_agenda(kLimits), {0, 1, 2, 3}, {4}, kLimits);
        CHECK(result.semantic);
        REQUIRE(result.syntactic.has_value());
        CHECK(*result.syntactic);
    }
    SUBCASE("doctrinal agenda does not split") {
        auto result = check_independent_partition(doctrinal_agenda(kLimits), {0}, {1, 2}, kLimits);
        CHECK_FALSE(result.semantic);
    }
    SUBCASE("empty side is rejected") {
        CHECK_THROWS_AS(check_independent_partition(doctrinal_agenda(kLimits), {0, 1, 2}, {},
                                                    kLimits),
                        precondition_error);
    }
    SUBCASE("overlap is rejected") {
        CHECK_THROWS_AS(check_independent_partition(doctrinal_agenda(kLimits), {0, 1}, {1, 2},
                                                    kLimits),
                        precondition_error);
    }
}

TEST_CASE("independent overlapping decompositions") {
    SUBCASE("the worked eight-issue example") {
        auto agenda = Agenda::make(
            {parse_formula("p"), parse_formula("p -> q"), parse_formula("p -> r"),
             parse_formula("q"), parse_formula("r"), parse_formula("s"),
             parse_formula("s -> q"), parse_formula("s -> r")},
            {}, kLimits);
        CHECK(check_iod(agenda, {0, 1, 2, 3, 4}, {3, 4, 5, 6, 7}, kLimits));
    }
    SUBCASE("independent partitions are degenerate IODs") {
        CHECK(check_iod(seventeen_agenda(kLimits), {0, 1, 2, 3}, {4}, kLimits));
    }
    SUBCASE("doctrinal overlap on q fails") {
        CHECK_FALSE(check_iod(doctrinal_agenda(kLimits), {0, 1}, {1, 2}, kLimits));
    }
    SUBCASE("non-cover is rejected") {
        CHECK_THROWS_AS(check_iod(doctrinal_agenda(kLimits), {0}, {1}, kLimits),
                        precondition_error);
    }
}

TEST_CASE("restricted domains") {
    SUBCASE("unanimous profiles are single-plateaued") {
        auto agenda = doctrinal_agenda(kLimits);
        Profile unanimous = Profile::make(agenda, {row({1, 1, 1}), row({1, 1, 1})},
                                          ProfileMode::Strict, kLimits);
        auto report = restricted_domain_report(unanimous, kLimits);
        CHECK(report.single_plateaued);
        CHECK(report.single_canyoned);
        CHECK(report.unidimensionally_aligned);
        CHECK(report.unidimensionally_ordered);
    }
    SUBCASE("doctrinal profile, exhaustive order search") {
        auto report = restricted_domain_report(doctrinal_profile(kLimits), kLimits);
        // No agent order places each middle set between its neighbours: every
        // pair of doctrinal profile sets shares a judgment the third lacks.
        CHECK_FALSE(report.unidimensionally_aligned);
        // The three accepted sets pairwise intersect with an empty triple
        // intersection, so no linear order makes them all intervals.
        CHECK_FALSE(report.single_plateaued);
        CHECK_FALSE(report.single_canyoned);
        CHECK_FALSE(report.unidimensionally_ordered);
    }
    SUBCASE("witness orders replay") {
        auto agenda = doctrinal_agenda(kLimits);
        Profile p = Profile::make(agenda, {row({1, 1, 1}), row({1, -1, -1})},
                                  ProfileMode::Strict, kLimits);
        auto report = restricted_domain_report(p, kLimits);
        CHECK(report.single_plateaued);
        {
            REQUIRE(report.plateau_order.has_value());
            const auto& order = *report.plateau_order;
            REQUIRE(order.size() == 2 * p.agenda().issue_count());
            // Each agent's accepted judgments occupy consecutive positions.
            for (const auto& agent : p.agents()) {
                int first = -1, last = -1, count = 0;
                for (std::size_t i = 0; i < order.size(); ++i) {
                    if (agent.at(order[i].issue) == order[i].sign) {
                        if (first < 0) first = static_cast<int>(i);
                        last = static_cast<int>(i);
                        ++count;
                    }
                }
                CHECK(last - first + 1 == count);
            }
        }
    }
    SUBCASE("caps are enforced") {
        Limits tight;
        tight.domain_search_max = 2;
        CHECK_THROWS_AS(restricted_domain_report(doctrinal_profile(kLimits), tight),
                        cap_exceeded);
    }
}

TEST_CASE("canyoned implies plateaued on generated small profiles") {
    auto agenda = party_agenda(kLimits);
    auto cod = codomain(agenda);
    // All profiles of up to two agents over the party codomain.
    for (std::size_t a = 0; a < cod.size(); ++a) {
        for (std::size_t b = a; b < cod.size(); ++b) {
            Profile p = Profile::make(agenda, {cod[a], cod[b]}, ProfileMode::Strict, kLimits);
            auto report = restricted_domain_report(p, kLimits);
            if (report.single_canyoned) CHECK(report.single_plateaued);
        }
    }
}
