#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "ja/aggregators.hpp"
#include "ja/parallel.hpp"

using namespace ja;

TEST_CASE("parallel kernels agree with the serial reference") {
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 20; ++trial) {
        std::uint64_t n = 1 + rng() % 20000;
        std::uint64_t salt = rng();
        auto pred = [salt](std::uint64_t i) { return ((i * 2654435761u) ^ salt) % 7 == 0; };
        auto score = [salt](std::uint64_t i) {
            return static_cast<long long>(((i * 40503u) ^ salt) % 1000);
        };

        CHECK(par::any_of(n, pred) == par::serial::any_of(n, pred));
        CHECK(par::filter_indices(n, pred) == par::serial::filter_indices(n, pred));
        CHECK(par::argmin<long long>(n, score) == par::serial::argmin<long long>(n, score));
        CHECK(par::argmax<long long>(n, score) == par::serial::argmax<long long>(n, score));
    }
}

TEST_CASE("argmin keeps every optimal index in ascending order") {
    auto score = [](std::uint64_t i) { return static_cast<long long>(i % 3); };
    auto [best, winners] = par::argmin<long long>(9000, score);
    CHECK(best == 0);
    CHECK(winners.size() == 3000);
    CHECK(std::is_sorted(winners.begin(), winners.end()));
    CHECK(winners[0] == 0);
    CHECK(winners[1] == 3);
}

TEST_CASE("rule outcomes are identical across thread counts") {
    const Limits limits{};
    auto p17 = fixtures::seventeen_profile(limits);
    auto p = fixtures::doctrinal_profile(limits);

    int saved = par::max_threads();
    std::vector<std::pair<std::string, std::vector<JudgmentSet>>> single_thread;

    par::set_threads(1);
    for (const auto* name : {"mc", "mcc", "ra", "leximax", "med", "young", "dist", "scoring"}) {
        RuleSpec spec;
        spec.name = name;
        single_thread.push_back({name, apply_rule(p17, spec, limits).sets});
    }
    RuleSpec full_spec;
    full_spec.name = "full";
    single_thread.push_back({"full", apply_rule(p, full_spec, limits).sets});

    par::set_threads(4);
    std::size_t idx = 0;
    for (const auto* name : {"mc", "mcc", "ra", "leximax", "med", "young", "dist", "scoring"}) {
        RuleSpec spec;
        spec.name = name;
        CHECK(apply_rule(p17, spec, limits).sets == single_thread[idx++].second);
    }
    CHECK(apply_rule(p, full_spec, limits).sets == single_thread[idx].second);

    par::set_threads(saved);
}
