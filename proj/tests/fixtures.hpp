#pragma once

#include <vector>

#include "ja/agenda.hpp"

// Profiles used across the suites, built from their table definitions.
namespace fixtures {

using namespace ja;

inline JudgmentSet row(const std::vector<int>& signs) {
    JudgmentSet j(signs.size());
    for (std::size_t i = 0; i < signs.size(); ++i) j.set(i, static_cast<Sign>(signs[i]));
    return j;
}

inline Profile repeat_rows(const Agenda& agenda,
                           const std::vector<std::pair<std::vector<int>, int>>& groups,
                           const Limits& limits) {
    std::vector<JudgmentSet> agents;
    for (const auto& [signs, count] : groups)
        for (int i = 0; i < count; ++i) agents.push_back(row(signs));
    return Profile::make(agenda, std::move(agents), ProfileMode::Strict, limits);
}

// Doctrinal paradox: issues {p, q, d}, constraint (p & q) <-> d.
inline Agenda doctrinal_agenda(const Limits& limits) {
    return Agenda::make({parse_formula("p"), parse_formula("q"), parse_formula("d")},
                        {parse_formula("(p & q) <-> d")}, limits);
}

inline Profile doctrinal_profile(const Limits& limits) {
    return repeat_rows(doctrinal_agenda(limits),
                       {{{1, 1, 1}, 1}, {{1, -1, -1}, 1}, {{-1, 1, -1}, 1}}, limits);
}

// 17-agent running example: issues {p&r, p&s, q, p&q, t}, no constraints.
inline Agenda seventeen_agenda(const Limits& limits) {
    return Agenda::make({parse_formula("p & r"), parse_formula("p & s"), parse_formula("q"),
                         parse_formula("p & q"), parse_formula("t")},
                        {}, limits);
}

inline Profile seventeen_profile(const Limits& limits) {
    return repeat_rows(seventeen_agenda(limits),
                       {{{1, 1, 1, 1, 1}, 6}, {{1, 1, -1, -1, 1}, 4}, {{-1, -1, 1, -1, -1}, 7}},
                       limits);
}

// 15-agent tie example: issues {p&q, p, q, p&r, q&r, s}.
inline Agenda fifteen_agenda(const Limits& limits) {
    return Agenda::make({parse_formula("p & q"), parse_formula("p"), parse_formula("q"),
                         parse_formula("p & r"), parse_formula("q & r"), parse_formula("s")},
                        {}, limits);
}

inline Profile fifteen_profile(const Limits& limits) {
    return repeat_rows(fifteen_agenda(limits),
                       {{{-1, 1, -1, 1, -1, 1}, 5},
                        {{-1, -1, 1, -1, 1, -1}, 5},
                        {{1, 1, 1, 1, 1, 1}, 4},
                        {{1, 1, 1, -1, -1, -1}, 1}},
                       limits);
}

// Ten-issue unanimity-contrast profile (three agents).
inline Agenda contrast_agenda(const Limits& limits) {
    return Agenda::make({parse_formula("p"), parse_formula("p -> (q | r)"), parse_formula("q"),
                         parse_formula("r"), parse_formula("p -> (s | t)"), parse_formula("s"),
                         parse_formula("t"), parse_formula("p -> (u | v)"), parse_formula("u"),
                         parse_formula("v")},
                        {}, limits);
}

inline Profile contrast_profile(const Limits& limits) {
    return repeat_rows(contrast_agenda(limits),
                       {{{1, 1, 1, -1, 1, 1, -1, 1, 1, -1}, 1},
                        {{1, 1, -1, 1, 1, -1, 1, 1, -1, 1}, 1},
                        {{1, -1, -1, -1, -1, -1, -1, -1, -1, -1}, 1}},
                       limits);
}

// Party-goers example: issues {b, c, p, k}, constraints {b xor c, k xor p}.
inline Agenda party_agenda(const Limits& limits) {
    return Agenda::make({parse_formula("b"), parse_formula("c"), parse_formula("p"),
                         parse_formula("k")},
                        {parse_formula("b xor c"), parse_formula("k xor p")}, limits);
}

inline Profile party_profile(const Limits& limits) {
    return repeat_rows(party_agenda(limits),
                       {{{1, -1, 1, -1}, 11}, {{-1, 1, -1, 1}, 10}, {{1, -1, -1, 1}, 2}}, limits);
}

} // namespace fixtures
