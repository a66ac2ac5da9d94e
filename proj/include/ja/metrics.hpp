#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ja/agenda.hpp"

namespace ja {

enum class Distance { Drastic, Hamming, Geodesic };
enum class Norm { Sum, Max };
enum class ScoringKind { Simple, Reversal };

Distance distance_from_name(const std::string& name); // drastic|hamming|geodesic
Norm norm_from_name(const std::string& name);         // sum|max
ScoringKind scoring_from_name(const std::string& name); // simple|reversal

int d_drastic(const JudgmentSet& j1, const JudgmentSet& j2);

// Number of issues decided with opposite signs; both sets must be complete.
int d_hamming(const JudgmentSet& j1, const JudgmentSet& j2);

// Vertices are the codomain in canonical order; an edge joins two sets with
// no third codomain member between them (betweenness: contains every
// judgment the endpoints share).
struct AgendaGraph {
    Agenda agenda;
    std::vector<std::uint32_t> vertices;            // accept masks
    std::vector<std::vector<std::uint32_t>> adjacency; // neighbor indices
    std::vector<std::vector<int>> dist;             // -1 when disconnected
    bool connected = false;

    int vertex_of(std::uint32_t mask) const; // -1 when not rational
};

AgendaGraph build_agenda_graph(const Agenda& agenda);

// Shortest-path distance; throws precondition_error for disconnected pairs.
int d_geodesic(const JudgmentSet& j1, const JudgmentSet& j2, const AgendaGraph& graph);

// eta(d(J_1,J'_1), ..., d(J_n,J'_n)) agent-wise between equal-length profiles.
double profile_distance(const Profile& p1, const Profile& p2, Distance d, Norm norm);

// Simple score: 1 iff the signed judgment is held by j.
int score_simple(std::size_t issue, Sign sign, const JudgmentSet& j);

// Reversal score: fewest judgment flips of j reaching a rational set holding
// the opposite sign on the issue.
int score_reversal(std::size_t issue, Sign sign, const JudgmentSet& j, const Agenda& agenda);

} // namespace ja
