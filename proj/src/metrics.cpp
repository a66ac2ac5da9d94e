#include "ja/metrics.hpp"

#include <algorithm>
#include <bit>
#include <deque>

#include "ja/errors.hpp"

namespace ja {

Distance distance_from_name(const std::string& name) {
    if (name == "drastic") return Distance::Drastic;
    if (name == "hamming") return Distance::Hamming;
    if (name == "geodesic") return Distance::Geodesic;
    throw input_error("unknown distance: " + name);
}

Norm norm_from_name(const std::string& name) {
    if (name == "sum") return Norm::Sum;
    if (name == "max") return Norm::Max;
    throw input_error("unknown norm: " + name);
}

ScoringKind scoring_from_name(const std::string& name) {
    if (name == "simple") return ScoringKind::Simple;
    if (name == "reversal") return ScoringKind::Reversal;
    throw input_error("unknown scoring function: " + name);
}

int d_drastic(const JudgmentSet& j1, const JudgmentSet& j2) {
    if (j1.issue_count() != j2.issue_count()) throw precondition_error("agenda mismatch");
    return j1 == j2 ? 0 : 1;
}

int d_hamming(const JudgmentSet& j1, const JudgmentSet& j2) {
    if (j1.issue_count() != j2.issue_count()) throw precondition_error("agenda mismatch");
    if (!j1.complete() || !j2.complete())
        throw precondition_error("Hamming distance needs complete judgment sets");
    return std::popcount(j1.accept_mask() ^ j2.accept_mask());
}

int AgendaGraph::vertex_of(std::uint32_t mask) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == mask) return static_cast<int>(i);
    return -1;
}

AgendaGraph build_agenda_graph(const Agenda& agenda) {
    AgendaGraph g;
    g.agenda = agenda;
    g.vertices = agenda.codomain_masks();
    std::size_t n = g.vertices.size();
    std::size_t m = agenda.issue_count();
    std::uint32_t full = m == 32 ? ~0u : (1u << m) - 1;

    g.adjacency.assign(n, {});
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            std::uint32_t agree = ~(g.vertices[a] ^ g.vertices[b]) & full;
            bool has_between = false;
            for (std::size_t c = 0; c < n && !has_between; ++c) {
                if (c == a || c == b) continue;
                if (((g.vertices[a] ^ g.vertices[c]) & agree) == 0) has_between = true;
            }
            if (!has_between) {
                g.adjacency[a].push_back(static_cast<std::uint32_t>(b));
                g.adjacency[b].push_back(static_cast<std::uint32_t>(a));
            }
        }
    }

    // All-pairs breadth-first distances.
    g.dist.assign(n, std::vector<int>(n, -1));
    for (std::size_t s = 0; s < n; ++s) {
        auto& row = g.dist[s];
        row[s] = 0;
        std::deque<std::size_t> queue{s};
        while (!queue.empty()) {
            std::size_t v = queue.front();
            queue.pop_front();
            for (std::uint32_t w : g.adjacency[v]) {
                if (row[w] < 0) {
                    row[w] = row[v] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    g.connected = true;
    for (std::size_t a = 0; a < n && g.connected; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (g.dist[a][b] < 0) {
                g.connected = false;
                break;
            }
    return g;
}

int d_geodesic(const JudgmentSet& j1, const JudgmentSet& j2, const AgendaGraph& graph) {
    int a = graph.vertex_of(j1.accept_mask());
    int b = graph.vertex_of(j2.accept_mask());
    if (a < 0 || b < 0 || !j1.complete() || !j2.complete())
        throw precondition_error("geodesic distance needs rational judgment sets");
    int d = graph.dist[a][b];
    if (d < 0) throw precondition_error("judgment sets lie in different graph components");
    return d;
}

double profile_distance(const Profile& p1, const Profile& p2, Distance d, Norm norm) {
    if (!(p1.agenda() == p2.agenda())) throw precondition_error("agenda mismatch");
    if (p1.agent_count() != p2.agent_count()) throw precondition_error("profile length mismatch");
    AgendaGraph graph;
    if (d == Distance::Geodesic) graph = build_agenda_graph(p1.agenda());
    double acc = 0;
    for (std::size_t i = 0; i < p1.agent_count(); ++i) {
        const auto& a = p1.agents()[i];
        const auto& b = p2.agents()[i];
        int v = 0;
        switch (d) {
        case Distance::Drastic: v = d_drastic(a, b); break;
        case Distance::Hamming: v = d_hamming(a, b); break;
        case Distance::Geodesic: v = d_geodesic(a, b, graph); break;
        }
        if (norm == Norm::Sum) acc += v;
        else acc = std::max(acc, static_cast<double>(v));
    }
    return acc;
}

int score_simple(std::size_t issue, Sign sign, const JudgmentSet& j) {
    if (issue >= j.issue_count()) throw precondition_error("issue index out of range");
    if (sign == Sign::Absent) throw precondition_error("scores need a signed judgment");
    return j.at(issue) == sign ? 1 : 0;
}

int score_reversal(std::size_t issue, Sign sign, const JudgmentSet& j, const Agenda& agenda) {
    if (issue >= agenda.issue_count()) throw precondition_error("issue index out of range");
    if (sign == Sign::Absent) throw precondition_error("scores need a signed judgment");
    if (!is_rational(j, agenda))
        throw precondition_error("reversal score needs a rational judgment set");
    Sign flipped = flip(sign);
    std::uint32_t self = j.accept_mask();
    int best = -1;
    for (std::uint32_t mask : agenda.codomain_masks()) {
        bool holds = ((mask >> issue) & 1u) == (flipped == Sign::Accept ? 1u : 0u);
        if (!holds) continue;
        int d = std::popcount(mask ^ self);
        if (best < 0 || d < best) best = d;
    }
    if (best < 0)
        throw precondition_error("no rational set holds the flipped judgment");
    return best;
}

} // namespace ja
