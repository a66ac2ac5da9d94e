#pragma once

#include <cstdint>
#include <string>

namespace ja {

// Enumeration caps. Every exhaustive search in the engine is guarded by one
// of these; exceeding a cap raises cap_exceeded instead of silently truncating.
struct Limits {
    int max_atoms = 20;        // valuation scans run over 2^max_atoms
    int max_issues = 20;       // sign-pattern space, codomain indexing
    int max_agents = 20;       // Young subset search, profile operations
    int full_max_agents = 5;   // FULL rule searches |codomain|^n profiles
    int full_max_codomain = 16;
    int domain_search_max = 8;  // restricted-domain order search (m and n)
    int analysis_max_issues = 12; // MIS / path-connectivity enumeration (3^m)
    std::uint64_t seed = 1;    // randomized instance streams

    // Reads JA_MAX_ATOMS, JA_MAX_ISSUES, JA_MAX_AGENTS, JA_SEED from the
    // environment on top of the defaults above.
    static Limits from_env();
};

} // namespace ja
