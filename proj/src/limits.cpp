#include "ja/limits.hpp"

#include <cstdlib>

namespace ja {

namespace {

int env_int(const char* name, int fallback) {
    if (const char* e = std::getenv(name)) {
        int v = std::atoi(e);
        if (v > 0) return v;
    }
    return fallback;
}

} // namespace

Limits Limits::from_env() {
    Limits l;
    l.max_atoms = env_int("JA_MAX_ATOMS", l.max_atoms);
    l.max_issues = env_int("JA_MAX_ISSUES", l.max_issues);
    l.max_agents = env_int("JA_MAX_AGENTS", l.max_agents);
    if (const char* e = std::getenv("JA_SEED")) {
        long long v = std::atoll(e);
        if (v >= 0) l.seed = static_cast<std::uint64_t>(v);
    }
    return l;
}

} // namespace ja
