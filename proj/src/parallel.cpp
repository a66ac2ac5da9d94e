#include "ja/parallel.hpp"

#include <atomic>
#include <cstdlib>

namespace ja::par {

namespace {
std::atomic<int> g_threads{0}; // 0 = not yet initialized
}

void set_threads(int n) {
    g_threads.store(n < 1 ? 1 : n);
}

void init_from_env() {
    if (const char* e = std::getenv("JA_THREADS")) {
        int n = std::atoi(e);
        if (n >= 1) {
            set_threads(n);
            return;
        }
    }
#ifdef _OPENMP
    set_threads(omp_get_max_threads());
#else
    set_threads(1);
#endif
}

int max_threads() {
    int n = g_threads.load();
    if (n == 0) {
        init_from_env();
        n = g_threads.load();
    }
    return n;
}

} // namespace ja::par
