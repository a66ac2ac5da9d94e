#pragma once

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ja::par {

// Thread count for all kernels. JA_THREADS=1 forces the serial path; the
// kernels are written so results are identical bytes either way: chunks are
// contiguous index ranges merged in index order, and argmin/argmax keep every
// optimal index, sorted.
int max_threads();
void set_threads(int n);
void init_from_env(); // reads JA_THREADS

// ---------------------------------------------------------------------------
// Serial reference kernels. Kept as the oracle the OpenMP kernels are tested
// against; also the fallback when threads == 1 or the range is small.
// ---------------------------------------------------------------------------
namespace serial {

template <class Pred>
bool any_of(std::uint64_t n, Pred&& pred) {
    for (std::uint64_t i = 0; i < n; ++i)
        if (pred(i)) return true;
    return false;
}

template <class Pred>
std::vector<std::uint64_t> filter_indices(std::uint64_t n, Pred&& pred) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 0; i < n; ++i)
        if (pred(i)) out.push_back(i);
    return out;
}

// All indices attaining the minimum score, in ascending index order.
// Score must be an integral or totally-ordered value type.
template <class Score, class Fn>
std::pair<Score, std::vector<std::uint64_t>> argmin(std::uint64_t n, Fn&& score) {
    Score best = std::numeric_limits<Score>::max();
    std::vector<std::uint64_t> winners;
    for (std::uint64_t i = 0; i < n; ++i) {
        Score s = score(i);
        if (s < best) {
            best = s;
            winners.assign(1, i);
        } else if (s == best) {
            winners.push_back(i);
        }
    }
    return {best, std::move(winners)};
}

template <class Score, class Fn>
std::pair<Score, std::vector<std::uint64_t>> argmax(std::uint64_t n, Fn&& score) {
    Score best = std::numeric_limits<Score>::lowest();
    std::vector<std::uint64_t> winners;
    for (std::uint64_t i = 0; i < n; ++i) {
        Score s = score(i);
        if (s > best) {
            best = s;
            winners.assign(1, i);
        } else if (s == best) {
            winners.push_back(i);
        }
    }
    return {best, std::move(winners)};
}

} // namespace serial

// ---------------------------------------------------------------------------
// OpenMP kernels. Deterministic: contiguous static chunks, merged in chunk
// order; ties keep all indices sorted ascending.
// ---------------------------------------------------------------------------

template <class Pred>
bool any_of(std::uint64_t n, Pred&& pred) {
#ifdef _OPENMP
    if (max_threads() > 1 && n >= 4096) {
        bool found = false;
#pragma omp parallel for schedule(static) shared(found)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
            bool local;
#pragma omp atomic read
            local = found;
            if (local) continue;
            if (pred(static_cast<std::uint64_t>(i))) {
#pragma omp atomic write
                found = true;
            }
        }
        return found;
    }
#endif
    return serial::any_of(n, pred);
}

template <class Pred>
std::vector<std::uint64_t> filter_indices(std::uint64_t n, Pred&& pred) {
#ifdef _OPENMP
    int nt = max_threads();
    if (nt > 1 && n >= 4096) {
        std::vector<std::vector<std::uint64_t>> parts(static_cast<std::size_t>(nt));
#pragma omp parallel num_threads(nt)
        {
            int t = omp_get_thread_num();
            int total = omp_get_num_threads();
            std::uint64_t chunk = (n + total - 1) / total;
            std::uint64_t lo = chunk * static_cast<std::uint64_t>(t);
            std::uint64_t hi = lo + chunk > n ? n : lo + chunk;
            auto& mine = parts[static_cast<std::size_t>(t)];
            for (std::uint64_t i = lo; i < hi; ++i)
                if (pred(i)) mine.push_back(i);
        }
        std::vector<std::uint64_t> out;
        for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
        return out;
    }
#endif
    return serial::filter_indices(n, pred);
}

template <class Score, class Fn>
std::pair<Score, std::vector<std::uint64_t>> argmin(std::uint64_t n, Fn&& score) {
#ifdef _OPENMP
    int nt = max_threads();
    if (nt > 1 && n >= 4096) {
        std::vector<std::pair<Score, std::vector<std::uint64_t>>> parts(
            static_cast<std::size_t>(nt),
            {std::numeric_limits<Score>::max(), {}});
#pragma omp parallel num_threads(nt)
        {
            int t = omp_get_thread_num();
            int total = omp_get_num_threads();
            std::uint64_t chunk = (n + total - 1) / total;
            std::uint64_t lo = chunk * static_cast<std::uint64_t>(t);
            std::uint64_t hi = lo + chunk > n ? n : lo + chunk;
            auto& mine = parts[static_cast<std::size_t>(t)];
            for (std::uint64_t i = lo; i < hi; ++i) {
                Score s = score(i);
                if (s < mine.first) {
                    mine.first = s;
                    mine.second.assign(1, i);
                } else if (s == mine.first) {
                    mine.second.push_back(i);
                }
            }
        }
        Score best = std::numeric_limits<Score>::max();
        for (auto& p : parts)
            if (!p.second.empty() && p.first < best) best = p.first;
        std::vector<std::uint64_t> winners;
        for (auto& p : parts)
            if (!p.second.empty() && p.first == best)
                winners.insert(winners.end(), p.second.begin(), p.second.end());
        return {best, std::move(winners)};
    }
#endif
    return serial::argmin<Score>(n, score);
}

template <class Score, class Fn>
std::pair<Score, std::vector<std::uint64_t>> argmax(std::uint64_t n, Fn&& score) {
    auto neg = [&](std::uint64_t i) { return -score(i); };
    auto [best, winners] = argmin<Score>(n, neg);
    return {-best, std::move(winners)};
}

} // namespace ja::par
