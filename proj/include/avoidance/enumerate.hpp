#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>

#include "avoidance/errors.hpp"
#include "avoidance/word.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace avoidance {

struct EnumerationBudget {
    std::uint64_t max_words = std::uint64_t{1} << 24;
};

enum class Exec { serial, parallel };

// k^n, or nullopt on overflow past 2^63.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp);

// k^n if it fits the budget, otherwise throws BudgetExceeded.
std::uint64_t require_within_budget(int alphabet_size, int n, const EnumerationBudget& budget);

// Words of length n are numbered 0..k^n-1 with the leftmost symbol most
// significant, so code order equals lexicographic order.
void decode_word(std::uint64_t code, int n, int alphabet_size, Symbol* out);
Word decode_word(std::uint64_t code, int n, int alphabet_size);
std::uint64_t encode_word(const Word& w, int alphabet_size);

inline int worker_count(Exec mode) {
#ifdef _OPENMP
    return mode == Exec::parallel ? omp_get_max_threads() : 1;
#else
    (void)mode;
    return 1;
#endif
}

// Splits [0, total) into worker_count(mode) contiguous chunks and runs
// body(slot, begin, end) on each. Slot s always receives the s-th chunk, so
// per-slot accumulators merged in slot order give deterministic results
// independent of scheduling.
template <class Body>
void run_chunks(std::uint64_t total, Exec mode, const Body& body) {
    const int workers = worker_count(mode);
    if (workers <= 1 || total < 2) {
        body(0, std::uint64_t{0}, total);
        return;
    }
    const std::uint64_t base = total / workers;
    const std::uint64_t extra = total % workers;
#ifdef _OPENMP
#pragma omp parallel num_threads(workers)
    {
        const int t = omp_get_thread_num();
        const std::uint64_t begin = base * t + std::min<std::uint64_t>(t, extra);
        const std::uint64_t end = begin + base + (static_cast<std::uint64_t>(t) < extra ? 1 : 0);
        body(t, begin, end);
    }
#else
    for (int t = 0; t < workers; ++t) {
        const std::uint64_t begin = base * t + std::min<std::uint64_t>(t, extra);
        const std::uint64_t end = begin + base + (static_cast<std::uint64_t>(t) < extra ? 1 : 0);
        body(t, begin, end);
    }
#endif
}

}  // namespace avoidance
