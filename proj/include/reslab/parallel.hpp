#pragma once

#include "reslab/modcore.hpp"

#include <thread>
#include <vector>

namespace reslab {

/// Worker count: explicit value, else RESIDUE_LAB_WORKERS, else hardware.
unsigned resolve_workers(unsigned requested = 0);

/// Split [lo, hi] into `workers` contiguous chunks and run fn on each in a
/// separate thread. Results come back in chunk order, so output never depends
/// on scheduling.
template <typename T, typename Fn>
std::vector<T> map_chunks(u64 lo, u64 hi, unsigned workers, Fn fn) {
    if (lo > hi) return {};
    const u64 span = hi - lo + 1;
    if (workers < 1) workers = 1;
    if (workers > span) workers = static_cast<unsigned>(span);

    std::vector<T> results(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        const u64 chunk_lo = lo + span * w / workers;
        const u64 chunk_hi = lo + span * (w + 1) / workers - 1;
        threads.emplace_back([&results, w, chunk_lo, chunk_hi, &fn] {
            results[w] = fn(chunk_lo, chunk_hi);
        });
    }
    for (auto& t : threads) t.join();
    return results;
}

}  // namespace reslab
