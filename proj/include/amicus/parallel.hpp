#pragma once

#include <cstddef>
#include <functional>

namespace amicus {

/// Worker count for parallel candidate sweeps: AMICUS_THREADS if set (>= 1),
/// otherwise the hardware concurrency.
unsigned worker_count(unsigned requested = 0);

/// Runs fn(i) for i in [0, n) across workers.  Callers keep determinism by
/// writing to index i of a pre-sized result vector.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn);

}  // namespace amicus
