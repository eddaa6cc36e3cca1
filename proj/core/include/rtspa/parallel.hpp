#pragma once

#include <cstddef>
#include <functional>

namespace rtspa {

/// Worker count: RTSPA_THREADS if set to a positive integer, otherwise all
/// hardware threads.
unsigned worker_count();

/// Runs fn(i) for i in [0, n) on up to worker_count() threads. Callers write
/// results by index, so output order never depends on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace rtspa
