#pragma once

#include <cstddef>
#include <functional>

namespace graphbench {

/// Runs fn(i) for every i in [0, count) on up to `workers` threads.
/// Tasks must be independent and should write results into pre-sized
/// per-index slots so the outcome is identical for any worker count.
/// If several tasks throw, the exception of the lowest index is rethrown.
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn);

} // namespace graphbench
