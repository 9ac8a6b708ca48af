// Minimal work-sharing helpers for embarrassingly parallel loops.
#pragma once

#include <cstddef>
#include <functional>

namespace hullbound {

/// Number of worker threads: the value of the HULLBOUND_THREADS environment
/// variable when set to a positive integer, otherwise the hardware
/// concurrency (at least 1).
int thread_count();

/// Runs fn(i) for i in [0, count) across thread_count() workers. Results must
/// be written to disjoint slots by index, which keeps the output independent
/// of scheduling. The first exception thrown by any worker is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace hullbound
