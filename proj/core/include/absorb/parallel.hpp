#pragma once

#include <cstddef>
#include <functional>

namespace absorb {

/// Worker count for corpus runs: ABSORB_LAB_THREADS when set (minimum 1),
/// otherwise the hardware concurrency.
std::size_t worker_count();

/// Runs fn(i) for i in [0, count) across worker_count() threads. Work is
/// handed out by an atomic counter; callers that need ordered output should
/// write results into a pre-sized array indexed by i. The first exception
/// thrown by any worker is rethrown after the pool drains.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace absorb
