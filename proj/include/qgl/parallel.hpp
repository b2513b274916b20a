#pragma once
// Minimal fork-join helper.  The worker count comes from QGL_THREADS
// (default: hardware concurrency).

#include <cstddef>
#include <functional>

namespace qgl {

/// Number of worker threads to use (>= 1).
unsigned thread_count();

/// Calls body(i) for every i in [0, count), distributing indices over
/// thread_count() workers.  The first exception thrown by a worker is
/// rethrown in the caller.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace qgl
