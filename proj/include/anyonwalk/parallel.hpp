#pragma once

#include <cstddef>
#include <functional>

namespace anyonwalk {

/// Thread count from ANYONWALK_THREADS, else the hardware concurrency.
int default_thread_count();

/// Runs fn(i) for i in [0, tasks) on up to `threads` workers. Results must be
/// written to per-task slots; the first exception thrown is rethrown.
void parallel_for(std::size_t tasks, int threads, const std::function<void(std::size_t)>& fn);

}  // namespace anyonwalk
