#pragma once

#include <cstddef>
#include <functional>

namespace nervekit {

/// Worker count: hardware concurrency, capped by the NERVEKIT_THREADS environment variable.
int thread_count();

/// Runs body(0..count-1), possibly on several threads. Each index is visited once;
/// callers write into per-index slots so results merge in index order. The first
/// exception thrown by any task is rethrown after all workers stop.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace nervekit
