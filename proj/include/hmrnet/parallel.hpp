#pragma once

#include <cstddef>
#include <functional>

namespace hmrnet {

// Worker cap from HMRNET_THREADS; 0 or unset means hardware concurrency.
std::size_t worker_count();

// Runs body(i) for i in [0, count) across up to worker_count() threads.
// Each index is visited exactly once; the first exception thrown is rethrown
// after all workers join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace hmrnet
