#pragma once

#include <cstddef>
#include <functional>

namespace magnomech {

/// Worker count for grid maps: hardware concurrency, capped by the
/// MAGNOMECH_THREADS environment variable when set. At least 1.
[[nodiscard]] std::size_t worker_count();

/// Runs fn(0..n-1) on a worker pool. Callers write results by index, so the
/// output ordering is independent of scheduling. fn must not throw across
/// threads; exceptions are captured and rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace magnomech
