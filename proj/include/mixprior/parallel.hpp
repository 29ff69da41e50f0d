#pragma once

#include <cstddef>
#include <functional>

namespace mixprior {

// Worker count: MIXPRIOR_THREADS if set to a positive integer, otherwise the
// hardware concurrency (at least 1).
int thread_count();

// Runs body(i) for i in [0, count) on up to thread_count() threads. Each index
// is processed exactly once; the first exception thrown is rethrown here.
// Callers write results into per-index slots and reduce afterwards in a fixed
// order, so results never depend on scheduling.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace mixprior
