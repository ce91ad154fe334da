#pragma once

#include <cstddef>
#include <functional>

namespace swbesov {

// Worker cap: SWBESOV_THREADS if set, otherwise hardware concurrency.
// Deterministic mode pins everything to one thread.
int max_threads();
void set_deterministic(bool on);
bool deterministic();

// Runs fn(i) for i in [0, count). Results must be written to per-index slots;
// callers never reduce across threads, so output does not depend on scheduling.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace swbesov
