#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace ltinfluence {

// Worker count: LT_INFLUENCE_THREADS caps parallelism, 0 or unset = auto.
int thread_budget();

// Splits [0, count) into at most thread_budget() contiguous chunks and runs
// fn(chunk_index, begin, end) on each. Callers reduce with integer
// accumulators and keep per-item work a pure function of the item index, so
// results do not depend on the budget. Runs inline when one chunk suffices.
void parallel_chunks(std::int64_t count,
                     const std::function<void(int, std::int64_t, std::int64_t)>& fn);

}  // namespace ltinfluence
