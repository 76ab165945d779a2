#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace csalign {

/// Number of workers to use when the caller passes 0 (= all cores).
int resolve_workers(int workers);

/// Runs fn(i) for every i in [0, n). Work items must write only to their
/// own output slot; callers reduce sequentially afterwards, which keeps
/// results identical for any worker count.
void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& fn);

}  // namespace csalign
