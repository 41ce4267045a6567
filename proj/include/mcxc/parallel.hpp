#pragma once

#include <cstddef>
#include <functional>

namespace mcxc {

/// Worker count: set_thread_count() override if positive, else MCXC_THREADS,
/// else the hardware concurrency.
int thread_count();

/// Pass 0 to fall back to MCXC_THREADS / hardware default.
void set_thread_count(int n);

/// Calls body(begin, end) over contiguous chunks of [0, n). Chunk boundaries
/// depend on the thread count, so bodies must only write per-index results;
/// any reduction happens afterwards in index order.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace mcxc
