#pragma once

#include <cstddef>
#include <functional>

namespace sketchbench {

/// Intra-run parallelism cap (CLI --threads). 0 means hardware concurrency.
void set_max_threads(int n);
int max_threads();

/// Run fn(begin, end) over [0, count) split into fixed-size chunks that worker
/// threads pull from a shared index. The chunking is independent of the thread
/// count, so per-chunk results merged in chunk order are deterministic.
void parallel_chunks(std::size_t count, std::size_t chunk,
                     const std::function<void(std::size_t, std::size_t)>& fn);

/// Convenience per-index form over fixed chunks of 16.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace sketchbench
