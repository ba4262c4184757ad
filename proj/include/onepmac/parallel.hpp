#pragma once

#include <cstddef>
#include <functional>

namespace onepmac {

// Worker count: `requested` if positive, else ONEPMAC_THREADS if set, else the
// hardware concurrency.
int thread_count(int requested = 0);

// Splits [0, n) into contiguous chunks, one per worker; chunk k covers
// [k*n/w, (k+1)*n/w). fn(begin, end, worker) runs on each chunk.
void parallel_chunks(std::size_t n, int workers,
                     const std::function<void(std::size_t, std::size_t, int)>& fn);

}  // namespace onepmac
