#pragma once

#include <cstddef>
#include <functional>

namespace graphdeblur {

// Worker count: hardware concurrency, capped by GRAPHDEBLUR_THREADS when set.
unsigned thread_limit();

// Runs body(begin, end) over contiguous chunks of [0, count) on up to
// thread_limit() threads. Chunk boundaries depend only on count and the
// thread limit, so results assembled per chunk are deterministic.
void parallel_chunks(std::size_t count, const std::function<void(std::size_t chunk, std::size_t begin, std::size_t end)>& body,
                     std::size_t chunks);

}  // namespace graphdeblur
