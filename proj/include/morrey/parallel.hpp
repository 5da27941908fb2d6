#pragma once

#include <cstddef>
#include <functional>

namespace morrey {

/// Runs fn(i) for i in [0, n) on up to `threads` workers (0 means hardware
/// concurrency). Each index is handled exactly once, so results written by
/// index are independent of scheduling. The first exception is rethrown.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn);

unsigned resolve_threads(unsigned requested);

}  // namespace morrey
