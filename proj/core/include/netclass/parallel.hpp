#pragma once

#include <cstddef>
#include <functional>

namespace netclass {

// Worker count from the NETCLASS_THREADS environment variable, falling back
// to the hardware concurrency (at least 1).
unsigned default_thread_count();

// Runs body(i) for every i in [0, count) on up to `threads` workers. Indices
// are handed out dynamically, so body must only write to slot i of any
// shared output. If any call throws, the exception from the lowest failing
// index is rethrown after all workers have stopped.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

}  // namespace netclass
