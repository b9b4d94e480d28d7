#ifndef COHERE_PARALLEL_HPP_
#define COHERE_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace cohere {

// Worker count used by parallel_for. Defaults to the hardware concurrency.
std::size_t thread_count();
void set_thread_count(std::size_t threads);

// Runs body(i) for every i in [begin, end), split into contiguous chunks
// across the configured workers. Callers write results into per-index slots
// so that output never depends on scheduling. Exceptions thrown by body are
// rethrown on the calling thread (the one from the lowest index wins).
void parallel_for(std::size_t begin, std::size_t end,
                  const std::function<void(std::size_t)>& body);

}  // namespace cohere

#endif  // COHERE_PARALLEL_HPP_
