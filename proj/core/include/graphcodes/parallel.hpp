#pragma once

#include <cstddef>
#include <functional>

namespace graphcodes {

/// Worker count for parallel loops: the override if set, else
/// GRAPHCODES_THREADS (0 or unset = hardware concurrency), at least 1.
int worker_count();

/// Forces worker_count() for the lifetime of the object (tests, CLI).
class ScopedWorkerCount {
 public:
  explicit ScopedWorkerCount(int workers);
  ~ScopedWorkerCount();
  ScopedWorkerCount(const ScopedWorkerCount&) = delete;
  ScopedWorkerCount& operator=(const ScopedWorkerCount&) = delete;

 private:
  int previous_;
};

/// Splits [0, n) into contiguous chunks and runs body(begin, end, worker)
/// on up to worker_count() threads. Blocks until all chunks finish and
/// rethrows the first exception.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t, int)>& body);

}  // namespace graphcodes
