#include "graphcodes/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace graphcodes {
namespace {
std::atomic<int> g_override{0};
}

int worker_count() {
  if (int w = g_override.load(); w > 0) return w;
  int w = 0;
  if (const char* env = std::getenv("GRAPHCODES_THREADS")) {
    try {
      w = std::stoi(env);
    } catch (const std::exception&) {
      w = 0;
    }
  }
  if (w <= 0) w = static_cast<int>(std::thread::hardware_concurrency());
  return std::max(w, 1);
}

ScopedWorkerCount::ScopedWorkerCount(int workers) : previous_(g_override.exchange(workers)) {}
ScopedWorkerCount::~ScopedWorkerCount() { g_override.store(previous_); }

void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t, int)>& body) {
  if (n == 0) return;
  const auto workers = static_cast<std::size_t>(std::min<std::size_t>(static_cast<std::size_t>(worker_count()), n));
  if (workers == 1) {
    body(0, n, 0);
    return;
  }
  std::vector<std::thread> threads;
  std::exception_ptr error;
  std::mutex error_mutex;
  const std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk, end = std::min(n, begin + chunk);
    if (begin >= end) break;
    threads.emplace_back([&, begin, end, w] {
      try {
        body(begin, end, static_cast<int>(w));
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace graphcodes
