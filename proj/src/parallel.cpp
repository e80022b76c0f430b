#include "xcnf/detail/parallel.hpp"

#include <atomic>
#include <thread>
#include <vector>

namespace xcnf::detail {

std::optional<std::uint64_t> first_failure(std::uint64_t n, unsigned threads,
                                           const std::function<bool(std::uint64_t)>& ok) {
  if (threads <= 1 || n < 64) {
    for (std::uint64_t i = 0; i < n; ++i)
      if (!ok(i)) return i;
    return std::nullopt;
  }
  std::atomic<std::uint64_t> best{n};
  std::vector<std::thread> workers;
  std::uint64_t chunk = (n + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    std::uint64_t lo = t * chunk, hi = std::min(n, lo + chunk);
    workers.emplace_back([&, lo, hi] {
      for (std::uint64_t i = lo; i < hi; ++i) {
        if (i >= best.load(std::memory_order_relaxed)) break;
        if (!ok(i)) {
          std::uint64_t cur = best.load(std::memory_order_relaxed);
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
          break;
        }
      }
    });
  }
  for (auto& w : workers) w.join();
  std::uint64_t result = best.load();
  if (result == n) return std::nullopt;
  return result;
}

}  // namespace xcnf::detail
