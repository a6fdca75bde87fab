#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace berge_turan::detail {

/// Runs fn(i) for i in [0, count) on `workers` threads pulling indices from a
/// shared counter. The first exception thrown by any task is rethrown.
template <typename Fn>
void parallel_for(std::size_t count, int workers, Fn&& fn) {
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::atomic<bool> stop{false};
  auto body = [&] {
    for (;;) {
      if (stop.load(std::memory_order_relaxed)) return;
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        const std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        stop = true;
      }
    }
  };
  if (workers <= 1 || count <= 1) {
    body();
  } else {
    std::vector<std::jthread> pool;
    const auto n = std::min<std::size_t>(static_cast<std::size_t>(workers), count);
    pool.reserve(n);
    for (std::size_t w = 0; w < n; ++w) pool.emplace_back(body);
  }
  if (failure) std::rethrow_exception(failure);
}

/// Shared incumbent that only ever increases. Reads may be stale.
template <typename T>
class MonotoneMax {
 public:
  explicit MonotoneMax(T initial) : value_(initial) {}
  [[nodiscard]] T get() const noexcept { return value_.load(std::memory_order_relaxed); }
  void offer(T candidate) noexcept {
    T cur = value_.load(std::memory_order_relaxed);
    while (candidate > cur && !value_.compare_exchange_weak(cur, candidate, std::memory_order_relaxed)) {
    }
  }

 private:
  std::atomic<T> value_;
};

}  // namespace berge_turan::detail
