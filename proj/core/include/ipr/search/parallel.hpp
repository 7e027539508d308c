#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

namespace ipr {

/// How a single task of a partitioned search ended.
enum class TaskStatus : std::uint8_t { found, exhausted, interrupted };

template <class T>
struct TaskOutcome {
  TaskStatus status = TaskStatus::exhausted;
  std::optional<T> value;

  static TaskOutcome found(T v) { return {TaskStatus::found, std::move(v)}; }
  static TaskOutcome exhausted() { return {TaskStatus::exhausted, std::nullopt}; }
  static TaskOutcome interrupted() { return {TaskStatus::interrupted, std::nullopt}; }
};

/// Reduction of a partitioned search by minimum task index.
template <class T>
struct FirstResult {
  /// Set when every task before `index` was exhausted and task `index` found a value.
  std::optional<std::pair<std::size_t, T>> first;
  /// Set when some task was interrupted (budget) before an earlier hit settled
  /// the answer; this is the least such task index.
  std::optional<std::size_t> first_unfinished;

  bool found() const { return first.has_value(); }
  bool interrupted() const { return first_unfinished.has_value(); }
};

/// Runs task(i) for i in [0, n) across `workers` threads and returns the result
/// of the least i whose task found a value, provided all earlier tasks were
/// exhausted. Tasks beyond a known hit are skipped. The answer does not depend
/// on the worker count or scheduling.
///
/// `task(i, should_stop)` may poll should_stop() and return interrupted().
template <class T, class Task>
FirstResult<T> parallel_first(std::size_t n, unsigned workers, Task&& task) {
  std::vector<std::optional<TaskOutcome<T>>> outcomes(n);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= n || i > best.load(std::memory_order_relaxed)) return;
      auto should_stop = [&best, i] { return best.load(std::memory_order_relaxed) < i; };
      try {
        TaskOutcome<T> out = task(i, should_stop);
        if (out.status == TaskStatus::found) {
          std::size_t cur = best.load(std::memory_order_relaxed);
          while (i < cur && !best.compare_exchange_weak(cur, i, std::memory_order_relaxed)) {
          }
        }
        outcomes[i] = std::move(out);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        best.store(0, std::memory_order_relaxed);
        return;
      }
    }
  };

  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);

  FirstResult<T> result;
  for (std::size_t i = 0; i < n; ++i) {
    auto& o = outcomes[i];
    if (!o || o->status == TaskStatus::interrupted) {
      result.first_unfinished = i;
      return result;
    }
    if (o->status == TaskStatus::found) {
      result.first.emplace(i, std::move(*o->value));
      return result;
    }
  }
  return result;
}

/// Evaluates fn(i) for i in [0, n) across workers; the output is in index order.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t n, unsigned workers, Fn&& fn) {
  std::vector<std::optional<T>> slots(n);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= n) return;
      try {
        slots[i].emplace(fn(i));
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(n, std::memory_order_relaxed);
        return;
      }
    }
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);
  std::vector<T> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace ipr
