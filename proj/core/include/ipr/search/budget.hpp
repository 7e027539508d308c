#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string_view>

namespace ipr {

/// Outcome of a bounded search. budget_exceeded is a first-class result,
/// distinct from absent.
enum class SearchStatus : std::uint8_t { found, absent, budget_exceeded };

std::string_view to_string(SearchStatus s);

/// Limits shared by every exhaustive search in the library.
struct SearchOptions {
  std::uint64_t max_candidates = std::numeric_limits<std::uint64_t>::max();
  std::optional<std::chrono::steady_clock::duration> wall_clock;
  /// 0 means std::thread::hardware_concurrency().
  unsigned workers = 1;
  /// Candidates between progress callbacks.
  std::uint64_t checkpoint_interval = std::uint64_t{1} << 20;

  unsigned resolved_workers() const;
};

/// Thread-safe candidate counter enforcing a SearchOptions budget.
class BudgetMeter {
 public:
  explicit BudgetMeter(const SearchOptions& options);

  /// Records n candidates. Returns false once the budget is exhausted; after
  /// that every call returns false.
  bool charge(std::uint64_t n = 1);
  bool exhausted() const { return exhausted_.load(std::memory_order_relaxed); }
  std::uint64_t used() const { return used_.load(std::memory_order_relaxed); }
  /// True when `used()` crossed a multiple of the checkpoint interval during
  /// the last charge on this thread; callers use it to emit checkpoints.
  bool checkpoint_due(std::uint64_t before, std::uint64_t after) const;

 private:
  std::uint64_t max_;
  std::uint64_t interval_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::atomic<std::uint64_t> used_{0};
  std::atomic<bool> exhausted_{false};
};

}  // namespace ipr
