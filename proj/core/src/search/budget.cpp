#include "ipr/search/budget.hpp"

#include <thread>

namespace ipr {

std::string_view to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::absent: return "absent";
    case SearchStatus::budget_exceeded: return "budget-exceeded";
  }
  return "?";
}

unsigned SearchOptions::resolved_workers() const {
  if (workers) return workers;
  auto hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

BudgetMeter::BudgetMeter(const SearchOptions& options)
    : max_(options.max_candidates), interval_(options.checkpoint_interval ? options.checkpoint_interval : 1) {
  if (options.wall_clock) deadline_ = std::chrono::steady_clock::now() + *options.wall_clock;
}

bool BudgetMeter::charge(std::uint64_t n) {
  if (exhausted_.load(std::memory_order_relaxed)) return false;
  auto before = used_.fetch_add(n, std::memory_order_relaxed);
  if (before + n > max_) {
    exhausted_.store(true, std::memory_order_relaxed);
    return false;
  }
  // The clock is consulted every 4096 candidates.
  if (deadline_ && ((before >> 12) != ((before + n) >> 12)) && std::chrono::steady_clock::now() > *deadline_) {
    exhausted_.store(true, std::memory_order_relaxed);
    return false;
  }
  return true;
}

bool BudgetMeter::checkpoint_due(std::uint64_t before, std::uint64_t after) const {
  return before / interval_ != after / interval_;
}

}  // namespace ipr
