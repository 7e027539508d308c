#pragma once

#include "ipr/ip/element_set.hpp"
#include "ipr/ip/subsets.hpp"
#include "ipr/search/budget.hpp"
#include "ipr/search/parallel.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace ipr {

/// FS(x_1, ..., x_r) together with the canonical map F_r -> G,
/// alpha -> sum_{i in alpha} x_i.
template <class G>
class FiniteSums {
 public:
  explicit FiniteSums(std::span<const G> gens) {
    if (gens.empty()) throw std::invalid_argument("finite_sums needs r >= 1 generators");
    if (gens.size() > 24) throw std::invalid_argument("finite_sums: r too large to enumerate");
    const SubsetMask count = SubsetMask{1} << gens.size();
    by_subset_.reserve(count - 1);
    for (SubsetMask m = 1; m < count; ++m) {
      const SubsetMask low = m & (~m + 1);
      const auto i = mask_min(m) - 1;
      if (m == low) by_subset_.push_back(gens[i]);
      else by_subset_.push_back(by_subset_[(m ^ low) - 1] + gens[i]);
    }
    set_ = ElementSet<G>(by_subset_);
  }

  /// The image of a non-empty alpha in F_r.
  const G& at(SubsetMask alpha) const { return by_subset_.at(alpha - 1); }
  const ElementSet<G>& set() const { return set_; }
  std::size_t r() const { return static_cast<std::size_t>(__builtin_ctzll(by_subset_.size() + 1)); }

 private:
  std::vector<G> by_subset_;
  ElementSet<G> set_;
};

template <class G>
FiniteSums<G> finite_sums(std::span<const G> gens) {
  return FiniteSums<G>(gens);
}

template <class G>
struct IpWitness {
  SearchStatus status = SearchStatus::absent;
  /// found: x_1..x_r, non-decreasing in pool order.
  std::vector<G> generators;
  std::uint64_t candidates = 0;
};

namespace detail {

// Depth-first search over non-decreasing index tuples with FS(prefix) kept
// inside the target. Returns found / exhausted / interrupted.
template <class G>
TaskStatus extend_ip(const ElementSet<G>& target, std::span<const G> pool, unsigned r, std::size_t from,
                     std::vector<std::size_t>& chosen, std::vector<G>& sums, BudgetMeter& meter) {
  if (chosen.size() == r) return TaskStatus::found;
  const std::size_t base = sums.size();
  for (std::size_t j = from; j < pool.size(); ++j) {
    if (!meter.charge()) return TaskStatus::interrupted;
    const G& x = pool[j];
    if (!target.contains(x)) continue;
    bool ok = true;
    for (std::size_t q = 0; q < base; ++q) {
      G s = sums[q] + x;
      if (!target.contains(s)) {
        ok = false;
        break;
      }
      sums.push_back(std::move(s));
    }
    if (ok) {
      sums.push_back(x);
      chosen.push_back(j);
      auto st = extend_ip(target, pool, r, j, chosen, sums, meter);
      if (st != TaskStatus::exhausted) return st;
      chosen.pop_back();
    }
    sums.erase(sums.begin() + static_cast<std::ptrdiff_t>(base), sums.end());
  }
  return TaskStatus::exhausted;
}

}  // namespace detail

/// The first tuple x_1..x_r from the pool (lexicographic in pool order, repeats
/// allowed) with FS(x_1..x_r) inside S. Permuting a tuple does not change its
/// FS, so the first tuple is non-decreasing and only those are searched.
template <class G>
IpWitness<G> contains_ip_r(const ElementSet<G>& S, unsigned r, std::span<const G> pool,
                           const SearchOptions& options = {}) {
  if (r == 0) throw std::invalid_argument("contains_ip_r needs r >= 1");
  BudgetMeter meter(options);
  auto first = parallel_first<std::vector<G>>(
      pool.size(), options.resolved_workers(), [&](std::size_t i, auto&&) -> TaskOutcome<std::vector<G>> {
        if (!meter.charge()) return TaskOutcome<std::vector<G>>::interrupted();
        if (!S.contains(pool[i])) return TaskOutcome<std::vector<G>>::exhausted();
        std::vector<std::size_t> chosen{i};
        std::vector<G> sums{pool[i]};
        auto st = detail::extend_ip(S, pool, r, i, chosen, sums, meter);
        if (st == TaskStatus::interrupted) return TaskOutcome<std::vector<G>>::interrupted();
        if (st == TaskStatus::exhausted) return TaskOutcome<std::vector<G>>::exhausted();
        std::vector<G> gens;
        for (auto c : chosen) gens.push_back(pool[c]);
        return TaskOutcome<std::vector<G>>::found(std::move(gens));
      });
  IpWitness<G> out;
  out.candidates = meter.used();
  if (first.found()) {
    out.status = SearchStatus::found;
    out.generators = std::move(first.first->second);
  } else if (first.interrupted()) {
    out.status = SearchStatus::budget_exceeded;
  }
  return out;
}

template <class G>
IpWitness<G> contains_ip_r(const ElementSet<G>& S, unsigned r, const ElementSet<G>& pool,
                           const SearchOptions& options = {}) {
  return contains_ip_r(S, r, std::span<const G>(pool.elements()), options);
}

enum class IpStarVerdictKind : std::uint8_t { holds, fails, window_limited, budget_exceeded };

inline std::string_view to_string(IpStarVerdictKind k) {
  switch (k) {
    case IpStarVerdictKind::holds: return "holds";
    case IpStarVerdictKind::fails: return "fails";
    case IpStarVerdictKind::window_limited: return "holds-in-window";
    case IpStarVerdictKind::budget_exceeded: return "budget-exceeded";
  }
  return "?";
}

template <class G>
struct IpStarVerdict {
  IpStarVerdictKind kind = IpStarVerdictKind::holds;
  /// fails: a tuple whose FS lies in the ambient and misses S.
  std::vector<G> witness;
  std::uint64_t candidates = 0;
};

/// Whether S meets every FS(x_1..x_r) of the ambient.
///
/// Complete ambient: exact verdict (holds or fails). Window ambient: a failure
/// is genuine (its FS lies in the window and misses S), but success is only
/// reported as window_limited since generators outside the window are never
/// tried.
template <class G>
IpStarVerdict<G> is_ip_r_star(const ElementSet<G>& S, unsigned r, const Ambient<G>& ambient,
                              const SearchOptions& options = {}) {
  const ElementSet<G> complement = ambient.elements.minus(S);
  auto w = contains_ip_r(complement, r, complement, options);
  IpStarVerdict<G> v;
  v.candidates = w.candidates;
  switch (w.status) {
    case SearchStatus::found:
      v.kind = IpStarVerdictKind::fails;
      v.witness = std::move(w.generators);
      break;
    case SearchStatus::absent:
      v.kind = ambient.complete ? IpStarVerdictKind::holds : IpStarVerdictKind::window_limited;
      break;
    case SearchStatus::budget_exceeded: v.kind = IpStarVerdictKind::budget_exceeded; break;
  }
  return v;
}

/// Recheck of a failure witness: FS(witness) lies in the ambient and misses S.
template <class G>
bool witness_misses(const ElementSet<G>& S, std::span<const G> witness, const Ambient<G>& ambient) {
  if (witness.empty()) return false;
  FiniteSums<G> fs(witness);
  for (const auto& x : fs.set())
    if (S.contains(x) || !ambient.elements.contains(x)) return false;
  return true;
}

template <class G>
struct IntersectionProbe {
  SearchStatus status = SearchStatus::found;
  /// Least q with A intersect B IP*_q for every IP*_r set A and IP*_s set B.
  std::optional<unsigned> q;
  std::size_t ip_star_r_sets = 0;
  std::size_t ip_star_s_sets = 0;
  std::size_t pairs = 0;
};

/// Exhausts all subsets of a small complete ambient. Every IP*_q set is
/// IP*_{q'} for q' >= q, so q is the largest per-pair minimum.
template <class G>
IntersectionProbe<G> ipstar_intersection_probe(unsigned r, unsigned s, const Ambient<G>& ambient,
                                               const SearchOptions& options = {}) {
  if (!ambient.complete) throw std::invalid_argument("ipstar_intersection_probe needs a complete finite ambient");
  const auto& elems = ambient.elements.elements();
  if (elems.size() > 16) throw std::invalid_argument("ipstar_intersection_probe: ambient too large to enumerate");
  const std::uint32_t n = static_cast<std::uint32_t>(elems.size());
  IntersectionProbe<G> out;
  BudgetMeter meter(options);
  SearchOptions serial = options;
  serial.workers = 1;

  auto subset = [&](std::uint32_t m) {
    std::vector<G> v;
    for (std::uint32_t i = 0; i < n; ++i)
      if (m >> i & 1u) v.push_back(elems[i]);
    return ElementSet<G>(std::move(v));
  };
  auto holds = [&](std::uint32_t m, unsigned q) -> std::optional<bool> {
    if (!meter.charge()) return std::nullopt;
    auto v = is_ip_r_star(subset(m), q, ambient, serial);
    if (v.kind == IpStarVerdictKind::budget_exceeded) return std::nullopt;
    return v.kind == IpStarVerdictKind::holds;
  };

  std::vector<std::uint32_t> star_r, star_s;
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    auto hr = holds(m, r);
    auto hs = holds(m, s);
    if (!hr || !hs) {
      out.status = SearchStatus::budget_exceeded;
      return out;
    }
    if (*hr) star_r.push_back(m);
    if (*hs) star_s.push_back(m);
  }
  out.ip_star_r_sets = star_r.size();
  out.ip_star_s_sets = star_s.size();

  std::vector<std::optional<unsigned>> min_q(1u << n);
  auto minimal_q = [&](std::uint32_t m) -> std::optional<unsigned> {
    if (min_q[m]) return min_q[m];
    for (unsigned q = 1; q <= n; ++q) {
      auto h = holds(m, q);
      if (!h) return std::nullopt;
      if (*h) return min_q[m] = q;
    }
    return min_q[m] = n + 1;
  };

  unsigned worst = 1;
  for (auto a : star_r)
    for (auto b : star_s) {
      ++out.pairs;
      auto q = minimal_q(a & b);
      if (!q) {
        out.status = SearchStatus::budget_exceeded;
        return out;
      }
      worst = std::max(worst, *q);
    }
  if (worst > n) {
    out.status = SearchStatus::absent;
    return out;
  }
  out.q = worst;
  return out;
}

}  // namespace ipr
