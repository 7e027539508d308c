#pragma once

#include "ipr/algebra/numbers.hpp"
#include "ipr/search/budget.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace ipr {

struct FkDensityResult {
  SearchStatus status = SearchStatus::found;
  unsigned r = 0;
  unsigned n = 0;
  /// min |A| / N over A in {1..N} whose complement contains no FS(x_1..x_r)
  /// with every sum in the complement.
  Rational value;
  /// A largest IP_r-free complement (the first found in search order).
  std::vector<std::int64_t> complement;
  /// The odd numbers are IP_r-free for r >= 2 (odd + odd is even): their
  /// density ceil(N/2)/N certifies value <= 1 - ceil(N/2)/N.
  std::optional<Rational> odd_certificate;
  std::uint64_t candidates = 0;
};

/// Branch and bound over subsets of {1..N}: IP_r-freeness is inherited by
/// subsets, so a branch dies as soon as it stops being free or cannot beat the
/// incumbent.
FkDensityResult fk_density_experiment(unsigned r, unsigned n, const SearchOptions& options = {});

/// True when no FS(x_1..x_r) (repeats allowed) lies inside `set`.
bool is_ip_r_free(const std::vector<std::int64_t>& set, unsigned r);

}  // namespace ipr
