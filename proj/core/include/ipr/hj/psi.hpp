#pragma once

#include "ipr/hj/lines.hpp"

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ipr {

/// ψ : [2^d]^[r] -> (P{1..r})^d. alpha_i holds the positions j whose letter
/// minus one has bit i set, bit 1 being the least significant.
std::vector<SubsetMask> psi_encode(const Word& w, unsigned d);
Word psi_decode(std::span<const SubsetMask> alphas, unsigned r);

/// (alpha_1 .. alpha_d; gamma) with gamma non-empty and disjoint from each
/// alpha_i. Its points are (alpha_1 ∪ eta_1, .., alpha_d ∪ eta_d) for
/// eta_i in {∅, gamma}.
struct SubsetConfig {
  unsigned r = 0;
  std::vector<SubsetMask> alphas;
  SubsetMask gamma = 0;

  bool valid() const;
  /// Point for pattern e: eta_i = gamma exactly when bit i-1 of e is set.
  std::vector<SubsetMask> point(std::uint32_t e) const;
  /// All 2^d points, pattern order.
  std::vector<std::vector<SubsetMask>> points() const;
  /// `alpha=[{1},{}] gamma={2}`.
  std::string to_string() const;

  friend bool operator==(const SubsetConfig&, const SubsetConfig&) = default;
};

/// γ = U_1 and alpha from the line point with moving letter 1. Pattern e
/// of the result is the ψ-image of the line point with moving letter e+1.
SubsetConfig line_to_config(const CombinatorialLine& line, unsigned d);

using TupleColoring = std::function<unsigned(std::span<const SubsetMask>)>;

struct MonoConfigResult {
  SearchStatus status = SearchStatus::absent;
  std::optional<SubsetConfig> config;
  std::optional<CombinatorialLine> line;
  std::uint64_t candidates = 0;
};

/// Colors [2^d]^[r] through ψ, finds the first monochromatic line and maps it
/// back to a configuration.
MonoConfigResult mono_config_search(unsigned d, unsigned r, const TupleColoring& coloring,
                                    const SearchOptions& options = {});

}  // namespace ipr
