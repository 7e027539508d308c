#pragma once

#include "ipr/ip/subsets.hpp"
#include "ipr/search/coloring_search.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace ipr {

/// Colorings of F_r (the 2^r - 1 non-empty subsets of {1..r}) against FU_s
/// families: s ordered blocks alpha_1 < ... < alpha_s with all their unions.
///
/// Point i of the coloring problem is the subset with mask i + 1, so colorings
/// read in bitmask order.
ColoringProblem fu_problem(unsigned r, unsigned s, unsigned k);

/// All FU_s families inside F_r as sorted mask lists.
std::vector<std::vector<SubsetMask>> fu_families(unsigned r, unsigned s);

enum class FuVerdict : std::uint8_t { all_colorings_ok, counterexample, budget_exceeded };
std::string_view to_string(FuVerdict v);

struct FuRamseyResult {
  unsigned r = 0, s = 0, k = 0;
  FuVerdict verdict = FuVerdict::all_colorings_ok;
  /// counterexample: a k-coloring of F_r (0-based, bitmask order) with no
  /// monochromatic FU_s family.
  Coloring coloring;
  Coloring resume_point;
  std::vector<RefutationLeaf> refutation;
  std::uint64_t candidates = 0;
};

/// Either certifies that every k-coloring of F_r has a monochromatic FU_s
/// family or returns the first canonical coloring without one.
FuRamseyResult fu_ramsey_check(unsigned r, unsigned s, unsigned k, const ColoringSearchRequest& request = {});

struct FuMinimalR {
  /// The least r <= r_max at which every coloring is ok.
  std::optional<unsigned> r;
  /// One entry per r tried, ascending.
  std::vector<FuRamseyResult> steps;
  bool budget_exceeded = false;
};

/// Ascending search r = r_start, r_start + 1, ...; stops at the first
/// all-colorings-ok since the property is monotone in r.
FuMinimalR fu_ramsey_minimal_r(unsigned s, unsigned k, unsigned r_max, const ColoringSearchRequest& request = {},
                               unsigned r_start = 1);

/// Independent validation of a counterexample (no search code).
bool verify_fu_counterexample(unsigned r, unsigned s, unsigned k, std::span<const std::uint8_t> coloring);

}  // namespace ipr
