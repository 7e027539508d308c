#pragma once

#include "ipr/search/budget.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace ipr {

/// A finite Ramsey-type question: color points 0..points-1 with `colors` colors
/// so that no constraint (a set of points) is monochromatic.
///
/// Used with points = words and constraints = combinatorial lines (Hales-Jewett
/// numbers), and with points = F_r and constraints = FU_s families.
struct ColoringProblem {
  std::size_t points = 0;
  unsigned colors = 2;
  /// Each constraint sorted ascending and non-empty.
  std::vector<std::vector<std::uint32_t>> constraints;
};

using Coloring = std::vector<std::uint8_t>;  // 0-based colors, one per point

/// A node of the canonical search tree at which a constraint became
/// monochromatic.
struct RefutationLeaf {
  Coloring prefix;
  std::uint32_t constraint = 0;
};

struct ColoringSearchRequest {
  SearchOptions options;
  /// Resume point from an earlier budget-exceeded run; empty starts fresh.
  Coloring resume_from;
  /// Collect a refutation tree when no avoiding coloring exists. Only honored
  /// for fresh (non-resumed) runs.
  bool record_refutation = false;
  /// Called with a resume point every options.checkpoint_interval candidates
  /// (serial runs only; parallel runs report at the end).
  std::function<void(const Coloring&)> on_checkpoint;
};

struct ColoringSearchResult {
  /// found: `coloring` avoids every constraint. absent: none exists.
  SearchStatus status = SearchStatus::absent;
  Coloring coloring;
  /// budget_exceeded: every coloring lexicographically below this prefix has
  /// been refuted.
  Coloring resume_point;
  std::vector<RefutationLeaf> refutation;
  bool refutation_complete = false;
  std::uint64_t candidates = 0;
};

/// Finds the lexicographically least avoiding coloring in canonical form
/// (point i uses a color at most one above the largest color used before it),
/// or proves none exists. Colors are interchangeable, so the canonical form
/// loses no generality.
ColoringSearchResult find_avoiding_coloring(const ColoringProblem& problem, const ColoringSearchRequest& request);

/// Independent checks that use no search code.
bool verify_avoiding(const ColoringProblem& problem, std::span<const std::uint8_t> coloring);
/// True when the leaves cover every canonical coloring and each leaf's
/// constraint is monochromatic under its own prefix.
bool verify_refutation(const ColoringProblem& problem, std::span<const RefutationLeaf> leaves);

/// Relabels colors in order of first appearance.
Coloring canonicalize(std::span<const std::uint8_t> coloring);

}  // namespace ipr
