#pragma once

#include "ipr/hj/lines.hpp"
#include "ipr/search/coloring_search.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

namespace ipr {

/// Points are word indices of [k]^[m], constraints are all lines in canonical
/// order.
ColoringProblem hj_problem(unsigned k, unsigned t, unsigned m);

enum class HjMethod : std::uint8_t { exhaustive, dfs };
std::string_view to_string(HjMethod m);

/// Outcome for one word length m.
struct HjStep {
  unsigned m = 0;
  HjMethod method = HjMethod::exhaustive;
  /// found: `coloring` has no monochromatic line. absent: every t-coloring
  /// has one. budget_exceeded: undecided.
  SearchStatus status = SearchStatus::absent;
  /// 0-based colors by word index; lexicographically least such coloring.
  Coloring coloring;
  /// exhaustive: colorings examined. dfs: search nodes.
  std::uint64_t candidates = 0;
  /// dfs absent: refutation tree leaves.
  std::vector<RefutationLeaf> refutation;
  /// dfs budget_exceeded.
  Coloring resume_point;
};

struct HjNumberOptions {
  SearchOptions search;
  /// Full enumeration while t^(k^m) stays at or below this; DFS beyond.
  std::uint64_t exhaustive_limit = std::uint64_t{1} << 20;
  bool record_refutation = false;
  /// Resume a budget-exceeded run: lengths below m_start are taken to have
  /// counterexamples already, and the m_start step restarts from resume_from.
  unsigned m_start = 1;
  Coloring resume_from;
  /// Called with a resume point every search.checkpoint_interval candidates
  /// (exhaustive and serial DFS runs).
  std::function<void(const Coloring&)> on_checkpoint;
};

struct HjNumberResult {
  unsigned k = 0, t = 0, m_max = 0;
  /// Least m <= m_max at which every t-coloring has a monochromatic line.
  std::optional<unsigned> value;
  bool budget_exceeded = false;
  std::vector<HjStep> steps;
};

HjNumberResult hj_number(unsigned k, unsigned t, unsigned m_max, const HjNumberOptions& options = {});

/// Decides a single length m.
HjStep hj_step(unsigned k, unsigned t, unsigned m, const HjNumberOptions& options = {});

/// Known closed forms used when reporting proof bounds: HJ(1,t) = 1,
/// HJ(k,1) = 1, HJ(2,t) = t. Empty when no closed form applies.
std::optional<unsigned> hj_known_value(unsigned k, unsigned t);

}  // namespace ipr
