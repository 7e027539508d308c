#pragma once

#include "ipr/ip/subsets.hpp"
#include "ipr/search/budget.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ipr {

/// A word in [k]^[m]: letters[j-1] is the letter at position j, 1 <= letter <= k.
struct Word {
  unsigned k = 0;
  std::vector<std::uint8_t> letters;

  unsigned length() const { return static_cast<unsigned>(letters.size()); }
  /// Digit string, e.g. "121"; comma separated once k > 9.
  std::string to_string() const;
  static Word parse(unsigned k, std::string_view text);

  friend bool operator==(const Word&, const Word&) = default;
};

/// Words of [k]^[m] are indexed in lexicographic order with position 1 most
/// significant: index = sum (letter_j - 1) * k^(m - j).
std::uint64_t word_index(const Word& w);
Word word_at(unsigned k, unsigned m, std::uint64_t index);
/// k^m, throwing if it exceeds the addressable range.
std::uint64_t word_count(unsigned k, unsigned m);

/// Positions in `moving` (U_1, non-empty) share one letter; the rest carry the
/// letter given by `fixed` (0 at moving positions).
struct CombinatorialLine {
  unsigned m = 0;
  SubsetMask moving = 0;
  std::vector<std::uint8_t> fixed;

  /// `fixed:{2:1} moving:{1,3}`.
  std::string to_string() const;
  static CombinatorialLine parse(std::string_view text);

  friend bool operator==(const CombinatorialLine&, const CombinatorialLine&) = default;
};

/// Canonical line order: |U_1| ascending, then U_1 lexicographic as a sorted
/// list, then the fixed letters lexicographic in position order.
bool line_less(const CombinatorialLine& a, const CombinatorialLine& b);

/// The k points, moving letter 1..k in order.
std::vector<Word> line_points(const CombinatorialLine& line, unsigned k);
std::vector<std::uint64_t> line_point_indices(const CombinatorialLine& line, unsigned k);

/// Moving sets U_1 of length-m lines in canonical order.
std::vector<SubsetMask> moving_sets(unsigned m);
/// Every line of [k]^[m] in canonical order; (k+1)^m - k^m of them.
std::vector<CombinatorialLine> all_lines(unsigned k, unsigned m);

struct MonoLineResult {
  SearchStatus status = SearchStatus::absent;
  std::optional<CombinatorialLine> line;
  std::uint64_t candidates = 0;
};

/// First monochromatic line in canonical order under a coloring given per word
/// index. Parallel over moving sets with a minimum-index merge, so the result
/// does not depend on the worker count.
MonoLineResult find_mono_line(unsigned k, unsigned m, std::span<const std::uint8_t> coloring_by_index,
                              const SearchOptions& options = {});
MonoLineResult find_mono_line(unsigned k, unsigned m, const std::function<unsigned(const Word&)>& coloring,
                              const SearchOptions& options = {});

}  // namespace ipr
