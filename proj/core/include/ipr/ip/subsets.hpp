#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ipr {

/// Bitmask encoding of a subset of {1..r}: element j is bit j-1. r <= 64.
using SubsetMask = std::uint64_t;

inline unsigned mask_min(SubsetMask m) { return static_cast<unsigned>(__builtin_ctzll(m)) + 1; }
inline unsigned mask_max(SubsetMask m) { return 64u - static_cast<unsigned>(__builtin_clzll(m)); }

/// A non-empty finite set of positive integers: an element of F (or F_r).
class FiniteSubset {
 public:
  /// Throws std::invalid_argument if empty or containing 0.
  explicit FiniteSubset(std::vector<unsigned> elements);
  static FiniteSubset from_mask(SubsetMask mask);
  /// `{1,3,4}`.
  static FiniteSubset parse(std::string_view text);

  const std::vector<unsigned>& elements() const { return elems_; }
  unsigned min() const { return elems_.front(); }
  unsigned max() const { return elems_.back(); }
  /// Throws std::out_of_range if an element exceeds 64.
  SubsetMask mask() const;

  FiniteSubset unite(const FiniteSubset& other) const;
  std::string to_string() const;

  /// max(a) < min(b).
  friend bool precedes(const FiniteSubset& a, const FiniteSubset& b) { return a.max() < b.min(); }
  friend bool operator==(const FiniteSubset&, const FiniteSubset&) = default;
  /// Lexicographic on the sorted element lists.
  friend bool operator<(const FiniteSubset& a, const FiniteSubset& b) { return a.elems_ < b.elems_; }

 private:
  std::vector<unsigned> elems_;
};

/// `{1,3}` style rendering of a mask; `{}` for the empty set.
std::string mask_to_string(SubsetMask m);
SubsetMask parse_mask(std::string_view text);

/// FU(alpha_1, ..., alpha_s): the 2^s - 1 unions of the blocks, sorted.
/// Throws std::invalid_argument naming the first pair violating
/// max alpha_i < min alpha_{i+1}.
std::vector<FiniteSubset> finite_unions(std::span<const FiniteSubset> alphas);

}  // namespace ipr
