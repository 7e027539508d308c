#pragma once

#include "ipr/ip/element_set.hpp"
#include "ipr/search/budget.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ipr {

/// A_r = { i * 2^(2^r) : 1 <= i <= r }, the IP_r set generated by r copies of
/// 2^(2^r).
struct ExampleBlock {
  unsigned r = 0;
  Integer step;  // 2^(2^r)
  std::vector<Integer> elements;
};

/// The union A of the blocks A_1..A_{r_max}. A contains IP_r sets for every
/// r <= r_max but no FS mixing two blocks.
struct ExampleA {
  std::vector<ExampleBlock> blocks;
  ElementSet<Integer> set;

  /// The block containing x, if any.
  std::optional<unsigned> block_of(const Integer& x) const;
};

ExampleA example_a(unsigned r_max);

struct ExampleAChecks {
  /// (a) each A_r contains FS(c, ..., c) with c = 2^(2^r), r copies.
  bool blocks_are_fs = true;
  /// (b) no length-3 tuple from A touching two blocks has FS inside A.
  bool cross_block_fails = true;
  std::uint64_t cross_block_tuples = 0;
  /// (c) within block A_r the largest FS depth with FS inside A is exactly r.
  bool depth_is_r = true;
  std::vector<unsigned> depth;
  std::vector<std::string> failures;

  bool all() const { return blocks_are_fs && cross_block_fails && depth_is_r; }
};

ExampleAChecks check_example_a(const ExampleA& a, const SearchOptions& options = {});

}  // namespace ipr
