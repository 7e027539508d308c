#include "ipr/ip/example_a.hpp"

#include "ipr/ip/finite_sums.hpp"

#include <set>
#include <stdexcept>

namespace ipr {

std::optional<unsigned> ExampleA::block_of(const Integer& x) const {
  for (const auto& b : blocks)
    for (const auto& e : b.elements)
      if (e == x) return b.r;
  return std::nullopt;
}

ExampleA example_a(unsigned r_max) {
  if (r_max == 0) throw std::invalid_argument("example_a needs r_max >= 1");
  if (r_max > 24) throw std::invalid_argument("example_a: r_max too large");
  ExampleA a;
  std::vector<Integer> all;
  for (unsigned r = 1; r <= r_max; ++r) {
    ExampleBlock b;
    b.r = r;
    mpz_ui_pow_ui(b.step.get_mpz_t(), 2, 1ul << r);
    for (unsigned i = 1; i <= r; ++i) b.elements.push_back(Integer(b.step * i));
    all.insert(all.end(), b.elements.begin(), b.elements.end());
    a.blocks.push_back(std::move(b));
  }
  a.set = ElementSet<Integer>(std::move(all));
  return a;
}

ExampleAChecks check_example_a(const ExampleA& a, const SearchOptions& options) {
  ExampleAChecks out;
  SearchOptions serial = options;
  serial.workers = 1;

  for (const auto& b : a.blocks) {
    std::vector<Integer> gens(b.r, b.step);
    FiniteSums<Integer> fs{std::span<const Integer>(gens)};
    if (!fs.set().is_subset_of(a.set) || fs.set().size() != b.elements.size()) {
      out.blocks_are_fs = false;
      out.failures.push_back("A_" + std::to_string(b.r) + " is not FS of r copies of its step");
    }
  }

  const auto& elems = a.set.elements();
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i; j < elems.size(); ++j)
      for (std::size_t k = j; k < elems.size(); ++k) {
        std::set<unsigned> blocks{*a.block_of(elems[i]), *a.block_of(elems[j]), *a.block_of(elems[k])};
        if (blocks.size() < 2) continue;
        ++out.cross_block_tuples;
        std::vector<Integer> t{elems[i], elems[j], elems[k]};
        FiniteSums<Integer> fs{std::span<const Integer>(t)};
        if (fs.set().is_subset_of(a.set)) {
          out.cross_block_fails = false;
          out.failures.push_back("cross-block tuple (" + render(t[0]) + "," + render(t[1]) + "," + render(t[2]) +
                                 ") has FS inside A");
        }
      }

  for (const auto& b : a.blocks) {
    ElementSet<Integer> pool(b.elements);
    unsigned depth = 0;
    for (unsigned d = 1; d <= b.r + 1; ++d) {
      auto w = contains_ip_r(a.set, d, pool, serial);
      if (w.status != SearchStatus::found) break;
      depth = d;
    }
    out.depth.push_back(depth);
    if (depth != b.r) {
      out.depth_is_r = false;
      out.failures.push_back("A_" + std::to_string(b.r) + " has FS depth " + std::to_string(depth));
    }
  }
  return out;
}

}  // namespace ipr
