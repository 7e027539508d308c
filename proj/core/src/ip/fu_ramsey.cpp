#include "ipr/ip/fu_ramsey.hpp"

#include <algorithm>
#include <stdexcept>

namespace ipr {

namespace {

void collect(unsigned r, unsigned s, std::vector<SubsetMask>& blocks, std::vector<std::vector<SubsetMask>>& out) {
  if (blocks.size() == s) {
    std::vector<SubsetMask> fam;
    for (std::uint32_t beta = 1; beta < (1u << s); ++beta) {
      SubsetMask u = 0;
      for (unsigned i = 0; i < s; ++i)
        if (beta >> i & 1u) u |= blocks[i];
      fam.push_back(u);
    }
    std::sort(fam.begin(), fam.end());
    out.push_back(std::move(fam));
    return;
  }
  const unsigned lo = blocks.empty() ? 1 : mask_max(blocks.back()) + 1;
  if (lo > r) return;
  // Blocks are subsets of {lo..r} containing at least one element.
  const SubsetMask full = (r == 64 ? ~SubsetMask{0} : (SubsetMask{1} << r) - 1);
  const SubsetMask allowed = full & ~((SubsetMask{1} << (lo - 1)) - 1);
  for (SubsetMask a = allowed; a; a = (a - 1) & allowed) {
    blocks.push_back(a);
    collect(r, s, blocks, out);
    blocks.pop_back();
  }
}

void check_params(unsigned r, unsigned s, unsigned k) {
  if (r == 0 || s == 0 || k == 0) throw std::invalid_argument("fu_ramsey needs r, s, k >= 1");
  if (r > 16) throw std::invalid_argument("fu_ramsey: r too large (2^r - 1 points)");
  if (s > 16) throw std::invalid_argument("fu_ramsey: s too large");
}

}  // namespace

std::string_view to_string(FuVerdict v) {
  switch (v) {
    case FuVerdict::all_colorings_ok: return "all-colorings-ok";
    case FuVerdict::counterexample: return "counterexample";
    case FuVerdict::budget_exceeded: return "budget-exceeded";
  }
  return "?";
}

std::vector<std::vector<SubsetMask>> fu_families(unsigned r, unsigned s) {
  check_params(r, s, 1);
  std::vector<std::vector<SubsetMask>> out;
  std::vector<SubsetMask> blocks;
  collect(r, s, blocks, out);
  std::sort(out.begin(), out.end());
  return out;
}

ColoringProblem fu_problem(unsigned r, unsigned s, unsigned k) {
  check_params(r, s, k);
  ColoringProblem p;
  p.points = (std::size_t{1} << r) - 1;
  p.colors = k;
  for (const auto& fam : fu_families(r, s)) {
    std::vector<std::uint32_t> con;
    for (auto m : fam) con.push_back(static_cast<std::uint32_t>(m - 1));
    p.constraints.push_back(std::move(con));
  }
  return p;
}

FuRamseyResult fu_ramsey_check(unsigned r, unsigned s, unsigned k, const ColoringSearchRequest& request) {
  auto problem = fu_problem(r, s, k);
  auto res = find_avoiding_coloring(problem, request);
  FuRamseyResult out;
  out.r = r;
  out.s = s;
  out.k = k;
  out.candidates = res.candidates;
  switch (res.status) {
    case SearchStatus::found:
      out.verdict = FuVerdict::counterexample;
      out.coloring = std::move(res.coloring);
      break;
    case SearchStatus::absent:
      out.verdict = FuVerdict::all_colorings_ok;
      out.refutation = std::move(res.refutation);
      break;
    case SearchStatus::budget_exceeded:
      out.verdict = FuVerdict::budget_exceeded;
      out.resume_point = std::move(res.resume_point);
      break;
  }
  return out;
}

FuMinimalR fu_ramsey_minimal_r(unsigned s, unsigned k, unsigned r_max, const ColoringSearchRequest& request,
                               unsigned r_start) {
  FuMinimalR out;
  for (unsigned r = std::max(1u, r_start); r <= r_max; ++r) {
    ColoringSearchRequest req = request;
    if (r != r_start) req.resume_from.clear();
    auto step = fu_ramsey_check(r, s, k, req);
    const auto verdict = step.verdict;
    out.steps.push_back(std::move(step));
    if (verdict == FuVerdict::budget_exceeded) {
      out.budget_exceeded = true;
      return out;
    }
    if (verdict == FuVerdict::all_colorings_ok) {
      out.r = r;
      return out;
    }
  }
  return out;
}

bool verify_fu_counterexample(unsigned r, unsigned s, unsigned k, std::span<const std::uint8_t> coloring) {
  const std::size_t n = (std::size_t{1} << r) - 1;
  if (coloring.size() != n) return false;
  for (auto c : coloring)
    if (c >= k) return false;
  // Direct enumeration of ordered block tuples, independent of fu_families.
  std::vector<SubsetMask> blocks;
  bool mono_found = false;
  auto rec = [&](auto&& self) -> void {
    if (mono_found) return;
    if (blocks.size() == s) {
      std::uint8_t color = 0;
      bool first = true, mono = true;
      for (std::uint32_t beta = 1; beta < (1u << s) && mono; ++beta) {
        SubsetMask u = 0;
        for (unsigned i = 0; i < s; ++i)
          if (beta >> i & 1u) u |= blocks[i];
        if (first) {
          color = coloring[u - 1];
          first = false;
        } else if (coloring[u - 1] != color) {
          mono = false;
        }
      }
      if (mono) mono_found = true;
      return;
    }
    for (SubsetMask a = 1; a <= n; ++a) {
      if (!blocks.empty() && mask_min(a) <= mask_max(blocks.back())) continue;
      blocks.push_back(a);
      self(self);
      blocks.pop_back();
    }
  };
  rec(rec);
  return !mono_found;
}

}  // namespace ipr
