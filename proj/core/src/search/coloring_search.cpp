#include "ipr/search/coloring_search.hpp"

#include "ipr/search/parallel.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ipr {

namespace {

struct Index {
  // constraints grouped by their largest point
  std::vector<std::vector<std::uint32_t>> by_last;
};

Index build_index(const ColoringProblem& p) {
  if (p.colors == 0 || p.colors > 255) throw std::invalid_argument("coloring search needs 1..255 colors");
  Index idx;
  idx.by_last.resize(p.points);
  for (std::uint32_t c = 0; c < p.constraints.size(); ++c) {
    const auto& con = p.constraints[c];
    if (con.empty()) throw std::invalid_argument("empty constraint");
    if (!std::is_sorted(con.begin(), con.end())) throw std::invalid_argument("constraint not sorted");
    if (con.back() >= p.points) throw std::invalid_argument("constraint point out of range");
    idx.by_last[con.back()].push_back(c);
  }
  return idx;
}

// Returns the index of a constraint made monochromatic by coloring point i, or -1.
long violated_at(const ColoringProblem& p, const Index& idx, const Coloring& col, std::size_t i) {
  const auto c = col[i];
  for (auto ci : idx.by_last[i]) {
    const auto& con = p.constraints[ci];
    bool mono = true;
    for (auto q : con)
      if (col[q] != c) {
        mono = false;
        break;
      }
    if (mono) return static_cast<long>(ci);
  }
  return -1;
}

int compare_prefix(const Coloring& a, const Coloring& b) {
  auto n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

class Dfs {
 public:
  Dfs(const ColoringProblem& p, const Index& idx, BudgetMeter& meter, const ColoringSearchRequest& req,
      bool record, bool serial)
      : p_(p), idx_(idx), meter_(meter), req_(req), record_(record), serial_(serial) {}

  enum class Outcome { found, exhausted, interrupted };

  // Explores the subtree below `start` (already consistent). `bound` is a
  // resume point to respect, or empty.
  Outcome run(const Coloring& start, const Coloring& bound) {
    col_.assign(p_.points, 0);
    std::copy(start.begin(), start.end(), col_.begin());
    int max_used = -1;
    for (auto c : start) max_used = std::max<int>(max_used, c);
    bound_ = bound;
    return descend(start.size(), max_used, !bound.empty());
  }

  const Coloring& coloring() const { return col_; }
  const Coloring& resume_point() const { return resume_; }
  std::vector<RefutationLeaf>& leaves() { return leaves_; }

 private:
  Outcome descend(std::size_t i, int max_used, bool bounded) {
    if (i == p_.points) return Outcome::found;
    const unsigned limit = std::min<unsigned>(p_.colors, static_cast<unsigned>(max_used + 2));
    unsigned first = 0;
    if (bounded && i < bound_.size()) first = bound_[i];
    else bounded = false;
    for (unsigned c = first; c < limit; ++c) {
      col_[i] = static_cast<std::uint8_t>(c);
      const auto before = meter_.used();
      // nodes strictly inside the resume prefix were paid for by the earlier run
      const bool replay = bounded && c == first && i + 1 < bound_.size();
      if (!replay && !meter_.charge()) {
        resume_.assign(col_.begin(), col_.begin() + static_cast<long>(i) + 1);
        return Outcome::interrupted;
      }
      if (serial_ && req_.on_checkpoint && meter_.checkpoint_due(before, before + 1)) {
        req_.on_checkpoint(Coloring(col_.begin(), col_.begin() + static_cast<long>(i) + 1));
      }
      long v = violated_at(p_, idx_, col_, i);
      if (v >= 0) {
        if (record_)
          leaves_.push_back({Coloring(col_.begin(), col_.begin() + static_cast<long>(i) + 1),
                             static_cast<std::uint32_t>(v)});
        continue;
      }
      const bool child_bounded = bounded && c == first;
      auto out = descend(i + 1, std::max<int>(max_used, static_cast<int>(c)), child_bounded);
      if (out != Outcome::exhausted) return out;
    }
    return Outcome::exhausted;
  }

  const ColoringProblem& p_;
  const Index& idx_;
  BudgetMeter& meter_;
  const ColoringSearchRequest& req_;
  bool record_;
  bool serial_;
  Coloring col_;
  Coloring bound_;
  Coloring resume_;
  std::vector<RefutationLeaf> leaves_;
};

// Canonical consistent prefixes of length `depth`, in lexicographic order.
// Prefixes cut short by a violated constraint become leaves.
void enumerate_prefixes(const ColoringProblem& p, const Index& idx, std::size_t depth, Coloring& cur, int max_used,
                        std::vector<Coloring>& out, std::vector<RefutationLeaf>& leaves) {
  const auto i = cur.size();
  if (i == depth) {
    out.push_back(cur);
    return;
  }
  const unsigned limit = std::min<unsigned>(p.colors, static_cast<unsigned>(max_used + 2));
  for (unsigned c = 0; c < limit; ++c) {
    cur.push_back(static_cast<std::uint8_t>(c));
    Coloring full(p.points, 0);
    std::copy(cur.begin(), cur.end(), full.begin());
    long v = violated_at(p, idx, full, i);
    if (v >= 0) leaves.push_back({cur, static_cast<std::uint32_t>(v)});
    else enumerate_prefixes(p, idx, depth, cur, std::max<int>(max_used, static_cast<int>(c)), out, leaves);
    cur.pop_back();
  }
}

}  // namespace

ColoringSearchResult find_avoiding_coloring(const ColoringProblem& problem, const ColoringSearchRequest& request) {
  const Index idx = build_index(problem);
  BudgetMeter meter(request.options);
  const bool record = request.record_refutation && request.resume_from.empty();
  const unsigned workers = request.options.resolved_workers();
  ColoringSearchResult result;

  if (problem.points == 0) {
    result.status = SearchStatus::found;
    return result;
  }

  // Split into prefix tasks so workers can proceed independently.
  std::size_t depth = 0;
  if (workers > 1) {
    std::size_t approx = 1;
    while (depth < problem.points && approx < 16u * workers) {
      approx *= problem.colors;
      ++depth;
    }
  }
  std::vector<Coloring> prefixes;
  std::vector<RefutationLeaf> prefix_leaves;
  Coloring cur;
  enumerate_prefixes(problem, idx, depth, cur, -1, prefixes, prefix_leaves);

  std::vector<Coloring> bounds(prefixes.size());
  std::vector<bool> skip(prefixes.size(), false);
  const auto& resume = request.resume_from;
  for (std::size_t t = 0; t < prefixes.size(); ++t) {
    if (resume.empty()) continue;
    int cmp = compare_prefix(prefixes[t], resume);
    if (cmp < 0) skip[t] = true;
    else if (cmp == 0 && resume.size() > prefixes[t].size()) bounds[t] = resume;
  }

  std::vector<Coloring> task_resume(prefixes.size());
  std::vector<std::vector<RefutationLeaf>> task_leaves(prefixes.size());
  const bool serial = workers == 1;

  auto first = parallel_first<Coloring>(
      prefixes.size(), workers, [&](std::size_t t, auto&&) -> TaskOutcome<Coloring> {
        if (skip[t]) return TaskOutcome<Coloring>::exhausted();
        if (meter.exhausted()) {
          task_resume[t] = bounds[t].empty() ? prefixes[t] : bounds[t];
          return TaskOutcome<Coloring>::interrupted();
        }
        Dfs dfs(problem, idx, meter, request, record, serial);
        auto out = dfs.run(prefixes[t], bounds[t]);
        task_leaves[t] = std::move(dfs.leaves());
        switch (out) {
          case Dfs::Outcome::found: return TaskOutcome<Coloring>::found(dfs.coloring());
          case Dfs::Outcome::exhausted: return TaskOutcome<Coloring>::exhausted();
          case Dfs::Outcome::interrupted:
            task_resume[t] = dfs.resume_point();
            return TaskOutcome<Coloring>::interrupted();
        }
        return TaskOutcome<Coloring>::exhausted();
      });

  result.candidates = meter.used();
  if (first.found()) {
    result.status = SearchStatus::found;
    result.coloring = std::move(first.first->second);
    return result;
  }
  if (first.interrupted()) {
    result.status = SearchStatus::budget_exceeded;
    auto t = *first.first_unfinished;
    result.resume_point = task_resume[t].empty() ? prefixes[t] : task_resume[t];
    return result;
  }
  result.status = SearchStatus::absent;
  if (record) {
    result.refutation = std::move(prefix_leaves);
    for (auto& leaves : task_leaves)
      for (auto& l : leaves) result.refutation.push_back(std::move(l));
    std::sort(result.refutation.begin(), result.refutation.end(),
              [](const RefutationLeaf& a, const RefutationLeaf& b) { return a.prefix < b.prefix; });
    result.refutation_complete = true;
  }
  return result;
}

bool verify_avoiding(const ColoringProblem& problem, std::span<const std::uint8_t> coloring) {
  if (coloring.size() != problem.points) return false;
  for (auto c : coloring)
    if (c >= problem.colors) return false;
  for (const auto& con : problem.constraints) {
    bool mono = true;
    for (auto q : con)
      if (q >= coloring.size() || coloring[q] != coloring[con.front()]) {
        mono = false;
        break;
      }
    if (mono) return false;
  }
  return true;
}

namespace {

bool covered(const ColoringProblem& p, const std::map<Coloring, std::uint32_t>& leaves, Coloring& prefix) {
  if (auto it = leaves.find(prefix); it != leaves.end()) {
    if (it->second >= p.constraints.size()) return false;
    const auto& con = p.constraints[it->second];
    for (auto q : con)
      if (q >= prefix.size() || prefix[q] != prefix[con.front()]) return false;
    return true;
  }
  if (prefix.size() >= p.points) return false;
  int max_used = -1;
  for (auto c : prefix) max_used = std::max<int>(max_used, c);
  const unsigned limit = std::min<unsigned>(p.colors, static_cast<unsigned>(max_used + 2));
  for (unsigned c = 0; c < limit; ++c) {
    prefix.push_back(static_cast<std::uint8_t>(c));
    bool ok = covered(p, leaves, prefix);
    prefix.pop_back();
    if (!ok) return false;
  }
  return true;
}

}  // namespace

bool verify_refutation(const ColoringProblem& problem, std::span<const RefutationLeaf> leaves) {
  std::map<Coloring, std::uint32_t> set;
  for (const auto& l : leaves) set.emplace(l.prefix, l.constraint);
  Coloring prefix;
  return covered(problem, set, prefix);
}

Coloring canonicalize(std::span<const std::uint8_t> coloring) {
  std::vector<int> relabel(256, -1);
  int next = 0;
  Coloring out;
  out.reserve(coloring.size());
  for (auto c : coloring) {
    if (relabel[c] < 0) relabel[c] = next++;
    out.push_back(static_cast<std::uint8_t>(relabel[c]));
  }
  return out;
}

}  // namespace ipr
