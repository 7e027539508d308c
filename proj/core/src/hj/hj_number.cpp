#include "ipr/hj/hj_number.hpp"

#include <algorithm>
#include <stdexcept>

namespace ipr {

std::string_view to_string(HjMethod m) { return m == HjMethod::exhaustive ? "exhaustive" : "dfs"; }

ColoringProblem hj_problem(unsigned k, unsigned t, unsigned m) {
  if (t == 0 || t > 255) throw std::invalid_argument("number of colors must be in [1,255]");
  ColoringProblem p;
  p.points = word_count(k, m);
  p.colors = t;
  for (const auto& line : all_lines(k, m)) {
    auto idx = line_point_indices(line, k);
    std::vector<std::uint32_t> con(idx.begin(), idx.end());
    std::sort(con.begin(), con.end());
    p.constraints.push_back(std::move(con));
  }
  return p;
}

namespace {

/// t^n if it is at most `limit`.
std::optional<std::uint64_t> bounded_pow(std::uint64_t t, std::uint64_t n, std::uint64_t limit) {
  std::uint64_t v = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (t != 0 && v > limit / t) return std::nullopt;
    v *= t;
  }
  return v <= limit ? std::optional(v) : std::nullopt;
}

bool has_mono(const ColoringProblem& p, const Coloring& c) {
  for (const auto& con : p.constraints) {
    bool mono = true;
    for (auto x : con)
      if (c[x] != c[con.front()]) {
        mono = false;
        break;
      }
    if (mono) return true;
  }
  return false;
}

}  // namespace

HjStep hj_step(unsigned k, unsigned t, unsigned m, const HjNumberOptions& options) {
  auto problem = hj_problem(k, t, m);
  HjStep step;
  step.m = m;
  if (auto total = bounded_pow(t, problem.points, options.exhaustive_limit)) {
    // Every coloring, lexicographic with word index 0 most significant.
    step.method = HjMethod::exhaustive;
    BudgetMeter meter(options.search);
    Coloring c(problem.points, 0);
    std::uint64_t start = 0;
    if (!options.resume_from.empty()) {
      if (options.resume_from.size() != c.size()) throw std::invalid_argument("resume point has the wrong length");
      c = options.resume_from;
      for (auto digit : c) {
        if (digit >= t) throw std::invalid_argument("resume point uses a color >= t");
        start = start * t + digit;
      }
    }
    for (std::uint64_t n = start; n < *total; ++n) {
      if (!meter.charge()) {
        step.status = SearchStatus::budget_exceeded;
        step.candidates = meter.used();
        step.resume_point = c;
        return step;
      }
      if (options.on_checkpoint && meter.checkpoint_due(meter.used() - 1, meter.used())) options.on_checkpoint(c);
      if (!has_mono(problem, c)) {
        step.status = SearchStatus::found;
        step.coloring = c;
        step.candidates = meter.used();
        return step;
      }
      for (std::size_t i = c.size(); i-- > 0;) {
        if (++c[i] < t) break;
        c[i] = 0;
      }
    }
    step.status = SearchStatus::absent;
    step.candidates = meter.used();
    return step;
  }
  step.method = HjMethod::dfs;
  ColoringSearchRequest req;
  req.options = options.search;
  req.record_refutation = options.record_refutation;
  req.resume_from = options.resume_from;
  req.on_checkpoint = options.on_checkpoint;
  auto res = find_avoiding_coloring(problem, req);
  step.status = res.status;
  step.coloring = std::move(res.coloring);
  step.candidates = res.candidates;
  step.refutation = std::move(res.refutation);
  step.resume_point = std::move(res.resume_point);
  return step;
}

HjNumberResult hj_number(unsigned k, unsigned t, unsigned m_max, const HjNumberOptions& options) {
  if (m_max == 0) throw std::invalid_argument("m_max must be >= 1");
  HjNumberResult out;
  out.k = k;
  out.t = t;
  out.m_max = m_max;
  for (unsigned m = std::max(1u, options.m_start); m <= m_max; ++m) {
    HjNumberOptions step_options = options;
    if (m != options.m_start) step_options.resume_from.clear();
    auto step = hj_step(k, t, m, step_options);
    const auto status = step.status;
    out.steps.push_back(std::move(step));
    if (status == SearchStatus::budget_exceeded) {
      out.budget_exceeded = true;
      return out;
    }
    if (status == SearchStatus::absent) {
      out.value = m;
      return out;
    }
  }
  return out;
}

std::optional<unsigned> hj_known_value(unsigned k, unsigned t) {
  if (k == 1 || t == 1) return 1u;
  if (k == 2) return t;
  return std::nullopt;
}

}  // namespace ipr
