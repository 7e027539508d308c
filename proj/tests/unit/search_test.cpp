#include "gen.hpp"

#include "ipr/search/coloring_search.hpp"
#include "ipr/search/parallel.hpp"

#include <doctest.h>

#include <optional>

using namespace ipr;

namespace {

ColoringProblem random_problem(testgen::Rng& rng) {
  ColoringProblem p;
  p.points = static_cast<std::size_t>(rng.range(1, 8));
  p.colors = static_cast<unsigned>(rng.range(1, 3));
  const auto count = rng.range(0, 10);
  for (int i = 0; i < count; ++i) {
    std::vector<std::uint32_t> c;
    for (std::uint32_t x = 0; x < p.points; ++x)
      if (rng.range(0, 2) == 0) c.push_back(x);
    if (c.empty()) c.push_back(static_cast<std::uint32_t>(rng.range(0, p.points - 1)));
    p.constraints.push_back(c);
  }
  return p;
}

bool avoids(const ColoringProblem& p, const Coloring& c) {
  for (const auto& con : p.constraints) {
    bool mono = true;
    for (auto x : con) mono = mono && c[x] == c[con.front()];
    if (mono) return false;
  }
  return true;
}

// Lexicographically least canonical avoiding coloring by full enumeration.
std::optional<Coloring> brute_force(const ColoringProblem& p) {
  Coloring c(p.points, 0);
  while (true) {
    bool canonical = true;
    int top = -1;
    for (auto v : c) {
      if (v > top + 1) canonical = false;
      top = std::max<int>(top, v);
    }
    if (canonical && avoids(p, c)) return c;
    std::size_t i = p.points;
    while (i > 0 && c[i - 1] + 1u == p.colors) c[--i] = 0;
    if (i == 0) return std::nullopt;
    ++c[i - 1];
  }
}

}  // namespace

TEST_CASE("canonicalize relabels by first appearance") {
  CHECK(canonicalize(Coloring{2, 2, 0, 1, 0}) == Coloring{0, 0, 1, 2, 1});
  CHECK(canonicalize(Coloring{}) == Coloring{});
}

TEST_CASE("coloring search agrees with brute force") {
  testgen::Rng rng(21);
  for (int trial = 0; trial < 400; ++trial) {
    const auto p = random_problem(rng);
    ColoringSearchRequest req;
    req.record_refutation = true;
    const auto res = find_avoiding_coloring(p, req);
    const auto oracle = brute_force(p);
    if (oracle) {
      REQUIRE(res.status == SearchStatus::found);
      CHECK(res.coloring == *oracle);
      CHECK(verify_avoiding(p, res.coloring));
    } else {
      REQUIRE(res.status == SearchStatus::absent);
      CHECK(res.refutation_complete);
      CHECK(verify_refutation(p, res.refutation));
    }
  }
}

TEST_CASE("an incomplete refutation is rejected") {
  // A triangle cannot be 2-colored without a monochromatic edge.
  ColoringProblem p{3, 2, {{0, 1}, {1, 2}, {0, 2}}};
  ColoringSearchRequest req;
  req.record_refutation = true;
  auto res = find_avoiding_coloring(p, req);
  REQUIRE(res.status == SearchStatus::absent);
  REQUIRE(verify_refutation(p, res.refutation));
  auto dropped = res.refutation;
  dropped.pop_back();
  CHECK_FALSE(verify_refutation(p, dropped));
}

TEST_CASE("verify_avoiding rejects wrong shapes") {
  ColoringProblem p{3, 2, {{0, 1}}};
  CHECK(verify_avoiding(p, Coloring{0, 1, 0}));
  CHECK_FALSE(verify_avoiding(p, Coloring{0, 0, 1}));
  CHECK_FALSE(verify_avoiding(p, Coloring{0, 1}));
  CHECK_FALSE(verify_avoiding(p, Coloring{0, 2, 0}));
}

TEST_CASE("budget exhaustion resumes to the same answer") {
  testgen::Rng rng(22);
  int resumed = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_problem(rng);
    const auto fresh = find_avoiding_coloring(p, {});
    ColoringSearchRequest req;
    req.options.max_candidates = 3;
    auto res = find_avoiding_coloring(p, req);
    int rounds = 0;
    while (res.status == SearchStatus::budget_exceeded && rounds < 10000) {
      ++rounds;
      req.resume_from = res.resume_point;
      res = find_avoiding_coloring(p, req);
    }
    if (rounds > 0) ++resumed;
    CHECK(res.status == fresh.status);
    CHECK(res.coloring == fresh.coloring);
  }
  CHECK(resumed > 0);
}

TEST_CASE("worker count does not change the answer") {
  testgen::Rng rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_problem(rng);
    ColoringSearchRequest one, many;
    many.options.workers = 4;
    const auto a = find_avoiding_coloring(p, one);
    const auto b = find_avoiding_coloring(p, many);
    CHECK(a.status == b.status);
    CHECK(a.coloring == b.coloring);
  }
}

TEST_CASE("budget meter") {
  SearchOptions o;
  o.max_candidates = 5;
  BudgetMeter m(o);
  CHECK(m.charge(3));
  CHECK(m.charge(2));
  CHECK_FALSE(m.charge());
  CHECK(m.exhausted());
  CHECK_FALSE(m.charge());

  SearchOptions c;
  c.checkpoint_interval = 10;
  BudgetMeter n(c);
  CHECK(n.checkpoint_due(9, 10));
  CHECK_FALSE(n.checkpoint_due(10, 19));
  CHECK(n.checkpoint_due(15, 25));
  CHECK(to_string(SearchStatus::budget_exceeded) == "budget-exceeded");
}

TEST_CASE("parallel_first returns the least hit regardless of workers") {
  for (unsigned workers : {1u, 2u, 8u}) {
    auto r = parallel_first<int>(100, workers, [](std::size_t i, auto&&) {
      return (i % 17 == 5 || i == 40) ? TaskOutcome<int>::found(static_cast<int>(i)) : TaskOutcome<int>::exhausted();
    });
    REQUIRE(r.found());
    CHECK(r.first->first == 5);
    CHECK(r.first->second == 5);
  }
  auto none = parallel_first<int>(10, 3, [](std::size_t, auto&&) { return TaskOutcome<int>::exhausted(); });
  CHECK_FALSE(none.found());
  CHECK_FALSE(none.interrupted());
  auto cut = parallel_first<int>(10, 1, [](std::size_t i, auto&&) {
    return i == 3 ? TaskOutcome<int>::interrupted()
                  : (i == 6 ? TaskOutcome<int>::found(6) : TaskOutcome<int>::exhausted());
  });
  CHECK_FALSE(cut.found());
  CHECK(*cut.first_unfinished == 3);
  auto squares = parallel_map<int>(50, 4, [](std::size_t i) { return static_cast<int>(i * i); });
  for (std::size_t i = 0; i < 50; ++i) CHECK(squares[i] == static_cast<int>(i * i));
}
