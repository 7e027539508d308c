#include "gen.hpp"

#include "ipr/hj/hj_number.hpp"
#include "ipr/hj/lines.hpp"
#include "ipr/hj/psi.hpp"

#include <doctest.h>

#include <set>

using namespace ipr;

namespace {

std::vector<std::string> words(const std::vector<Word>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(w.to_string());
  return out;
}

CombinatorialLine line(unsigned m, SubsetMask moving, std::vector<std::uint8_t> fixed) {
  return CombinatorialLine{m, moving, std::move(fixed)};
}

// Canonical line order built from scratch: moving sets by size then sorted
// element list, fixed letters counted in position order.
std::vector<CombinatorialLine> lines_oracle(unsigned k, unsigned m) {
  std::vector<std::vector<unsigned>> sets;
  for (SubsetMask u = 1; u < (SubsetMask{1} << m); ++u) {
    std::vector<unsigned> s;
    for (unsigned j = 1; j <= m; ++j)
      if (u >> (j - 1) & 1u) s.push_back(j);
    sets.push_back(s);
  }
  std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::vector<CombinatorialLine> out;
  for (const auto& s : sets) {
    SubsetMask u = 0;
    for (auto j : s) u |= SubsetMask{1} << (j - 1);
    std::vector<unsigned> free;
    for (unsigned j = 1; j <= m; ++j)
      if (!(u >> (j - 1) & 1u)) free.push_back(j);
    std::vector<std::uint8_t> letters(free.size(), 1);
    while (true) {
      std::vector<std::uint8_t> fixed(m, 0);
      for (std::size_t i = 0; i < free.size(); ++i) fixed[free[i] - 1] = letters[i];
      out.push_back(line(m, u, fixed));
      std::size_t i = free.size();
      while (i > 0 && letters[i - 1] == k) letters[--i] = 1;
      if (i == 0) break;
      ++letters[i - 1];
    }
  }
  return out;
}

std::uint64_t index_oracle(const std::vector<std::uint8_t>& letters, unsigned k) {
  std::uint64_t idx = 0;
  for (auto l : letters) idx = idx * k + (l - 1u);
  return idx;
}

}  // namespace

TEST_CASE("words index lexicographically") {
  for (unsigned k = 1; k <= 4; ++k)
    for (unsigned m = 1; m <= 4; ++m) {
      const auto n = word_count(k, m);
      for (std::uint64_t i = 0; i < n; ++i) {
        const auto w = word_at(k, m, i);
        CHECK(word_index(w) == i);
        CHECK(index_oracle(w.letters, k) == i);
      }
    }
  CHECK(Word::parse(3, "132").to_string() == "132");
  CHECK_THROWS(Word::parse(2, "13"));
  CHECK(word_at(12, 2, 12 * 12 - 1).to_string() == "12,12");
}

TEST_CASE("line_points examples") {
  CHECK(words(line_points(line(2, 0b11, {0, 0}), 2)) == std::vector<std::string>{"11", "22"});
  CHECK(words(line_points(line(2, 0b01, {0, 1}), 2)) == std::vector<std::string>{"11", "21"});
  CHECK(words(line_points(line(1, 0b1, {0}), 3)) == std::vector<std::string>{"1", "2", "3"});
  const auto l = line(3, 0b101, {0, 2, 0});
  CHECK(l.to_string() == "fixed:{2:2} moving:{1,3}");
  CHECK(CombinatorialLine::parse(l.to_string()) == l);
}

TEST_CASE("all_lines follows the canonical order") {
  for (unsigned k = 1; k <= 3; ++k)
    for (unsigned m = 1; m <= 4; ++m) {
      const auto got = all_lines(k, m);
      CHECK(got == lines_oracle(k, m));
      std::uint64_t expect = 1, km = 1;
      for (unsigned i = 0; i < m; ++i) expect *= k + 1, km *= k;
      CHECK(got.size() == expect - km);
      for (std::size_t i = 0; i + 1 < got.size(); ++i) CHECK(line_less(got[i], got[i + 1]));
      for (const auto& l : got) {
        const auto pts = line_point_indices(l, k);
        const auto ws = line_points(l, k);
        for (unsigned c = 0; c < k; ++c) CHECK(pts[c] == word_index(ws[c]));
      }
    }
}

TEST_CASE("find_mono_line examples") {
  const Coloring constant(4, 0);
  const auto first = find_mono_line(2, 2, constant);
  REQUIRE(first.status == SearchStatus::found);
  CHECK(*first.line == line(2, 0b01, {0, 1}));
  CHECK(find_mono_line(2, 1, Coloring{0, 1}).status == SearchStatus::absent);
  for (std::uint32_t mask = 0; mask < 16; ++mask) {
    Coloring c;
    for (int i = 0; i < 4; ++i) c.push_back(static_cast<std::uint8_t>(mask >> i & 1u));
    CHECK(find_mono_line(2, 2, c).status == SearchStatus::found);
  }
  auto by_word = find_mono_line(2, 2, [](const Word& w) { return w.letters[0] == w.letters[1] ? 0u : 1u; });
  CHECK(by_word.status == SearchStatus::found);
}

TEST_CASE("find_mono_line returns the first monochromatic line") {
  testgen::Rng rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned k = static_cast<unsigned>(rng.range(2, 3));
    const unsigned m = static_cast<unsigned>(rng.range(1, 4));
    const unsigned t = static_cast<unsigned>(rng.range(2, 3));
    Coloring c(word_count(k, m));
    for (auto& x : c) x = static_cast<std::uint8_t>(rng.range(0, t - 1));
    std::optional<CombinatorialLine> expect;
    for (const auto& l : lines_oracle(k, m)) {
      std::set<std::uint8_t> seen;
      for (unsigned letter = 1; letter <= k; ++letter) {
        std::vector<std::uint8_t> w(m);
        for (unsigned j = 0; j < m; ++j) w[j] = (l.moving >> j & 1u) ? letter : l.fixed[j];
        seen.insert(c[index_oracle(w, k)]);
      }
      if (seen.size() == 1) {
        expect = l;
        break;
      }
    }
    SearchOptions opts;
    opts.workers = trial % 3 + 1;
    const auto got = find_mono_line(k, m, c, opts);
    CHECK((got.status == SearchStatus::found) == expect.has_value());
    if (expect) CHECK(*got.line == *expect);
  }
}

TEST_CASE("hj_number examples") {
  const auto r = hj_number(2, 2, 3);
  REQUIRE(r.value);
  CHECK(*r.value == 2);
  REQUIRE(r.steps.size() == 2);
  CHECK(r.steps[0].status == SearchStatus::found);
  CHECK(r.steps[0].coloring == Coloring{0, 1});
  CHECK(r.steps[1].status == SearchStatus::absent);
  CHECK(r.steps[1].method == HjMethod::exhaustive);
  CHECK(r.steps[1].candidates == 16);

  for (unsigned t = 1; t <= 4; ++t) CHECK(*hj_number(1, t, 2).value == 1);
  CHECK(*hj_number(2, 3, 4).value == 3);
  CHECK(*hj_number(3, 1, 2).value == 1);
  CHECK(*hj_known_value(2, 7) == 7);
  CHECK(*hj_known_value(1, 9) == 1);
  CHECK_FALSE(hj_known_value(3, 2));
}

TEST_CASE("hj_number beyond m_max and the DFS path") {
  HjNumberOptions opts;
  opts.exhaustive_limit = 0;
  opts.record_refutation = true;
  const auto dfs = hj_number(2, 2, 3, opts);
  REQUIRE(dfs.value);
  CHECK(*dfs.value == 2);
  CHECK(dfs.steps[1].method == HjMethod::dfs);
  CHECK(verify_refutation(hj_problem(2, 2, 2), dfs.steps[1].refutation));

  const auto hj32 = hj_number(3, 2, 3);
  CHECK_FALSE(hj32.value);
  CHECK_FALSE(hj32.budget_exceeded);
  for (const auto& s : hj32.steps) {
    REQUIRE(s.status == SearchStatus::found);
    CHECK(verify_avoiding(hj_problem(3, 2, s.m), s.coloring));
  }

  HjNumberOptions tiny;
  tiny.search.max_candidates = 3;
  tiny.exhaustive_limit = 0;
  const auto cut = hj_number(3, 2, 3, tiny);
  CHECK(cut.budget_exceeded);
  CHECK_FALSE(cut.value);
}

TEST_CASE("psi examples") {
  auto enc = [](std::string w, unsigned d) {
    std::vector<std::string> out;
    for (auto a : psi_encode(Word::parse(1u << d, w), d)) out.push_back(mask_to_string(a));
    return out;
  };
  CHECK(enc("23", 2) == std::vector<std::string>{"{1}", "{2}"});
  CHECK(enc("111", 3) == std::vector<std::string>{"{}", "{}", "{}"});
  CHECK(enc("212", 1) == std::vector<std::string>{"{1,3}"});
}

TEST_CASE("psi is a bijection for d <= 3, r <= 4") {
  for (unsigned d = 1; d <= 3; ++d)
    for (unsigned r = 1; r <= 4; ++r) {
      std::set<std::vector<SubsetMask>> images;
      const unsigned k = 1u << d;
      for (std::uint64_t i = 0; i < word_count(k, r); ++i) {
        const auto w = word_at(k, r, i);
        const auto alphas = psi_encode(w, d);
        // bit extraction oracle
        for (unsigned b = 0; b < d; ++b)
          for (unsigned j = 0; j < r; ++j) CHECK(((alphas[b] >> j) & 1u) == (((w.letters[j] - 1u) >> b) & 1u));
        CHECK(psi_decode(alphas, r) == w);
        images.insert(alphas);
      }
      CHECK(images.size() == word_count(k, r));
    }
}

TEST_CASE("line_to_config examples") {
  const auto all = line_to_config(line(3, 0b111, {0, 0, 0}), 2);
  CHECK(all.alphas == std::vector<SubsetMask>{0, 0});
  CHECK(all.gamma == 0b111);
  const auto c = line_to_config(line(2, 0b10, {2, 0}), 1);
  CHECK(c.alphas == std::vector<SubsetMask>{0b01});
  CHECK(c.gamma == 0b10);
  CHECK(c.to_string() == "alpha=[{1}] gamma={2}");
}

TEST_CASE("line_to_config maps line points to configuration points") {
  for (unsigned d = 1; d <= 2; ++d)
    for (unsigned r = 1; r <= 3; ++r) {
      std::set<std::pair<std::vector<SubsetMask>, SubsetMask>> seen;
      for (const auto& l : all_lines(1u << d, r)) {
        const auto cfg = line_to_config(l, d);
        CHECK(cfg.valid());
        const auto pts = line_points(l, 1u << d);
        for (std::uint32_t e = 0; e < (1u << d); ++e) CHECK(cfg.point(e) == psi_encode(pts[e], d));
        seen.emplace(cfg.alphas, cfg.gamma);
      }
      CHECK(seen.size() == all_lines(1u << d, r).size());
    }
}

TEST_CASE("mono_config_search examples") {
  for (unsigned d = 1; d <= 2; ++d)
    for (unsigned r = 1; r <= 3; ++r) {
      const auto res = mono_config_search(d, r, [](std::span<const SubsetMask>) { return 0u; });
      REQUIRE(res.status == SearchStatus::found);
      CHECK(res.config->valid());
    }
  // every 2-coloring of P{1,2} has a monochromatic configuration
  for (std::uint32_t mask = 0; mask < 16; ++mask) {
    const auto res = mono_config_search(1, 2, [mask](std::span<const SubsetMask> a) { return mask >> a[0] & 1u; });
    REQUIRE(res.status == SearchStatus::found);
    const auto& cfg = *res.config;
    const auto c0 = mask >> cfg.point(0)[0] & 1u;
    CHECK((mask >> cfg.point(1)[0] & 1u) == c0);
  }
  const auto none = mono_config_search(1, 1, [](std::span<const SubsetMask> a) { return a[0] == 0 ? 0u : 1u; });
  CHECK(none.status == SearchStatus::absent);
}
