#include "ipr/hj/lines.hpp"

#include "ipr/algebra/numbers.hpp"
#include "ipr/search/parallel.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace ipr {

namespace {

constexpr std::uint64_t kMaxWords = std::uint64_t{1} << 32;

std::vector<unsigned> mask_elements(SubsetMask m) {
  std::vector<unsigned> out;
  for (; m; m &= m - 1) out.push_back(static_cast<unsigned>(std::countr_zero(m)) + 1);
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string Word::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < letters.size(); ++j) {
    if (k > 9 && j) out += ',';
    out += std::to_string(letters[j]);
  }
  return out;
}

Word Word::parse(unsigned k, std::string_view text) {
  Word w{k, {}};
  text = trim(text);
  auto push = [&](std::int64_t v) {
    if (v < 1 || v > static_cast<std::int64_t>(k))
      throw std::invalid_argument("letter " + std::to_string(v) + " outside [1," + std::to_string(k) + "]");
    w.letters.push_back(static_cast<std::uint8_t>(v));
  };
  if (text.find(',') != std::string_view::npos) {
    while (!text.empty()) {
      auto comma = text.find(',');
      push(parse_int(trim(text.substr(0, comma))));
      if (comma == std::string_view::npos) break;
      text.remove_prefix(comma + 1);
    }
  } else {
    for (char c : text) {
      if (c < '0' || c > '9') throw std::invalid_argument("bad letter in word: " + std::string(text));
      push(c - '0');
    }
  }
  if (w.letters.empty()) throw std::invalid_argument("empty word");
  return w;
}

std::uint64_t word_count(unsigned k, unsigned m) {
  if (k == 0) throw std::invalid_argument("alphabet size must be >= 1");
  if (k > 255) throw std::invalid_argument("alphabet size above 255");
  std::uint64_t n = 1;
  for (unsigned j = 0; j < m; ++j) {
    n *= k;
    if (n > kMaxWords) throw std::invalid_argument("[k]^[m] too large to index");
  }
  return n;
}

std::uint64_t word_index(const Word& w) {
  std::uint64_t idx = 0;
  for (auto l : w.letters) idx = idx * w.k + (l - 1u);
  return idx;
}

Word word_at(unsigned k, unsigned m, std::uint64_t index) {
  Word w{k, std::vector<std::uint8_t>(m)};
  for (unsigned j = m; j-- > 0;) {
    w.letters[j] = static_cast<std::uint8_t>(index % k + 1);
    index /= k;
  }
  return w;
}

std::string CombinatorialLine::to_string() const {
  std::string out = "fixed:{";
  bool first = true;
  for (unsigned j = 1; j <= m; ++j) {
    if (moving >> (j - 1) & 1u) continue;
    if (!first) out += ',';
    first = false;
    out += std::to_string(j) + ":" + std::to_string(fixed[j - 1]);
  }
  out += "} moving:" + mask_to_string(moving);
  return out;
}

CombinatorialLine CombinatorialLine::parse(std::string_view text) {
  text = trim(text);
  if (!text.starts_with("fixed:{")) throw std::invalid_argument("line must start with fixed:{");
  auto close = text.find('}');
  if (close == std::string_view::npos) throw std::invalid_argument("unterminated fixed part");
  std::string_view body = text.substr(7, close - 7);
  std::string_view rest = trim(text.substr(close + 1));
  if (!rest.starts_with("moving:")) throw std::invalid_argument("line is missing moving:{...}");
  CombinatorialLine line;
  line.moving = parse_mask(trim(rest.substr(7)));
  if (!line.moving) throw std::invalid_argument("moving set must be non-empty");
  std::vector<std::pair<unsigned, unsigned>> assignments;
  while (!trim(body).empty()) {
    auto comma = body.find(',');
    auto item = trim(body.substr(0, comma));
    auto colon = item.find(':');
    if (colon == std::string_view::npos) throw std::invalid_argument("fixed entry needs pos:letter");
    auto pos = parse_int(trim(item.substr(0, colon)));
    auto letter = parse_int(trim(item.substr(colon + 1)));
    if (pos < 1 || pos > 64 || letter < 1 || letter > 255) throw std::invalid_argument("fixed entry out of range");
    assignments.emplace_back(static_cast<unsigned>(pos), static_cast<unsigned>(letter));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  unsigned m = mask_max(line.moving);
  for (auto& [p, l] : assignments) m = std::max(m, p);
  line.m = m;
  line.fixed.assign(m, 0);
  for (auto& [p, l] : assignments) {
    if (line.moving >> (p - 1) & 1u) throw std::invalid_argument("position is both fixed and moving");
    if (line.fixed[p - 1]) throw std::invalid_argument("position fixed twice");
    line.fixed[p - 1] = static_cast<std::uint8_t>(l);
  }
  for (unsigned j = 1; j <= m; ++j)
    if (!(line.moving >> (j - 1) & 1u) && !line.fixed[j - 1])
      throw std::invalid_argument("position " + std::to_string(j) + " is neither fixed nor moving");
  return line;
}

bool line_less(const CombinatorialLine& a, const CombinatorialLine& b) {
  auto ca = std::popcount(a.moving), cb = std::popcount(b.moving);
  if (ca != cb) return ca < cb;
  auto ea = mask_elements(a.moving), eb = mask_elements(b.moving);
  if (ea != eb) return ea < eb;
  return a.fixed < b.fixed;
}

std::vector<Word> line_points(const CombinatorialLine& line, unsigned k) {
  if (!line.moving) throw std::invalid_argument("line has empty moving set");
  std::vector<Word> out;
  for (unsigned letter = 1; letter <= k; ++letter) {
    Word w{k, line.fixed};
    for (unsigned j = 0; j < line.m; ++j)
      if (line.moving >> j & 1u) w.letters[j] = static_cast<std::uint8_t>(letter);
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<std::uint64_t> line_point_indices(const CombinatorialLine& line, unsigned k) {
  std::vector<std::uint64_t> out;
  for (const auto& w : line_points(line, k)) out.push_back(word_index(w));
  return out;
}

std::vector<SubsetMask> moving_sets(unsigned m) {
  if (m == 0 || m > 32) throw std::invalid_argument("word length must be in [1,32]");
  std::vector<SubsetMask> out;
  for (SubsetMask s = 1; s < (SubsetMask{1} << m); ++s) out.push_back(s);
  std::sort(out.begin(), out.end(), [](SubsetMask a, SubsetMask b) {
    auto ca = std::popcount(a), cb = std::popcount(b);
    if (ca != cb) return ca < cb;
    return mask_elements(a) < mask_elements(b);
  });
  return out;
}

namespace {

/// Visits the lines with moving set `u1` in fixed-part lexicographic order;
/// stops when visit returns false.
template <class Visit>
bool for_each_line_with(unsigned k, unsigned m, SubsetMask u1, Visit&& visit) {
  CombinatorialLine line{m, u1, std::vector<std::uint8_t>(m, 0)};
  std::vector<unsigned> free;
  for (unsigned j = 0; j < m; ++j)
    if (!(u1 >> j & 1u)) {
      free.push_back(j);
      line.fixed[j] = 1;
    }
  while (true) {
    if (!visit(line)) return false;
    // Odometer over the fixed positions, last position fastest.
    std::size_t i = free.size();
    while (i > 0) {
      auto& l = line.fixed[free[i - 1]];
      if (l < k) {
        ++l;
        break;
      }
      l = 1;
      --i;
    }
    if (i == 0) return true;
  }
}

}  // namespace

std::vector<CombinatorialLine> all_lines(unsigned k, unsigned m) {
  word_count(k, m);
  std::vector<CombinatorialLine> out;
  for (auto u1 : moving_sets(m))
    for_each_line_with(k, m, u1, [&](const CombinatorialLine& l) {
      out.push_back(l);
      return true;
    });
  return out;
}

MonoLineResult find_mono_line(unsigned k, unsigned m, std::span<const std::uint8_t> coloring,
                              const SearchOptions& options) {
  const auto n = word_count(k, m);
  if (coloring.size() != n) throw std::invalid_argument("coloring must assign every word of [k]^[m]");
  const auto sets = moving_sets(m);
  BudgetMeter meter(options);
  auto res = parallel_first<CombinatorialLine>(
      sets.size(), options.resolved_workers(), [&](std::size_t task, auto&& should_stop) {
        std::optional<CombinatorialLine> hit;
        bool interrupted = false;
        for_each_line_with(k, m, sets[task], [&](const CombinatorialLine& line) {
          if (!meter.charge() || should_stop()) {
            interrupted = true;
            return false;
          }
          std::uint64_t base = 0, step = 0;
          for (unsigned j = 0; j < m; ++j) {
            base *= k;
            step *= k;
            if (line.moving >> j & 1u)
              step += 1;
            else
              base += line.fixed[j] - 1u;
          }
          const auto c = coloring[base];
          for (unsigned letter = 1; letter < k; ++letter)
            if (coloring[base + letter * step] != c) return true;
          hit = line;
          return false;
        });
        if (hit) return TaskOutcome<CombinatorialLine>::found(std::move(*hit));
        if (interrupted) return TaskOutcome<CombinatorialLine>::interrupted();
        return TaskOutcome<CombinatorialLine>::exhausted();
      });
  MonoLineResult out;
  out.candidates = meter.used();
  if (res.found()) {
    out.status = SearchStatus::found;
    out.line = std::move(res.first->second);
  } else if (res.interrupted()) {
    out.status = SearchStatus::budget_exceeded;
  }
  return out;
}

MonoLineResult find_mono_line(unsigned k, unsigned m, const std::function<unsigned(const Word&)>& coloring,
                              const SearchOptions& options) {
  const auto n = word_count(k, m);
  std::vector<std::uint8_t> table(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    auto c = coloring(word_at(k, m, i));
    if (c > 255) throw std::invalid_argument("color index above 255");
    table[i] = static_cast<std::uint8_t>(c);
  }
  return find_mono_line(k, m, table, options);
}

}  // namespace ipr
