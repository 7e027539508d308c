#include "ipr/hj/psi.hpp"

#include <stdexcept>

namespace ipr {

namespace {

void check_d(unsigned d) {
  if (d == 0 || d > 7) throw std::invalid_argument("d must be in [1,7] (alphabet 2^d <= 128)");
}

}  // namespace

std::vector<SubsetMask> psi_encode(const Word& w, unsigned d) {
  check_d(d);
  if (w.k != (1u << d)) throw std::invalid_argument("psi_encode needs alphabet size 2^d");
  if (w.length() > 64) throw std::invalid_argument("word longer than 64");
  std::vector<SubsetMask> alphas(d, 0);
  for (unsigned j = 0; j < w.length(); ++j) {
    const unsigned l = w.letters[j];
    if (l < 1 || l > w.k) throw std::invalid_argument("letter " + std::to_string(l) + " out of range");
    for (unsigned i = 0; i < d; ++i)
      if ((l - 1) >> i & 1u) alphas[i] |= SubsetMask{1} << j;
  }
  return alphas;
}

Word psi_decode(std::span<const SubsetMask> alphas, unsigned r) {
  const auto d = static_cast<unsigned>(alphas.size());
  check_d(d);
  if (r == 0 || r > 64) throw std::invalid_argument("r must be in [1,64]");
  Word w{1u << d, std::vector<std::uint8_t>(r, 1)};
  for (unsigned i = 0; i < d; ++i) {
    if (r < 64 && (alphas[i] >> r)) throw std::invalid_argument("subset exceeds {1..r}");
    for (unsigned j = 0; j < r; ++j)
      if (alphas[i] >> j & 1u) w.letters[j] = static_cast<std::uint8_t>(w.letters[j] + (1u << i));
  }
  return w;
}

bool SubsetConfig::valid() const {
  if (!gamma) return false;
  for (auto a : alphas)
    if (a & gamma) return false;
  return true;
}

std::vector<SubsetMask> SubsetConfig::point(std::uint32_t e) const {
  std::vector<SubsetMask> out(alphas);
  for (std::size_t i = 0; i < out.size(); ++i)
    if (e >> i & 1u) out[i] |= gamma;
  return out;
}

std::vector<std::vector<SubsetMask>> SubsetConfig::points() const {
  std::vector<std::vector<SubsetMask>> out;
  for (std::uint32_t e = 0; e < (1u << alphas.size()); ++e) out.push_back(point(e));
  return out;
}

std::string SubsetConfig::to_string() const {
  std::string out = "alpha=[";
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if (i) out += ',';
    out += mask_to_string(alphas[i]);
  }
  return out + "] gamma=" + mask_to_string(gamma);
}

SubsetConfig line_to_config(const CombinatorialLine& line, unsigned d) {
  check_d(d);
  if (!line.moving || line.fixed.size() != line.m) throw std::invalid_argument("malformed line");
  for (unsigned j = 0; j < line.m; ++j) {
    const bool mov = line.moving >> j & 1u;
    if (mov != (line.fixed[j] == 0)) throw std::invalid_argument("malformed line");
    if (!mov && line.fixed[j] > (1u << d)) throw std::invalid_argument("line letter outside [2^d]");
  }
  Word base = line_points(line, 1u << d).front();
  SubsetConfig c;
  c.r = line.m;
  c.alphas = psi_encode(base, d);
  c.gamma = line.moving;
  return c;
}

MonoConfigResult mono_config_search(unsigned d, unsigned r, const TupleColoring& coloring,
                                    const SearchOptions& options) {
  check_d(d);
  const unsigned k = 1u << d;
  const auto n = word_count(k, r);
  std::vector<std::uint8_t> table(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    auto alphas = psi_encode(word_at(k, r, i), d);
    auto c = coloring(alphas);
    if (c > 255) throw std::invalid_argument("color index above 255");
    table[i] = static_cast<std::uint8_t>(c);
  }
  auto res = find_mono_line(k, r, table, options);
  MonoConfigResult out;
  out.status = res.status;
  out.candidates = res.candidates;
  if (res.line) {
    out.config = line_to_config(*res.line, d);
    out.line = std::move(res.line);
  }
  return out;
}

}  // namespace ipr
