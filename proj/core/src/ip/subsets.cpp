#include "ipr/ip/subsets.hpp"

#include "ipr/algebra/numbers.hpp"

#include <algorithm>
#include <stdexcept>

namespace ipr {

FiniteSubset::FiniteSubset(std::vector<unsigned> elements) : elems_(std::move(elements)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  if (elems_.empty()) throw std::invalid_argument("finite subset must be non-empty");
  if (elems_.front() == 0) throw std::invalid_argument("finite subset elements must be >= 1");
}

FiniteSubset FiniteSubset::from_mask(SubsetMask mask) {
  std::vector<unsigned> e;
  for (unsigned j = 1; mask; ++j, mask >>= 1)
    if (mask & 1u) e.push_back(j);
  return FiniteSubset(std::move(e));
}

FiniteSubset FiniteSubset::parse(std::string_view text) {
  auto m = text;
  while (!m.empty() && m.front() == ' ') m.remove_prefix(1);
  while (!m.empty() && m.back() == ' ') m.remove_suffix(1);
  if (m.size() < 2 || m.front() != '{' || m.back() != '}')
    throw std::invalid_argument("subset must look like {1,2}: '" + std::string(text) + "'");
  m = m.substr(1, m.size() - 2);
  std::vector<unsigned> e;
  while (!m.empty()) {
    auto comma = m.find(',');
    auto v = parse_int(m.substr(0, comma));
    if (v < 1) throw std::invalid_argument("subset elements must be >= 1");
    e.push_back(static_cast<unsigned>(v));
    if (comma == std::string_view::npos) break;
    m.remove_prefix(comma + 1);
  }
  return FiniteSubset(std::move(e));
}

SubsetMask FiniteSubset::mask() const {
  SubsetMask m = 0;
  for (auto e : elems_) {
    if (e > 64) throw std::out_of_range("subset element beyond 64 has no mask");
    m |= SubsetMask{1} << (e - 1);
  }
  return m;
}

FiniteSubset FiniteSubset::unite(const FiniteSubset& other) const {
  std::vector<unsigned> e = elems_;
  e.insert(e.end(), other.elems_.begin(), other.elems_.end());
  return FiniteSubset(std::move(e));
}

std::string FiniteSubset::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(elems_[i]);
  }
  return out + "}";
}

std::string mask_to_string(SubsetMask m) {
  if (!m) return "{}";
  return FiniteSubset::from_mask(m).to_string();
}

SubsetMask parse_mask(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  if (s == "{}") return 0;
  return FiniteSubset::parse(s).mask();
}

std::vector<FiniteSubset> finite_unions(std::span<const FiniteSubset> alphas) {
  if (alphas.empty()) throw std::invalid_argument("finite_unions needs at least one block");
  if (alphas.size() > 20) throw std::invalid_argument("finite_unions: too many blocks");
  for (std::size_t i = 0; i + 1 < alphas.size(); ++i)
    if (!precedes(alphas[i], alphas[i + 1]))
      throw std::invalid_argument("blocks out of order: " + alphas[i].to_string() + " does not precede " +
                                  alphas[i + 1].to_string());
  std::vector<FiniteSubset> out;
  const std::uint32_t s = static_cast<std::uint32_t>(alphas.size());
  for (std::uint32_t beta = 1; beta < (1u << s); ++beta) {
    std::vector<unsigned> e;
    for (std::uint32_t i = 0; i < s; ++i)
      if (beta >> i & 1u) e.insert(e.end(), alphas[i].elements().begin(), alphas[i].elements().end());
    out.emplace_back(std::move(e));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ipr
