#include "ipr/algebra/polynomial_map.hpp"
#include <bit>
#include <optional>

#include <numeric>
#include <bit>
#include <optional>
#include <stdexcept>

namespace ipr {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

// Splits on sep at bracket/paren depth 0.
std::vector<std::string_view> split_top(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || (s[i] == sep && depth == 0)) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    } else if (s[i] == '(' || s[i] == '[') {
      ++depth;
    } else if (s[i] == ')' || s[i] == ']') {
      --depth;
    }
  }
  return out;
}

void require_dim(const Vector& u, std::size_t n, std::string_view what) {
  if (u.dim() != n)
    throw std::invalid_argument(std::string(what) + ": expected dimension " + std::to_string(n) + ", got " +
                                std::to_string(u.dim()));
}

}  // namespace

MonomialMap::MonomialMap(Scalar coefficient, std::vector<unsigned> exponents)
    : coefficient_(std::move(coefficient)), exponents_(std::move(exponents)) {
  if (exponents_.empty()) throw std::invalid_argument("monomial with arity 0");
  degree_ = std::accumulate(exponents_.begin(), exponents_.end(), 0u);
  if (degree_ == 0) throw std::invalid_argument("monomial exponents must not all be zero");
}

std::vector<unsigned> MonomialMap::partial_degrees() const {
  std::vector<unsigned> e(exponents_.size() + 1, 0);
  for (std::size_t i = 0; i < exponents_.size(); ++i) e[i + 1] = e[i] + exponents_[i];
  return e;
}

std::size_t MonomialMap::coordinate_of_factor(unsigned i) const {
  unsigned acc = 0;
  for (std::size_t k = 0; k < exponents_.size(); ++k) {
    acc += exponents_[k];
    if (i < acc) return k;
  }
  throw std::out_of_range("factor position beyond degree");
}

Scalar MonomialMap::operator()(const Vector& u) const {
  require_dim(u, arity(), "monomial evaluation");
  require_same_ring(ring(), u.ring(), "monomial evaluation");
  Scalar acc = coefficient_;
  for (std::size_t k = 0; k < exponents_.size(); ++k)
    if (exponents_[k]) acc *= u[k].pow(exponents_[k]);
  return acc;
}

std::string MonomialMap::to_string() const {
  std::string out;
  if (!coefficient_.is_one()) out = coefficient_.to_string();
  for (std::size_t k = 0; k < exponents_.size(); ++k) {
    if (!exponents_[k]) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(k + 1);
    if (exponents_[k] > 1) out += '^' + std::to_string(exponents_[k]);
  }
  return out;
}

Scalar eval_monomial(const MonomialMap& m, const Vector& u) { return m(u); }

Scalar monomial_product(const MonomialMap& m, std::span<const Vector> factors) {
  if (factors.size() != m.degree())
    throw std::invalid_argument("monomial_product: expected " + std::to_string(m.degree()) + " factors, got " +
                                std::to_string(factors.size()));
  Scalar acc = m.coefficient();
  unsigned i = 0;
  for (std::size_t k = 0; k < m.arity(); ++k) {
    for (unsigned j = 0; j < m.exponents()[k]; ++j, ++i) {
      require_dim(factors[i], m.arity(), "monomial_product");
      acc *= factors[i][k];
    }
  }
  return acc;
}

PolynomialMap::PolynomialMap(std::vector<Term> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw std::invalid_argument("polynomial map with no terms");
  const auto& first = terms_.front();
  for (const auto& t : terms_) {
    require_same_ring(first.target.ring(), t.target.ring(), "polynomial map target");
    require_same_ring(first.target.ring(), t.monomial.ring(), "polynomial map coefficient");
    if (t.monomial.arity() != first.monomial.arity())
      throw std::invalid_argument("polynomial map terms disagree on domain dimension");
    if (t.target.dim() != first.target.dim())
      throw std::invalid_argument("polynomial map terms disagree on target dimension");
  }
}

PolynomialMap::PolynomialMap(MonomialMap m)
    : PolynomialMap(std::vector<Term>{Term{m, Vector(Scalar::one(m.ring()))}}) {}

PolynomialMap PolynomialMap::parse(const GroundRing& ring, std::size_t domain_dim, std::size_t target_dim,
                                   std::string_view text) {
  if (domain_dim == 0 || target_dim == 0) throw std::invalid_argument("polynomial map dimensions must be positive");
  std::vector<Term> terms;
  for (auto term_text : split_top(trim(text), '+')) {
    if (term_text.empty()) throw std::invalid_argument("empty term in '" + std::string(text) + "'");
    std::optional<Scalar> coef;
    std::optional<Vector> target;
    std::vector<unsigned> exps(domain_dim, 0);
    for (auto factor : split_top(term_text, '*')) {
      if (factor.empty()) throw std::invalid_argument("empty factor in '" + std::string(term_text) + "'");
      if (factor.front() == 'x') {
        auto caret = factor.find('^');
        auto idx = parse_int(factor.substr(1, caret == std::string_view::npos ? std::string_view::npos : caret - 1));
        if (idx < 1 || static_cast<std::size_t>(idx) > domain_dim)
          throw std::invalid_argument("variable '" + std::string(factor) + "' outside domain dimension " +
                                      std::to_string(domain_dim));
        auto e = caret == std::string_view::npos ? 1 : parse_int(factor.substr(caret + 1));
        if (e < 0) throw std::invalid_argument("negative exponent in '" + std::string(factor) + "'");
        exps[idx - 1] += static_cast<unsigned>(e);
      } else if (factor.front() == '(') {
        if (target) throw std::invalid_argument("two target vectors in '" + std::string(term_text) + "'");
        target = Vector::parse(ring, target_dim, factor);
      } else {
        if (coef) throw std::invalid_argument("two coefficients in '" + std::string(term_text) + "'");
        coef = Scalar::parse(ring, factor);
      }
    }
    if (!target) {
      if (target_dim != 1)
        throw std::invalid_argument("term '" + std::string(term_text) + "' needs a target vector");
      target = Vector(Scalar::one(ring));
    }
    terms.push_back(Term{MonomialMap(coef.value_or(Scalar::one(ring)), std::move(exps)), *target});
  }
  return PolynomialMap(std::move(terms));
}

Vector PolynomialMap::operator()(const Vector& u) const {
  Vector acc = Vector::zero(ring(), target_dim());
  for (const auto& t : terms_) acc += t.monomial(u) * t.target;
  return acc;
}

std::string PolynomialMap::to_string() const {
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    out += t.monomial.to_string();
    if (t.target.dim() == 1 && t.target[0].is_one()) continue;
    out += "*(";
    for (std::size_t i = 0; i < t.target.dim(); ++i) {
      if (i) out += ',';
      out += t.target[i].to_string();
    }
    out += ')';
  }
  return out;
}

Vector eval_poly(const PolynomialMap& phi, const Vector& u) { return phi(u); }

bool telescope_check(const MonomialMap& m, const Vector& u_gamma, std::span<const Vector> alphas) {
  const unsigned d = m.degree();
  if (alphas.size() != d)
    throw std::invalid_argument("telescope_check: expected " + std::to_string(d) + " alpha vectors, got " +
                                std::to_string(alphas.size()));
  if (d >= 31) throw std::invalid_argument("telescope_check: degree too large to expand");
  require_same_ring(m.ring(), u_gamma.ring(), "telescope_check");

  std::vector<Vector> shifted;  // u_gamma + u_alpha_i
  shifted.reserve(d);
  for (const auto& a : alphas) shifted.push_back(u_gamma + a);

  Scalar sum = Scalar::zero(m.ring());
  std::vector<Vector> factors(alphas.begin(), alphas.end());
  for (std::uint32_t subset = 0; subset < (1u << d); ++subset) {
    // Positions in `subset` take -u_alpha_i, the rest take u_gamma + u_alpha_i.
    for (unsigned i = 0; i < d; ++i) factors[i] = (subset >> i) & 1u ? alphas[i] : shifted[i];
    Scalar term = monomial_product(m, factors);
    sum += (std::popcount(subset) & 1) ? -term : term;
  }
  return sum == m(u_gamma);
}

}  // namespace ipr
