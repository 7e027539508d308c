#pragma once

#include "ipr/algebra/vector.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ipr {

/// (x_1,...,x_n) -> a * x_1^{d_1} ... x_n^{d_n} with the d_i not all zero.
///
/// A zero coefficient is allowed and yields the zero map.
class MonomialMap {
 public:
  MonomialMap(Scalar coefficient, std::vector<unsigned> exponents);

  const Scalar& coefficient() const { return coefficient_; }
  const std::vector<unsigned>& exponents() const { return exponents_; }
  std::size_t arity() const { return exponents_.size(); }
  const GroundRing& ring() const { return coefficient_.ring(); }

  /// d = d_1 + ... + d_n.
  unsigned degree() const { return degree_; }
  /// e_0 = 0, e_i = d_1 + ... + d_i; size arity() + 1.
  std::vector<unsigned> partial_degrees() const;
  /// The (0-based) coordinate that factor position i in [0, d) reads from:
  /// the k with e_k <= i < e_{k+1}.
  std::size_t coordinate_of_factor(unsigned i) const;

  Scalar operator()(const Vector& u) const;

  /// `a*x1^2*x3`, coefficient omitted when it is 1.
  std::string to_string() const;

 private:
  Scalar coefficient_;
  std::vector<unsigned> exponents_;
  unsigned degree_ = 0;
};

/// a * u(1)^{d_1} ... u(n)^{d_n}. Throws on dimension or ring mismatch.
Scalar eval_monomial(const MonomialMap& m, const Vector& u);

/// The monomial's product with each of its d factor positions read from its
/// own vector: a * prod_k prod_{e_{k-1} < i <= e_k} factors[i](k).
///
/// With every factor equal to u this is eval_monomial(m, u). This is the
/// quantity that colors tuples (alpha_1, ..., alpha_d) in the isometric
/// recurrence search.
Scalar monomial_product(const MonomialMap& m, std::span<const Vector> factors);

/// phi = phi_1 w_1 + ... + phi_k w_k : F^n -> W with monomial phi_i and w_i in W.
class PolynomialMap {
 public:
  struct Term {
    MonomialMap monomial;
    Vector target;
  };

  explicit PolynomialMap(std::vector<Term> terms);
  /// phi(u) = m(u) * (1) with W = F.
  explicit PolynomialMap(MonomialMap m);

  /// Parses `term + term + ...` where a term is `[coef*]x1^d1*x2...[*(w1,...)]`.
  /// A term without a target vector uses w = 1 and requires target_dim == 1.
  static PolynomialMap parse(const GroundRing& ring, std::size_t domain_dim, std::size_t target_dim,
                             std::string_view text);

  const std::vector<Term>& terms() const { return terms_; }
  const GroundRing& ring() const { return terms_.front().target.ring(); }
  std::size_t domain_dim() const { return terms_.front().monomial.arity(); }
  std::size_t target_dim() const { return terms_.front().target.dim(); }

  Vector operator()(const Vector& u) const;

  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

Vector eval_poly(const PolynomialMap& phi, const Vector& u);

/// Checks a * prod u_gamma(k)^{d_k} against the same product with every factor
/// written as (u_gamma(k) + u_{alpha_i}(k)) - u_{alpha_i}(k), distributed into
/// 2^d signed terms (one per subset of factor positions) and summed.
///
/// Always true for valid input; it validates the expansion code path used by
/// the recurrence search. Throws std::invalid_argument unless
/// alphas.size() == m.degree().
bool telescope_check(const MonomialMap& m, const Vector& u_gamma, std::span<const Vector> alphas);

}  // namespace ipr
