#pragma once

#include "ipr/algebra/polynomial_map.hpp"
#include "ipr/dynamics/observable.hpp"
#include "ipr/hj/psi.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ipr {

struct IsometricSearchResult {
  /// found: a configuration was found (and `verified` says whether the exact
  /// distance bound held). absent: r too small for this coloring.
  SearchStatus status = SearchStatus::absent;
  unsigned d = 0;  // largest monomial degree
  unsigned r = 0;  // number of generators
  /// Colors used: distinct combinations of ball indices.
  unsigned colors = 0;
  std::optional<SubsetConfig> config;
  std::optional<CombinatorialLine> line;
  SubsetMask gamma = 0;
  std::optional<Vector> u_gamma;
  /// (m_1(u_γ), .., m_k(u_γ)) in the acting group.
  std::optional<Vector> shift;
  /// ||T^{shift} x - x||^2, exact.
  Rational distance2;
  bool verified = false;
  /// HJ(2^d, colors) when a closed form is known.
  std::optional<unsigned> proof_bound;
  /// Generator count that guarantees a γ with T^{shift} = id, when one is
  /// known: n(p-1)+1 for F_p^n (zero-sum subsequences) and the common
  /// denominator L of a_i rho_i for integer generators of one-dimensional
  /// rotations (a subset sum divisible by L).
  std::optional<unsigned> sufficient_length;
  std::uint64_t candidates = 0;
};

/// The constructive proof for one isometric action of the ring: color each
/// tuple (α_1..α_d) by the ε/2^d ball containing T^{m(u_α)} x, find a
/// monochromatic configuration through ψ and Hales-Jewett, and verify
/// ||T^{m(u_γ)} x - x|| < ε exactly.
IsometricSearchResult isometric_recurrence_search(const MeasureSystem& sys, const Observable& x, const MonomialMap& m,
                                                  const Rational& epsilon, const std::vector<Vector>& gens,
                                                  const SearchOptions& options = {});

/// k commuting actions given as the coordinate directions of one action of
/// ring^k; action i runs along m_i with tolerance ε/k. The colors are the
/// tuples of per-action ball indices over d = max degree, so a monochromatic
/// configuration serves every action at once; the composed distance is then
/// verified exactly.
IsometricSearchResult commuting_recurrence_search(const MeasureSystem& sys, const Observable& x,
                                                  const std::vector<MonomialMap>& ms, const Rational& epsilon,
                                                  const std::vector<Vector>& gens, const SearchOptions& options = {});

/// Known sufficient generator count (see IsometricSearchResult).
std::optional<unsigned> sufficient_length(const MeasureSystem& sys, const std::vector<MonomialMap>& ms,
                                          std::size_t domain_dim, bool integer_generators);

/// u_α = sum of gens[j] over j in α (zero for the empty set).
Vector subset_sum(const std::vector<Vector>& gens, SubsetMask alpha);

}  // namespace ipr
