#pragma once

#include "ipr/algebra/polynomial_map.hpp"
#include "ipr/dynamics/observable.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace ipr {

/// N -> Φ_N, a finite non-empty subset of ring^dim.
///
/// Canonical choices: F_p boxes {0..min(N,p)-1}^dim; Q boxes of
/// {a/b : |a| <= N, 1 <= b <= N}; F_p[t] polynomials of degree < N in each
/// coordinate. An explicit list replaces the sequence by a single set used
/// for every N.
struct FolnerSpec {
  GroundRing ring = GroundRing::rationals();
  std::size_t dim = 1;
  std::optional<std::vector<Vector>> explicit_set;

  static FolnerSpec canonical(const GroundRing& ring, std::size_t dim = 1);
  static FolnerSpec explicit_list(std::vector<Vector> elements);

  /// Φ_N in canonical order; throws for N == 0.
  std::vector<Vector> set(unsigned n) const;
};

/// |Φ_N Δ (Φ_N + g)| / |Φ_N|, the translation-invariance defect.
Rational folner_invariance(const FolnerSpec& spec, unsigned n, const Vector& g);

struct FolnerDensity {
  /// |S ∩ Φ_k| / |Φ_k| for k = 1..N; the last entry is the value at N.
  std::vector<Rational> sequence;
  const Rational& value() const { return sequence.back(); }
};

FolnerDensity folner_density(const std::function<bool(const Vector&)>& member, const FolnerSpec& spec, unsigned n);

/// Cesàro average over v in Φ_N of |<T^{φ(v)}(1_B - P1_B), 1_B>|^2, with Φ
/// over the domain of φ. Zero for compact backends.
Rational dlim_probe(const MeasureSystem& sys, const EventSet& b, const PolynomialMap& phi, const FolnerSpec& spec,
                    unsigned n);

}  // namespace ipr
