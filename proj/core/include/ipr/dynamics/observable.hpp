#pragma once

#include "ipr/dynamics/system.hpp"

#include <variant>
#include <vector>

namespace ipr {

/// finite_perm: one value per point.
struct FiniteFunction {
  std::vector<Rational> values;
  friend bool operator==(const FiniteFunction&, const FiniteFunction&) = default;
};

/// rotation: piecewise constant on [breaks[i], breaks[i+1]) with the last
/// piece running to 1. breaks[0] == 0; adjacent pieces differ in value.
struct StepFunction {
  std::vector<Rational> breaks;
  std::vector<Rational> values;
  friend bool operator==(const StepFunction&, const StepFunction&) = default;
};

/// bernoulli: constant + sum coef_i * 1_{C_i} over cylinders.
struct CylinderFunction {
  Rational constant;
  std::vector<std::pair<Rational, CylinderEvent>> terms;
};

/// An element of the exactly computable subspace of L^2(mu) for a backend.
using Observable = std::variant<FiniteFunction, StepFunction, CylinderFunction>;

Observable indicator(const MeasureSystem& sys, const EventSet& b);
Observable constant(const MeasureSystem& sys, const Rational& c);

Observable add(const Observable& f, const Observable& g);
Observable scale(const Rational& a, const Observable& f);
Observable subtract(const Observable& f, const Observable& g);

/// Koopman operator: (T^w f)(x) = f(T^w x).
Observable koopman(const MeasureSystem& sys, const Vector& w, const Observable& f);

/// <f, g> = integral of f g dmu, exact.
Rational inner(const MeasureSystem& sys, const Observable& f, const Observable& g);
Rational norm2(const MeasureSystem& sys, const Observable& f);

/// Squared L^2 distance ||f - g||^2.
Rational orbit_metric(const MeasureSystem& sys, const Observable& f, const Observable& g);

/// Checks ||T^w f - T^w g||^2 == ||f - g||^2 for each sample w.
bool koopman_isometric_on(const MeasureSystem& sys, const Observable& f, const Observable& g,
                          const std::vector<Vector>& samples);

/// The L^2 = H_c ⊕ H_wm split of an indicator. finite_perm and rotation are
/// compact throughout, so the split is (1_B, 0); for a Bernoulli cylinder the
/// compact part is the constant mu(B).
struct SpectralSplit {
  Observable compact;
  Observable residual;
};

SpectralSplit compact_projection(const MeasureSystem& sys, const EventSet& b);

/// <P1_B, 1_B>. Throws std::logic_error if it falls below mu(B)^2, which
/// would contradict <P1_B, 1_B> = ||P1_B||^2 >= <P1_B, 1>^2.
Rational khintchine_bound(const MeasureSystem& sys, const EventSet& b);

}  // namespace ipr
