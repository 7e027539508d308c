#pragma once

#include "ipr/algebra/numbers.hpp"
#include "ipr/algebra/ring.hpp"
#include "ipr/algebra/vector.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace ipr {

enum class Backend : std::uint8_t { finite_perm, rotation, bernoulli };
std::string_view to_string(Backend b);
Backend parse_backend(std::string_view text);

/// F_p^n acting on a finite weighted set by commuting permutations of order p.
struct FinitePermData {
  std::uint32_t p = 0;
  std::vector<Rational> weights;
  /// generators[i][x] is the image of x under the i-th basis vector.
  std::vector<std::vector<std::uint32_t>> generators;
};

/// Q^n acting on R/Z by x -> x + sum_i w_i rho_i.
struct RotationData {
  std::vector<Rational> rho;
};

/// F_p[t] shifting an i.i.d. product over coordinates F_p[t]:
/// (T^w x)_g = x_{g + w}. Letters are 0..base.size()-1.
struct BernoulliData {
  std::uint32_t p = 0;
  std::vector<Rational> base;
};

/// A subset of X for finite_perm, sorted point indices.
struct PointEvent {
  std::vector<std::uint32_t> points;
  friend bool operator==(const PointEvent&, const PointEvent&) = default;
};

/// Finite union of half-open intervals [a, b) with 0 <= a < b <= 1, sorted and
/// pairwise separated.
struct IntervalEvent {
  std::vector<std::pair<Rational, Rational>> intervals;
  friend bool operator==(const IntervalEvent&, const IntervalEvent&) = default;
};

/// {x : x_c in L_c for every constrained coordinate c}. Coordinates sorted and
/// unique; letter sets sorted.
struct CylinderEvent {
  std::vector<std::pair<Scalar, std::vector<std::uint32_t>>> constraints;
  friend bool operator==(const CylinderEvent&, const CylinderEvent&) = default;
};

using EventSet = std::variant<PointEvent, IntervalEvent, CylinderEvent>;

PointEvent make_point_event(std::vector<std::uint32_t> points);
/// Sorts and merges overlapping or touching intervals.
IntervalEvent make_interval_event(std::vector<std::pair<Rational, Rational>> intervals);
/// Merges repeated coordinates by union of their letter sets.
CylinderEvent make_cylinder_event(std::vector<std::pair<Scalar, std::vector<std::uint32_t>>> constraints);

/// An exactly computable measure-preserving action of a ring's additive
/// group (or a power of it). Immutable after construction; every constructor
/// validates the invariants the exact formulas rely on.
class MeasureSystem {
 public:
  /// Throws std::invalid_argument unless weights are positive and sum to 1,
  /// each generator is a permutation of order dividing p preserving the
  /// weights, and the generators commute.
  static MeasureSystem finite_perm(std::uint32_t p, std::vector<Rational> weights,
                                   std::vector<std::vector<std::uint32_t>> generators);
  /// X = F_p with uniform weights and T^w x = x + w.
  static MeasureSystem regular(std::uint32_t p);
  static MeasureSystem rotation(std::vector<Rational> rho);
  static MeasureSystem bernoulli(std::uint32_t p, std::vector<Rational> base);

  Backend backend() const;
  /// The ring whose additive group acts: F_p, Q or F_p[t].
  const GroundRing& ring() const { return ring_; }
  /// n for an action of ring^n.
  std::size_t group_dim() const;
  /// Finite and rotation actions are isometric with compact orbits.
  bool compact() const { return backend() != Backend::bernoulli; }
  /// Large-intersection recurrence needs an infinite field: F_p is finite and F_p[t] is not a field.
  bool outside_theorem_hypotheses() const { return ring_.kind() != RingKind::rationals; }
  std::string label() const;

  const std::string& id() const { return id_; }
  void set_id(std::string id) { id_ = std::move(id); }

  const FinitePermData& finite() const { return std::get<FinitePermData>(data_); }
  const RotationData& rotation() const { return std::get<RotationData>(data_); }
  const BernoulliData& bernoulli() const { return std::get<BernoulliData>(data_); }

  /// Throws unless w is an element of the acting group.
  void check_group_element(const Vector& w) const;
  /// Throws unless the event belongs to this backend and is in range.
  void check_event(const EventSet& b) const;

  /// finite_perm: the permutation x -> T^w x.
  std::vector<std::uint32_t> permutation(const Vector& w) const;
  /// rotation: the translation amount sum_i w_i rho_i reduced mod 1.
  Rational rotation_amount(const Vector& w) const;

 private:
  MeasureSystem(GroundRing ring, std::variant<FinitePermData, RotationData, BernoulliData> data)
      : ring_(ring), data_(std::move(data)) {}

  GroundRing ring_;
  std::variant<FinitePermData, RotationData, BernoulliData> data_;
  std::string id_;
};

Rational measure(const MeasureSystem& sys, const EventSet& b);

/// mu(B ∩ T^w B) by direct backend formulas: weights of the intersection,
/// interval overlap with wraparound, product over merged cylinder
/// coordinates. (T^w B is the set {x : T^w x in B}.)
Rational correlation(const MeasureSystem& sys, const EventSet& b, const Vector& w);

/// Measure of a merged cylinder; zero when some letter set is empty.
Rational cylinder_measure(const BernoulliData& data, const CylinderEvent& c);
/// The cylinder {x : T^w x in C}: every coordinate moves by +w.
CylinderEvent shift_cylinder(const CylinderEvent& c, const Scalar& w);
CylinderEvent intersect_cylinders(const CylinderEvent& a, const CylinderEvent& b);

std::string event_to_string(const EventSet& b);

}  // namespace ipr
