#pragma once

#include "ipr/algebra/vector.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ipr {

/// A finite truncation of a ground ring.
///
///  - F_p: the full field.
///  - Q: all a/b with |a| <= numerator_bound and 1 <= b <= denominator_bound.
///  - F_p[t]: all polynomials of degree < degree_bound.
struct WindowSpec {
  GroundRing ring;
  std::int64_t numerator_bound = 0;
  std::int64_t denominator_bound = 1;
  std::int64_t degree_bound = 0;

  static WindowSpec full(const GroundRing& ring);
  static WindowSpec rationals(std::int64_t a, std::int64_t b);
  static WindowSpec polynomials(std::uint32_t p, std::int64_t degree_bound);

  /// `full`, `A=3,B=2` (for Q) or `D=4` (for F_p[t]).
  static WindowSpec parse(const GroundRing& ring, std::string_view text);

  /// True when the window is the whole (finite) ring.
  bool complete() const { return ring.is_finite(); }
  std::string to_string() const;
};

/// Each element of the window exactly once, in canonical order:
/// 0..p-1 for F_p, ascending value for Q, degree-lexicographic for F_p[t].
/// Throws std::invalid_argument for negative bounds.
std::vector<Scalar> window_enumerate(const GroundRing& ring, const WindowSpec& w);
std::vector<Scalar> window_enumerate(const WindowSpec& w);

/// The dim-fold product of the window, lexicographic (hence sorted).
std::vector<Vector> window_enumerate(const WindowSpec& w, std::size_t dim);

}  // namespace ipr
