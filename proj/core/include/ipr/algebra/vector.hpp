#pragma once

#include "ipr/algebra/ring.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ipr {

/// An element of R^n for a GroundRing R. Houses points u of the domain F^n and
/// elements w of the acting space W.
class Vector {
 public:
  /// Throws std::invalid_argument for an empty coordinate list or coordinates
  /// from a different ring.
  Vector(GroundRing ring, std::vector<Scalar> coords);
  explicit Vector(Scalar s) : Vector(s.ring(), {s}) {}

  static Vector zero(const GroundRing& ring, std::size_t dim);
  static Vector basis(const GroundRing& ring, std::size_t dim, std::size_t index);

  /// `(a,b,c)`; a bare scalar is accepted when dim == 1.
  static Vector parse(const GroundRing& ring, std::size_t dim, std::string_view text);

  const GroundRing& ring() const { return ring_; }
  std::size_t dim() const { return coords_.size(); }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Scalar>& coords() const { return coords_; }
  bool is_zero() const;

  Vector operator-() const;
  friend Vector operator+(const Vector& a, const Vector& b);
  friend Vector operator-(const Vector& a, const Vector& b);
  friend Vector operator*(const Scalar& a, const Vector& v);
  Vector& operator+=(const Vector& b) { return *this = *this + b; }

  friend bool operator==(const Vector& a, const Vector& b);
  /// Lexicographic in the canonical scalar order.
  friend bool operator<(const Vector& a, const Vector& b);

  /// Dimension 1 renders as the bare scalar, otherwise `(a,b,...)`.
  std::string to_string() const;

 private:
  GroundRing ring_;
  std::vector<Scalar> coords_;
};

std::string to_string(const Vector& v);

}  // namespace ipr
