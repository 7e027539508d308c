#pragma once

#include "ipr/algebra/numbers.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ipr {

enum class RingKind : std::uint8_t { prime_field, rationals, poly_ring };

/// The ground structures the library computes over: F_p, Q and F_p[t].
///
/// F_p is admitted although it is finite; it is the exactly checkable boundary
/// case. Extension fields F_{p^m} with m > 1 are not supported.
class GroundRing {
 public:
  /// Throws std::invalid_argument unless p is a prime below 2^31.
  static GroundRing prime_field(std::uint32_t p);
  static GroundRing rationals();
  static GroundRing poly_ring(std::uint32_t p);

  /// Accepts the rendering produced by name(): `F_5`, `Q`, `F_2[t]`.
  static GroundRing parse(std::string_view text);

  RingKind kind() const { return kind_; }
  /// p for F_p and F_p[t]; 0 for Q.
  std::uint32_t characteristic() const { return p_; }
  bool is_finite() const { return kind_ == RingKind::prime_field; }
  bool is_field() const { return kind_ != RingKind::poly_ring; }
  std::string name() const;

  friend bool operator==(const GroundRing&, const GroundRing&) = default;

 private:
  GroundRing(RingKind kind, std::uint32_t p) : kind_(kind), p_(p) {}
  RingKind kind_;
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

/// An exact element of a GroundRing.
///
/// Values are immutable; arithmetic between elements of different rings throws
/// std::invalid_argument. Ordering is the canonical enumeration order: residues
/// 0..p-1 for F_p, numeric order for Q, and degree-lexicographic order for
/// F_p[t] (which coincides with the base-p value of the coefficient vector).
class Scalar {
 public:
  /// Coefficients from the constant term upward, with no trailing zero.
  using Poly = std::vector<std::uint32_t>;

  static Scalar zero(const GroundRing& ring);
  static Scalar one(const GroundRing& ring);
  /// The image of an integer; for F_p[t] the constant polynomial n mod p.
  static Scalar from_int(const GroundRing& ring, std::int64_t n);
  static Scalar from_rational(const Rational& q);
  static Scalar from_coefficients(std::uint32_t p, std::span<const std::int64_t> coeffs);
  /// The polynomial whose base-p digits (constant term first) are those of index.
  static Scalar poly_from_index(std::uint32_t p, std::uint64_t index);

  /// Parses the canonical rendering: integers for F_p (reduced mod p),
  /// `a/b` for Q, coefficient lists `[c0,c1,...]` (or a bare integer constant)
  /// for F_p[t].
  static Scalar parse(const GroundRing& ring, std::string_view text);

  const GroundRing& ring() const { return ring_; }
  bool is_zero() const;
  bool is_one() const;

  /// F_p only.
  std::uint64_t residue() const;
  /// Q only.
  const Rational& rational() const;
  /// F_p[t] only.
  const Poly& coefficients() const;
  /// F_p[t] only; -1 for the zero polynomial.
  int degree() const;
  /// F_p[t] only; base-p value of the coefficient vector.
  std::uint64_t poly_index() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  /// Multiplicative inverse. Throws std::domain_error for zero and for
  /// non-unit polynomials.
  Scalar inverse() const;
  Scalar pow(unsigned exponent) const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator<(const Scalar& a, const Scalar& b);
  friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return !(b < a); }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return !(a < b); }

  /// Canonical rendering (see parse).
  std::string to_string() const;
  /// Human rendering; for F_p[t] uses `t^2+t+1` notation, otherwise to_string().
  std::string pretty() const;

 private:
  Scalar(GroundRing ring, std::variant<std::uint64_t, Rational, Poly> value)
      : ring_(ring), value_(std::move(value)) {}
  static Scalar make_poly(std::uint32_t p, Poly coeffs);

  GroundRing ring_;
  std::variant<std::uint64_t, Rational, Poly> value_;
};

std::string to_string(const Scalar& s);

/// Throws std::invalid_argument when the rings differ.
void require_same_ring(const GroundRing& a, const GroundRing& b, std::string_view what);

}  // namespace ipr
