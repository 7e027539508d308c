#include "ipr/algebra/ring.hpp"

#include <algorithm>
#include <stdexcept>

namespace ipr {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

GroundRing GroundRing::prime_field(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw std::invalid_argument("F_p requires a prime p < 2^31, got " + std::to_string(p));
  return {RingKind::prime_field, p};
}

GroundRing GroundRing::rationals() { return {RingKind::rationals, 0}; }

GroundRing GroundRing::poly_ring(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw std::invalid_argument("F_p[t] requires a prime p < 2^31, got " + std::to_string(p));
  return {RingKind::poly_ring, p};
}

GroundRing GroundRing::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text.size() > 2 && text.substr(0, 2) == "F_") {
    auto rest = text.substr(2);
    bool poly = false;
    if (rest.size() > 3 && rest.substr(rest.size() - 3) == "[t]") {
      poly = true;
      rest.remove_suffix(3);
    }
    auto p = parse_int(rest);
    if (p < 2) throw std::invalid_argument("bad characteristic in '" + std::string(text) + "'");
    return poly ? poly_ring(static_cast<std::uint32_t>(p)) : prime_field(static_cast<std::uint32_t>(p));
  }
  throw std::invalid_argument("unknown ring '" + std::string(text) + "'");
}

std::string GroundRing::name() const {
  switch (kind_) {
    case RingKind::prime_field: return "F_" + std::to_string(p_);
    case RingKind::rationals: return "Q";
    case RingKind::poly_ring: return "F_" + std::to_string(p_) + "[t]";
  }
  return "?";
}

void require_same_ring(const GroundRing& a, const GroundRing& b, std::string_view what) {
  if (!(a == b))
    throw std::invalid_argument(std::string(what) + ": ring mismatch (" + a.name() + " vs " + b.name() + ")");
}

// --- Scalar ---------------------------------------------------------------

namespace {

std::uint64_t mod_p(std::int64_t n, std::uint32_t p) {
  auto r = n % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint64_t>(r);
}

void trim_poly(Scalar::Poly& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  base %= p;
  while (e) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return r;
}

}  // namespace

Scalar Scalar::make_poly(std::uint32_t p, Poly coeffs) {
  trim_poly(coeffs);
  return Scalar(GroundRing::poly_ring(p), std::move(coeffs));
}

Scalar Scalar::zero(const GroundRing& ring) { return from_int(ring, 0); }
Scalar Scalar::one(const GroundRing& ring) { return from_int(ring, 1); }

Scalar Scalar::from_int(const GroundRing& ring, std::int64_t n) {
  switch (ring.kind()) {
    case RingKind::prime_field: return Scalar(ring, mod_p(n, ring.characteristic()));
    case RingKind::rationals: return Scalar(ring, make_rational(n));
    case RingKind::poly_ring: {
      Poly c{static_cast<std::uint32_t>(mod_p(n, ring.characteristic()))};
      trim_poly(c);
      return Scalar(ring, std::move(c));
    }
  }
  throw std::logic_error("unreachable");
}

Scalar Scalar::from_rational(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return Scalar(GroundRing::rationals(), std::move(c));
}

Scalar Scalar::from_coefficients(std::uint32_t p, std::span<const std::int64_t> coeffs) {
  (void)GroundRing::poly_ring(p);  // validates p
  Poly c;
  c.reserve(coeffs.size());
  for (auto v : coeffs) c.push_back(static_cast<std::uint32_t>(mod_p(v, p)));
  return make_poly(p, std::move(c));
}

Scalar Scalar::poly_from_index(std::uint32_t p, std::uint64_t index) {
  Poly c;
  while (index) {
    c.push_back(static_cast<std::uint32_t>(index % p));
    index /= p;
  }
  return make_poly(p, std::move(c));
}

Scalar Scalar::parse(const GroundRing& ring, std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  switch (ring.kind()) {
    case RingKind::prime_field: return from_int(ring, parse_int(text));
    case RingKind::rationals: return from_rational(parse_rational(text));
    case RingKind::poly_ring: {
      if (text.empty() || text.front() != '[') return from_int(ring, parse_int(text));
      if (text.back() != ']') throw std::invalid_argument("unterminated coefficient list '" + std::string(text) + "'");
      auto body = text.substr(1, text.size() - 2);
      std::vector<std::int64_t> coeffs;
      while (!body.empty()) {
        auto comma = body.find(',');
        coeffs.push_back(parse_int(body.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        body.remove_prefix(comma + 1);
      }
      return from_coefficients(ring.characteristic(), coeffs);
    }
  }
  throw std::logic_error("unreachable");
}

bool Scalar::is_zero() const {
  switch (ring_.kind()) {
    case RingKind::prime_field: return std::get<std::uint64_t>(value_) == 0;
    case RingKind::rationals: return std::get<Rational>(value_) == 0;
    case RingKind::poly_ring: return std::get<Poly>(value_).empty();
  }
  return false;
}

bool Scalar::is_one() const { return *this == one(ring_); }

std::uint64_t Scalar::residue() const {
  if (ring_.kind() != RingKind::prime_field) throw std::invalid_argument("residue() on " + ring_.name());
  return std::get<std::uint64_t>(value_);
}

const Rational& Scalar::rational() const {
  if (ring_.kind() != RingKind::rationals) throw std::invalid_argument("rational() on " + ring_.name());
  return std::get<Rational>(value_);
}

const Scalar::Poly& Scalar::coefficients() const {
  if (ring_.kind() != RingKind::poly_ring) throw std::invalid_argument("coefficients() on " + ring_.name());
  return std::get<Poly>(value_);
}

int Scalar::degree() const { return static_cast<int>(coefficients().size()) - 1; }

std::uint64_t Scalar::poly_index() const {
  const auto& c = coefficients();
  std::uint64_t idx = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) idx = idx * ring_.characteristic() + *it;
  return idx;
}

Scalar Scalar::operator-() const {
  switch (ring_.kind()) {
    case RingKind::prime_field: {
      auto v = std::get<std::uint64_t>(value_);
      return Scalar(ring_, v == 0 ? 0 : ring_.characteristic() - v);
    }
    case RingKind::rationals: return Scalar(ring_, Rational(-std::get<Rational>(value_)));
    case RingKind::poly_ring: {
      Poly c = std::get<Poly>(value_);
      for (auto& x : c) x = x == 0 ? 0 : ring_.characteristic() - x;
      return Scalar(ring_, std::move(c));
    }
  }
  throw std::logic_error("unreachable");
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same_ring(a.ring_, b.ring_, "addition");
  const auto p = a.ring_.characteristic();
  switch (a.ring_.kind()) {
    case RingKind::prime_field:
      return Scalar(a.ring_, (std::get<std::uint64_t>(a.value_) + std::get<std::uint64_t>(b.value_)) % p);
    case RingKind::rationals:
      return Scalar(a.ring_, Rational(std::get<Rational>(a.value_) + std::get<Rational>(b.value_)));
    case RingKind::poly_ring: {
      const auto& x = std::get<Scalar::Poly>(a.value_);
      const auto& y = std::get<Scalar::Poly>(b.value_);
      Scalar::Poly c(std::max(x.size(), y.size()), 0);
      for (std::size_t i = 0; i < c.size(); ++i) {
        std::uint64_t s = (i < x.size() ? x[i] : 0u) + static_cast<std::uint64_t>(i < y.size() ? y[i] : 0u);
        c[i] = static_cast<std::uint32_t>(s % p);
      }
      return Scalar::make_poly(p, std::move(c));
    }
  }
  throw std::logic_error("unreachable");
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same_ring(a.ring_, b.ring_, "multiplication");
  const std::uint64_t p = a.ring_.characteristic();
  switch (a.ring_.kind()) {
    case RingKind::prime_field:
      return Scalar(a.ring_, std::get<std::uint64_t>(a.value_) * std::get<std::uint64_t>(b.value_) % p);
    case RingKind::rationals:
      return Scalar(a.ring_, Rational(std::get<Rational>(a.value_) * std::get<Rational>(b.value_)));
    case RingKind::poly_ring: {
      const auto& x = std::get<Scalar::Poly>(a.value_);
      const auto& y = std::get<Scalar::Poly>(b.value_);
      if (x.empty() || y.empty()) return Scalar::zero(a.ring_);
      std::vector<std::uint64_t> acc(x.size() + y.size() - 1, 0);
      for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) acc[i + j] = (acc[i + j] + std::uint64_t{x[i]} * y[j]) % p;
      Scalar::Poly c(acc.begin(), acc.end());
      return Scalar::make_poly(static_cast<std::uint32_t>(p), std::move(c));
    }
  }
  throw std::logic_error("unreachable");
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in " + ring_.name());
  switch (ring_.kind()) {
    case RingKind::prime_field: {
      const auto p = ring_.characteristic();
      return Scalar(ring_, pow_mod(std::get<std::uint64_t>(value_), p - 2, p));
    }
    case RingKind::rationals: {
      Rational q = 1 / std::get<Rational>(value_);
      q.canonicalize();
      return Scalar(ring_, std::move(q));
    }
    case RingKind::poly_ring: {
      const auto& c = std::get<Poly>(value_);
      if (c.size() != 1) throw std::domain_error("non-constant polynomial is not a unit in " + ring_.name());
      const auto p = ring_.characteristic();
      return Scalar(ring_, Poly{static_cast<std::uint32_t>(pow_mod(c[0], p - 2, p))});
    }
  }
  throw std::logic_error("unreachable");
}

Scalar Scalar::pow(unsigned exponent) const {
  Scalar result = one(ring_);
  Scalar base = *this;
  while (exponent) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent) base *= base;
  }
  return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.ring_ == b.ring_ && a.value_ == b.value_;
}

bool operator<(const Scalar& a, const Scalar& b) {
  require_same_ring(a.ring_, b.ring_, "comparison");
  switch (a.ring_.kind()) {
    case RingKind::prime_field: return std::get<std::uint64_t>(a.value_) < std::get<std::uint64_t>(b.value_);
    case RingKind::rationals: return std::get<Rational>(a.value_) < std::get<Rational>(b.value_);
    case RingKind::poly_ring: {
      const auto& x = std::get<Scalar::Poly>(a.value_);
      const auto& y = std::get<Scalar::Poly>(b.value_);
      if (x.size() != y.size()) return x.size() < y.size();
      return std::lexicographical_compare(x.rbegin(), x.rend(), y.rbegin(), y.rend());
    }
  }
  return false;
}

std::string Scalar::to_string() const {
  switch (ring_.kind()) {
    case RingKind::prime_field: return std::to_string(std::get<std::uint64_t>(value_));
    case RingKind::rationals: return ipr::to_string(std::get<Rational>(value_));
    case RingKind::poly_ring: {
      const auto& c = std::get<Poly>(value_);
      if (c.empty()) return "[0]";
      std::string out = "[";
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(c[i]);
      }
      return out + "]";
    }
  }
  return "?";
}

std::string Scalar::pretty() const {
  if (ring_.kind() != RingKind::poly_ring) return to_string();
  const auto& c = std::get<Poly>(value_);
  if (c.empty()) return "0";
  std::string out;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0 || c[i] != 1) out += std::to_string(c[i]);
    if (i >= 1) out += 't';
    if (i >= 2) out += '^' + std::to_string(i);
  }
  return out;
}

std::string to_string(const Scalar& s) { return s.to_string(); }

}  // namespace ipr
