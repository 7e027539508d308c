#include "ipr/algebra/window.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace ipr {

WindowSpec WindowSpec::full(const GroundRing& ring) { return WindowSpec{ring}; }

WindowSpec WindowSpec::rationals(std::int64_t a, std::int64_t b) {
  WindowSpec w{GroundRing::rationals()};
  w.numerator_bound = a;
  w.denominator_bound = b;
  return w;
}

WindowSpec WindowSpec::polynomials(std::uint32_t p, std::int64_t degree_bound) {
  WindowSpec w{GroundRing::poly_ring(p)};
  w.degree_bound = degree_bound;
  return w;
}

WindowSpec WindowSpec::parse(const GroundRing& ring, std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s += c;
  if (ring.kind() == RingKind::prime_field) {
    if (s != "full") throw std::invalid_argument("window for " + ring.name() + " must be 'full'");
    return full(ring);
  }
  if (ring.kind() == RingKind::poly_ring) {
    if (s.rfind("D=", 0) != 0) throw std::invalid_argument("window for " + ring.name() + " must be 'D=<n>'");
    return polynomials(ring.characteristic(), parse_int(std::string_view(s).substr(2)));
  }
  auto comma = s.find(',');
  if (s.rfind("A=", 0) != 0 || comma == std::string::npos || s.compare(comma + 1, 2, "B=") != 0)
    throw std::invalid_argument("window for Q must be 'A=<n>,B=<m>'");
  return rationals(parse_int(std::string_view(s).substr(2, comma - 2)), parse_int(std::string_view(s).substr(comma + 3)));
}

std::string WindowSpec::to_string() const {
  switch (ring.kind()) {
    case RingKind::prime_field: return "full";
    case RingKind::rationals:
      return "A=" + std::to_string(numerator_bound) + ",B=" + std::to_string(denominator_bound);
    case RingKind::poly_ring: return "D=" + std::to_string(degree_bound);
  }
  return "?";
}

std::vector<Scalar> window_enumerate(const GroundRing& ring, const WindowSpec& w) {
  require_same_ring(ring, w.ring, "window_enumerate");
  return window_enumerate(w);
}

std::vector<Scalar> window_enumerate(const WindowSpec& w) {
  std::vector<Scalar> out;
  switch (w.ring.kind()) {
    case RingKind::prime_field: {
      const auto p = w.ring.characteristic();
      out.reserve(p);
      for (std::uint32_t i = 0; i < p; ++i) out.push_back(Scalar::from_int(w.ring, i));
      return out;
    }
    case RingKind::rationals: {
      if (w.numerator_bound < 0 || w.denominator_bound < 0)
        throw std::invalid_argument("rational window bounds must be non-negative");
      if (w.denominator_bound == 0) throw std::invalid_argument("rational window needs B >= 1");
      std::vector<Rational> values;
      for (std::int64_t b = 1; b <= w.denominator_bound; ++b)
        for (std::int64_t a = -w.numerator_bound; a <= w.numerator_bound; ++a)
          if (std::gcd(a, b) == 1 || a == 0) {
            if (a == 0 && b != 1) continue;
            values.push_back(make_rational(a, b));
          }
      std::sort(values.begin(), values.end());
      out.reserve(values.size());
      for (const auto& q : values) out.push_back(Scalar::from_rational(q));
      return out;
    }
    case RingKind::poly_ring: {
      if (w.degree_bound < 0) throw std::invalid_argument("polynomial window needs D >= 0");
      const std::uint64_t p = w.ring.characteristic();
      std::uint64_t count = 1;
      for (std::int64_t i = 0; i < w.degree_bound; ++i) {
        if (count > std::numeric_limits<std::uint64_t>::max() / p / 2)
          throw std::invalid_argument("polynomial window too large");
        count *= p;
      }
      out.reserve(count);
      for (std::uint64_t i = 0; i < count; ++i) out.push_back(Scalar::poly_from_index(w.ring.characteristic(), i));
      return out;
    }
  }
  return out;
}

std::vector<Vector> window_enumerate(const WindowSpec& w, std::size_t dim) {
  if (dim == 0) throw std::invalid_argument("window dimension must be positive");
  const auto base = window_enumerate(w);
  std::vector<Vector> out;
  std::vector<std::size_t> idx(dim, 0);
  while (true) {
    std::vector<Scalar> c;
    c.reserve(dim);
    for (auto i : idx) c.push_back(base[i]);
    out.emplace_back(w.ring, std::move(c));
    std::size_t pos = dim;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < base.size()) break;
      idx[pos] = 0;
      if (pos == 0) return out;
    }
  }
}

}  // namespace ipr
