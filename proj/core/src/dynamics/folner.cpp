#include "ipr/dynamics/folner.hpp"

#include "ipr/ip/element_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace ipr {

FolnerSpec FolnerSpec::canonical(const GroundRing& ring, std::size_t dim) {
  if (dim == 0) throw std::invalid_argument("Følner dimension must be >= 1");
  FolnerSpec s;
  s.ring = ring;
  s.dim = dim;
  return s;
}

FolnerSpec FolnerSpec::explicit_list(std::vector<Vector> elements) {
  if (elements.empty()) throw std::invalid_argument("explicit Følner set must be non-empty");
  FolnerSpec s;
  s.ring = elements.front().ring();
  s.dim = elements.front().dim();
  for (const auto& v : elements) {
    require_same_ring(v.ring(), s.ring, "Følner element");
    if (v.dim() != s.dim) throw std::invalid_argument("explicit Følner set mixes dimensions");
  }
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  s.explicit_set = std::move(elements);
  return s;
}

namespace {

std::vector<Scalar> coordinate_range(const GroundRing& ring, unsigned n) {
  std::vector<Scalar> out;
  switch (ring.kind()) {
    case RingKind::prime_field:
      for (std::uint32_t x = 0; x < std::min<std::uint32_t>(n, ring.characteristic()); ++x)
        out.push_back(Scalar::from_int(ring, x));
      break;
    case RingKind::rationals:
      for (std::int64_t b = 1; b <= n; ++b)
        for (std::int64_t a = -static_cast<std::int64_t>(n); a <= static_cast<std::int64_t>(n); ++a)
          out.push_back(Scalar::from_rational(make_rational(a, b)));
      break;
    case RingKind::poly_ring: {
      std::uint64_t count = 1;
      for (unsigned i = 0; i < n; ++i) {
        count *= ring.characteristic();
        if (count > (std::uint64_t{1} << 24)) throw std::invalid_argument("Følner set too large");
      }
      for (std::uint64_t idx = 0; idx < count; ++idx) out.push_back(Scalar::poly_from_index(ring.characteristic(), idx));
      break;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<Vector> FolnerSpec::set(unsigned n) const {
  if (n == 0) throw std::invalid_argument("Følner index must be >= 1");
  if (explicit_set) return *explicit_set;
  const auto coords = coordinate_range(ring, n);
  std::vector<Vector> out;
  std::vector<std::size_t> idx(dim, 0);
  while (true) {
    std::vector<Scalar> c;
    for (auto i : idx) c.push_back(coords[i]);
    out.emplace_back(ring, std::move(c));
    std::size_t k = dim;
    while (k > 0 && ++idx[k - 1] == coords.size()) idx[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

Rational folner_invariance(const FolnerSpec& spec, unsigned n, const Vector& g) {
  ElementSet<Vector> phi(spec.set(n));
  std::vector<Vector> shifted;
  for (const auto& v : phi) shifted.push_back(v + g);
  ElementSet<Vector> moved(std::move(shifted));
  const auto diff = phi.minus(moved).size() + moved.minus(phi).size();
  Rational out(static_cast<long>(diff), static_cast<long>(phi.size()));
  out.canonicalize();
  return out;
}

FolnerDensity folner_density(const std::function<bool(const Vector&)>& member, const FolnerSpec& spec, unsigned n) {
  if (n == 0) throw std::invalid_argument("Følner index must be >= 1");
  FolnerDensity out;
  for (unsigned k = 1; k <= n; ++k) {
    const auto phi = spec.set(k);
    long hits = 0;
    for (const auto& v : phi)
      if (member(v)) ++hits;
    Rational d(hits, static_cast<long>(phi.size()));
    d.canonicalize();
    out.sequence.push_back(d);
  }
  return out;
}

Rational dlim_probe(const MeasureSystem& sys, const EventSet& b, const PolynomialMap& phi, const FolnerSpec& spec,
                    unsigned n) {
  require_same_ring(phi.ring(), sys.ring(), "phi");
  require_same_ring(spec.ring, sys.ring(), "Følner set");
  if (spec.dim != phi.domain_dim()) throw std::invalid_argument("Følner set dimension differs from phi's domain");
  const auto split = compact_projection(sys, b);
  const auto one_b = indicator(sys, b);
  const auto vs = spec.set(n);
  Rational total = 0;
  for (const auto& v : vs) {
    const Rational c = inner(sys, koopman(sys, phi(v), split.residual), one_b);
    total += c * c;
  }
  Rational out = total / Rational(static_cast<long>(vs.size()));
  out.canonicalize();
  return out;
}

}  // namespace ipr
