#include "ipr/recurrence/isometric_search.hpp"

#include "ipr/hj/hj_number.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace ipr {

Vector subset_sum(const std::vector<Vector>& gens, SubsetMask alpha) {
  Vector out = Vector::zero(gens.front().ring(), gens.front().dim());
  for (std::size_t j = 0; j < gens.size(); ++j)
    if (alpha >> j & 1u) out += gens[j];
  return out;
}

std::optional<unsigned> sufficient_length(const MeasureSystem& sys, const std::vector<MonomialMap>& ms,
                                          std::size_t domain_dim, bool integer_generators) {
  switch (sys.backend()) {
    case Backend::finite_perm: return static_cast<unsigned>(domain_dim * (sys.finite().p - 1) + 1);
    case Backend::rotation: {
      if (!integer_generators || domain_dim != 1) return std::nullopt;
      Integer l = 1;
      for (std::size_t i = 0; i < ms.size(); ++i) {
        Rational q = ms[i].coefficient().rational() * sys.rotation().rho[i];
        q.canonicalize();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
      }
      if (!l.fits_uint_p()) return std::nullopt;
      return static_cast<unsigned>(l.get_ui());
    }
    case Backend::bernoulli: return std::nullopt;
  }
  return std::nullopt;
}

namespace {

/// Greedy ball cover of the tracked orbit points of one action, built in order
/// of first appearance; a point takes the least index of a ball containing it.
class BallCover {
 public:
  BallCover(const MeasureSystem& sys, const Observable& x, std::size_t direction, Rational radius2)
      : sys_(sys), x_(x), direction_(direction), radius2_(std::move(radius2)) {}

  unsigned color(const Scalar& s) {
    if (auto it = cache_.find(s); it != cache_.end()) return it->second;
    std::vector<Scalar> coords(sys_.group_dim(), Scalar::zero(sys_.ring()));
    coords[direction_] = s;
    const auto y = koopman(sys_, Vector(sys_.ring(), std::move(coords)), x_);
    unsigned c = 0;
    for (; c < centers_.size(); ++c)
      if (orbit_metric(sys_, centers_[c], y) < radius2_) break;
    if (c == centers_.size()) centers_.push_back(y);
    cache_.emplace(s, c);
    return c;
  }

 private:
  const MeasureSystem& sys_;
  const Observable& x_;
  std::size_t direction_;
  Rational radius2_;
  std::vector<Observable> centers_;
  std::map<Scalar, unsigned> cache_;
};

bool all_integers(const std::vector<Vector>& gens) {
  for (const auto& g : gens)
    for (const auto& c : g.coords())
      if (c.ring().kind() != RingKind::rationals || c.rational().get_den() != 1) return false;
  return true;
}

}  // namespace

IsometricSearchResult commuting_recurrence_search(const MeasureSystem& sys, const Observable& x,
                                                  const std::vector<MonomialMap>& ms, const Rational& epsilon,
                                                  const std::vector<Vector>& gens, const SearchOptions& options) {
  if (!sys.compact()) throw std::invalid_argument("recurrence search needs an isometric (compact) backend");
  if (ms.empty() || ms.size() != sys.group_dim())
    throw std::invalid_argument("need one monomial per coordinate direction of the action");
  if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
  if (gens.empty() || gens.size() > 16) throw std::invalid_argument("need between 1 and 16 generators");
  const std::size_t n = gens.front().dim();
  for (const auto& g : gens) {
    require_same_ring(g.ring(), sys.ring(), "generator");
    if (g.dim() != n) throw std::invalid_argument("generators differ in dimension");
  }
  unsigned d = 0;
  for (const auto& m : ms) {
    require_same_ring(m.ring(), sys.ring(), "monomial");
    if (m.arity() != n) throw std::invalid_argument("monomial arity differs from generator dimension");
    d = std::max(d, m.degree());
  }

  IsometricSearchResult out;
  out.d = d;
  out.r = static_cast<unsigned>(gens.size());
  out.sufficient_length = sufficient_length(sys, ms, n, all_integers(gens));

  const std::size_t k = ms.size();
  std::vector<BallCover> covers;
  for (std::size_t i = 0; i < k; ++i) {
    Rational radius = epsilon / Rational(static_cast<long>(k)) / Rational(1L << ms[i].degree());
    radius.canonicalize();
    covers.emplace_back(sys, x, i, radius * radius);
  }
  std::vector<Vector> sums;
  for (SubsetMask a = 0; a < (SubsetMask{1} << gens.size()); ++a) sums.push_back(subset_sum(gens, a));

  std::map<std::vector<unsigned>, unsigned> palette;
  auto coloring = [&](std::span<const SubsetMask> alphas) -> unsigned {
    std::vector<unsigned> key(k);
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<Vector> factors;
      for (unsigned f = 0; f < ms[i].degree(); ++f) factors.push_back(sums[alphas[f]]);
      key[i] = covers[i].color(monomial_product(ms[i], factors));
    }
    auto [it, fresh] = palette.emplace(std::move(key), static_cast<unsigned>(palette.size()));
    if (fresh && palette.size() > 256) throw std::invalid_argument("ball cover needs more than 256 colors");
    return it->second;
  };

  auto res = mono_config_search(d, out.r, coloring, options);
  out.colors = static_cast<unsigned>(palette.size());
  out.proof_bound = hj_known_value(1u << d, out.colors);
  out.candidates = res.candidates;
  out.status = res.status;
  if (res.status != SearchStatus::found) return out;

  out.config = res.config;
  out.line = res.line;
  out.gamma = res.config->gamma;
  out.u_gamma = subset_sum(gens, out.gamma);
  std::vector<Scalar> shift;
  for (const auto& m : ms) shift.push_back(m(*out.u_gamma));
  out.shift = Vector(sys.ring(), std::move(shift));
  out.distance2 = orbit_metric(sys, koopman(sys, *out.shift, x), x);
  out.verified = out.distance2 < epsilon * epsilon;
  return out;
}

IsometricSearchResult isometric_recurrence_search(const MeasureSystem& sys, const Observable& x, const MonomialMap& m,
                                                  const Rational& epsilon, const std::vector<Vector>& gens,
                                                  const SearchOptions& options) {
  if (sys.group_dim() != 1) throw std::invalid_argument("isometric search needs a one-dimensional action");
  return commuting_recurrence_search(sys, x, {m}, epsilon, gens, options);
}

}  // namespace ipr
