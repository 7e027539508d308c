#include "ipr/dynamics/system.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ipr {

std::string_view to_string(Backend b) {
  switch (b) {
    case Backend::finite_perm: return "finite_perm";
    case Backend::rotation: return "rotation";
    case Backend::bernoulli: return "bernoulli";
  }
  return "?";
}

Backend parse_backend(std::string_view text) {
  if (text == "finite_perm") return Backend::finite_perm;
  if (text == "rotation") return Backend::rotation;
  if (text == "bernoulli") return Backend::bernoulli;
  throw std::invalid_argument("unknown backend '" + std::string(text) + "'");
}

PointEvent make_point_event(std::vector<std::uint32_t> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return PointEvent{std::move(points)};
}

IntervalEvent make_interval_event(std::vector<std::pair<Rational, Rational>> intervals) {
  for (const auto& [a, b] : intervals)
    if (a < 0 || b > 1 || !(a < b)) throw std::invalid_argument("interval [" + to_string(a) + "," + to_string(b) +
                                                                 ") must satisfy 0 <= a < b <= 1");
  std::sort(intervals.begin(), intervals.end());
  IntervalEvent out;
  for (auto& iv : intervals) {
    if (!out.intervals.empty() && iv.first <= out.intervals.back().second)
      out.intervals.back().second = std::max(out.intervals.back().second, iv.second);
    else
      out.intervals.push_back(std::move(iv));
  }
  return out;
}

CylinderEvent make_cylinder_event(std::vector<std::pair<Scalar, std::vector<std::uint32_t>>> constraints) {
  std::map<Scalar, std::vector<std::uint32_t>> merged;
  for (auto& [c, letters] : constraints) {
    if (c.ring().kind() != RingKind::poly_ring) throw std::invalid_argument("cylinder coordinates live in F_p[t]");
    auto& slot = merged[c];
    slot.insert(slot.end(), letters.begin(), letters.end());
  }
  CylinderEvent out;
  for (auto& [c, letters] : merged) {
    std::sort(letters.begin(), letters.end());
    letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
    out.constraints.emplace_back(c, std::move(letters));
  }
  return out;
}

namespace {

Rational sum(const std::vector<Rational>& v) {
  Rational s = 0;
  for (const auto& x : v) s += x;
  return s;
}

void check_distribution(const std::vector<Rational>& w, std::string_view what) {
  if (w.empty()) throw std::invalid_argument(std::string(what) + " must be non-empty");
  for (const auto& x : w)
    if (x <= 0) throw std::invalid_argument(std::string(what) + " must be positive");
  if (sum(w) != 1) throw std::invalid_argument(std::string(what) + " must sum to 1, got " + to_string(sum(w)));
}

std::vector<std::uint32_t> compose(const std::vector<std::uint32_t>& g, const std::vector<std::uint32_t>& h) {
  // (g ∘ h)(x) = g(h(x))
  std::vector<std::uint32_t> out(h.size());
  for (std::size_t x = 0; x < h.size(); ++x) out[x] = g[h[x]];
  return out;
}

std::vector<std::uint32_t> identity(std::size_t n) {
  std::vector<std::uint32_t> id(n);
  for (std::size_t x = 0; x < n; ++x) id[x] = static_cast<std::uint32_t>(x);
  return id;
}

}  // namespace

MeasureSystem MeasureSystem::finite_perm(std::uint32_t p, std::vector<Rational> weights,
                                         std::vector<std::vector<std::uint32_t>> generators) {
  auto ring = GroundRing::prime_field(p);
  for (auto& w : weights) w.canonicalize();
  check_distribution(weights, "weights");
  if (generators.empty()) throw std::invalid_argument("finite_perm needs at least one generator");
  const std::size_t n = weights.size();
  const auto id = identity(n);
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const auto& g = generators[i];
    const std::string name = "generator " + std::to_string(i + 1);
    if (g.size() != n) throw std::invalid_argument(name + " has the wrong number of points");
    std::vector<bool> seen(n, false);
    for (auto y : g) {
      if (y >= n || seen[y]) throw std::invalid_argument(name + " is not a permutation");
      seen[y] = true;
    }
    for (std::size_t x = 0; x < n; ++x)
      if (weights[g[x]] != weights[x]) throw std::invalid_argument(name + " does not preserve the weights");
    auto power = id;
    for (std::uint32_t k = 0; k < p; ++k) power = compose(g, power);
    if (power != id) throw std::invalid_argument(name + " does not have order dividing p");
    for (std::size_t j = 0; j < i; ++j)
      if (compose(g, generators[j]) != compose(generators[j], g))
        throw std::invalid_argument("generators " + std::to_string(j + 1) + " and " + std::to_string(i + 1) +
                                    " do not commute");
  }
  return MeasureSystem(ring, FinitePermData{p, std::move(weights), std::move(generators)});
}

MeasureSystem MeasureSystem::regular(std::uint32_t p) {
  GroundRing::prime_field(p);
  std::vector<std::uint32_t> shift(p);
  for (std::uint32_t x = 0; x < p; ++x) shift[x] = (x + 1) % p;
  auto sys = finite_perm(p, std::vector<Rational>(p, Rational(1, p)), {shift});
  sys.set_id("F_" + std::to_string(p) + " regular");
  return sys;
}

MeasureSystem MeasureSystem::rotation(std::vector<Rational> rho) {
  if (rho.empty()) throw std::invalid_argument("rotation needs at least one rho");
  for (auto& r : rho) r.canonicalize();
  return MeasureSystem(GroundRing::rationals(), RotationData{std::move(rho)});
}

MeasureSystem MeasureSystem::bernoulli(std::uint32_t p, std::vector<Rational> base) {
  auto ring = GroundRing::poly_ring(p);
  for (auto& b : base) b.canonicalize();
  check_distribution(base, "base distribution");
  return MeasureSystem(ring, BernoulliData{p, std::move(base)});
}

Backend MeasureSystem::backend() const { return static_cast<Backend>(data_.index()); }

std::size_t MeasureSystem::group_dim() const {
  switch (backend()) {
    case Backend::finite_perm: return finite().generators.size();
    case Backend::rotation: return rotation().rho.size();
    case Backend::bernoulli: return 1;
  }
  return 0;
}

std::string MeasureSystem::label() const {
  if (outside_theorem_hypotheses())
    return "outside Theorem 1 hypotheses: " + ring_.name() + " is not a countable field";
  return "within Theorem 1 hypotheses";
}

void MeasureSystem::check_group_element(const Vector& w) const {
  require_same_ring(w.ring(), ring_, "group element");
  if (w.dim() != group_dim())
    throw std::invalid_argument("group element has dimension " + std::to_string(w.dim()) + ", action needs " +
                                std::to_string(group_dim()));
}

void MeasureSystem::check_event(const EventSet& b) const {
  switch (backend()) {
    case Backend::finite_perm: {
      const auto* e = std::get_if<PointEvent>(&b);
      if (!e) throw std::invalid_argument("finite_perm events are point sets");
      for (auto x : e->points)
        if (x >= finite().weights.size()) throw std::invalid_argument("event point out of range");
      return;
    }
    case Backend::rotation:
      if (!std::holds_alternative<IntervalEvent>(b)) throw std::invalid_argument("rotation events are interval unions");
      return;
    case Backend::bernoulli: {
      const auto* e = std::get_if<CylinderEvent>(&b);
      if (!e) throw std::invalid_argument("bernoulli events are cylinders");
      for (const auto& [c, letters] : e->constraints) {
        require_same_ring(c.ring(), ring_, "cylinder coordinate");
        for (auto l : letters)
          if (l >= bernoulli().base.size()) throw std::invalid_argument("cylinder letter out of range");
      }
      return;
    }
  }
}

std::vector<std::uint32_t> MeasureSystem::permutation(const Vector& w) const {
  check_group_element(w);
  const auto& d = finite();
  auto out = identity(d.weights.size());
  for (std::size_t i = 0; i < w.dim(); ++i)
    for (std::uint64_t k = 0; k < w[i].residue(); ++k) out = compose(d.generators[i], out);
  return out;
}

Rational MeasureSystem::rotation_amount(const Vector& w) const {
  check_group_element(w);
  Rational s = 0;
  for (std::size_t i = 0; i < w.dim(); ++i) s += w[i].rational() * rotation().rho[i];
  return frac(s);
}

Rational cylinder_measure(const BernoulliData& data, const CylinderEvent& c) {
  Rational m = 1;
  for (const auto& [coord, letters] : c.constraints) {
    Rational s = 0;
    for (auto l : letters) s += data.base.at(l);
    m *= s;
  }
  m.canonicalize();
  return m;
}

CylinderEvent shift_cylinder(const CylinderEvent& c, const Scalar& w) {
  CylinderEvent out;
  for (const auto& [coord, letters] : c.constraints) out.constraints.emplace_back(coord + w, letters);
  std::sort(out.constraints.begin(), out.constraints.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

CylinderEvent intersect_cylinders(const CylinderEvent& a, const CylinderEvent& b) {
  CylinderEvent out;
  std::size_t i = 0, j = 0;
  while (i < a.constraints.size() || j < b.constraints.size()) {
    if (j == b.constraints.size() || (i < a.constraints.size() && a.constraints[i].first < b.constraints[j].first)) {
      out.constraints.push_back(a.constraints[i++]);
    } else if (i == a.constraints.size() || b.constraints[j].first < a.constraints[i].first) {
      out.constraints.push_back(b.constraints[j++]);
    } else {
      std::vector<std::uint32_t> both;
      std::set_intersection(a.constraints[i].second.begin(), a.constraints[i].second.end(),
                            b.constraints[j].second.begin(), b.constraints[j].second.end(), std::back_inserter(both));
      out.constraints.emplace_back(a.constraints[i].first, std::move(both));
      ++i;
      ++j;
    }
  }
  return out;
}

Rational measure(const MeasureSystem& sys, const EventSet& b) {
  sys.check_event(b);
  Rational m = 0;
  switch (sys.backend()) {
    case Backend::finite_perm:
      for (auto x : std::get<PointEvent>(b).points) m += sys.finite().weights[x];
      break;
    case Backend::rotation:
      for (const auto& [lo, hi] : std::get<IntervalEvent>(b).intervals) m += hi - lo;
      break;
    case Backend::bernoulli:
      m = cylinder_measure(sys.bernoulli(), std::get<CylinderEvent>(b));
      break;
  }
  m.canonicalize();
  return m;
}

namespace {

Rational overlap(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  Rational lo = std::max(a, c), hi = std::min(b, d);
  return hi > lo ? Rational(hi - lo) : Rational(0);
}

}  // namespace

Rational correlation(const MeasureSystem& sys, const EventSet& b, const Vector& w) {
  sys.check_event(b);
  sys.check_group_element(w);
  Rational out = 0;
  switch (sys.backend()) {
    case Backend::finite_perm: {
      const auto& pts = std::get<PointEvent>(b).points;
      const auto perm = sys.permutation(w);
      for (auto x : pts)
        if (std::binary_search(pts.begin(), pts.end(), perm[x])) out += sys.finite().weights[x];
      break;
    }
    case Backend::rotation: {
      // {x : x + s in B} = B - s; [c, d) - s wraps into [c - s, d - s) and
      // [c - s + 1, d - s + 1) for s in [0, 1).
      const Rational s = sys.rotation_amount(w);
      const auto& iv = std::get<IntervalEvent>(b).intervals;
      for (const auto& [a, bb] : iv)
        for (const auto& [c, d] : iv) {
          out += overlap(a, bb, c - s, d - s);
          out += overlap(a, bb, c - s + 1, d - s + 1);
        }
      break;
    }
    case Backend::bernoulli: {
      const auto& c = std::get<CylinderEvent>(b);
      out = cylinder_measure(sys.bernoulli(), intersect_cylinders(c, shift_cylinder(c, w[0])));
      break;
    }
  }
  out.canonicalize();
  return out;
}

std::string event_to_string(const EventSet& b) {
  std::string out;
  auto sep = [&] {
    if (!out.empty()) out += ' ';
  };
  if (const auto* e = std::get_if<PointEvent>(&b)) {
    for (auto x : e->points) {
      sep();
      out += std::to_string(x);
    }
  } else if (const auto* e = std::get_if<IntervalEvent>(&b)) {
    for (const auto& [lo, hi] : e->intervals) {
      sep();
      out += to_string(lo) + " " + to_string(hi);
    }
  } else {
    for (const auto& [c, letters] : std::get<CylinderEvent>(b).constraints)
      for (auto l : letters) {
        sep();
        out += c.to_string() + ":" + std::to_string(l);
      }
  }
  return out.empty() ? "none" : out;
}

}  // namespace ipr
