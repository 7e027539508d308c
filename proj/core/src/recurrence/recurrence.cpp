#include "ipr/recurrence/recurrence.hpp"

#include "ipr/search/parallel.hpp"

#include <algorithm>
#include <stdexcept>

namespace ipr {

namespace {

void check_inputs(const MeasureSystem& sys, const EventSet& b, const PolynomialMap& phi, const Rational& epsilon,
                  const WindowSpec& window) {
  sys.check_event(b);
  if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
  require_same_ring(phi.ring(), sys.ring(), "phi");
  require_same_ring(window.ring, sys.ring(), "window");
  if (phi.target_dim() != sys.group_dim())
    throw std::invalid_argument("phi maps into dimension " + std::to_string(phi.target_dim()) +
                                " but the action has dimension " + std::to_string(sys.group_dim()));
}

Rational canon(Rational q) {
  q.canonicalize();
  return q;
}

}  // namespace

RecurrenceReport recurrence_set(const MeasureSystem& sys, const EventSet& b, const PolynomialMap& phi,
                                const Rational& epsilon, const WindowSpec& window, const SearchOptions& options) {
  check_inputs(sys, b, phi, epsilon, window);
  RecurrenceReport rep;
  rep.system_id = sys.id();
  rep.backend = sys.backend();
  rep.ring = sys.ring().name();
  rep.outside_hypotheses = sys.outside_theorem_hypotheses();
  rep.label = sys.label();
  rep.event = event_to_string(b);
  rep.phi = phi.to_string();
  rep.epsilon = canon(epsilon);
  rep.mu_b = measure(sys, b);
  rep.threshold = canon(rep.mu_b * rep.mu_b - rep.epsilon);
  rep.window = window;
  rep.domain_dim = phi.domain_dim();

  auto us = window_enumerate(window, phi.domain_dim());
  rep.rows = parallel_map<RecurrenceRow>(us.size(), options.resolved_workers(), [&](std::size_t i) {
    Vector w = phi(us[i]);
    Rational c = correlation(sys, b, w);
    const bool in = c > rep.threshold;
    return RecurrenceRow{us[i], std::move(w), std::move(c), in};
  });
  std::vector<Vector> in_r;
  for (const auto& row : rep.rows)
    if (row.in_r) in_r.push_back(row.u);
  rep.r = ElementSet<Vector>(std::move(in_r));
  rep.ambient.elements = ElementSet<Vector>(std::move(us));
  rep.ambient.complete = window.complete();
  rep.ambient.description = window.to_string();
  return rep;
}

unsigned folner_reach(const WindowSpec& window) {
  switch (window.ring.kind()) {
    case RingKind::prime_field: return window.ring.characteristic();
    case RingKind::rationals:
      return static_cast<unsigned>(std::max<std::int64_t>(0, std::min(window.numerator_bound, window.denominator_bound)));
    case RingKind::poly_ring: return static_cast<unsigned>(std::max<std::int64_t>(0, window.degree_bound));
  }
  return 0;
}

namespace {

std::vector<Rational> density_profile(const ElementSet<Vector>& s, const WindowSpec& window, std::size_t dim) {
  const unsigned reach = folner_reach(window);
  if (reach == 0) return {};
  return folner_density([&](const Vector& v) { return s.contains(v); }, FolnerSpec::canonical(window.ring, dim), reach)
      .sequence;
}

}  // namespace

void classify_ipstar(RecurrenceReport& report, unsigned r_max, const SearchOptions& options) {
  if (r_max == 0) throw std::invalid_argument("r_max must be >= 1");
  report.classification.clear();
  for (unsigned r = 1; r <= r_max; ++r) {
    auto v = is_ip_r_star(report.r, r, report.ambient, options);
    const bool stop = v.kind == IpStarVerdictKind::budget_exceeded;
    if (v.kind == IpStarVerdictKind::fails && !witness_misses(report.r, std::span<const Vector>(v.witness), report.ambient))
      throw std::logic_error("IP*_r failure witness does not recheck");
    report.classification.emplace(r, std::move(v));
    if (stop) break;
  }
  report.exceptional_density = density_profile(report.exceptional(), report.window, report.domain_dim);
}

PipelineReport theorem1_pipeline(const MeasureSystem& sys, const EventSet& b, const PolynomialMap& phi,
                                 const Rational& epsilon, const WindowSpec& window, const SearchOptions& options) {
  check_inputs(sys, b, phi, epsilon, window);
  const auto split = compact_projection(sys, b);
  const auto& f = split.compact;
  const auto one_b = indicator(sys, b);
  const auto residual = subtract(one_b, f);
  const Rational mu = measure(sys, b);
  const Rational k0 = inner(sys, f, one_b);
  const Rational threshold = canon(mu * mu - epsilon);
  const Rational a_bound = canon(epsilon * epsilon / 4);
  const Rational e_bound = canon(-epsilon / 2);

  PipelineReport out;
  out.khintchine = khintchine_bound(sys, b);
  const auto us = window_enumerate(window, phi.domain_dim());
  out.rows = parallel_map<PipelineRow>(us.size(), options.resolved_workers(), [&](std::size_t i) {
    const Vector w = phi(us[i]);
    PipelineRow row;
    const auto tf = koopman(sys, w, f);
    row.metric2 = orbit_metric(sys, f, tf);
    row.main = inner(sys, tf, one_b);
    row.cross = inner(sys, koopman(sys, w, residual), one_b);
    row.in_a = row.metric2 < a_bound;
    row.in_e = row.cross < e_bound;
    row.in_r = row.main + row.cross > threshold;
    // Cauchy-Schwarz: <f - T f, 1_B> <= ||f - T f|| ||1_B||, squared.
    const Rational drop = k0 - row.main;
    const bool cs = drop <= 0 || drop * drop <= row.metric2 * mu;
    row.chain_ok = cs && (!(row.in_a && !row.in_e) || row.in_r);
    return row;
  });
  std::vector<Vector> a, e, r;
  for (std::size_t i = 0; i < us.size(); ++i) {
    const auto& row = out.rows[i];
    if (row.in_a) a.push_back(us[i]);
    if (row.in_e) e.push_back(us[i]);
    if (row.in_r) r.push_back(us[i]);
    out.chain_ok = out.chain_ok && row.chain_ok;
  }
  out.a = ElementSet<Vector>(std::move(a));
  out.e = ElementSet<Vector>(std::move(e));
  out.r = ElementSet<Vector>(std::move(r));
  out.e_density = density_profile(out.e, window, phi.domain_dim());
  return out;
}

SyndeticityReport syndeticity_check(const RecurrenceReport& report) {
  SyndeticityReport out;
  out.window_limited = !report.ambient.complete;
  const auto& elems = report.ambient.elements.elements();
  const std::size_t n = elems.size();
  std::optional<std::size_t> last;
  std::size_t gap = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!report.r.contains(elems[i])) continue;
    gap = std::max(gap, last ? i - *last : i);
    last = i;
  }
  out.max_gap = last ? std::max(gap, n - 1 - *last) : n;

  if (report.ambient.complete && !report.r.empty()) {
    std::vector<bool> covered(n, false);
    std::size_t remaining = n, used = 0;
    while (remaining > 0) {
      std::size_t best_gain = 0, best = 0;
      for (std::size_t g = 0; g < n; ++g) {
        std::size_t gain = 0;
        for (const auto& x : report.r) {
          auto it = std::lower_bound(elems.begin(), elems.end(), elems[g] + x);
          if (!covered[static_cast<std::size_t>(it - elems.begin())]) ++gain;
        }
        if (gain > best_gain) {
          best_gain = gain;
          best = g;
        }
      }
      for (const auto& x : report.r) {
        auto idx = static_cast<std::size_t>(std::lower_bound(elems.begin(), elems.end(), elems[best] + x) - elems.begin());
        if (!covered[idx]) {
          covered[idx] = true;
          --remaining;
        }
      }
      ++used;
    }
    out.translate_cover = used;
  }
  return out;
}

RecurrenceReport full_report(const MeasureSystem& sys, const EventSet& b, const PolynomialMap& phi,
                             const Rational& epsilon, const WindowSpec& window, unsigned r_max,
                             const SearchOptions& options) {
  auto rep = recurrence_set(sys, b, phi, epsilon, window, options);
  classify_ipstar(rep, r_max, options);
  rep.khintchine = khintchine_bound(sys, b);
  rep.pipeline = theorem1_pipeline(sys, b, phi, epsilon, window, options);
  rep.syndeticity = syndeticity_check(rep);
  return rep;
}

FpProbe fp_probe(const RecurrenceReport& report, const std::vector<Scalar>& gens) {
  if (report.domain_dim != 1) throw std::invalid_argument("fp_probe needs a one-dimensional domain");
  if (gens.empty() || gens.size() > 20) throw std::invalid_argument("fp_probe needs 1..20 generators");
  for (const auto& g : gens) {
    if (g.is_zero()) throw std::invalid_argument("fp_probe generators must be nonzero");
    require_same_ring(g.ring(), report.window.ring, "fp_probe generator");
  }
  FpProbe out;
  std::vector<Vector> products;
  for (std::uint32_t alpha = 1; alpha < (1u << gens.size()); ++alpha) {
    Scalar p = Scalar::one(gens.front().ring());
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (alpha >> i & 1u) p *= gens[i];
    products.emplace_back(p);
  }
  ElementSet<Vector> fp(std::move(products));
  out.products = fp.elements();
  for (const auto& x : fp) {
    if (!report.ambient.elements.contains(x))
      ++out.outside_window;
    else if (report.r.contains(x))
      out.hits.push_back(x);
  }
  out.intersects = !out.hits.empty();
  return out;
}

}  // namespace ipr
