// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "ipr/algebra/polynomial_map.hpp"
#include "ipr/algebra/window.hpp"
#include "ipr/dynamics/folner.hpp"
#include "ipr/dynamics/observable.hpp"
#include "ipr/hj/hj_number.hpp"
#include "ipr/hj/psi.hpp"
#include "ipr/ip/example_a.hpp"
#include "ipr/ip/fk_density.hpp"
#include "ipr/ip/fu_ramsey.hpp"
#include "ipr/recurrence/isometric_search.hpp"
#include "ipr/recurrence/recurrence.hpp"

#ifdef IPR_HAVE_CLI
#include "cli/certificate.hpp"
#endif

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace ipr;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

Rational rat(std::int64_t a, std::int64_t b = 1) { return make_rational(a, b); }
Scalar fp(std::uint32_t p, std::int64_t v) { return Scalar::from_int(GroundRing::prime_field(p), v); }
Scalar poly(std::uint32_t p, std::uint64_t index) { return Scalar::poly_from_index(p, index); }

std::string str(const ElementSet<Vector>& s) {
  std::string out = "{";
  for (const auto& v : s) out += (out.size() > 1 ? "," : "") + v.to_string();
  return out + "}";
}

// ---------------------------------------------------------------------------

Outcome hj_2_2() {
  Outcome o;
  // [2]^[2] by hand: words 11,12,21,22 are indices 0..3 and the five lines are
  // {11,21}, {12,22}, {11,12}, {21,22}, {11,22}.
  const std::vector<std::vector<int>> lines{{0, 2}, {1, 3}, {0, 1}, {2, 3}, {0, 3}};
  int mono_free = 0;
  for (int c = 0; c < 16; ++c) {
    bool any = false;
    for (const auto& l : lines) any = any || ((c >> l[0]) & 1) == ((c >> l[1]) & 1);
    if (!any) ++mono_free;
  }
  o.require(mono_free == 0, "oracle: some 2-coloring of [2]^2 avoids every line");

  const auto r = hj_number(2, 2, 3);
  o.require(r.value && *r.value == 2, "hj_number(2,2) != 2");
  o.require(r.steps.size() == 2, "expected steps for m = 1, 2");
  if (!o.pass) return o;
  const auto& m1 = r.steps[0];
  o.require(m1.status == SearchStatus::found && verify_avoiding(hj_problem(2, 2, 1), m1.coloring),
            "m=1 counterexample missing or invalid");
  o.require(m1.coloring.size() == 2 && m1.coloring[0] != m1.coloring[1], "m=1 coloring must split the line");
  const auto& m2 = r.steps[1];
  o.require(m2.method == HjMethod::exhaustive && m2.status == SearchStatus::absent && m2.candidates == 16,
            "m=2 not verified over all 16 colorings");
  o.detail = "HJ(2,2) = 2; m=1 coloring " + std::to_string(m1.coloring[0]) + std::to_string(m1.coloring[1]) +
             "; m=2 exhaustive over " + std::to_string(m2.candidates) + " colorings";
  return o;
}

Outcome fu_ramsey() {
  Outcome o;
  const auto r3 = fu_ramsey_check(3, 2, 2);
  Coloring parity;
  for (SubsetMask m = 1; m < 8; ++m) parity.push_back(static_cast<std::uint8_t>(__builtin_popcountll(m) % 2));
  o.require(r3.verdict == FuVerdict::counterexample, "fu_ramsey_check(3,2,2) found no counterexample");
  o.require(r3.coloring == canonicalize(parity), "counterexample is not the parity coloring");
  o.require(verify_fu_counterexample(3, 2, 2, r3.coloring), "counterexample does not verify");

  ColoringSearchRequest req;
  req.record_refutation = true;
  req.options.max_candidates = 50'000'000;
  const auto min = fu_ramsey_minimal_r(2, 2, 8, req);
  o.require(!min.budget_exceeded && min.r.has_value(), "ascending search did not terminate within budget");
  std::size_t checked = 0;
  for (const auto& step : min.steps) {
#ifdef IPR_HAVE_CLI
    const auto res = cli::check_certificate(cli::fu_certificate(step));
    o.require(res.ok, "--check rejected r=" + std::to_string(step.r) + ": " + res.message);
#else
    const bool ok = step.verdict == FuVerdict::counterexample
                        ? verify_fu_counterexample(step.r, 2, 2, step.coloring)
                        : verify_refutation(fu_problem(step.r, 2, 2), step.refutation);
    o.require(ok, "certificate for r=" + std::to_string(step.r) + " does not verify");
#endif
    ++checked;
  }
  if (o.pass)
    o.detail = "parity counterexample at r=3; minimal r(s=2,k=2) = " + std::to_string(*min.r) + "; " +
               std::to_string(checked) + " certificates re-validated";
  return o;
}

Outcome fk_bound() {
  Outcome o;
  std::string values;
  for (unsigned n : {4u, 8u, 16u}) {
    const auto res = fk_density_experiment(2, n);
    const Rational half = rat(1, 2), slack = rat(2, n);
    o.require(res.status == SearchStatus::found, "N=" + std::to_string(n) + " did not finish");
    o.require(half - slack <= res.value && res.value <= half + slack,
              "N=" + std::to_string(n) + " value " + to_string(res.value) + " outside tolerance");
    o.require(is_ip_r_free(res.complement, 2), "complement is not IP_2-free");
    o.require(res.value == 1 - rat(static_cast<std::int64_t>(res.complement.size()), n),
              "value disagrees with the complement size");
    std::vector<std::int64_t> odds;
    for (std::int64_t x = 1; x <= n; x += 2) odds.push_back(x);
    o.require(is_ip_r_free(odds, 2), "odd numbers not IP_2-free");
    o.require(res.odd_certificate && *res.odd_certificate == rat((n + 1) / 2, n), "odd certificate wrong");
    values += (values.empty() ? "" : ", ") + std::string("N=") + std::to_string(n) + ": " + to_string(res.value);
  }
  if (o.pass) o.detail = values + "; odds certificate ceil(N/2)/N";
  return o;
}

Outcome example_a_checks() {
  Outcome o;
  const auto a = example_a(4);
  const auto checks = check_example_a(a);
  o.require(checks.blocks_are_fs, "a block is not FS(c,..,c)");
  o.require(checks.cross_block_fails, "a cross-block FS lies inside A");
  o.require(checks.depth_is_r, "per-block depth differs from r");
  // membership table: i * 2^(2^r) for 1 <= i <= r, nothing else
  std::set<Integer> expect;
  for (unsigned r = 1; r <= 4; ++r) {
    Integer step = 1;
    step <<= (1u << r);
    for (unsigned i = 1; i <= r; ++i) expect.insert(step * i);
  }
  o.require(std::set<Integer>(a.set.begin(), a.set.end()) == expect, "membership table differs");
  for (const auto& x : expect) o.require(a.block_of(x).has_value(), "element without a block");
  if (o.pass)
    o.detail = std::to_string(a.set.size()) + " elements, depths 1..4, " + std::to_string(checks.cross_block_tuples) +
               " cross-block triples rejected";
  return o;
}

Outcome f5_exactness() {
  Outcome o;
  const auto f5 = MeasureSystem::regular(5);
  const auto ring = GroundRing::prime_field(5);
  const auto sq = PolynomialMap::parse(ring, 1, 1, "x1^2");
  const auto win = WindowSpec::full(ring);
  auto full = full_report(f5, make_point_event({0, 1}), sq, rat(1, 100), win, 4);
  o.require(full.r.size() == 5, "B={0,1}: R is " + str(full.r) + ", expected F_5");
  for (unsigned r = 1; r <= 4; ++r)
    o.require(full.classification.at(r).kind == IpStarVerdictKind::holds,
              "B={0,1}: IP*_" + std::to_string(r) + " does not hold");

  auto zero = full_report(f5, make_point_event({0}), sq, rat(1, 100), win, 4);
  o.require(str(zero.r) == "{0}", "B={0}: R is " + str(zero.r));
  const auto& v = zero.classification.at(2);
  o.require(v.kind == IpStarVerdictKind::fails, "B={0}: IP*_2 does not fail");
  o.require(v.witness == std::vector<Vector>{Vector(fp(5, 1)), Vector(fp(5, 1))}, "B={0}: witness is not (1,1)");
  o.require(zero.label.find("outside Theorem 1 hypotheses") != std::string::npos, "label missing");
  if (o.pass) o.detail = "R(B={0,1}) = F_5, IP*_1..4 hold; R(B={0}) = {0}, IP*_2 fails at (1,1); labelled";
  return o;
}

Outcome bernoulli_mixing() {
  Outcome o;
  const auto coin = MeasureSystem::bernoulli(2, {rat(1, 2), rat(1, 2)});
  const auto ring = GroundRing::poly_ring(2);
  // B = {x_0 = 0, x_t = 1}: support S = {0, t}
  const std::vector<Scalar> support{poly(2, 0), poly(2, 2)};
  const EventSet b = make_cylinder_event({{support[0], {0}}, {support[1], {1}}});
  const Rational mu = measure(coin, b);
  o.require(mu == rat(1, 4), "mu(B) != 1/4");
  std::size_t disjoint = 0;
  for (const auto& w : window_enumerate(WindowSpec::polynomials(2, 6))) {
    bool overlap = false;
    for (const auto& s : support)
      for (const auto& s2 : support) overlap = overlap || s + w == s2;
    if (overlap) continue;
    ++disjoint;
    o.require(correlation(coin, b, Vector(w)) == mu * mu, "correlation != mu^2 at w = " + w.pretty());
  }

  const auto phi = PolynomialMap::parse(ring, 1, 1, "x1");
  const auto spec = FolnerSpec::canonical(ring);
  Rational prev = 2;
  std::string probes;
  for (unsigned n = 1; n <= 6; ++n) {
    const auto v = dlim_probe(coin, b, phi, spec, n);
    o.require(v < prev, "dlim_probe not strictly decreasing at N=" + std::to_string(n));
    prev = v;
    probes += (probes.empty() ? "" : " ") + to_string(v);
  }

  const auto pipe = theorem1_pipeline(coin, b, phi, rat(1, 100), WindowSpec::polynomials(2, 6));
  // the cross term vanishes unless u + S meets S, i.e. u in S - S = {0, t}
  for (const auto& u : pipe.e)
    o.require(u[0] == support[0] || u[0] == support[1], "E contains " + u.to_string() + " outside S - S");
  o.require(pipe.e_density.size() >= 6, "no density at N=6");
  if (o.pass) o.require(pipe.e_density[5] < rat(1, 8), "E density at N=6 is " + to_string(pipe.e_density[5]));
  if (o.pass)
    o.detail = std::to_string(disjoint) + " disjoint shifts exact; dlim " + probes + "; |E| = " +
               std::to_string(pipe.e.size()) + ", density(N=6) = " + to_string(pipe.e_density[5]);
  return o;
}

Outcome constructive_search() {
  Outcome o;
  const auto rot = MeasureSystem::rotation({rat(1, 7)});
  const auto x = indicator(rot, make_interval_event({{rat(0), rat(1, 2)}}));
  const MonomialMap m(Scalar::from_rational(rat(1)), {2});
  const Rational eps = rat(1, 100);
  const auto len = sufficient_length(rot, {m}, 1, true);
  o.require(len.has_value(), "no sufficient length reported");
  if (!o.pass) return o;
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> gen(1, 50);
  Rational worst = 0;
  for (int trial = 0; trial < 100 && o.pass; ++trial) {
    std::vector<Vector> gens;
    for (unsigned i = 0; i < *len; ++i) gens.emplace_back(Scalar::from_rational(rat(gen(rng))));
    const auto res = isometric_recurrence_search(rot, x, m, eps, gens);
    o.require(res.status == SearchStatus::found, "trial " + std::to_string(trial) + ": no configuration");
    if (!o.pass) break;
    // recompute the distance from the returned gamma alone
    const auto u = subset_sum(gens, res.gamma);
    const Vector shift(m(u));
    const auto d2 = orbit_metric(rot, koopman(rot, shift, x), x);
    o.require(d2 == res.distance2 && d2 < eps * eps && res.verified,
              "trial " + std::to_string(trial) + ": distance^2 " + to_string(d2));
    if (d2 > worst) worst = d2;
  }

  const auto f7 = GroundRing::prime_field(7);
  std::uniform_int_distribution<int> res7(0, 6), dim(1, 3);
  int telescoped = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = static_cast<std::size_t>(dim(rng));
    std::vector<unsigned> exps(n, 0);
    for (int k = 0; k < 3; ++k) ++exps[static_cast<std::size_t>(res7(rng)) % n];
    const MonomialMap mm(fp(7, 1 + res7(rng) % 6), exps);
    auto vec = [&] {
      std::vector<Scalar> c;
      for (std::size_t i = 0; i < n; ++i) c.push_back(fp(7, res7(rng)));
      return Vector(f7, c);
    };
    std::vector<Vector> alphas{vec(), vec(), vec()};
    if (telescope_check(mm, vec(), alphas)) ++telescoped;
  }
  o.require(telescoped == 1000, "telescope_check failed on " + std::to_string(1000 - telescoped) + " inputs");
  if (o.pass)
    o.detail = "100/100 trials at length " + std::to_string(*len) + ", max distance^2 " + to_string(worst) +
               "; telescope 1000/1000";
  return o;
}

Outcome two_path_agreement() {
  Outcome o;
  std::mt19937_64 rng(8);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  int cases = 0;
  for (int trial = 0; trial < 50; ++trial) {
    std::optional<MeasureSystem> sys;
    std::optional<EventSet> b;
    std::optional<PolynomialMap> phi;
    std::optional<WindowSpec> win;
    const Rational eps = rat(pick(1, 20), 100);
    switch (trial % 3) {
      case 0: {
        const std::uint32_t p = std::vector<std::uint32_t>{3, 5, 7, 11}[static_cast<std::size_t>(pick(0, 3))];
        const auto ring = GroundRing::prime_field(p);
        std::vector<std::uint32_t> pts;
        for (std::uint32_t x = 0; x < p; ++x)
          if (pick(0, 1)) pts.push_back(x);
        sys = MeasureSystem::regular(p);
        b = make_point_event(pts);
        phi = PolynomialMap::parse(ring, 1, 1, std::to_string(pick(1, p - 1)) + "*x1^" + std::to_string(pick(1, 3)));
        win = WindowSpec::full(ring);
        break;
      }
      case 1: {
        const auto ring = GroundRing::rationals();
        const Rational a = rat(pick(0, 8), 9), len = rat(pick(1, 4), 9);
        sys = MeasureSystem::rotation({rat(pick(1, 12), pick(2, 13))});
        b = make_interval_event({{a, std::min<Rational>(Rational(1), a + len)}});
        phi = PolynomialMap::parse(ring, 1, 1, "x1^" + std::to_string(pick(1, 2)));
        win = WindowSpec::rationals(pick(1, 4), pick(1, 3));
        break;
      }
      default: {
        const std::uint32_t p = pick(0, 1) ? 2 : 3;
        const auto ring = GroundRing::poly_ring(p);
        std::vector<Rational> base(p, rat(1, p));
        std::vector<std::pair<Scalar, std::vector<std::uint32_t>>> cs;
        for (int i = pick(1, 2); i > 0; --i)
          cs.emplace_back(poly(p, static_cast<std::uint64_t>(pick(0, p * p - 1))),
                          std::vector<std::uint32_t>{static_cast<std::uint32_t>(pick(0, p - 1))});
        sys = MeasureSystem::bernoulli(p, base);
        b = make_cylinder_event(cs);
        phi = PolynomialMap::parse(ring, 1, 1, pick(0, 1) ? "x1" : "x1^2");
        win = WindowSpec::polynomials(p, pick(1, 3));
        break;
      }
    }
    const auto direct = recurrence_set(*sys, *b, *phi, eps, *win);
    const auto pipe = theorem1_pipeline(*sys, *b, *phi, eps, *win);
    o.require(direct.r == pipe.r, "case " + std::to_string(trial) + " (" + std::string(to_string(sys->backend())) +
                                      "): " + str(direct.r) + " vs " + str(pipe.r));
    o.require(pipe.chain_ok, "case " + std::to_string(trial) + ": intermediate bound violated");
    ++cases;
  }
  if (o.pass) o.detail = std::to_string(cases) + " cases across finite_perm, rotation, bernoulli";
  return o;
}

Outcome psi_round_trip() {
  Outcome o;
  std::size_t words = 0, lines = 0;
  for (unsigned d = 1; d <= 3; ++d)
    for (unsigned r = 1; r <= 4; ++r) {
      std::set<std::vector<SubsetMask>> images;
      const unsigned k = 1u << d;
      for (std::uint64_t i = 0; i < word_count(k, r); ++i) {
        const auto w = word_at(k, r, i);
        const auto a = psi_encode(w, d);
        o.require(psi_decode(a, r) == w, "psi round trip fails at " + w.to_string());
        images.insert(a);
        ++words;
      }
      o.require(images.size() == word_count(k, r), "psi not injective");
      o.require(images.size() == (std::size_t{1} << (d * r)), "psi not onto");
    }
  for (unsigned d = 1; d <= 2; ++d)
    for (unsigned r = 1; r <= 3; ++r) {
      std::set<std::pair<std::vector<SubsetMask>, SubsetMask>> seen;
      for (const auto& l : all_lines(1u << d, r)) {
        const auto cfg = line_to_config(l, d);
        o.require(cfg.valid(), "invalid configuration from " + l.to_string());
        const auto pts = line_points(l, 1u << d);
        for (std::uint32_t e = 0; e < (1u << d); ++e)
          o.require(psi_decode(cfg.point(e), r) == pts[e], "line_to_config round trip fails at " + l.to_string());
        seen.emplace(cfg.alphas, cfg.gamma);
        ++lines;
      }
      o.require(seen.size() == all_lines(1u << d, r).size(), "line_to_config not injective");
    }
  if (o.pass) o.detail = std::to_string(words) + " words, " + std::to_string(lines) + " lines";
  return o;
}

Outcome khintchine() {
  Outcome o;
  std::mt19937_64 rng(10);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (int trial = 0; trial < 100 && o.pass; ++trial) {
    std::optional<MeasureSystem> sys;
    std::optional<EventSet> b;
    switch (trial % 3) {
      case 0: {
        const std::uint32_t p = std::vector<std::uint32_t>{2, 3, 5, 7}[static_cast<std::size_t>(pick(0, 3))];
        std::vector<std::uint32_t> pts;
        for (std::uint32_t x = 0; x < p; ++x)
          if (pick(0, 1)) pts.push_back(x);
        sys = MeasureSystem::regular(p);
        b = make_point_event(pts);
        break;
      }
      case 1: {
        const Rational a = rat(pick(0, 5), 6);
        sys = MeasureSystem::rotation({rat(pick(1, 9), pick(2, 10))});
        b = make_interval_event({{a, std::min<Rational>(Rational(1), a + rat(pick(1, 6), 7))}});
        break;
      }
      default: {
        sys = MeasureSystem::bernoulli(3, {rat(1, 2), rat(1, 3), rat(1, 6)});
        std::vector<std::pair<Scalar, std::vector<std::uint32_t>>> cs;
        for (int i = pick(1, 3); i > 0; --i) {
          std::vector<std::uint32_t> ls;
          for (std::uint32_t l = 0; l < 3; ++l)
            if (pick(0, 1)) ls.push_back(l);
          if (ls.empty()) ls.push_back(static_cast<std::uint32_t>(pick(0, 2)));
          cs.emplace_back(poly(3, static_cast<std::uint64_t>(pick(0, 8))), ls);
        }
        b = make_cylinder_event(cs);
        break;
      }
    }
    const Rational mu = measure(*sys, *b);
    const Rational k = khintchine_bound(*sys, *b);
    o.require(k >= mu * mu, "trial " + std::to_string(trial) + ": bound " + to_string(k) + " < mu^2");
    const auto split = compact_projection(*sys, *b);
    const auto one_b = indicator(*sys, *b);
    o.require(norm2(*sys, one_b) == norm2(*sys, split.compact) + norm2(*sys, split.residual),
              "trial " + std::to_string(trial) + ": Pythagoras fails");
    o.require(inner(*sys, split.compact, split.residual) == 0, "trial " + std::to_string(trial) + ": not orthogonal");
    o.require(k == inner(*sys, split.compact, one_b), "trial " + std::to_string(trial) + ": bound != <P1_B, 1_B>");
  }
  if (o.pass) o.detail = "100 pairs exact";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "HJ number by exhaustive enumeration", 1, hj_2_2},
      {2, "FU Ramsey finite shadow", 300, fu_ramsey},
      {3, "density bound experiment", 120, fk_bound},
      {4, "example A companion checks", 10, example_a_checks},
      {5, "recurrence exactness on F_5", 1, f5_exactness},
      {6, "Bernoulli weak-mixing mechanics", 30, bernoulli_mixing},
      {7, "constructive isometric search", 60, constructive_search},
      {8, "two-path agreement", 120, two_path_agreement},
      {9, "psi encoding", 10, psi_round_trip},
      {10, "Khintchine bound", 30, khintchine},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && secs >= c.limit_seconds) {
      o.pass = false;
      o.detail += " (over the time limit)";
    }
    if (!o.pass) ++failures;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3f s / %.0f s", secs, c.limit_seconds);
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << ": " << o.detail << " (" << timing
              << ")" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
