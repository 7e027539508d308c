#include "gen.hpp"

#include "ipr/recurrence/isometric_search.hpp"
#include "ipr/recurrence/recurrence.hpp"
#include "ipr/recurrence/report_io.hpp"

#include <doctest.h>

#include <sstream>

using namespace ipr;

namespace {

Rational rat(std::int64_t a, std::int64_t b = 1) { return make_rational(a, b); }
Scalar fp(std::uint32_t p, std::int64_t v) { return Scalar::from_int(GroundRing::prime_field(p), v); }
Scalar qs(std::int64_t a, std::int64_t b = 1) { return Scalar::from_rational(rat(a, b)); }
Scalar poly(std::uint32_t p, std::uint64_t index) { return Scalar::poly_from_index(p, index); }

PolynomialMap parse_phi(const GroundRing& ring, std::string_view text) { return PolynomialMap::parse(ring, 1, 1, text); }

std::vector<std::string> rendered(const ElementSet<Vector>& s) {
  std::vector<std::string> out;
  for (const auto& v : s) out.push_back(v.to_string());
  return out;
}

std::vector<Vector> ones(std::size_t n) { return std::vector<Vector>(n, Vector(qs(1))); }

// R on F_p regular for phi(u) = a u^d by counting points.
std::vector<std::int64_t> regular_r_oracle(std::uint32_t p, const std::vector<std::uint32_t>& b, std::int64_t a,
                                           unsigned d, const Rational& eps) {
  std::vector<std::int64_t> out;
  const Rational mu = rat(static_cast<std::int64_t>(b.size()), p);
  for (std::int64_t u = 0; u < p; ++u) {
    std::int64_t w = a % p;
    for (unsigned k = 0; k < d; ++k) w = w * u % p;
    long hits = 0;
    for (auto x : b)
      if (std::find(b.begin(), b.end(), (x + w) % p) != b.end()) ++hits;
    if (rat(hits, p) > mu * mu - eps) out.push_back(u);
  }
  return out;
}

struct Case {
  MeasureSystem sys;
  EventSet b;
  PolynomialMap phi;
  Rational eps;
  WindowSpec window;
};

Case random_case(testgen::Rng& rng, int backend) {
  switch (backend) {
    case 0: {
      const std::uint32_t p = static_cast<std::uint32_t>(rng.pick(std::vector<std::int64_t>{3, 5, 7}));
      const auto ring = GroundRing::prime_field(p);
      auto pts = testgen::subset(rng, p);
      const auto phi = std::to_string(rng.range(1, p - 1)) + "*x1^" + std::to_string(rng.range(1, 3));
      return {MeasureSystem::regular(p), make_point_event(pts), parse_phi(ring, phi), rat(rng.range(1, 20), 100),
              WindowSpec::full(ring)};
    }
    case 1: {
      const auto ring = GroundRing::rationals();
      const Rational a(rng.range(0, 5), 6);
      const Rational len(rng.range(1, 3), 7);
      std::vector<std::pair<Rational, Rational>> iv{{a, std::min<Rational>(Rational(1), a + len)}};
      const auto phi = "x1^" + std::to_string(rng.range(1, 2));
      return {MeasureSystem::rotation({rat(rng.range(1, 6), rng.range(7, 11))}), make_interval_event(iv),
              parse_phi(ring, phi), rat(rng.range(1, 10), 50), WindowSpec::rationals(rng.range(1, 3), rng.range(1, 2))};
    }
    default: {
      const auto ring = GroundRing::poly_ring(2);
      std::vector<std::pair<Scalar, std::vector<std::uint32_t>>> cs{{poly(2, rng.range(0, 3)), {0}}};
      if (rng.coin()) cs.emplace_back(poly(2, rng.range(0, 3)), std::vector<std::uint32_t>{1});
      return {MeasureSystem::bernoulli(2, {rat(1, 3), rat(2, 3)}), make_cylinder_event(cs),
              parse_phi(ring, rng.coin() ? "x1" : "x1^2"), rat(rng.range(1, 10), 100),
              WindowSpec::polynomials(2, rng.range(1, 3))};
    }
  }
}

}  // namespace

TEST_CASE("recurrence_set examples on F_5") {
  const auto f5 = MeasureSystem::regular(5);
  const auto ring = GroundRing::prime_field(5);
  const auto sq = parse_phi(ring, "x1^2");
  const auto full = recurrence_set(f5, make_point_event({0, 1}), sq, rat(1, 100), WindowSpec::full(ring));
  CHECK(rendered(full.r) == std::vector<std::string>{"0", "1", "2", "3", "4"});
  REQUIRE(full.rows.size() == 5);
  const std::vector<Rational> corr{rat(2, 5), rat(1, 5), rat(1, 5), rat(1, 5), rat(1, 5)};
  for (std::size_t i = 0; i < 5; ++i) CHECK(full.rows[i].corr == corr[i]);
  CHECK(full.threshold == rat(4, 25) - rat(1, 100));
  CHECK(full.outside_hypotheses);

  const auto zero = recurrence_set(f5, make_point_event({0}), sq, rat(1, 50), WindowSpec::full(ring));
  CHECK(rendered(zero.r) == std::vector<std::string>{"0"});
  CHECK(zero.label.find("outside Theorem 1 hypotheses") != std::string::npos);
}

TEST_CASE("recurrence_set on F_p regular matches point counting") {
  testgen::Rng rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint32_t p = static_cast<std::uint32_t>(rng.pick(std::vector<std::int64_t>{2, 3, 5, 7, 11}));
    const auto ring = GroundRing::prime_field(p);
    const auto b = testgen::subset(rng, p);
    const std::int64_t a = rng.range(1, p - 1);
    const unsigned d = static_cast<unsigned>(rng.range(1, 3));
    const Rational eps = rat(rng.range(1, 30), 100);
    const auto phi = parse_phi(ring, std::to_string(a) + "*x1^" + std::to_string(d));
    const auto rep = recurrence_set(MeasureSystem::regular(p), make_point_event(b), phi, eps, WindowSpec::full(ring));
    std::vector<std::string> expect;
    for (auto u : regular_r_oracle(p, b, a, d, eps)) expect.push_back(std::to_string(u));
    CHECK(rendered(rep.r) == expect);
  }
}

TEST_CASE("bernoulli single-coordinate cylinders recur everywhere") {
  const auto sys = MeasureSystem::bernoulli(2, {rat(1, 2), rat(1, 2)});
  const auto ring = GroundRing::poly_ring(2);
  const EventSet c = make_cylinder_event({{poly(2, 0), {0}}});
  for (const auto& eps : {rat(1, 1000), rat(1, 10)}) {
    auto rep = full_report(sys, c, parse_phi(ring, "x1"), eps, WindowSpec::polynomials(2, 4), 3);
    CHECK(rep.r.size() == 16);
    CHECK(rep.exceptional().empty());
    for (unsigned r = 1; r <= 3; ++r) CHECK(rep.classification.at(r).kind == IpStarVerdictKind::window_limited);
    REQUIRE(rep.syndeticity);
    CHECK(rep.syndeticity->max_gap == 1);
    CHECK(rep.syndeticity->window_limited);
    for (const auto& d : rep.exceptional_density) CHECK(d == 0);
  }
}

TEST_CASE("classify_ipstar examples") {
  const auto f5 = MeasureSystem::regular(5);
  const auto ring = GroundRing::prime_field(5);
  const auto sq = parse_phi(ring, "x1^2");
  auto full = full_report(f5, make_point_event({0, 1}), sq, rat(1, 100), WindowSpec::full(ring), 4);
  for (unsigned r = 1; r <= 4; ++r) CHECK(full.classification.at(r).kind == IpStarVerdictKind::holds);
  CHECK(full.syndeticity->max_gap == 1);
  CHECK(*full.syndeticity->translate_cover == 1);

  auto zero = full_report(f5, make_point_event({0}), sq, rat(1, 100), WindowSpec::full(ring), 4);
  const auto& v = zero.classification.at(2);
  REQUIRE(v.kind == IpStarVerdictKind::fails);
  CHECK(v.witness == std::vector<Vector>{Vector(fp(5, 1)), Vector(fp(5, 1))});
  CHECK(zero.syndeticity->max_gap == 4);
  CHECK(*zero.syndeticity->translate_cover == 5);
  REQUIRE(zero.exceptional_density.size() == 5);
  CHECK(zero.exceptional_density.back() == rat(4, 5));
  CHECK(zero.exceptional_density.front() == 0);
}

TEST_CASE("the two routes to R agree across backends") {
  testgen::Rng rng(62);
  for (int trial = 0; trial < 30; ++trial) {
    const auto c = random_case(rng, trial % 3);
    const auto direct = recurrence_set(c.sys, c.b, c.phi, c.eps, c.window);
    const auto pipe = theorem1_pipeline(c.sys, c.b, c.phi, c.eps, c.window);
    CHECK(direct.r == pipe.r);
    CHECK(pipe.chain_ok);
    CHECK(pipe.a.minus(pipe.e).is_subset_of(pipe.r));
    CHECK(pipe.khintchine >= direct.mu_b * direct.mu_b);
  }
}

TEST_CASE("pipeline on a rotation and on a Bernoulli cylinder") {
  const auto rot = MeasureSystem::rotation({rat(1, 7)});
  const auto qr = GroundRing::rationals();
  const EventSet half = make_interval_event({{rat(0), rat(1, 2)}});
  const auto w = WindowSpec::rationals(4, 3);
  const auto pipe = theorem1_pipeline(rot, half, parse_phi(qr, "x1"), rat(1, 10), w);
  CHECK(pipe.r == recurrence_set(rot, half, parse_phi(qr, "x1"), rat(1, 10), w).r);
  CHECK(pipe.e.empty());

  const auto coin = MeasureSystem::bernoulli(2, {rat(1, 2), rat(1, 2)});
  const auto pr = GroundRing::poly_ring(2);
  const EventSet c = make_cylinder_event({{poly(2, 0), {0}}, {poly(2, 2), {1}}});
  const auto bp = theorem1_pipeline(coin, c, parse_phi(pr, "x1"), rat(1, 100), WindowSpec::polynomials(2, 5));
  CHECK(bp.a.size() == 32);
  // the cross term can only be nonzero where the shifted support {u, u+t} meets {0, t}
  for (const auto& u : bp.e) CHECK((u[0] == poly(2, 0) || u[0] == poly(2, 2)));
  CHECK(bp.khintchine == rat(1, 16));
}

TEST_CASE("fp_probe examples") {
  const auto f5 = MeasureSystem::regular(5);
  const auto ring = GroundRing::prime_field(5);
  const auto sq = parse_phi(ring, "x1^2");
  const auto full = recurrence_set(f5, make_point_event({0, 1}), sq, rat(1, 100), WindowSpec::full(ring));
  const auto a = fp_probe(full, {fp(5, 2), fp(5, 3)});
  CHECK(rendered(ElementSet<Vector>(a.products)) == std::vector<std::string>{"1", "2", "3"});
  CHECK(a.intersects);
  CHECK(a.hits.size() == 3);

  const auto zero = recurrence_set(f5, make_point_event({0}), sq, rat(1, 50), WindowSpec::full(ring));
  const auto b = fp_probe(zero, {fp(5, 2), fp(5, 2)});
  CHECK(rendered(ElementSet<Vector>(b.products)) == std::vector<std::string>{"2", "4"});
  CHECK_FALSE(b.intersects);
  CHECK_THROWS(fp_probe(zero, {fp(5, 0)}));

  const auto rot = recurrence_set(MeasureSystem::rotation({rat(1, 7)}), make_interval_event({{rat(0), rat(1, 2)}}),
                                  parse_phi(GroundRing::rationals(), "x1"), rat(1, 2), WindowSpec::rationals(2, 1));
  const auto c = fp_probe(rot, {qs(2), qs(3)});
  CHECK(c.outside_window == 2);
}

TEST_CASE("isometric_recurrence_search examples") {
  const auto r7 = MeasureSystem::rotation({rat(1, 7)});
  const auto x7 = indicator(r7, make_interval_event({{rat(0), rat(1, 2)}}));
  const auto res = isometric_recurrence_search(r7, x7, MonomialMap(qs(1), {2}), rat(1, 100), ones(7));
  REQUIRE(res.status == SearchStatus::found);
  CHECK(res.gamma == 0b1111111);
  CHECK(*res.u_gamma == Vector(qs(7)));
  CHECK(res.distance2 == 0);
  CHECK(res.verified);
  CHECK(*res.sufficient_length == 7);

  const auto f5 = MeasureSystem::regular(5);
  const auto x5 = indicator(f5, make_point_event({0, 1}));
  const std::vector<Vector> gens{Vector(fp(5, 1)), Vector(fp(5, 2)), Vector(fp(5, 3))};
  const auto any = isometric_recurrence_search(f5, x5, MonomialMap(fp(5, 1), {1}), rat(2), gens);
  REQUIRE(any.status == SearchStatus::found);
  CHECK(any.gamma == 0b1);
  CHECK(any.colors == 1);
  CHECK(any.verified);

  const auto r3 = MeasureSystem::rotation({rat(1, 3)});
  const auto x3 = indicator(r3, make_interval_event({{rat(0), rat(1, 2)}}));
  const auto three = isometric_recurrence_search(r3, x3, MonomialMap(qs(1), {1}), rat(1, 10), ones(3));
  REQUIRE(three.status == SearchStatus::found);
  CHECK(three.gamma == 0b111);
  CHECK(three.distance2 == 0);
  CHECK(*three.proof_bound == 3);
}

TEST_CASE("commuting_recurrence_search examples") {
  const auto two = MeasureSystem::rotation({rat(1, 4), rat(1, 6)});
  const auto x = indicator(two, make_interval_event({{rat(0), rat(1, 2)}}));
  const std::vector<MonomialMap> ms{MonomialMap(qs(1), {1}), MonomialMap(qs(1), {1})};
  const auto res = commuting_recurrence_search(two, x, ms, rat(1, 10), ones(12));
  REQUIRE(res.status == SearchStatus::found);
  CHECK(*res.u_gamma == Vector(qs(12)));
  CHECK(res.verified);
  CHECK(*res.sufficient_length == 12);

  // k = 1 is the isometric search
  const auto r7 = MeasureSystem::rotation({rat(1, 7)});
  const auto x7 = indicator(r7, make_interval_event({{rat(1, 3), rat(2, 3)}}));
  const auto a = commuting_recurrence_search(r7, x7, {MonomialMap(qs(1), {1})}, rat(1, 20), ones(7));
  const auto b = isometric_recurrence_search(r7, x7, MonomialMap(qs(1), {1}), rat(1, 20), ones(7));
  CHECK(a.gamma == b.gamma);
  CHECK(a.distance2 == b.distance2);

  CHECK_THROWS(commuting_recurrence_search(two, x, {ms[0]}, rat(1, 10), ones(3)));
  CHECK_THROWS(isometric_recurrence_search(MeasureSystem::bernoulli(2, {rat(1, 2), rat(1, 2)}),
                                           constant(MeasureSystem::bernoulli(2, {rat(1, 2), rat(1, 2)}), rat(0)),
                                           MonomialMap(poly(2, 1), {1}), rat(1, 10), {Vector(poly(2, 1))}));
}

TEST_CASE("isometric search at the sufficient length always verifies") {
  testgen::Rng rng(63);
  for (int trial = 0; trial < 25; ++trial) {
    const std::uint32_t p = static_cast<std::uint32_t>(rng.pick(std::vector<std::int64_t>{3, 5}));
    const auto sys = MeasureSystem::regular(p);
    auto pts = testgen::subset(rng, p);
    const auto x = indicator(sys, make_point_event(pts));
    const MonomialMap m(fp(p, rng.range(1, p - 1)), {static_cast<unsigned>(rng.range(1, 2))});
    const auto len = *sufficient_length(sys, {m}, 1, false);
    CHECK(len == p);
    std::vector<Vector> gens;
    for (unsigned i = 0; i < len; ++i) gens.push_back(Vector(fp(p, rng.range(1, p - 1))));
    const auto res = isometric_recurrence_search(sys, x, m, rat(1, 100), gens);
    REQUIRE(res.status == SearchStatus::found);
    CHECK(res.verified);
    CHECK(res.distance2 == orbit_metric(sys, koopman(sys, *res.shift, x), x));
    CHECK(*res.u_gamma == subset_sum(gens, res.gamma));
  }
}

TEST_CASE("report JSON round-trips and CSV has one row per window element") {
  const auto f5 = MeasureSystem::regular(5);
  const auto ring = GroundRing::prime_field(5);
  auto rep = full_report(f5, make_point_event({0}), parse_phi(ring, "x1^2"), rat(1, 100), WindowSpec::full(ring), 3);
  const auto json = report_to_json(rep, "2026-01-01T00:00:00Z");
  CHECK(json.find("\"generated\": \"2026-01-01T00:00:00Z\"") != std::string::npos);
  const auto back = report_from_json(json);
  CHECK(back.r == rep.r);
  CHECK(back.rows.size() == rep.rows.size());
  CHECK(back.classification.at(2).kind == IpStarVerdictKind::fails);
  CHECK(back.classification.at(2).witness == rep.classification.at(2).witness);
  CHECK(report_to_json(back, "2026-01-01T00:00:00Z") == json);

  const auto csv = report_to_csv(rep, "now");
  std::istringstream in(csv);
  std::vector<std::string> lines;
  for (std::string l; std::getline(in, l);) lines.push_back(l);
  REQUIRE(lines.size() == 7);
  CHECK(lines[0] == "# generated now");
  CHECK(lines[1] == "w,mu_B,corr,threshold,in_R");
  CHECK(lines[2] == "0,1/5,1/5,3/100,true");
  CHECK(lines[3] == "1,1/5,0,3/100,false");
}

TEST_CASE("folner_reach") {
  CHECK(folner_reach(WindowSpec::full(GroundRing::prime_field(7))) == 7);
  CHECK(folner_reach(WindowSpec::rationals(5, 3)) == 3);
  CHECK(folner_reach(WindowSpec::polynomials(3, 4)) == 4);
}
