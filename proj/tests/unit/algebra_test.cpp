#include "gen.hpp"

#include "ipr/algebra/polynomial_map.hpp"
#include "ipr/algebra/window.hpp"

#include <doctest.h>

#include <numeric>
#include <set>

using namespace ipr;

namespace {

Scalar fp(std::uint32_t p, std::int64_t v) { return Scalar::from_int(GroundRing::prime_field(p), v); }
Scalar q(std::int64_t a, std::int64_t b = 1) { return Scalar::from_rational(make_rational(a, b)); }

std::vector<std::string> rendered(const std::vector<Scalar>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(x.pretty());
  return out;
}

// Polynomial product over F_p on plain coefficient vectors.
std::vector<std::int64_t> poly_mul_oracle(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b,
                                          std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::int64_t> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

}  // namespace

TEST_CASE("rational parsing canonicalizes and rejects zero denominators") {
  CHECK(parse_rational("6/4") == make_rational(3, 2));
  CHECK_THROWS(parse_rational("-2/-4"));
  CHECK(to_string(parse_rational("10/5")) == "2");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK(floor(make_rational(-1, 2)) == -1);
  CHECK(ceil(make_rational(-1, 2)) == 0);
  CHECK(frac(make_rational(-1, 3)) == make_rational(2, 3));
}

TEST_CASE("ground rings") {
  CHECK(GroundRing::parse("F_5") == GroundRing::prime_field(5));
  CHECK(GroundRing::parse("Q") == GroundRing::rationals());
  CHECK(GroundRing::parse("F_2[t]") == GroundRing::poly_ring(2));
  CHECK_THROWS(GroundRing::prime_field(6));
  CHECK_THROWS(GroundRing::poly_ring(1));
  CHECK(fp(5, -1).residue() == 4);
  CHECK_THROWS(fp(5, 1) + q(1));
  CHECK_THROWS_AS(fp(5, 0).inverse(), std::domain_error);
  const auto t = Scalar::parse(GroundRing::poly_ring(2), "[0,1]");
  CHECK(t.pretty() == "t");
  CHECK_THROWS_AS(t.inverse(), std::domain_error);
}

TEST_CASE("prime field arithmetic matches modular integers") {
  testgen::Rng rng(11);
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 13u, 101u}) {
    for (int trial = 0; trial < 200; ++trial) {
      const std::int64_t a = rng.range(-500, 500), b = rng.range(-500, 500);
      auto mod = [p](std::int64_t v) { return static_cast<std::uint64_t>(((v % p) + p) % p); };
      CHECK((fp(p, a) + fp(p, b)).residue() == mod(a + b));
      CHECK((fp(p, a) * fp(p, b)).residue() == mod(a * b));
      CHECK((fp(p, a) - fp(p, b)).residue() == mod(a - b));
      if (mod(a) != 0) CHECK((fp(p, a) * fp(p, a).inverse()).is_one());
      const unsigned e = static_cast<unsigned>(rng.range(0, 9));
      std::int64_t pw = 1;
      for (unsigned i = 0; i < e; ++i) pw = static_cast<std::int64_t>(mod(pw * a));
      CHECK(fp(p, a).pow(e).residue() == mod(pw));
    }
  }
}

TEST_CASE("polynomial ring arithmetic matches coefficient convolution") {
  testgen::Rng rng(12);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<std::int64_t> a(rng.range(0, 5)), b(rng.range(0, 5));
      for (auto& c : a) c = rng.range(0, p - 1);
      for (auto& c : b) c = rng.range(0, p - 1);
      const auto x = Scalar::from_coefficients(p, a), y = Scalar::from_coefficients(p, b);
      const auto prod = poly_mul_oracle(a, b, p);
      const auto got = (x * y).coefficients();
      REQUIRE(got.size() == prod.size());
      for (std::size_t i = 0; i < prod.size(); ++i) CHECK(got[i] == prod[i]);
      CHECK(x + y - y == x);
      CHECK(Scalar::poly_from_index(p, x.poly_index()) == x);
    }
  }
}

TEST_CASE("polynomial order is the base-p index order") {
  for (std::uint32_t p : {2u, 3u})
    for (std::uint64_t i = 0; i + 1 < 40; ++i) CHECK(Scalar::poly_from_index(p, i) < Scalar::poly_from_index(p, i + 1));
}

TEST_CASE("eval_monomial examples") {
  const auto f5 = GroundRing::prime_field(5);
  CHECK(eval_monomial(MonomialMap(fp(5, 1), {2}), Vector(fp(5, 3))) == fp(5, 4));
  const MonomialMap zero(fp(5, 0), {1});
  for (int u = 0; u < 5; ++u) CHECK(eval_monomial(zero, Vector(fp(5, u))).is_zero());
  const auto qq = GroundRing::rationals();
  const MonomialMap m(q(1), {1, 2});
  CHECK(eval_monomial(m, Vector(qq, {q(1, 2), q(2, 3)})) == q(2, 9));
  CHECK_THROWS(eval_monomial(m, Vector(q(1))));
  CHECK_THROWS(eval_monomial(MonomialMap(fp(5, 1), {1}), Vector(q(1))));
  CHECK_THROWS(MonomialMap(fp(5, 1), {0, 0}));
  (void)f5;
}

TEST_CASE("monomial evaluation matches repeated multiplication") {
  testgen::Rng rng(13);
  const auto qq = GroundRing::rationals();
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = rng.range(1, 3);
    std::vector<unsigned> exps(n);
    unsigned total = 0;
    for (auto& e : exps) total += e = static_cast<unsigned>(rng.range(0, 3));
    if (total == 0) exps[0] = 1;
    const auto a = testgen::rational(rng, 5);
    std::vector<Scalar> coords;
    Rational expect = a;
    for (std::size_t i = 0; i < n; ++i) {
      const auto x = testgen::rational(rng, 4);
      coords.push_back(Scalar::from_rational(x));
      for (unsigned k = 0; k < exps[i]; ++k) expect *= x;
    }
    CHECK(eval_monomial(MonomialMap(Scalar::from_rational(a), exps), Vector(qq, coords)).rational() == expect);
  }
}

TEST_CASE("eval_poly examples") {
  const auto f5 = GroundRing::prime_field(5);
  const auto qq = GroundRing::rationals();
  const PolynomialMap zero_at_zero(
      {{MonomialMap(q(1), {2}), Vector(qq, {q(3), q(-1)})}});
  CHECK(eval_poly(zero_at_zero, Vector(q(0))).is_zero());

  const PolynomialMap phi({{MonomialMap(fp(5, 1), {1}), Vector::basis(f5, 2, 0)},
                           {MonomialMap(fp(5, 1), {2}), Vector::basis(f5, 2, 1)}});
  CHECK(eval_poly(phi, Vector(fp(5, 2))) == Vector(f5, {fp(5, 2), fp(5, 4)}));

  const auto sq = PolynomialMap::parse(qq, 1, 1, "x1^2");
  CHECK(eval_poly(sq, Vector(q(3, 2))) == Vector(q(9, 4)));

  const auto parsed = PolynomialMap::parse(f5, 1, 2, "x1*(1,0) + x1^2*(0,1)");
  CHECK(eval_poly(parsed, Vector(fp(5, 2))) == Vector(f5, {fp(5, 2), fp(5, 4)}));
  CHECK(PolynomialMap::parse(qq, 2, 1, "3/2*x1*x2^2").to_string() == "3/2*x1*x2^2");
  CHECK_THROWS(PolynomialMap::parse(qq, 1, 2, "x1"));
  CHECK_THROWS(PolynomialMap::parse(qq, 1, 1, "x2"));
  CHECK_THROWS(PolynomialMap::parse(qq, 1, 1, "5"));
}

TEST_CASE("eval_poly is the sum of scaled targets") {
  testgen::Rng rng(14);
  const auto f7 = GroundRing::prime_field(7);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t terms = rng.range(1, 3);
    std::vector<PolynomialMap::Term> ts;
    for (std::size_t i = 0; i < terms; ++i)
      ts.push_back({MonomialMap(fp(7, rng.range(0, 6)), {static_cast<unsigned>(rng.range(1, 4))}),
                    Vector(f7, {fp(7, rng.range(0, 6)), fp(7, rng.range(0, 6))})});
    const PolynomialMap phi(ts);
    const std::int64_t u = rng.range(0, 6);
    std::int64_t e0 = 0, e1 = 0;
    for (const auto& t : ts) {
      std::int64_t v = static_cast<std::int64_t>(t.monomial.coefficient().residue());
      for (unsigned k = 0; k < t.monomial.degree(); ++k) v = v * u % 7;
      e0 = (e0 + v * static_cast<std::int64_t>(t.target[0].residue())) % 7;
      e1 = (e1 + v * static_cast<std::int64_t>(t.target[1].residue())) % 7;
    }
    CHECK(eval_poly(phi, Vector(fp(7, u))) == Vector(f7, {fp(7, e0), fp(7, e1)}));
  }
}

TEST_CASE("monomial_product reduces to eval_monomial on equal factors") {
  const auto qq = GroundRing::rationals();
  const MonomialMap m(q(2), {2, 1});
  const Vector u(qq, {q(1, 2), q(3)});
  std::vector<Vector> same(3, u);
  CHECK(monomial_product(m, same) == eval_monomial(m, u));
  // factors 1 and 2 read x1, factor 3 reads x2
  std::vector<Vector> mixed{Vector(qq, {q(2), q(100)}), Vector(qq, {q(5), q(100)}), Vector(qq, {q(100), q(7)})};
  CHECK(monomial_product(m, mixed) == q(2 * 2 * 5 * 7));
  CHECK(m.coordinate_of_factor(0) == 0);
  CHECK(m.coordinate_of_factor(1) == 0);
  CHECK(m.coordinate_of_factor(2) == 1);
  CHECK(m.partial_degrees() == std::vector<unsigned>{0, 2, 3});
}

TEST_CASE("telescope_check examples") {
  const auto f5 = GroundRing::prime_field(5);
  const MonomialMap m2(fp(5, 3), {2});
  for (int g = 0; g < 5; ++g)
    for (int a = 0; a < 5; ++a)
      for (int b = 0; b < 5; ++b) {
        std::vector<Vector> alphas{Vector(fp(5, a)), Vector(fp(5, b))};
        CHECK(telescope_check(m2, Vector(fp(5, g)), alphas));
      }
  std::vector<Vector> one{Vector(q(-8, 7))};
  CHECK(telescope_check(MonomialMap(q(1), {1}), Vector(q(5, 3)), one));
  CHECK_THROWS_AS(telescope_check(m2, Vector(fp(5, 1)), one), std::invalid_argument);
  (void)f5;
}

TEST_CASE("telescope_check on random F_7 inputs of degree 3") {
  testgen::Rng rng(15);
  const auto f7 = GroundRing::prime_field(7);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = rng.range(1, 3);
    std::vector<unsigned> exps(n, 0);
    for (int k = 0; k < 3; ++k) ++exps[rng.range(0, n - 1)];
    const MonomialMap m(fp(7, rng.range(1, 6)), exps);
    auto vec = [&] {
      std::vector<Scalar> c;
      for (std::size_t i = 0; i < n; ++i) c.push_back(fp(7, rng.range(0, 6)));
      return Vector(f7, c);
    };
    std::vector<Vector> alphas{vec(), vec(), vec()};
    CHECK(telescope_check(m, vec(), alphas));
  }
}

TEST_CASE("window_enumerate examples") {
  CHECK(rendered(window_enumerate(WindowSpec::full(GroundRing::prime_field(5)))) ==
        std::vector<std::string>{"0", "1", "2", "3", "4"});
  CHECK(rendered(window_enumerate(WindowSpec::rationals(1, 2))) ==
        std::vector<std::string>{"-1", "-1/2", "0", "1/2", "1"});
  CHECK(rendered(window_enumerate(WindowSpec::polynomials(2, 2))) == std::vector<std::string>{"0", "1", "t", "t+1"});
  CHECK_THROWS(window_enumerate(WindowSpec::rationals(-1, 2)));
  CHECK(WindowSpec::parse(GroundRing::rationals(), "A=3,B=2").numerator_bound == 3);
  CHECK(WindowSpec::parse(GroundRing::poly_ring(3), "D=4").degree_bound == 4);
}

TEST_CASE("rational windows hold each reduced fraction once, sorted") {
  for (std::int64_t a = 0; a <= 6; ++a)
    for (std::int64_t b = 1; b <= 6; ++b) {
      std::set<std::pair<std::int64_t, std::int64_t>> oracle;
      for (std::int64_t n = -a; n <= a; ++n)
        for (std::int64_t d = 1; d <= b; ++d) {
          const std::int64_t g = std::gcd(n, d);
          oracle.emplace(n / g, d / g);
        }
      const auto w = window_enumerate(WindowSpec::rationals(a, b));
      CHECK(w.size() == oracle.size());
      CHECK(std::is_sorted(w.begin(), w.end()));
      CHECK(std::adjacent_find(w.begin(), w.end()) == w.end());
    }
}

TEST_CASE("window products are lexicographic") {
  const auto w = window_enumerate(WindowSpec::polynomials(3, 1), 2);
  CHECK(w.size() == 9);
  CHECK(std::is_sorted(w.begin(), w.end()));
  CHECK(window_enumerate(WindowSpec::polynomials(2, 3)).size() == 8);
  CHECK(window_enumerate(WindowSpec::full(GroundRing::prime_field(3)), 3).size() == 27);
}

TEST_CASE("vector parsing and rendering round-trip") {
  const auto qq = GroundRing::rationals();
  const auto v = Vector::parse(qq, 3, "(1/2,-3,0)");
  CHECK(v.to_string() == "(1/2,-3,0)");
  CHECK(Vector::parse(qq, 1, "7/3").to_string() == "7/3");
  CHECK_THROWS(Vector::parse(qq, 2, "(1,2,3)"));
  CHECK_THROWS(Vector(qq, {}));
}
