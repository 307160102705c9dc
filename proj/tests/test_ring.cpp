#include <doctest.h>

#include "mfd/poly.hpp"
#include "test_util.hpp"

#include <map>

using namespace mfd;

namespace {

RingPtr qring() { return make_ring(Field::rationals(), {"x", "y"}); }

Poly P(const RingPtr& r, const std::string& s) { return Poly::parse(r, s); }

// Independent expansion of (x + y)^e over the integers via repeated naive
// convolution on exponent pairs, reduced into the target field at the end.
Poly binomial_power_oracle(const RingPtr& ring, unsigned e) {
  std::map<std::pair<unsigned, unsigned>, long long> acc{{{0, 0}, 1}};
  for (unsigned t = 0; t < e; ++t) {
    std::map<std::pair<unsigned, unsigned>, long long> next;
    for (const auto& [mono, c] : acc) {
      next[{mono.first + 1, mono.second}] += c;
      next[{mono.first, mono.second + 1}] += c;
    }
    acc = std::move(next);
  }
  Poly out(ring);
  for (const auto& [mono, c] : acc) {
    out.add_term(Mono{mono.first, mono.second}, ring->field.from_int(c));
  }
  return out;
}

}  // namespace

TEST_CASE("field arithmetic basics") {
  Field q = Field::rationals();
  CHECK(q.eq(q.add(q.from_int(2), q.from_int(3)), q.from_int(5)));
  CHECK(q.eq(q.inv(q.from_int(2)), q.from_rational(Rational(1) / 2)));

  Field f7 = Field::prime(7);
  CHECK(f7.eq(f7.mul(f7.from_int(3), f7.from_int(5)), f7.from_int(1)));
  CHECK(f7.eq(f7.inv(f7.from_int(3)), f7.from_int(5)));
  CHECK(f7.eq(f7.from_int(-1), f7.from_int(6)));
  CHECK_THROWS_AS((void)Field::prime(6), std::invalid_argument);
  CHECK_THROWS_AS((void)f7.inv(f7.zero()), std::domain_error);
}

TEST_CASE("polynomial arithmetic examples") {
  RingPtr r = qring();
  CHECK(P(r, "1 + x") * P(r, "1 - x") == P(r, "1 - x^2"));
  CHECK(P(r, "x*y") + Poly(r) == P(r, "x*y"));

  RingPtr r3 = make_ring(Field::prime(3), {"x", "y"});
  Poly cube = P(r3, "x + y") * P(r3, "x + y") * P(r3, "x + y");
  CHECK(cube == binomial_power_oracle(r3, 3));
  CHECK(cube == P(r3, "x^3 + y^3"));
}

TEST_CASE("units and constant terms") {
  RingPtr r = qring();
  CHECK(P(r, "1 + x").is_unit());
  CHECK_FALSE(P(r, "x^2*y").is_unit());
  Poly p = P(r, "3 + x + y");
  CHECK(p.is_unit());
  CHECK(r->field.eq(p.constant_term(), r->field.from_int(3)));
  CHECK_FALSE(Poly(r).is_unit());
}

TEST_CASE("series inverse examples") {
  RingPtr r = qring();
  TruncatedSeries geom = series_inverse(P(r, "1 - x"), 3);
  CHECK(geom.poly == P(r, "1 + x + x^2 + x^3"));

  TruncatedSeries half = series_inverse(P(r, "2"), 0);
  CHECK(half.poly == P(r, "1/2"));

  TruncatedSeries s = series_inverse(P(r, "1 + x + y"), 2);
  CHECK(s.poly == P(r, "1 - x - y + x^2 + 2*x*y + y^2"));
  Poly product = (P(r, "1 + x + y") * s.poly).truncated(2);
  CHECK(product == P(r, "1"));

  CHECK_THROWS_AS((void)series_inverse(P(r, "x"), 3), std::domain_error);
}

TEST_CASE("series inverse property on random units") {
  for (auto field : {Field::rationals(), Field::prime(7)}) {
    RingPtr r = make_ring(field, {"x", "y"});
    std::mt19937_64 rng(11);
    for (int t = 0; t < 25; ++t) {
      Poly u = testutil::random_unit(r, rng);
      const unsigned prec = 1 + static_cast<unsigned>(rng() % 5);
      TruncatedSeries inv = series_inverse(u, prec);
      CHECK((u * inv.poly).truncated(prec) == Poly::from_int(r, 1));
    }
  }
}

TEST_CASE("evaluation examples") {
  RingPtr r = qring();
  Field q = r->field;
  CHECK(q.eq(P(r, "x^2*y").eval({q.from_int(2), q.from_int(3)}), q.from_int(12)));

  std::mt19937_64 rng(5);
  Poly f = testutil::random_poly(r, rng);
  CHECK(q.eq(f.eval({q.zero(), q.zero()}), f.constant_term()));

  RingPtr r7 = make_ring(Field::prime(7), {"x", "y"});
  Field f7 = r7->field;
  CHECK(f7.eq(P(r7, "x^3 + y^4").eval({f7.from_int(1), f7.from_int(1)}), f7.from_int(2)));
}

TEST_CASE("ring axioms on random triples") {
  for (auto field : {Field::rationals(), Field::prime(13)}) {
    RingPtr r = make_ring(field, {"x", "y", "z"});
    std::mt19937_64 rng(field.is_prime_field() ? 101 : 202);
    for (int t = 0; t < 200; ++t) {
      Poly a = testutil::random_poly(r, rng, 2, 3);
      Poly b = testutil::random_poly(r, rng, 2, 3);
      Poly c = testutil::random_poly(r, rng, 2, 3);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a - a == Poly(r));
    }
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  for (auto field : {Field::rationals(), Field::prime(11)}) {
    RingPtr r = make_ring(field, {"x", "y"});
    std::mt19937_64 rng(7);
    for (int t = 0; t < 60; ++t) {
      Poly a = testutil::random_poly(r, rng);
      Poly b = testutil::random_poly(r, rng);
      std::vector<FVal> pt{testutil::random_scalar(field, rng),
                           testutil::random_scalar(field, rng)};
      CHECK(field.eq((a + b).eval(pt), field.add(a.eval(pt), b.eval(pt))));
      CHECK(field.eq((a * b).eval(pt), field.mul(a.eval(pt), b.eval(pt))));
    }
  }
}

TEST_CASE("parser round trip and errors") {
  RingPtr r = qring();
  std::mt19937_64 rng(42);
  for (int t = 0; t < 100; ++t) {
    Poly p = testutil::random_poly(r, rng, 4, 6);
    CHECK(Poly::parse(r, p.str()) == p);
  }
  CHECK(P(r, "x^2*y - 3*x").str() == "x^2*y - 3*x");
  CHECK(Poly(r).str() == "0");
  CHECK(P(r, "-1/2*x + y").str() == "-1/2*x + y");

  CHECK_THROWS_AS((void)Poly::parse(r, "x + w"), PolyParseError);
  CHECK_THROWS_AS((void)Poly::parse(r, "x + + y"), PolyParseError);
  CHECK_THROWS_AS((void)Poly::parse(r, ""), PolyParseError);
  try {
    (void)Poly::parse(r, "x * w");
    CHECK(false);
  } catch (const PolyParseError& e) {
    CHECK(e.column == 5);
  }
}

TEST_CASE("mixed rings are rejected") {
  RingPtr a = qring();
  RingPtr b = make_ring(Field::prime(5), {"x", "y"});
  RingPtr c = make_ring(Field::rationals(), {"x", "z"});
  CHECK_THROWS_AS((void)(P(a, "x") + P(b, "x")), std::invalid_argument);
  CHECK_THROWS_AS((void)(P(a, "x") * P(c, "x")), std::invalid_argument);
  // Equal content in different shared contexts still counts as the same ring.
  RingPtr a2 = make_ring(Field::rationals(), {"x", "y"});
  CHECK(P(a, "x + y") == P(a2, "x + y"));
}

TEST_CASE("truncated series respects the degree cap") {
  RingPtr r = qring();
  std::mt19937_64 rng(9);
  for (int t = 0; t < 20; ++t) {
    Poly u = testutil::random_unit(r, rng);
    TruncatedSeries s = series_inverse(u, 4);
    for (const auto& [mono, c] : s.poly.terms()) {
      CHECK(total_degree(mono) <= 4);
    }
  }
}
