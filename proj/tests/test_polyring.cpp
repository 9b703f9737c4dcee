#include <doctest.h>

#include "support.hpp"

using namespace polarcrit;
using namespace polarcrit::testing;

namespace {

template <class F>
RingPtr<F> xyz(const F& field) {
  return make_ring(field, {"x", "y", "z"});
}

template <class F>
Poly<F> small_random(Rng& rng, const RingPtr<F>& ring) {
  return random_dense(rng, ring, static_cast<int>(draw_int(rng, 0, 3)), 20, 0.4);
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  PrimeField F;
  CHECK(F.modulus() == 2147483647u);
  CHECK(F.mul(F.from_int(-1), F.from_int(-1)) == 1u);
  for (long a : {1L, 2L, 12345L, -7L, 2147483646L}) CHECK(F.mul(F.from_int(a), F.inv(F.from_int(a))) == 1u);
  CHECK(F.from_rational(mpq_class(1, 2)) == F.inv(2));
  CHECK_THROWS_AS(PrimeField(15), AlgebraError);
  CHECK(is_prime(kSecondaryPrime));
}

TEST_CASE("rationals stay in lowest terms") {
  Rationals Q;
  auto a = Q.parse("6/4");
  CHECK(a.get_num() == 3);
  CHECK(a.get_den() == 2);
  CHECK(Q.parse("-3/6") == mpq_class(-1, 2));
  CHECK_THROWS(Q.parse("1/0"));
  CHECK_THROWS(Q.inv(Q.zero()));
}

TEST_CASE("parse_poly examples") {
  auto R = ring_q({"x", "y"});
  auto c = P(R, "x^2+y^2-1");
  CHECK(c.size() == 3);
  CHECK(c.total_degree() == 2);
  CHECK(P(R, "0").size() == 0);
  CHECK(P(R, "0").is_zero());
  auto R8 = ring_p(xnames(8));
  auto g = P(R8, "x1^3 + 2*x2^3");
  CHECK(g.size() == 2);
  CHECK(g.total_degree() == 3);
  CHECK(P(R, "(x+y)^2") == P(R, "x^2+2*x*y+y^2"));
  CHECK(P(R, "1/2*x - 3/4") == P(R, "x").scaled(mpq_class(1, 2)) - P(R, "3/4"));
  CHECK_THROWS_AS(P(R, "x/2"), ParseError);
}

TEST_CASE("parse errors carry positions") {
  auto R = ring_q({"x", "y"});
  CHECK_THROWS_AS(P(R, "x^2 + w"), ParseError);
  CHECK_THROWS_AS(P(R, "x^^2"), ParseError);
  CHECK_THROWS_AS(P(R, "2x"), ParseError);
  try {
    P(R, "x + + ");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() > 0);
  }
  // 1/p is not representable modulo p.
  auto Rp = ring_p({"x"}, 7);
  CHECK_THROWS_AS(P(Rp, "1/7*x"), AlgebraError);
}

TEST_CASE("partial derivatives") {
  auto R = ring_q({"x", "y"});
  CHECK(partial_derivative(P(R, "x^2+y^2-1"), 0) == P(R, "2*x"));
  CHECK(partial_derivative(P(R, "x^3+2*y^3"), 1) == P(R, "6*y^2"));
  CHECK(partial_derivative(P(R, "5"), 0).is_zero());
}

TEST_CASE("evaluate") {
  auto R = ring_q({"x", "y"});
  std::vector<mpq_class> p10{1, 0}, p01{0, 1}, p11{1, 1};
  CHECK(evaluate(P(R, "x^2+y^2-1"), std::span<const mpq_class>(p10)) == 0);
  CHECK(evaluate(P(R, "x^3+2*y^3"), std::span<const mpq_class>(p01)) == 2);
  CHECK(evaluate(P(R, "x^3+2*y^3"), std::span<const mpq_class>(p11)) == 3);
}

TEST_CASE("substitute and univariate composition") {
  auto R = ring_q({"x", "y"});
  auto T = ring_q({"T"});
  auto t = P(T, "T");
  CHECK(compose(P(R, "x^2+y^2-1"), {t, P(T, "0")}) == P(T, "T^2-1"));
  CHECK(compose(P(R, "x"), {P(T, "3"), P(T, "0")}) == P(T, "3"));
  CHECK(compose(P(R, "x*y"), {t, P(T, "T^2")}) == P(T, "T^3"));
  auto y_only = substitute(P(R, "x*y+x"), {{0, P(R, "y")}}, R);
  CHECK(y_only == P(R, "y^2+y"));
  CHECK_THROWS_AS(compose(P(R, "x*y"), {t, P(ring_q({"S"}), "S")}), AlgebraError);
}

TEST_CASE_TEMPLATE("ring axioms on random triples", F, Rationals, PrimeField) {
  auto R = xyz(F{});
  Rng rng(20261016);
  for (int k = 0; k < 1000; ++k) {
    auto a = small_random(rng, R), b = small_random(rng, R), c = small_random(rng, R);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a * b == b * a);
    REQUIRE((a - a).is_zero());
  }
}

TEST_CASE_TEMPLATE("format and parse round trip", F, Rationals, PrimeField) {
  auto R = xyz(F{});
  Rng rng(7);
  for (int k = 0; k < 300; ++k) {
    auto a = small_random(rng, R);
    if (std::is_same_v<F, Rationals>) a = a.scaled(R->field().parse("3/7"));
    REQUIRE(parse_poly<F>(to_string(a), R) == a);
  }
}

TEST_CASE_TEMPLATE("product rule", F, Rationals, PrimeField) {
  auto R = xyz(F{});
  Rng rng(11);
  for (int k = 0; k < 300; ++k) {
    auto a = small_random(rng, R), b = small_random(rng, R);
    for (std::size_t v = 0; v < 3; ++v) {
      REQUIRE(partial_derivative(a * b, v) == partial_derivative(a, v) * b + a * partial_derivative(b, v));
    }
  }
}

TEST_CASE_TEMPLATE("derivative lowers degree on terms with the variable", F, Rationals, PrimeField) {
  auto R = xyz(F{});
  auto p = parse_poly<F>("x^3*y + z^2 + 4", R);
  CHECK(partial_derivative(p, 0) == parse_poly<F>("3*x^2*y", R));
  CHECK(partial_derivative(p, 2).total_degree() == 1);
}

TEST_CASE_TEMPLATE("squarefree part properties", F, Rationals, PrimeField) {
  F field;
  Rng rng(3);
  auto rand_upoly = [&](int deg) {
    std::vector<typename F::Elem> c;
    for (int i = 0; i <= deg; ++i) c.push_back(field.from_int(draw_int(rng, -9, 9)));
    c.back() = field.one();
    return UPoly<F>(field, c);
  };
  for (int k = 0; k < 200; ++k) {
    auto a = rand_upoly(static_cast<int>(draw_int(rng, 1, 3)));
    auto b = rand_upoly(static_cast<int>(draw_int(rng, 1, 3)));
    auto p = a * a * b;
    auto s = squarefree_part(p);
    REQUIRE(gcd(s, s.derivative()).degree() == 0);
    // s^2 divides p * s.
    REQUIRE(rem(p * s, s * s).is_zero());
    // s divides p, and p divides a power of s: same roots.
    REQUIRE(rem(p, s).is_zero());
    UPoly<F> power = s;
    for (int e = 1; e < p.degree(); ++e) power = power * s;
    REQUIRE(rem(power, p).is_zero());
  }
}

TEST_CASE("univariate gcd and resultant") {
  Rationals Q;
  UPoly<Rationals> a(Q, {-1, 0, 1}), b(Q, {1, 1});
  CHECK(gcd(a, b) == UPoly<Rationals>(Q, {1, 1}));
  // res(T^2-1, T-2) = (1-2)(-1-2) = 3.
  CHECK(resultant(a, UPoly<Rationals>(Q, {-2, 1})) == 3);
  CHECK(resultant(a, b) == 0);
}

TEST_CASE("lex order is available for comparisons") {
  auto x = Monomial::variable(0), y2 = Monomial::variable(1, 2);
  CHECK(MonomialOrder::grevlex().less(x, y2));
  CHECK(MonomialOrder::lex().less(y2, x));
}
