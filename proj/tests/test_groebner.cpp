#include <doctest.h>

#include <set>

#include "support.hpp"

using namespace polarcrit;
using namespace polarcrit::testing;

namespace {

using FP = PrimeField;

template <class F>
std::vector<Poly<F>> circle_crit(const RingPtr<F>& R) {
  return {P(R, "x^2+y^2-1"), P(R, "12*x*y^2-6*x^2*y")};
}

// Random square system with n equations of degree <= 3; zero-dimensional
// with probability close to 1.
std::vector<Poly<FP>> random_square_system(Rng& rng, const RingPtr<FP>& R) {
  std::vector<Poly<FP>> out;
  for (std::size_t k = 0; k < R->nvars(); ++k) {
    int deg = static_cast<int>(draw_int(rng, 1, R->nvars() == 3 ? 2 : 3));
    out.push_back(random_dense(rng, R, deg, 50, 0.8));
  }
  return out;
}

}  // namespace

TEST_CASE("buchberger examples") {
  auto R1 = ring_q({"x"});
  auto gb1 = buchberger(std::vector{P(R1, "x^2-1")});
  CHECK(gb1.generators() == std::vector{P(R1, "x^2-1")});

  auto R = ring_q({"x", "y"});
  auto gb2 = buchberger(std::vector{P(R, "x^2+y^2-1"), P(R, "y")});
  CHECK(gb2.generators() == std::vector{P(R, "y"), P(R, "x^2-1")});

  auto gb3 = buchberger(std::vector{P(R, "x-3"), P(R, "y+1")});
  REQUIRE(gb3.generators().size() == 2);
  CHECK(normal_form(P(R, "x"), gb3) == P(R, "3"));
  CHECK(normal_form(P(R, "y"), gb3) == P(R, "-1"));

  CHECK(buchberger(std::vector{P(R, "x*y-1"), P(R, "x")}).is_unit());
}

TEST_CASE("quotient_dimension examples") {
  auto R1 = ring_q({"x"});
  CHECK(quotient_dimension(buchberger(std::vector{P(R1, "x^2-1")})) == 2u);
  auto R = ring_q({"x", "y"});
  CHECK(quotient_dimension(buchberger(circle_crit(R))) == 6u);
  CHECK_FALSE(quotient_dimension(buchberger(std::vector{P(R, "y")})).has_value());
  CHECK(quotient_dimension(buchberger(circle_crit(ring_p({"x", "y"})))) == 6u);
}

TEST_CASE("affine_dimension examples") {
  auto R = ring_q({"x", "y"});
  CHECK(affine_dimension(buchberger(std::vector{P(R, "x^2+y^2-1")})) == 1);
  CHECK(affine_dimension(buchberger(std::vector{P(R, "1")})) == -1);
  CHECK(affine_dimension(buchberger(std::vector{P(R, "x-3"), P(R, "y+1")})) == 0);
  auto R3 = ring_q({"x", "y", "z"});
  CHECK(affine_dimension(buchberger(std::vector{P(R3, "x*y"), P(R3, "x*z")})) == 2);
}

TEST_CASE("multiplication matrix examples") {
  Rationals Q;
  auto R1 = ring_q({"x"});
  auto m1 = multiplication_matrix(buchberger(std::vector{P(R1, "x^2-1")}), P(R1, "x"));
  CHECK(m1 == Matrix<Rationals>::from_rows(Q, {{0, 1}, {1, 0}}));

  auto R = ring_q({"x", "y"});
  auto m2 = multiplication_matrix(buchberger(std::vector{P(R, "x-3"), P(R, "y+1")}), P(R, "x+2*y"));
  CHECK(m2 == Matrix<Rationals>::from_rows(Q, {{1}}));

  // Values of x+2y at the six critical points: +-1, +-2, +-4/sqrt(5).
  auto m3 = multiplication_matrix(buchberger(circle_crit(R)), P(R, "x+2*y"));
  REQUIRE(m3.rows() == 6);
  UPoly<Rationals> a(Q, {-1, 0, 1}), b(Q, {-4, 0, 1}), c(Q, {mpq_class(-16, 5), 0, 1});
  CHECK(characteristic_polynomial(m3) == a * b * c);

  CHECK_THROWS_AS(multiplication_matrix(buchberger(std::vector{P(R, "y")}), P(R, "x")), AlgebraError);
}

TEST_CASE("normal_form examples") {
  auto R1 = ring_q({"x"});
  auto gb1 = buchberger(std::vector{P(R1, "x^2-1")});
  CHECK(normal_form(P(R1, "x^2"), gb1) == P(R1, "1"));
  CHECK(normal_form(P(R1, "(x^2-1)*(x^3+7)"), gb1).is_zero());
  auto R = ring_q({"x", "y"});
  CHECK(normal_form(P(R, "y"), buchberger(std::vector{P(R, "x^2-1")})) == P(R, "y"));
}

TEST_CASE("inputs reduce to zero and S-polynomials close") {
  auto R = ring_p({"x", "y", "z"});
  Rng rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Poly<FP>> gens;
    int count = static_cast<int>(draw_int(rng, 1, 4));
    for (int k = 0; k < count; ++k) gens.push_back(random_dense(rng, R, static_cast<int>(draw_int(rng, 1, 3)), 20, 0.5));
    auto gb = buchberger(gens);
    for (const auto& g : gens) REQUIRE(normal_form(g, gb).is_zero());
    // Reduced: no generator term is divisible by another leading monomial.
    const auto& lm = gb.leading_monomials();
    for (std::size_t i = 0; i < gb.generators().size(); ++i) {
      for (const auto& t : gb.generators()[i].terms()) {
        for (std::size_t j = 0; j < lm.size(); ++j) {
          if (j != i) REQUIRE_FALSE(lm[j].divides(t.mono));
        }
      }
    }
  }
}

TEST_CASE("quotient dimension does not depend on the order") {
  Rng rng(2026);
  int tested = 0;
  for (int trial = 0; tested < 100; ++trial) {
    std::size_t n = static_cast<std::size_t>(draw_int(rng, 1, 3));
    auto R = ring_p(xnames(n));
    auto gens = random_square_system(rng, R);
    auto g1 = buchberger(gens, MonomialOrder::grevlex());
    auto d1 = quotient_dimension(g1);
    if (!d1) continue;
    auto g2 = buchberger(gens, MonomialOrder::lex());
    REQUIRE(quotient_dimension(g2) == d1);
    ++tested;
  }
}

TEST_CASE("multiplication matrices commute") {
  auto R = ring_p({"x", "y", "z"});
  Rng rng(8);
  int tested = 0;
  for (int trial = 0; trial < 20; ++trial) {
    auto gb = std::make_shared<const GroebnerBasis<FP>>(buchberger(random_square_system(rng, R)));
    if (!quotient_dimension(*gb) || gb->is_unit()) continue;
    ++tested;
    Quotient<FP> quo(gb);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        REQUIRE(quo.variable_matrix(i) * quo.variable_matrix(j) == quo.variable_matrix(j) * quo.variable_matrix(i));
    auto f = random_dense(rng, R, 2);
    auto h = random_dense(rng, R, 1);
    REQUIRE(quo.multiplication(f) * quo.multiplication(h) == quo.multiplication(f * h));
  }
  CHECK(tested >= 15);
}

TEST_CASE("known point sets: dimension and eigenvalues") {
  auto R = ring_p({"x", "y"});
  const FP& field = R->field();
  Rng rng(123);
  for (int trial = 0; trial < 30; ++trial) {
    // Grid A x B from products of linear forms.
    std::size_t na = static_cast<std::size_t>(draw_int(rng, 1, 4));
    std::size_t nb = static_cast<std::size_t>(draw_int(rng, 1, 4));
    std::set<long> as, bs;
    while (as.size() < na) as.insert(draw_int(rng, -50, 50));
    while (bs.size() < nb) bs.insert(draw_int(rng, -50, 50));
    auto fx = Poly<FP>::constant(R, field.one()), fy = fx;
    for (long a : as) fx = fx * (Poly<FP>::variable(R, 0) - Poly<FP>::constant(R, field.from_int(a)));
    for (long b : bs) fy = fy * (Poly<FP>::variable(R, 1) - Poly<FP>::constant(R, field.from_int(b)));
    auto gb = buchberger(std::vector{fx, fy});
    REQUIRE(quotient_dimension(gb) == na * nb);
    // charpoly of x + 3y is the product of (T - (a + 3b)).
    UPoly<FP> expect = UPoly<FP>::constant(field, field.one());
    for (long a : as)
      for (long b : bs) expect = expect * UPoly<FP>(field, {field.from_int(-(a + 3 * b)), field.one()});
    REQUIRE(characteristic_polynomial(multiplication_matrix(gb, P(R, "x+3*y"))) == expect);
  }
}

TEST_CASE("parallel multiplication matrix matches the serial reference") {
  auto R = ring_p({"x", "y", "z"});
  Rng rng(77);
  int tested = 0;
  for (int trial = 0; trial < 15; ++trial) {
    auto gb = buchberger(random_square_system(rng, R));
    if (!quotient_dimension(gb) || gb.is_unit()) continue;
    auto form = random_dense(rng, R, 1);
    REQUIRE(multiplication_matrix(gb, form) == multiplication_matrix_serial(gb, form));
    ++tested;
  }
  CHECK(tested >= 10);
}
