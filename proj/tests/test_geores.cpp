#include <doctest.h>

#include "support.hpp"

using namespace polarcrit;
using namespace polarcrit::testing;

namespace {

using FP = PrimeField;

template <class F>
UPoly<F> U(const F& field, std::vector<long> c) {
  std::vector<typename F::Elem> e;
  for (long x : c) e.push_back(field.from_int(x));
  return UPoly<F>(field, e);
}

template <class F>
std::vector<Poly<F>> circle_crit(const RingPtr<F>& R) {
  return {P(R, "x^2+y^2-1"), P(R, "12*x*y^2-6*x^2*y")};
}

template <class F>
ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const AlgebraError& e) {
    return e.code();
  }
  FAIL("no AlgebraError thrown");
  return ErrorCode::Fail;
}

LiftingFiber<FP> circle_fiber_at_zero() {
  auto R = ring_p({"x", "y"});
  return lifting_fiber_at(circle(R), Matrix<FP>::identity(R->field(), 2), {R->field().zero()}, 1);
}

}  // namespace

TEST_CASE("solve_zero_dim examples") {
  Rationals Q;
  auto R = ring_q({"x", "y"});
  auto p1 = solve_zero_dim(buchberger(std::vector{P(R, "x-3"), P(R, "y+1")}), {1, 0});
  CHECK(p1.q == U(Q, {-3, 1}));
  CHECK(p1.v == std::vector{U(Q, {3}), U(Q, {-1})});

  auto p2 = solve_zero_dim(buchberger(std::vector{P(R, "x^2-1"), P(R, "y")}), {1, 0});
  CHECK(p2.q == U(Q, {-1, 0, 1}));
  CHECK(p2.v == std::vector{U(Q, {2}), UPoly<Rationals>(Q)});
  CHECK(check_parametrization(p2, {P(R, "x^2-1"), P(R, "y")}).ok());

  auto p3 = solve_zero_dim(buchberger(circle_crit(R)), {1, 2});
  UPoly<Rationals> a(Q, {-1, 0, 1}), b(Q, {-4, 0, 1}), c(Q, {mpq_class(-16, 5), 0, 1});
  CHECK(p3.q == a * b * c);
  CHECK(check_parametrization(p3, circle_crit(R)).ok());

  CHECK(code_of<Rationals>([&] { solve_zero_dim(buchberger(circle_crit(R)), {1, 0}); }) == ErrorCode::NotSeparating);
  auto R1 = ring_q({"x"});
  CHECK(code_of<Rationals>([&] { solve_zero_dim(buchberger(std::vector{P(R1, "x^2")}), {1}); }) ==
        ErrorCode::NotRadical);
  CHECK(code_of<Rationals>([&] { solve_zero_dim(buchberger(std::vector{P(R, "y")}), {1, 0}); }) ==
        ErrorCode::NotFinite);
}

TEST_CASE("find_primitive_element examples") {
  auto R = ring_p({"x", "y"});
  auto gb = buchberger(circle_crit(R));
  auto lambda = find_primitive_element(gb, 3);
  // x repeats the value 0 at (0, 1) and (0, -1), y at (1, 0) and (-1, 0).
  CHECK_FALSE(lambda == std::vector<FP::Elem>{1, 0});
  CHECK_FALSE(lambda == std::vector<FP::Elem>{0, 1});
  CHECK(solve_zero_dim(gb, lambda).degree() == 6);
  CHECK(solve_zero_dim(gb, {1, 2}).degree() == 6);

  auto point = buchberger(std::vector{P(R, "x-3"), P(R, "y+1")});
  CHECK(find_primitive_element(point, 3) == std::vector<FP::Elem>{1, 0});

  auto R1 = ring_p({"x"});
  CHECK(code_of<FP>([&] { find_primitive_element(buchberger(std::vector{P(R1, "x^2")}), 3); }) ==
        ErrorCode::NotRadical);
}

TEST_CASE("change_primitive_element examples") {
  auto R = ring_p({"x", "y"});
  const FP& field = R->field();
  auto p = solve_zero_dim(buchberger(circle_crit(R)), {1, 2});
  CHECK(change_primitive_element(p, p.lambda) == p);

  auto swapped = change_primitive_element(p, {2, 1});
  CHECK(swapped.lambda == std::vector<FP::Elem>{2, 1});
  CHECK(same_point_set(swapped, solve_zero_dim(buchberger(circle_crit(R)), {2, 1}), 5));
  CHECK(same_point_set(p, change_primitive_element(swapped, {1, 2}), 6));
  CHECK(check_parametrization(swapped, circle_crit(R)).ok());

  auto single = solve_zero_dim(buchberger(std::vector{P(R, "x-3"), P(R, "y+1")}), {1, 0});
  // 5*3 + 7*(-1) = 8.
  CHECK(change_primitive_element(single, {5, 7}).q == U(field, {-8, 1}));

  CHECK(code_of<FP>([&] { change_primitive_element(p, {1, 0}); }) == ErrorCode::NotSeparating);
}

TEST_CASE("check_radical examples") {
  auto R1 = ring_q({"x"});
  CHECK(check_radical(buchberger(std::vector{P(R1, "x^2-1")})));
  CHECK_FALSE(check_radical(buchberger(std::vector{P(R1, "x^2")})));
  auto R = ring_q({"x", "y"});
  CHECK(check_radical(buchberger(circle_crit(R))));
  // Radical although no coordinate separates: {(0,0), (1,1), (0,1), (1,0)}.
  CHECK(check_radical(buchberger(std::vector{P(R, "x^2-x"), P(R, "y^2-y")})));
  CHECK_FALSE(check_radical(buchberger(std::vector{P(R, "x^2"), P(R, "y-x")})));
  auto rad = radical_generators(buchberger(std::vector{P(R, "x^2"), P(R, "y^3")}));
  CHECK(quotient_dimension(buchberger(rad)) == 1u);
  CHECK_THROWS_AS(check_radical(buchberger(std::vector{P(R, "y")})), AlgebraError);
}

TEST_CASE("lifting fiber examples") {
  auto L = circle_fiber_at_zero();
  const FP& field = L.ring->field();
  CHECK(L.Q == U(field, {-1, 0, 1}));
  CHECK(L.v == std::vector{U(field, {0, 1})});
  CHECK(L.u == std::vector<FP::Elem>{0, 1});
  CHECK(validate_fiber(L).ok());

  Rationals Q;
  auto Rq = ring_q({"x", "y"});
  auto Lq = lifting_fiber_at(circle(Rq), Matrix<Rationals>::identity(Q, 2), {2}, 1);
  CHECK(Lq.Q == U(Q, {3, 0, 1}));
  CHECK(validate_fiber(Lq).ok());

  auto R = ring_p({"x", "y"});
  VarietySpec<FP> line{{P(R, "x-y")}, 1, true};
  auto Ll = build_lifting_fiber(line, 4);
  CHECK(Ll.Q.degree() == 1);
  CHECK(validate_fiber(Ll).ok());

  VarietySpec<FP> rings{{P(R, "x^2+y^2-1"), P(R, "x^2+y^2-4")}, 1, true};
  CHECK(code_of<FP>([&] { build_lifting_fiber(rings, 1); }) == ErrorCode::EmptyFiber);
}

TEST_CASE("extend_fiber examples") {
  auto L = circle_fiber_at_zero();
  const FP& field = L.ring->field();
  auto R = L.ring;
  auto E = extend_fiber(L, P(R, "x^3+2*y^3"));
  CHECK(E.nvars() == 3);
  CHECK(E.z == L.z);
  CHECK(E.Q == L.Q);
  REQUIRE(E.v.size() == 2);
  CHECK(E.v.back() == U(field, {0, 2}));
  CHECK(E.u == std::vector<FP::Elem>{0, 1, 0});
  CHECK(E.M(2, 2) == 1u);
  CHECK(E.M(0, 2) == 0u);
  CHECK(E.M(2, 0) == 0u);
  CHECK(validate_fiber(E).ok());

  auto C = extend_fiber(L, P(R, "7"));
  CHECK(C.v.back() == U(field, {7}));
  CHECK(validate_fiber(C).ok());
}

TEST_CASE("validate_fiber detects tampering") {
  auto L = circle_fiber_at_zero();
  const FP& field = L.ring->field();
  REQUIRE(validate_fiber(L).ok());

  auto t = L;
  t.v[0] = t.v[0] + U(field, {1});
  CHECK_FALSE(validate_fiber(t).ok());

  t = L;
  t.Q = U(field, {0, 0, 1});
  auto rep = validate_fiber(t);
  CHECK_FALSE(rep.ok());
  CHECK_FALSE(rep.q_squarefree);

  t = L;
  t.z[0] = field.from_int(5);
  CHECK_FALSE(validate_fiber(t).ok());

  t = L;
  t.u = {1, 0};
  CHECK_FALSE(validate_fiber(t).ok());

  t = L;
  t.M = Matrix<FP>::from_rows(field, {{1, 1}, {1, 1}});
  CHECK_FALSE(validate_fiber(t).ok());

  t = L;
  t.lifting[0] = t.lifting[0] + Poly<FP>::constant(L.ring, field.one());
  CHECK_FALSE(validate_fiber(t).ok());

  t = L;
  t.equations[0] = t.equations[0] + Poly<FP>::constant(L.ring, field.one());
  CHECK_FALSE(validate_fiber(t).ok());

  t = L;
  t.v.push_back(U(field, {1}));
  CHECK_FALSE(validate_fiber(t).ok());
}

TEST_CASE("random plane-curve fibers validate and extend") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    auto inst = random_instance(9000 + seed, 0);
    auto L = build_lifting_fiber(inst.variety, seed);
    REQUIRE(validate_fiber(L).ok());
    auto E = extend_fiber(L, inst.objective);
    REQUIRE(validate_fiber(E).ok());
    // A generic vertical line meets the curve in deg f points.
    REQUIRE(L.Q.degree() == inst.variety.generators.front().total_degree());
  }
}

TEST_CASE("produced parametrizations satisfy the invariants") {
  int tested = 0;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    auto inst = random_instance(3000 + seed, static_cast<int>(seed % 3));
    auto R = inst.variety.ring();
    auto eqs = crit_ideal(inst.variety, inst.objective, empty_directions(R->field(), R->nvars()), 0);
    auto gb = buchberger(eqs);
    auto dim = quotient_dimension(gb);
    if (!dim || gb.is_unit() || !check_radical(gb)) continue;
    auto p = solve_zero_dim(gb, find_primitive_element(gb, seed));
    REQUIRE(p.degree() == *dim);
    REQUIRE(gcd(p.q, p.q.derivative()).degree() == 0);
    REQUIRE(check_parametrization(p, eqs).ok());
    if (*dim <= 12) {
      std::vector<FP::Elem> u;
      Rng rng(seed);
      for (std::size_t k = 0; k < R->nvars(); ++k) u.push_back(R->field().from_int(draw_nonzero(rng, 50)));
      auto moved = change_primitive_element(p, u);
      REQUIRE(check_parametrization(moved, eqs).ok());
      REQUIRE(same_point_set(moved, solve_zero_dim(gb, u), seed));
    }
    ++tested;
  }
  CHECK(tested >= 25);
}

TEST_CASE("point_at recovers rational points") {
  auto R = ring_q({"x", "y"});
  auto p = solve_zero_dim(buchberger(circle_crit(R)), {1, 2});
  // Root T = 2 of q is the point (0, 1).
  CHECK(point_at(p, mpq_class(2)) == std::vector<mpq_class>{0, 1});
  CHECK(point_at(p, mpq_class(-1)) == std::vector<mpq_class>{-1, 0});
}

TEST_CASE("Noether position probe") {
  auto R = ring_p({"x", "y"});
  const FP& field = R->field();
  auto I = Matrix<FP>::identity(field, 2);
  CHECK(in_noether_position(circle(R), I));
  // xy = 1 over the x-axis escapes to infinity at x = 0.
  VarietySpec<FP> hyperbola{{P(R, "x*y-1")}, 1, true};
  CHECK_FALSE(in_noether_position(hyperbola, I));
  CHECK(in_noether_position(hyperbola, Matrix<FP>::from_rows(field, {{1, 1}, {1, field.from_int(-1)}})));
  CHECK(build_lifting_fiber(hyperbola, 2).Q.degree() == 2);

  auto R8 = ring_p(xnames(8));
  VarietySpec<FP> det{parse_polys<FP>(determinantal_minors(), R8), 4, true};
  CHECK_FALSE(in_noether_position(det, Matrix<FP>::identity(field, 8)));
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    auto L = build_lifting_fiber(det, seed);
    CHECK(L.Q.degree() == 6);
    CHECK(validate_fiber(L).ok());
  }
}
