#include <doctest.h>

#include "polarcrit/problem.hpp"
#include "support.hpp"

using namespace polarcrit;
using namespace polarcrit::testing;

namespace {

using FP = PrimeField;

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

// Critical points of G = g o chart on affine space, where the chart is a
// polynomial isomorphism onto V. Returns (quotient dimension, distinct).
std::pair<std::size_t, std::size_t> chart_counts(const Poly<FP>& g, const std::vector<Poly<FP>>& chart) {
  auto G = compose(g, chart);
  std::vector<Poly<FP>> grad;
  for (std::size_t j = 0; j < G.ring()->nvars(); ++j) grad.push_back(partial_derivative(G, j));
  auto gb = buchberger(grad);
  auto total = quotient_dimension(gb);
  REQUIRE(total.has_value());
  auto distinct = quotient_dimension(buchberger(radical_generators(gb)));
  REQUIRE(distinct.has_value());
  return {*total, *distinct};
}

std::vector<Poly<FP>> cubic_objective_terms(const RingPtr<FP>& R) {
  std::vector<Poly<FP>> out;
  for (std::size_t i = 0; i < R->nvars(); ++i) out.push_back(Poly<FP>::variable(R, i).pow(3));
  return out;
}

Poly<FP> weighted_cubic(const RingPtr<FP>& R) {
  Poly<FP> g(R);
  auto terms = cubic_objective_terms(R);
  for (std::size_t i = 0; i < terms.size(); ++i) g = g + terms[i].scaled(R->field().from_int(static_cast<long>(i + 1)));
  return g;
}

VarietySpec<FP> problem_variety(const std::string& name, std::optional<Poly<FP>>* objective = nullptr) {
  auto pf = read_problem_file(std::string(POLARCRIT_DATA_DIR) + "/" + name);
  auto tp = instantiate<FP>(pf, FP(kDefaultPrime));
  if (objective) *objective = tp.objective;
  return tp.variety;
}

}  // namespace

TEST_CASE("circle: both routes give the six critical points") {
  auto R = ring_p({"x", "y"});
  auto v = circle(R);
  auto g = P(R, "x^3+2*y^3");
  auto a1 = run_algorithm1(v, g, 1);
  auto dr = crit_points_direct(v, g, 1);
  CHECK(a1.count == 6);
  CHECK(dr.count == 6);
  CHECK(dr.multiplicity == 6);
  CHECK(a1.hypotheses.smooth_sampled);
  auto eqs = crit_ideal(v, g, empty_directions(R->field(), 2), 0);
  CHECK(check_parametrization(a1.parametrization, eqs).ok());
  CHECK(check_parametrization(dr.parametrization, eqs).ok());
  CHECK(change_primitive_element(a1.parametrization, dr.parametrization.lambda).q == dr.parametrization.q);
  CHECK(same_point_set(a1.parametrization, dr.parametrization, 1));

  // With u = x + 2y, q is the product over the six values.
  auto withu = run_algorithm1(v, g, 1, std::vector<FP::Elem>{1, 2});
  const FP& field = R->field();
  auto five_inv = field.inv(5);
  UPoly<FP> a(field, {field.from_int(-1), 0, 1}), b(field, {field.from_int(-4), 0, 1}),
      c(field, {field.neg(field.mul(16, five_inv)), 0, 1});
  CHECK(withu.parametrization.q == a * b * c);
}

TEST_CASE("sphere with a linear objective has two critical points") {
  auto R = ring_p({"x", "y", "z"});
  VarietySpec<FP> sphere{{P(R, "x^2+y^2+z^2-1")}, 2, true};
  auto g = P(R, "3*x-5*y+7*z");
  CHECK(crit_points_direct(sphere, g, 2).count == 2);
  CHECK(run_algorithm1(sphere, g, 2).count == 2);
}

TEST_CASE("circle with g = x^2 has four critical points") {
  auto R = ring_p({"x", "y"});
  auto g = P(R, "x^2");
  CHECK(crit_ideal(circle(R), g, empty_directions(R->field(), 2), 0)[1] == P(R, "-4*x*y"));
  CHECK(crit_points_direct(circle(R), g, 3).count == 4);
  CHECK(run_algorithm1(circle(R), g, 3).count == 4);
}

TEST_CASE("polar_var examples") {
  auto R = ring_p({"x", "y"});
  const FP& field = R->field();
  auto L = build_lifting_fiber(circle(R), 5);
  auto none = empty_directions(field, 2);

  auto E = extend_fiber(L, P(R, "x^3+2*y^3"));
  auto ext = extend_system(circle(R), P(R, "x^3+2*y^3"), none);
  CHECK(polar_var(1, E, ext.a_prime, 7).degree() == 6);

  DirectionSequence<FP> zero{Matrix<FP>(field, 1, 3), 0};
  CHECK(code_of<FP>([&] { polar_var(1, E, zero, 7); }) == ErrorCode::Fail);

  auto El = extend_fiber(L, P(R, "x"));
  auto extl = extend_system(circle(R), P(R, "x"), none);
  CHECK(polar_var(1, El, extl.a_prime, 7).degree() == 2);
}

TEST_CASE("crit_points rejects linear objectives") {
  auto R = ring_p({"x", "y"});
  auto L = build_lifting_fiber(circle(R), 5);
  auto none = empty_directions(R->field(), 2);
  CHECK(code_of<FP>([&] { crit_points(L, P(R, "x+y"), none, std::nullopt, 1); }) == ErrorCode::InvalidArgument);
  CHECK(crit_points(L, P(R, "x^3+2*y^3"), none, std::nullopt, 1).count == 6);
}

TEST_CASE("cusp: the singular point is reported") {
  std::optional<Poly<FP>> g;
  auto v = problem_variety("cusp.txt", &g);
  REQUIRE(g.has_value());
  // (t^2, t^3): d/dt (t^4 + t^6) = 2 t^3 (2 + 3 t^2), plus the cusp itself.
  auto r = crit_points_direct(v, *g, 1);
  CHECK(r.count == 3);
  CHECK_FALSE(r.hypotheses.smooth_sampled);
  CHECK_FALSE(r.hypotheses.warnings.empty());
  auto h = check_hypotheses(v, *g, 1);
  CHECK(h.finite);
  CHECK_FALSE(h.smooth_sampled);
  CHECK_FALSE(h.all_pass());
}

TEST_CASE("constant objective is not finite") {
  auto R = ring_p({"x", "y"});
  auto g = P(R, "5");
  CHECK(code_of<FP>([&] { run_algorithm1(circle(R), g, 1); }) == ErrorCode::NotFinite);
  CHECK(code_of<FP>([&] { crit_points_direct(circle(R), g, 1); }) == ErrorCode::NotFinite);
  auto h = check_hypotheses(circle(R), g, 1);
  CHECK_FALSE(h.finite);
  CHECK_FALSE(h.all_pass());
}

TEST_CASE("verify_bound examples") {
  auto R = ring_p({"x", "y"});
  auto rep = verify_bound(circle(R), P(R, "x^3+2*y^3"), 1);
  CHECK(rep.delta == DeltaVector{{2, 2}});
  CHECK(rep.count == 6);
  CHECK(rep.bound == 6);
  CHECK(rep.holds);
  CHECK(rep.tight);
  auto lin = verify_bound(circle(R), P(R, "2*x-y"), 1);
  CHECK(lin.count == 2);
  CHECK(lin.bound == 2);
  CHECK(lin.tight);
}

TEST_CASE("linear objectives count delta_1") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    auto inst = random_instance(4000 + seed, static_cast<int>(seed % 3));
    auto R = inst.variety.ring();
    Rng rng(seed);
    std::vector<FP::Elem> c;
    for (std::size_t k = 0; k < R->nvars(); ++k) c.push_back(R->field().from_int(draw_nonzero(rng, 997)));
    auto g = linear_form(R, c);
    auto delta = delta_of_variety(inst.variety, seed);
    auto direct = crit_points_direct(inst.variety, g, seed);
    REQUIRE(direct.multiplicity == delta.delta(1));
    REQUIRE(run_algorithm1(inst.variety, g, seed).count == direct.count);
  }
}

TEST_CASE("fixed seed gives identical results") {
  auto inst = random_instance(77, 2);
  auto a = run_algorithm1(inst.variety, inst.objective, 9);
  auto b = run_algorithm1(inst.variety, inst.objective, 9);
  CHECK(a.parametrization == b.parametrization);
  auto c = crit_points_direct(inst.variety, inst.objective, 9);
  auto d = crit_points_direct(inst.variety, inst.objective, 9);
  CHECK(c.parametrization == d.parametrization);
}

TEST_CASE("routes agree on random instances") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto inst = random_instance(6000 + seed, static_cast<int>(seed % 3));
    auto h = check_hypotheses(inst.variety, inst.objective, seed);
    if (!h.all_pass()) continue;
    auto a1 = run_algorithm1(inst.variety, inst.objective, seed);
    auto dr = crit_points_direct(inst.variety, inst.objective, seed);
    REQUIRE(a1.count == dr.count);
    REQUIRE(change_primitive_element(a1.parametrization, dr.parametrization.lambda).q == dr.parametrization.q);
  }
}

TEST_CASE("rank-one 2x3 matrices: chart oracle") {
  std::optional<Poly<FP>> g;
  auto v = problem_variety("determinantal_2x3.txt", &g);
  REQUIRE(g.has_value());
  auto C = ring_p({"x1", "x2", "x3"});
  std::vector<Poly<FP>> chart{P(C, "x1"), P(C, "x2"), P(C, "x3"), P(C, "x1*x3"), P(C, "x2*x3")};
  for (const auto& f : v.generators) REQUIRE(compose(f, chart).is_zero());
  auto [total, distinct] = chart_counts(*g, chart);
  // grad G = (3 x1^2 (1 + 4 x3^3), 3 x2^2 (2 + 5 x3^3), 3 x3^2 (3 + 4 x1^3 + 5 x2^3)):
  // the origin with multiplicity 8, then 9 + 9 double points.
  CHECK(total == 44);
  CHECK(distinct == 19);
  auto r = crit_points_direct(v, *g, 1);
  CHECK(r.multiplicity == total);
  CHECK(r.count == distinct);
  CHECK(r.count_only);
  CHECK_FALSE(r.hypotheses.warnings.empty());
}

TEST_CASE("rank-one 3x3 matrices: chart oracle for the weighted cubic") {
  auto v = problem_variety("determinantal.txt");
  auto R = v.ring();
  auto C = ring_p({"x1", "x2", "x3", "x6"});
  std::vector<Poly<FP>> chart{P(C, "x1"),    P(C, "x2"), P(C, "x3"),    P(C, "x1*x3"),
                              P(C, "x2*x3"), P(C, "x6"), P(C, "x1*x6"), P(C, "x2*x6")};
  for (const auto& f : v.generators) REQUIRE(compose(f, chart).is_zero());
  auto g = weighted_cubic(R);
  auto [total, distinct] = chart_counts(g, chart);
  CHECK(total == 241);
  CHECK(distinct == 118);
  auto r = crit_points_direct(v, g, 1);
  CHECK(r.multiplicity == 241);
  CHECK(r.count == 118);
}
