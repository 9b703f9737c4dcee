#include "polarcrit/critpoints.hpp"

#include "polarcrit/random.hpp"

namespace polarcrit {

namespace {

template <class F>
RationalParametrization<F> empty_parametrization(const RingPtr<F>& ring, std::vector<typename F::Elem> lambda) {
  const F& field = ring->field();
  return {ring, std::move(lambda), UPoly<F>::constant(field, field.one()),
          std::vector<UPoly<F>>(ring->nvars(), UPoly<F>(field))};
}

template <class F>
std::vector<typename F::Elem> coordinate_form(const F& field, std::size_t n, std::size_t k) {
  std::vector<typename F::Elem> u(n, field.zero());
  u[k] = field.one();
  return u;
}

}  // namespace

template <class F>
RationalParametrization<F> polar_var(std::size_t d, const LiftingFiber<F>& L, const DirectionSequence<F>& a,
                                     std::uint64_t seed) {
  std::size_t n = L.nvars();
  if (d != L.dim) throw AlgebraError(ErrorCode::DimensionMismatch, "d differs from the fiber dimension");
  if (a.count() < 1 || a.width() != n) throw AlgebraError(ErrorCode::DimensionMismatch, "need a_1 of width n");
  // Minors of the full system: Z(H) may carry extra components meeting V
  // in positive dimension, where jac(H) drops rank.
  VarietySpec<F> variety{L.equations, d, true};
  std::vector<Poly<F>> gens = classical_polar_ideal(variety, a, 1);
  auto gb = std::make_shared<const GroebnerBasis<F>>(buchberger(gens));
  const F& field = L.ring->field();
  if (gb->is_unit()) return empty_parametrization(L.ring, coordinate_form(field, n, 0));
  if (!quotient_dimension(*gb)) throw AlgebraError(ErrorCode::Fail, "polar variety is not zero-dimensional");
  Quotient<F> quotient(gb);
  if (!check_radical(quotient)) throw AlgebraError(ErrorCode::Fail, "polar variety ideal is not radical");
  return solve_zero_dim(quotient, find_primitive_element(quotient, seed));
}

namespace {

// Polar-variety steps after the degree check; also valid for linear g.
template <class F>
CritResult<F> graph_route(const LiftingFiber<F>& L, const Poly<F>& g, const DirectionSequence<F>& a,
                          const std::optional<std::vector<typename F::Elem>>& u_crit, std::uint64_t seed) {
  if (!g.ring()->same_as(*L.ring)) throw AlgebraError(ErrorCode::RingMismatch, "objective in another ring");
  const F& field = L.ring->field();
  std::size_t n = L.nvars(), d = L.dim;
  if (a.count() > d || (a.count() > 0 && a.width() != n)) {
    throw AlgebraError(ErrorCode::DimensionMismatch, "a must have at most d rows of width n");
  }

  LiftingFiber<F> extended = extend_fiber(L, g);
  VarietySpec<F> base{L.equations, d, true};
  DirectionSequence<F> a_prime = extend_system(base, g, a).a_prime;
  RationalParametrization<F> graph = polar_var(d, extended, a_prime, derive_seed(seed, 1));

  auto lifted = [&](const std::vector<typename F::Elem>& u) {
    std::vector<typename F::Elem> out = u;
    out.push_back(field.zero());
    return out;
  };
  std::vector<typename F::Elem> u;
  RationalParametrization<F> changed;
  if (u_crit) {
    if (u_crit->size() != n) throw AlgebraError(ErrorCode::DimensionMismatch, "u_crit length");
    u = *u_crit;
    changed = change_primitive_element(graph, lifted(u));
  } else {
    Rng rng(derive_seed(seed, 2));
    bool found = false;
    for (int attempt = 0; attempt < kPrimitiveAttempts && !found; ++attempt) {
      if (static_cast<std::size_t>(attempt) < n) {
        u = coordinate_form(field, n, attempt);
      } else {
        u.assign(n, field.zero());
        for (auto& c : u) c = field.from_int(draw_int(rng, -kPrimitiveBound, kPrimitiveBound));
      }
      try {
        changed = change_primitive_element(graph, lifted(u));
        found = true;
      } catch (const AlgebraError& e) {
        if (e.code() != ErrorCode::NotSeparating) throw;
      }
    }
    if (!found) throw AlgebraError(ErrorCode::Fail, "no separating form on the projected critical set");
  }

  CritResult<F> out;
  out.parametrization = {L.ring, u, changed.q, std::vector<UPoly<F>>(changed.v.begin(), changed.v.begin() + n)};
  out.count = out.parametrization.degree();
  out.multiplicity = out.count;
  out.hypotheses.finite = true;
  out.hypotheses.radical = true;
  out.hypotheses.count = out.count;
  out.hypotheses.multiplicity = out.count;
  out.hypotheses.smooth_sampled = smooth_at(base, out.parametrization);
  if (!out.hypotheses.smooth_sampled) out.hypotheses.warnings.push_back("jacobian rank drops at a critical point");
  return out;
}

}  // namespace

template <class F>
CritResult<F> crit_points(const LiftingFiber<F>& L, const Poly<F>& g, const DirectionSequence<F>& a,
                          const std::optional<std::vector<typename F::Elem>>& u_crit, std::uint64_t seed) {
  if (g.total_degree() < 2) throw AlgebraError(ErrorCode::InvalidArgument, "objective degree must be at least 2");
  return graph_route(L, g, a, u_crit, seed);
}

template <class F>
CritResult<F> run_algorithm1(const VarietySpec<F>& v, const Poly<F>& g, std::uint64_t seed,
                             const std::optional<std::vector<typename F::Elem>>& u_crit) {
  v.validate();
  if (g.total_degree() < 1 && v.dim > 0) {
    throw AlgebraError(ErrorCode::NotFinite, "constant objective: every point of V is critical");
  }
  for (int attempt = 0;; ++attempt) {
    std::uint64_t s = attempt == 0 ? seed : derive_seed(seed, 0xA1);
    try {
      LiftingFiber<F> L = build_lifting_fiber(v, derive_seed(s, 1));
      auto a = random_directions(derive_seed(s, 2), v.dim, v.nvars(), v.ring()->field());
      CritResult<F> r = graph_route(L, g, a, u_crit, derive_seed(s, 3));
      r.reseeded = attempt > 0;
      return r;
    } catch (const AlgebraError& e) {
      if (e.code() != ErrorCode::Fail || attempt > 0) throw;
    }
  }
}

template <class F>
bool smooth_at(const VarietySpec<F>& v, const RationalParametrization<F>& p) {
  if (p.q.degree() <= 0) return true;
  std::size_t c = v.codim();
  if (c == 0) return true;
  if (v.generators.size() < c) return false;
  std::vector<UPoly<F>> w = p.coordinates();
  UPoly<F> common = p.q;
  for (const auto& m : minors(jacobian(v.generators), c)) {
    if (m.is_zero()) continue;
    common = gcd(common, compose_mod(m, w, p.q));
    if (common.degree() == 0) return true;
  }
  return false;
}

template <class F>
CritResult<F> crit_points_direct(const VarietySpec<F>& v, const Poly<F>& g, std::uint64_t seed,
                                 const std::optional<std::vector<typename F::Elem>>& u_crit) {
  const F& field = v.ring()->field();
  std::size_t n = v.nvars();
  auto gens = crit_ideal(v, g, empty_directions(field, n), 0);
  auto gb = std::make_shared<const GroebnerBasis<F>>(buchberger(gens));
  CritResult<F> out;
  out.hypotheses.finite = true;
  if (gb->is_unit()) {
    out.parametrization = empty_parametrization(v.ring(), u_crit ? *u_crit : coordinate_form(field, n, 0));
    out.hypotheses.radical = true;
    out.hypotheses.smooth_sampled = true;
    return out;
  }
  if (!quotient_dimension(*gb)) throw AlgebraError(ErrorCode::NotFinite, "critical locus is not finite");
  auto quotient = std::make_unique<Quotient<F>>(gb);
  out.multiplicity = quotient->dimension();
  out.hypotheses.multiplicity = out.multiplicity;
  out.hypotheses.radical = check_radical(*quotient);
  if (!out.hypotheses.radical) {
    out.count_only = true;
    out.hypotheses.warnings.push_back("NOT_RADICAL: critical ideal has multiple points; reporting distinct points");
    gb = std::make_shared<const GroebnerBasis<F>>(buchberger(radical_generators(*gb)));
    quotient = std::make_unique<Quotient<F>>(gb);
  }
  auto lambda = u_crit ? *u_crit : find_primitive_element(*quotient, seed);
  out.parametrization = solve_zero_dim(*quotient, lambda);
  out.count = out.parametrization.degree();
  out.hypotheses.count = out.count;
  out.hypotheses.smooth_sampled = smooth_at(v, out.parametrization);
  if (!out.hypotheses.smooth_sampled) out.hypotheses.warnings.push_back("jacobian rank drops at a critical point");
  return out;
}

template <class F>
HypothesisReport check_hypotheses(const VarietySpec<F>& v, const Poly<F>& g, std::uint64_t seed) {
  HypothesisReport r;
  try {
    r = crit_points_direct(v, g, seed).hypotheses;
  } catch (const AlgebraError& e) {
    if (e.code() != ErrorCode::NotFinite && e.code() != ErrorCode::Degenerate) throw;
    r.finite = false;
    r.warnings.push_back(std::string(error_code_name(e.code())) + ": " + e.what());
  }
  return r;
}

template <class F>
BoundReport<F> verify_bound(const VarietySpec<F>& v, const Poly<F>& g, std::uint64_t seed) {
  if (g.total_degree() < 1) throw AlgebraError(ErrorCode::InvalidArgument, "objective must be nonconstant");
  BoundReport<F> r;
  r.objective_degree = static_cast<unsigned long>(g.total_degree());
  r.delta = delta_of_variety(v, seed);
  r.bound = theorem1_bound(r.delta, r.objective_degree, 0);
  CritResult<F> crit = crit_points_direct(v, g, seed);
  r.hypotheses = crit.hypotheses;
  r.count = crit.multiplicity;
  r.distinct = crit.count;
  mpz_class count(static_cast<unsigned long>(r.count));
  r.holds = count <= r.bound;
  r.tight = count == r.bound;
  return r;
}

#define POLARCRIT_INSTANTIATE_CRIT(F)                                                                          \
  template RationalParametrization<F> polar_var<F>(std::size_t, const LiftingFiber<F>&,                       \
                                                   const DirectionSequence<F>&, std::uint64_t);               \
  template CritResult<F> crit_points<F>(const LiftingFiber<F>&, const Poly<F>&, const DirectionSequence<F>&,  \
                                        const std::optional<std::vector<F::Elem>>&, std::uint64_t);           \
  template CritResult<F> run_algorithm1<F>(const VarietySpec<F>&, const Poly<F>&, std::uint64_t,              \
                                           const std::optional<std::vector<F::Elem>>&);                       \
  template CritResult<F> crit_points_direct<F>(const VarietySpec<F>&, const Poly<F>&, std::uint64_t,          \
                                               const std::optional<std::vector<F::Elem>>&);                   \
  template bool smooth_at<F>(const VarietySpec<F>&, const RationalParametrization<F>&);                       \
  template HypothesisReport check_hypotheses<F>(const VarietySpec<F>&, const Poly<F>&, std::uint64_t);        \
  template BoundReport<F> verify_bound<F>(const VarietySpec<F>&, const Poly<F>&, std::uint64_t);

POLARCRIT_INSTANTIATE_CRIT(Rationals)
POLARCRIT_INSTANTIATE_CRIT(PrimeField)

}  // namespace polarcrit
