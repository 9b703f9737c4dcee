#pragma once

// Shared fixtures and random instance generators for the test binaries.

#include <string>
#include <vector>

#include "polarcrit/critpoints.hpp"
#include "polarcrit/random.hpp"

namespace polarcrit::testing {

inline RingPtr<PrimeField> ring_p(std::vector<std::string> names, std::uint32_t p = kDefaultPrime) {
  return make_ring(PrimeField(p), std::move(names));
}

inline RingPtr<Rationals> ring_q(std::vector<std::string> names) { return make_ring(Rationals{}, std::move(names)); }

template <class F>
Poly<F> P(const RingPtr<F>& ring, const std::string& text) {
  return parse_poly<F>(text, ring);
}

template <class F>
VarietySpec<F> circle(const RingPtr<F>& ring) {
  return {{P(ring, "x^2+y^2-1")}, 1, true};
}

inline std::vector<std::string> determinantal_minors() {
  return {"x4-x1*x3", "x5-x2*x3", "x1*x5-x2*x4", "x7-x1*x6", "x8-x2*x6",
          "x1*x8-x2*x7", "x3*x7-x4*x6", "x3*x8-x5*x6", "x4*x8-x5*x7"};
}

inline std::vector<std::string> xnames(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

/// Dense polynomial of total degree exactly `degree` with coefficients in
/// {-bound..bound}; the top-degree part is kept nonzero.
template <class F>
Poly<F> random_dense(Rng& rng, const RingPtr<F>& ring, int degree, long bound = 9, double density = 1.0) {
  const F& field = ring->field();
  std::size_t n = ring->nvars();
  std::vector<Term<F>> terms;
  std::vector<int> e(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t k, int left) {
    if (k == n) {
      int deg = degree - left;
      bool keep = deg == degree || std::uniform_real_distribution<double>(0, 1)(rng) < density;
      if (keep) terms.push_back({Monomial::from_exponents(e), field.from_int(draw_int(rng, -bound, bound))});
      return;
    }
    for (int a = 0; a <= left; ++a) {
      e[k] = a;
      rec(k + 1, left - a);
    }
    e[k] = 0;
  };
  rec(0, degree);
  Poly<F> p = Poly<F>::from_terms(ring, std::move(terms));
  // Force a nonzero top-degree term.
  if (p.total_degree() < degree) p = p + Poly<F>::variable(ring, 0).pow(static_cast<unsigned>(degree));
  return p;
}

/// Random instances of the kinds used by the property tests: plane curves,
/// space surfaces and space curves cut by two surfaces.
struct RandomInstance {
  VarietySpec<PrimeField> variety;
  Poly<PrimeField> objective;
  std::string label;
};

/// True when the generators and the codim-order Jacobian minors have no
/// common zero.
template <class F>
bool variety_is_smooth(const VarietySpec<F>& v) {
  auto gens = v.generators;
  for (auto& m : minors(jacobian(v.generators), v.codim())) gens.push_back(std::move(m));
  return buchberger(gens).is_unit();
}

inline RandomInstance random_instance_once(Rng& rng, int kind) {
  int gdeg = static_cast<int>(draw_int(rng, 2, 3));
  if (kind == 0) {
    auto R = ring_p({"x", "y"});
    int e = static_cast<int>(draw_int(rng, 2, 3));
    VarietySpec<PrimeField> v{{random_dense(rng, R, e)}, 1, true};
    return {v, random_dense(rng, R, gdeg), "plane curve deg " + std::to_string(e)};
  }
  auto R = ring_p({"x", "y", "z"});
  if (kind == 1) {
    int e = static_cast<int>(draw_int(rng, 2, 3));
    VarietySpec<PrimeField> v{{random_dense(rng, R, e)}, 2, true};
    return {v, random_dense(rng, R, gdeg), "surface deg " + std::to_string(e)};
  }
  VarietySpec<PrimeField> v{{random_dense(rng, R, 2), random_dense(rng, R, 2)}, 1, true};
  return {v, random_dense(rng, R, 2), "space curve 2x2"};
}

/// Smooth instance of the given kind; singular draws are replaced.
inline RandomInstance random_instance(std::uint64_t seed, int kind) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    Rng rng(attempt == 0 ? seed : derive_seed(seed, attempt));
    auto inst = random_instance_once(rng, kind);
    if (variety_is_smooth(inst.variety)) return inst;
  }
}

/// Smooth hypersurface instances for the soundness property (degree 2..3,
/// n = 2..3); singular draws are replaced.
inline RandomInstance random_hypersurface(std::uint64_t seed) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    Rng rng(derive_seed(seed, attempt));
    std::size_t n = static_cast<std::size_t>(draw_int(rng, 2, 3));
    auto R = ring_p(n == 2 ? std::vector<std::string>{"x", "y"} : std::vector<std::string>{"x", "y", "z"});
    int e = static_cast<int>(draw_int(rng, 2, 3));
    int gdeg = static_cast<int>(draw_int(rng, 2, 3));
    VarietySpec<PrimeField> v{{random_dense(rng, R, e, 9, 0.7)}, n - 1, true};
    if (!variety_is_smooth(v)) continue;
    return {v, random_dense(rng, R, gdeg, 9, 0.7), "hypersurface"};
  }
}

/// res_T(q, z - s(T) - y w(T)): for monic q, the product of
/// z - s(t) - y w(t) over the roots t of q.
template <class F>
typename F::Elem pair_resultant(const UPoly<F>& q, const UPoly<F>& s, const UPoly<F>& w, const typename F::Elem& z,
                                const typename F::Elem& y) {
  const F& field = q.field();
  UPoly<F> b = UPoly<F>::constant(field, z) - s - w.scaled(y);
  return resultant(q, b);
}

/// Point-set equality of two parametrizations over the same ring, tested
/// through resultants at random (z, y): for every coordinate i,
/// res_T(q1, z - u(w1) - y w1_i) = res_T(q2, z - u(w2) - y w2_i), u = the
/// second parametrization's form.
template <class F>
bool same_point_set(const RationalParametrization<F>& a, const RationalParametrization<F>& b, std::uint64_t seed) {
  if (a.degree() != b.degree()) return false;
  const F& field = a.ring->field();
  auto wa = a.coordinates();
  auto wb = b.coordinates();
  auto form_values = [&](const std::vector<UPoly<F>>& w, const UPoly<F>& q) {
    UPoly<F> s(field);
    for (std::size_t i = 0; i < w.size(); ++i) s = s + w[i].scaled(b.lambda[i]);
    return rem(s, q);
  };
  UPoly<F> sa = form_values(wa, a.q), sb = form_values(wb, b.q);
  Rng rng(seed);
  for (int trial = 0; trial < 3; ++trial) {
    auto z = field.from_int(draw_int(rng, -100000, 100000));
    auto y = field.from_int(draw_int(rng, -100000, 100000));
    for (std::size_t i = 0; i < wa.size(); ++i) {
      if (!field.equal(pair_resultant(a.q, sa, wa[i], z, y), pair_resultant(b.q, sb, wb[i], z, y))) return false;
    }
  }
  return true;
}

}  // namespace polarcrit::testing
