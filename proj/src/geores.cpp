#include "polarcrit/geores.hpp"

#include <memory>

#include "polarcrit/random.hpp"

namespace polarcrit {

template <class F>
std::vector<UPoly<F>> RationalParametrization<F>::coordinates() const {
  const F& field = ring->field();
  std::vector<UPoly<F>> w;
  if (q.degree() <= 0) return std::vector<UPoly<F>>(v.size(), UPoly<F>(field));
  UPoly<F> inv = invmod(q.derivative(), q);
  for (const auto& vi : v) w.push_back(mulmod(vi, inv, q));
  return w;
}

template <class F>
bool RationalParametrization<F>::operator==(const RationalParametrization& o) const {
  if (!ring->same_as(*o.ring) || q != o.q || v != o.v || lambda.size() != o.lambda.size()) return false;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (!ring->field().equal(lambda[i], o.lambda[i])) return false;
  }
  return true;
}

template <class F>
Poly<F> linear_form(const RingPtr<F>& ring, const std::vector<typename F::Elem>& coeffs) {
  if (coeffs.size() != ring->nvars()) throw AlgebraError(ErrorCode::DimensionMismatch, "linear form length");
  Poly<F> p(ring);
  for (std::size_t i = 0; i < coeffs.size(); ++i) p = p + Poly<F>::variable(ring, i).scaled(coeffs[i]);
  return p;
}

template <class F>
std::vector<typename F::Elem> linear_coefficients(const Poly<F>& p) {
  const F& field = p.field();
  std::vector<typename F::Elem> out(p.ring()->nvars(), field.zero());
  for (const auto& t : p.terms()) {
    if (t.mono.degree() != 1) throw AlgebraError(ErrorCode::InvalidArgument, "not a linear form: " + to_string(p));
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (t.mono[i] == 1) out[i] = t.coeff;
    }
  }
  return out;
}

template <class F>
RationalParametrization<F> from_coordinates(const RingPtr<F>& ring, std::vector<typename F::Elem> lambda,
                                            const UPoly<F>& q, const std::vector<UPoly<F>>& w) {
  RationalParametrization<F> p{ring, std::move(lambda), q.monic(), {}};
  UPoly<F> dq = p.q.derivative();
  for (const auto& wi : w) p.v.push_back(p.q.degree() <= 0 ? UPoly<F>(ring->field()) : mulmod(wi, dq, p.q));
  return p;
}

namespace {

template <class F>
Matrix<F> form_matrix(const Quotient<F>& quotient, const std::vector<typename F::Elem>& lambda) {
  std::size_t n = quotient.basis().ring()->nvars();
  if (lambda.size() != n) throw AlgebraError(ErrorCode::DimensionMismatch, "linear form length");
  const F& field = quotient.field();
  Matrix<F> m(field, quotient.dimension(), quotient.dimension());
  for (std::size_t i = 0; i < n; ++i) {
    if (!field.is_zero(lambda[i])) m = m + quotient.variable_matrix(i).scaled(lambda[i]);
  }
  return m;
}

// Column 0 of any multiplication matrix is the image of 1 (the first
// standard monomial).
template <class F>
std::vector<typename F::Elem> column(const Matrix<F>& m, std::size_t c) {
  std::vector<typename F::Elem> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) out[r] = m(r, c);
  return out;
}

template <class F>
bool is_zero_vector(const F& field, const std::vector<typename F::Elem>& v) {
  for (const auto& x : v) {
    if (!field.is_zero(x)) return false;
  }
  return true;
}

template <class F>
std::shared_ptr<const GroebnerBasis<F>> share(const GroebnerBasis<F>& gb) {
  return std::make_shared<const GroebnerBasis<F>>(gb);
}

template <class F>
void require_finite(const GroebnerBasis<F>& gb) {
  if (gb.is_unit()) throw AlgebraError(ErrorCode::EmptyFiber, "ideal has no zeros");
  if (!quotient_dimension(gb)) throw AlgebraError(ErrorCode::NotFinite, "ideal is not zero-dimensional");
}

// Matrix of multiplication by s on F[T]/q in the basis 1, T, ..., T^{D-1}.
template <class F>
Matrix<F> multiplication_mod(const UPoly<F>& s, const UPoly<F>& q) {
  const F& field = q.field();
  std::size_t D = static_cast<std::size_t>(q.degree());
  Matrix<F> m(field, D, D);
  UPoly<F> col = rem(s, q);
  UPoly<F> t = UPoly<F>::identity(field);
  for (std::size_t k = 0; k < D; ++k) {
    for (std::size_t r = 0; r < D; ++r) m(r, k) = col.coeff(r);
    col = mulmod(col, t, q);
  }
  return m;
}

template <class F>
UPoly<F> from_column(const F& field, const Matrix<F>& m, std::size_t c) {
  std::vector<typename F::Elem> coeffs(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) coeffs[r] = m(r, c);
  return UPoly<F>(field, std::move(coeffs));
}

}  // namespace

template <class F>
bool check_radical(const Quotient<F>& quotient) {
  const F& field = quotient.field();
  std::size_t n = quotient.basis().ring()->nvars();
  std::size_t D = quotient.dimension();
  std::vector<typename F::Elem> one(D, field.zero());
  one[0] = field.one();
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix<F>& m = quotient.variable_matrix(i);
    UPoly<F> s = squarefree_part(characteristic_polynomial(m));
    // Coordinates of s(x_i) = s(M_i) * [1], by Horner.
    std::vector<typename F::Elem> acc(D, field.zero());
    for (int k = s.degree(); k >= 0; --k) {
      acc = m.apply(acc);
      acc[0] = field.add(acc[0], s.coeff(static_cast<std::size_t>(k)));
    }
    if (!is_zero_vector(field, acc)) return false;
  }
  return true;
}

template <class F>
bool check_radical(const GroebnerBasis<F>& gb) {
  if (gb.is_unit()) return true;
  if (!quotient_dimension(gb)) throw AlgebraError(ErrorCode::NotFinite, "radical test needs a finite quotient");
  return check_radical(Quotient<F>(share(gb)));
}

template <class F>
std::vector<Poly<F>> radical_generators(const GroebnerBasis<F>& gb) {
  std::vector<Poly<F>> out = gb.generators();
  if (gb.is_unit()) return out;
  if (!quotient_dimension(gb)) throw AlgebraError(ErrorCode::NotFinite, "radical needs a finite quotient");
  Quotient<F> quotient(share(gb));
  for (std::size_t i = 0; i < gb.ring()->nvars(); ++i) {
    UPoly<F> s = squarefree_part(characteristic_polynomial(quotient.variable_matrix(i)));
    out.push_back(from_univariate(s, gb.ring(), i));
  }
  return out;
}

template <class F>
RationalParametrization<F> solve_zero_dim(const Quotient<F>& quotient, const std::vector<typename F::Elem>& lambda) {
  const F& field = quotient.field();
  const RingPtr<F>& ring = quotient.basis().ring();
  std::size_t n = ring->nvars();
  std::size_t D = quotient.dimension();
  Matrix<F> m = form_matrix(quotient, lambda);
  UPoly<F> q = squarefree_part(characteristic_polynomial(m));
  if (static_cast<std::size_t>(q.degree()) < D) {
    if (!check_radical(quotient)) throw AlgebraError(ErrorCode::NotRadical, "ideal is not radical");
    throw AlgebraError(ErrorCode::NotSeparating, "linear form takes equal values at distinct points");
  }
  // Krylov basis [1], m[1], ..., m^{D-1}[1]; solve for each coordinate.
  Matrix<F> krylov(field, D, D);
  std::vector<typename F::Elem> vec(D, field.zero());
  vec[0] = field.one();
  for (std::size_t k = 0; k < D; ++k) {
    for (std::size_t r = 0; r < D; ++r) krylov(r, k) = vec[r];
    if (k + 1 < D) vec = m.apply(vec);
  }
  Matrix<F> rhs(field, D, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto c = column(quotient.variable_matrix(i), 0);
    for (std::size_t r = 0; r < D; ++r) rhs(r, i) = c[r];
  }
  Matrix<F> sol = solve(krylov, rhs);
  std::vector<UPoly<F>> w;
  for (std::size_t i = 0; i < n; ++i) w.push_back(from_column(field, sol, i));
  return from_coordinates(ring, lambda, q, w);
}

template <class F>
RationalParametrization<F> solve_zero_dim(const GroebnerBasis<F>& gb, const std::vector<typename F::Elem>& lambda) {
  if (gb.is_unit()) {
    const F& field = gb.ring()->field();
    return {gb.ring(), lambda, UPoly<F>::constant(field, field.one()),
            std::vector<UPoly<F>>(gb.ring()->nvars(), UPoly<F>(field))};
  }
  require_finite(gb);
  return solve_zero_dim(Quotient<F>(share(gb)), lambda);
}

template <class F>
std::vector<typename F::Elem> find_primitive_element(const Quotient<F>& quotient, std::uint64_t seed) {
  const F& field = quotient.field();
  std::size_t n = quotient.basis().ring()->nvars();
  std::size_t D = quotient.dimension();
  if (!check_radical(quotient)) throw AlgebraError(ErrorCode::NotRadical, "no primitive element: ideal not radical");
  Rng rng(seed);
  for (int attempt = 0; attempt < kPrimitiveAttempts; ++attempt) {
    std::vector<typename F::Elem> lambda(n, field.zero());
    if (static_cast<std::size_t>(attempt) < n) {
      lambda[attempt] = field.one();
    } else {
      for (auto& c : lambda) c = field.from_int(draw_int(rng, -kPrimitiveBound, kPrimitiveBound));
    }
    if (is_zero_vector(field, lambda)) continue;
    UPoly<F> q = squarefree_part(characteristic_polynomial(form_matrix(quotient, lambda)));
    if (static_cast<std::size_t>(q.degree()) == D) return lambda;
  }
  throw AlgebraError(ErrorCode::Fail, "no separating linear form found");
}

template <class F>
std::vector<typename F::Elem> find_primitive_element(const GroebnerBasis<F>& gb, std::uint64_t seed) {
  require_finite(gb);
  return find_primitive_element(Quotient<F>(share(gb)), seed);
}

template <class F>
RationalParametrization<F> change_primitive_element(const RationalParametrization<F>& p,
                                                    const std::vector<typename F::Elem>& u_new) {
  const F& field = p.ring->field();
  std::size_t n = p.ring->nvars();
  if (u_new.size() != n) throw AlgebraError(ErrorCode::DimensionMismatch, "linear form length");
  if (p.q.degree() <= 0) return {p.ring, u_new, p.q, p.v};
  std::size_t D = static_cast<std::size_t>(p.q.degree());
  std::vector<UPoly<F>> w = p.coordinates();
  UPoly<F> s(field);
  for (std::size_t i = 0; i < n; ++i) s = s + w[i].scaled(u_new[i]);
  s = rem(s, p.q);
  UPoly<F> chi = characteristic_polynomial(multiplication_mod(s, p.q));
  if (squarefree_part(chi).degree() != static_cast<int>(D)) {
    throw AlgebraError(ErrorCode::NotSeparating, "new linear form is not separating");
  }
  // Powers of s modulo q as columns; solve for w_i as polynomials in s.
  Matrix<F> krylov(field, D, D);
  UPoly<F> pw = UPoly<F>::constant(field, field.one());
  for (std::size_t k = 0; k < D; ++k) {
    for (std::size_t r = 0; r < D; ++r) krylov(r, k) = pw.coeff(r);
    pw = mulmod(pw, s, p.q);
  }
  Matrix<F> rhs(field, D, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t r = 0; r < D; ++r) rhs(r, i) = w[i].coeff(r);
  }
  Matrix<F> sol = solve(krylov, rhs);
  std::vector<UPoly<F>> w_new;
  for (std::size_t i = 0; i < n; ++i) w_new.push_back(from_column(field, sol, i));
  return from_coordinates(p.ring, u_new, chi, w_new);
}

namespace {

// q'^{deg f} f(v / q') mod q.
template <class F>
UPoly<F> cleared_value(const Poly<F>& f, const RationalParametrization<F>& p) {
  const F& field = p.ring->field();
  if (f.is_zero()) return UPoly<F>(field);
  int e = f.total_degree();
  UPoly<F> dq = rem(p.q.derivative(), p.q);
  std::vector<UPoly<F>> dq_pow{UPoly<F>::constant(field, field.one())};
  for (int k = 1; k <= e; ++k) dq_pow.push_back(mulmod(dq_pow.back(), dq, p.q));
  std::size_t n = p.ring->nvars();
  std::vector<std::vector<UPoly<F>>> v_pow(n, {UPoly<F>::constant(field, field.one())});
  UPoly<F> acc(field);
  for (const auto& t : f.terms()) {
    UPoly<F> term = dq_pow[e - static_cast<int>(t.mono.degree())].scaled(t.coeff);
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t k = t.mono[i];
      if (k == 0) continue;
      while (v_pow[i].size() <= k) v_pow[i].push_back(mulmod(v_pow[i].back(), p.v[i], p.q));
      term = mulmod(term, v_pow[i][k], p.q);
    }
    acc = acc + term;
  }
  return rem(acc, p.q);
}

}  // namespace

template <class F>
ParametrizationReport check_parametrization(const RationalParametrization<F>& p,
                                            const std::vector<Poly<F>>& equations) {
  ParametrizationReport r;
  const F& field = p.ring->field();
  std::size_t n = p.ring->nvars();
  if (p.v.size() != n || p.lambda.size() != n) {
    r.degrees_ok = false;
    r.failures.push_back("expected " + std::to_string(n) + " coordinates and form coefficients");
    return r;
  }
  if (p.q.is_zero() || !field.is_one(p.q.leading()) || !is_squarefree(p.q)) {
    r.squarefree = false;
    r.failures.push_back("q is not monic squarefree");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (p.v[i].degree() >= std::max(p.q.degree(), 0) && !p.v[i].is_zero()) {
      r.degrees_ok = false;
      r.failures.push_back("deg v" + std::to_string(i + 1) + " >= deg q");
    }
  }
  if (!r.squarefree || !r.degrees_ok || p.q.degree() <= 0) return r;
  UPoly<F> lhs(field);
  for (std::size_t i = 0; i < n; ++i) lhs = lhs + p.v[i].scaled(p.lambda[i]);
  UPoly<F> tq = UPoly<F>::identity(field) * p.q.derivative();
  if (!rem(lhs - tq, p.q).is_zero()) {
    r.normalization_ok = false;
    r.failures.push_back("lambda(v) != T q' mod q");
  }
  for (std::size_t k = 0; k < equations.size(); ++k) {
    if (!equations[k].ring()->same_as(*p.ring)) {
      r.membership_ok = false;
      r.failures.push_back("equation " + std::to_string(k + 1) + " lives in another ring");
      continue;
    }
    if (!cleared_value(equations[k], p).is_zero()) {
      r.membership_ok = false;
      r.failures.push_back("equation " + std::to_string(k + 1) + " does not vanish on the parametrized set");
    }
  }
  return r;
}

template <class F>
std::vector<typename F::Elem> point_at(const RationalParametrization<F>& p, const typename F::Elem& t) {
  const F& field = p.ring->field();
  if (!field.is_zero(p.q.eval(t))) throw AlgebraError(ErrorCode::InvalidArgument, "t is not a root of q");
  auto inv = field.inv(p.q.derivative().eval(t));
  std::vector<typename F::Elem> out;
  for (const auto& vi : p.v) out.push_back(field.mul(vi.eval(t), inv));
  return out;
}

template <class F>
std::vector<UPoly<F>> LiftingFiber<F>::x_coordinates() const {
  const F& field = ring->field();
  std::size_t n = nvars();
  std::vector<UPoly<F>> y;
  for (const auto& zi : z) y.push_back(UPoly<F>::constant(field, zi));
  for (const auto& vi : v) y.push_back(vi);
  std::vector<UPoly<F>> x(n, UPoly<F>(field));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < y.size() && j < n; ++j) {
      if (!field.is_zero(M(i, j))) x[i] = x[i] + y[j].scaled(M(i, j));
    }
    if (Q.degree() > 0) x[i] = rem(x[i], Q);
  }
  return x;
}

template <class F>
RationalParametrization<F> LiftingFiber<F>::parametrization() const {
  return from_coordinates(ring, u, Q, x_coordinates());
}

namespace {

// X = M (z || Y') as polynomials in the fiber ring of Y_{d+1}..Y_n.
template <class F>
std::vector<Poly<F>> fiber_images(const RingPtr<F>& fiber_ring, const Matrix<F>& M,
                                  const std::vector<typename F::Elem>& z) {
  const F& field = fiber_ring->field();
  std::size_t n = M.rows(), d = z.size();
  std::vector<Poly<F>> images;
  for (std::size_t i = 0; i < n; ++i) {
    auto c = field.zero();
    for (std::size_t j = 0; j < d; ++j) c = field.add(c, field.mul(M(i, j), z[j]));
    Poly<F> x = Poly<F>::constant(fiber_ring, c);
    for (std::size_t j = d; j < n; ++j) {
      if (!field.is_zero(M(i, j))) x = x + Poly<F>::variable(fiber_ring, j - d).scaled(M(i, j));
    }
    images.push_back(std::move(x));
  }
  return images;
}

template <class F>
RingPtr<F> fiber_ring_for(const F& field, std::size_t n, std::size_t d) {
  std::vector<std::string> names;
  for (std::size_t j = d; j < n; ++j) names.push_back("y" + std::to_string(j + 1));
  return make_ring(field, names);
}

template <class F>
bool fiber_is_reduced_point_set(const std::vector<Poly<F>>& polys, const std::vector<Poly<F>>& images) {
  std::vector<Poly<F>> gens;
  for (const auto& h : polys) gens.push_back(compose(h, images));
  auto gb = buchberger(gens);
  if (gb.is_unit() || !quotient_dimension(gb)) return false;
  return check_radical(gb);
}

}  // namespace

template <class F>
bool in_noether_position(const VarietySpec<F>& v, const Matrix<F>& M) {
  const F& field = v.ring()->field();
  std::size_t n = v.nvars(), d = v.dim;
  std::vector<std::string> names;
  for (std::size_t j = 0; j < n; ++j) names.push_back("y" + std::to_string(j + 1));
  RingPtr<F> yring = make_ring(field, names);
  std::vector<Poly<F>> images;
  for (std::size_t i = 0; i < n; ++i) {
    Poly<F> xi(yring);
    for (std::size_t j = 0; j < n; ++j) {
      if (!field.is_zero(M(i, j))) xi = xi + Poly<F>::variable(yring, j).scaled(M(i, j));
    }
    images.push_back(std::move(xi));
  }
  std::vector<Poly<F>> moved;
  for (const auto& f : v.generators) moved.push_back(compose(f, images));
  // Top-degree forms of a degree-compatible basis cut out the points at
  // infinity; none may lie over Y_1 = .. = Y_d = 0.
  auto gb = buchberger(moved);
  std::vector<Poly<F>> cone;
  for (const auto& g : gb.generators()) {
    int top = g.total_degree();
    std::vector<Term<F>> terms;
    for (const auto& t : g.terms()) {
      if (static_cast<int>(t.mono.degree()) == top) terms.push_back(t);
    }
    cone.push_back(Poly<F>::from_terms(yring, std::move(terms)));
  }
  for (std::size_t j = 0; j < d; ++j) cone.push_back(Poly<F>::variable(yring, j));
  return quotient_dimension(buchberger(cone)).has_value();
}

template <class F>
LiftingFiber<F> lifting_fiber_at(const VarietySpec<F>& v, const Matrix<F>& M,
                                 const std::vector<typename F::Elem>& z, std::uint64_t seed) {
  v.validate();
  const F& field = v.ring()->field();
  std::size_t n = v.nvars(), d = v.dim, c = v.codim();
  if (v.generators.size() < c) throw AlgebraError(ErrorCode::DimensionMismatch, "fewer generators than codimension");
  if (M.rows() != n || M.cols() != n || z.size() != d) {
    throw AlgebraError(ErrorCode::DimensionMismatch, "M must be n x n and z of length d");
  }
  if (d == n) throw AlgebraError(ErrorCode::InvalidArgument, "lifting fiber needs d < n");
  Matrix<F> Minv = inverse(M);
  RingPtr<F> fring = fiber_ring_for(field, n, d);
  std::vector<Poly<F>> images = fiber_images(fring, M, z);
  std::vector<Poly<F>> fiber_gens;
  for (const auto& f : v.generators) fiber_gens.push_back(compose(f, images));
  auto gb = std::make_shared<const GroebnerBasis<F>>(buchberger(fiber_gens));
  if (gb->is_unit()) throw AlgebraError(ErrorCode::EmptyFiber, "fiber is empty");
  if (!quotient_dimension(*gb)) throw AlgebraError(ErrorCode::NotFinite, "fiber is not zero-dimensional");
  Quotient<F> quotient(gb);
  if (!check_radical(quotient)) throw AlgebraError(ErrorCode::NotRadical, "fiber is not reduced");
  auto lambda = find_primitive_element(quotient, derive_seed(seed, 1));
  auto param = solve_zero_dim(quotient, lambda);

  LiftingFiber<F> L{v.ring(), d, {}, v.generators, M, z, std::vector<typename F::Elem>(n, field.zero()),
                    param.q, param.coordinates()};
  // u = (0 || lambda) M^{-1}, so that u(M Y) = lambda(Y_{d+1..n}).
  for (std::size_t j = 0; j < n; ++j) {
    auto acc = field.zero();
    for (std::size_t k = 0; k < n - d; ++k) acc = field.add(acc, field.mul(lambda[k], Minv(d + k, j)));
    L.u[j] = acc;
  }
  if (v.generators.size() == c) {
    L.lifting = v.generators;
    return L;
  }
  Rng rng(derive_seed(seed, 2));
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::vector<Poly<F>> H;
    for (std::size_t k = 0; k < c; ++k) {
      Poly<F> h(v.ring());
      for (const auto& f : v.generators) h = h + f.scaled(field.from_int(draw_nonzero(rng, kMatrixBound)));
      H.push_back(std::move(h));
    }
    if (fiber_is_reduced_point_set(H, images)) {
      L.lifting = std::move(H);
      return L;
    }
  }
  throw AlgebraError(ErrorCode::Fail, "no reduced regular lifting system found");
}

template <class F>
LiftingFiber<F> build_lifting_fiber(const VarietySpec<F>& v, std::uint64_t seed) {
  v.validate();
  const F& field = v.ring()->field();
  std::size_t n = v.nvars(), d = v.dim;
  Rng rng(seed);
  ErrorCode last = ErrorCode::Fail;
  std::string last_message = "no attempt made";
  for (int attempt = 0; attempt < 8; ++attempt) {
    Matrix<F> M(field, n, n);
    do {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) M(i, j) = field.from_int(draw_int(rng, -kMatrixBound, kMatrixBound));
      }
    } while (rank(M) < n);
    std::vector<typename F::Elem> z;
    for (std::size_t j = 0; j < d; ++j) z.push_back(field.from_int(draw_int(rng, -kMatrixBound, kMatrixBound)));
    if (!in_noether_position(v, M)) {
      last = ErrorCode::NotFinite;
      last_message = "coordinates not in Noether position";
      continue;
    }
    try {
      return lifting_fiber_at(v, M, z, derive_seed(seed, 100 + attempt));
    } catch (const AlgebraError& e) {
      if (e.code() == ErrorCode::EmptyFiber && buchberger(v.generators).is_unit()) throw;
      if (e.code() != ErrorCode::EmptyFiber && e.code() != ErrorCode::NotFinite &&
          e.code() != ErrorCode::NotRadical && e.code() != ErrorCode::Fail) {
        throw;
      }
      last = e.code();
      last_message = e.what();
    }
  }
  throw AlgebraError(last, "lifting fiber: 8 draws failed, last: " + last_message);
}

template <class F>
LiftingFiber<F> extend_fiber(const LiftingFiber<F>& L, const Poly<F>& g) {
  if (!g.ring()->same_as(*L.ring)) throw AlgebraError(ErrorCode::RingMismatch, "objective in another ring");
  const F& field = L.ring->field();
  std::size_t n = L.nvars();
  RingPtr<F> ext = objective_ring(L.ring);
  Poly<F> graph = embed(g, ext) - Poly<F>::variable(ext, n);
  LiftingFiber<F> out{ext, L.dim, {}, {}, Matrix<F>(field, n + 1, n + 1), L.z, L.u, L.Q, L.v};
  for (const auto& h : L.lifting) out.lifting.push_back(embed(h, ext));
  out.lifting.push_back(graph);
  for (const auto& f : L.equations) out.equations.push_back(embed(f, ext));
  out.equations.push_back(graph);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.M(i, j) = L.M(i, j);
  }
  out.M(n, n) = field.one();
  out.u.push_back(field.zero());
  UPoly<F> extra = compose_mod(g, L.x_coordinates(), L.Q);
  out.v.push_back(std::move(extra));
  return out;
}

template <class F>
FiberReport validate_fiber(const LiftingFiber<F>& L) {
  FiberReport r;
  const F& field = L.ring->field();
  std::size_t n = L.nvars(), d = L.dim;
  auto fail = [&](bool& flag, const std::string& msg) {
    flag = false;
    r.failures.push_back(msg);
  };
  if (d > n || L.M.rows() != n || L.M.cols() != n || L.z.size() != d || L.v.size() != n - d || L.u.size() != n ||
      L.lifting.size() != n - d) {
    fail(r.shapes_ok, "component sizes do not match n=" + std::to_string(n) + ", d=" + std::to_string(d));
    return r;
  }
  if (rank(L.M) != n) fail(r.m_invertible, "M is singular");
  if (L.Q.degree() < 1 || !field.is_one(L.Q.leading()) || !is_squarefree(L.Q)) {
    fail(r.q_squarefree, "Q is not monic squarefree of positive degree");
  }
  for (std::size_t j = 0; j < L.v.size(); ++j) {
    if (!L.v[j].is_zero() && L.v[j].degree() >= L.Q.degree()) fail(r.shapes_ok, "deg v" + std::to_string(j) + " >= deg Q");
  }
  if (L.Q.degree() < 1) return r;
  auto x = L.x_coordinates();
  for (std::size_t k = 0; k < L.lifting.size(); ++k) {
    if (!L.lifting[k].ring()->same_as(*L.ring) || !compose_mod(L.lifting[k], x, L.Q).is_zero()) {
      fail(r.residues_vanish, "h" + std::to_string(k + 1) + " o M does not vanish mod Q");
    }
  }
  for (std::size_t k = 0; k < L.equations.size(); ++k) {
    if (!L.equations[k].ring()->same_as(*L.ring) || !compose_mod(L.equations[k], x, L.Q).is_zero()) {
      fail(r.equations_vanish, "f" + std::to_string(k + 1) + " does not vanish on the fiber");
    }
  }
  UPoly<F> ux(field);
  for (std::size_t i = 0; i < n; ++i) ux = ux + x[i].scaled(L.u[i]);
  if (!rem(ux - UPoly<F>::identity(field), L.Q).is_zero()) fail(r.primitive_ok, "u o M (z, v(T)) != T mod Q");
  return r;
}

#define POLARCRIT_INSTANTIATE_GEORES(F)                                                                         \
  template struct RationalParametrization<F>;                                                                   \
  template struct LiftingFiber<F>;                                                                              \
  template Poly<F> linear_form<F>(const RingPtr<F>&, const std::vector<F::Elem>&);                              \
  template std::vector<F::Elem> linear_coefficients<F>(const Poly<F>&);                                         \
  template RationalParametrization<F> from_coordinates<F>(const RingPtr<F>&, std::vector<F::Elem>,              \
                                                          const UPoly<F>&, const std::vector<UPoly<F>>&);       \
  template RationalParametrization<F> solve_zero_dim<F>(const GroebnerBasis<F>&, const std::vector<F::Elem>&);  \
  template RationalParametrization<F> solve_zero_dim<F>(const Quotient<F>&, const std::vector<F::Elem>&);       \
  template bool check_radical<F>(const GroebnerBasis<F>&);                                                      \
  template bool check_radical<F>(const Quotient<F>&);                                                           \
  template std::vector<Poly<F>> radical_generators<F>(const GroebnerBasis<F>&);                                 \
  template std::vector<F::Elem> find_primitive_element<F>(const GroebnerBasis<F>&, std::uint64_t);              \
  template std::vector<F::Elem> find_primitive_element<F>(const Quotient<F>&, std::uint64_t);                   \
  template RationalParametrization<F> change_primitive_element<F>(const RationalParametrization<F>&,            \
                                                                  const std::vector<F::Elem>&);                 \
  template ParametrizationReport check_parametrization<F>(const RationalParametrization<F>&,                    \
                                                          const std::vector<Poly<F>>&);                         \
  template std::vector<F::Elem> point_at<F>(const RationalParametrization<F>&, const F::Elem&);                 \
  template LiftingFiber<F> lifting_fiber_at<F>(const VarietySpec<F>&, const Matrix<F>&,                         \
                                               const std::vector<F::Elem>&, std::uint64_t);                     \
  template LiftingFiber<F> build_lifting_fiber<F>(const VarietySpec<F>&, std::uint64_t);                        \
  template bool in_noether_position<F>(const VarietySpec<F>&, const Matrix<F>&);                                \
  template LiftingFiber<F> extend_fiber<F>(const LiftingFiber<F>&, const Poly<F>&);                             \
  template FiberReport validate_fiber<F>(const LiftingFiber<F>&);

POLARCRIT_INSTANTIATE_GEORES(Rationals)
POLARCRIT_INSTANTIATE_GEORES(PrimeField)

}  // namespace polarcrit
