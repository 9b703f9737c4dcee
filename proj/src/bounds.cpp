#include "polarcrit/bounds.hpp"

#include <exception>
#include <sstream>

#include "polarcrit/groebner.hpp"
#include "polarcrit/random.hpp"

namespace polarcrit {

Bidegree::Bidegree(std::size_t n) : n_(n), c_((n + 1) * (n + 1), mpz_class(0)) {}

Bidegree Bidegree::unit(std::size_t n) {
  Bidegree b(n);
  b.set(0, 0, 1);
  return b;
}

std::size_t Bidegree::index(std::size_t a, std::size_t b) const {
  if (a > n_ || b > n_) {
    throw AlgebraError(ErrorCode::InvalidArgument, "bidegree exponent above n=" + std::to_string(n_));
  }
  return a * (n_ + 1) + b;
}

const mpz_class& Bidegree::coeff(std::size_t a, std::size_t b) const { return c_[index(a, b)]; }

void Bidegree::set(std::size_t a, std::size_t b, const mpz_class& v) {
  if (v < 0) throw AlgebraError(ErrorCode::InvalidArgument, "bidegree coefficients are nonnegative");
  c_[index(a, b)] = v;
}

bool Bidegree::is_zero() const {
  for (const auto& v : c_) {
    if (v != 0) return false;
  }
  return true;
}

int Bidegree::homogeneous_degree() const {
  int deg = -1;
  for (std::size_t a = 0; a <= n_; ++a) {
    for (std::size_t b = 0; b <= n_; ++b) {
      if (coeff(a, b) == 0) continue;
      int d = static_cast<int>(a + b);
      if (deg >= 0 && d != deg) return -2;
      deg = d;
    }
  }
  return deg;
}

std::string Bidegree::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto power = [&](char var, std::size_t e) {
    if (e == 0) return std::string();
    std::string s(1, var);
    if (e > 1) s += "^" + std::to_string(e);
    return s;
  };
  // Decreasing powers of T.
  for (std::size_t a = n_ + 1; a-- > 0;) {
    for (std::size_t b = 0; b <= n_; ++b) {
      const auto& v = coeff(a, b);
      if (v == 0) continue;
      if (!first) os << "+";
      first = false;
      std::string mono = power('T', a);
      std::string u = power('U', b);
      if (!mono.empty() && !u.empty()) mono += "*";
      mono += u;
      if (mono.empty()) {
        os << v.get_str();
      } else if (v == 1) {
        os << mono;
      } else {
        os << v.get_str() << "*" << mono;
      }
    }
  }
  return first ? "0" : os.str();
}

Bidegree conormal_bidegree(const DeltaVector& delta, std::size_t n) {
  if (delta.values.empty()) throw AlgebraError(ErrorCode::InvalidArgument, "empty delta vector");
  std::size_t d = delta.dim();
  if (d >= n) throw AlgebraError(ErrorCode::InvalidArgument, "conormal class needs d < n");
  Bidegree b(n);
  for (std::size_t k = 0; k <= d; ++k) b.set(n - k, k + 1, mpz_class(std::to_string(delta.values[k])));
  return b;
}

Bidegree s_variety_bidegree(std::size_t n, std::size_t i, unsigned long D) {
  if (i > n) throw AlgebraError(ErrorCode::InvalidArgument, "S-variety index above n");
  if (D == 0) throw AlgebraError(ErrorCode::InvalidArgument, "objective degree must be positive");
  Bidegree b(n);
  mpz_class w = 1;
  for (std::size_t k = 0; k <= n - i; ++k) {
    b.set(k, n - k - i, w);
    w *= D - 1;
  }
  return b;
}

Bidegree bidegree_product(const Bidegree& x, const Bidegree& y) {
  if (x.n() != y.n()) throw AlgebraError(ErrorCode::DimensionMismatch, "bidegrees over different n");
  std::size_t n = x.n();
  Bidegree r(n);
  for (std::size_t a1 = 0; a1 <= n; ++a1) {
    for (std::size_t b1 = 0; b1 <= n; ++b1) {
      const auto& u = x.coeff(a1, b1);
      if (u == 0) continue;
      for (std::size_t a2 = 0; a1 + a2 <= n; ++a2) {
        for (std::size_t b2 = 0; b1 + b2 <= n; ++b2) {
          const auto& v = y.coeff(a2, b2);
          if (v != 0) r.set(a1 + a2, b1 + b2, r.coeff(a1 + a2, b1 + b2) + u * v);
        }
      }
    }
  }
  return r;
}

mpz_class projection_degree(const Bidegree& x, std::size_t n, std::size_t i) {
  if (n != x.n() || i > n) throw AlgebraError(ErrorCode::InvalidArgument, "projection index out of range");
  return x.coeff(n - i, n);
}

mpz_class pipeline_bound(const DeltaVector& delta, unsigned long D, std::size_t i, std::size_t n) {
  if (i >= n) throw AlgebraError(ErrorCode::InvalidArgument, "index i must be below n");
  return projection_degree(bidegree_product(conormal_bidegree(delta, n), s_variety_bidegree(n, i + 1, D)), n, i);
}

mpz_class theorem1_bound(const DeltaVector& delta, unsigned long D, std::size_t i) {
  if (delta.values.empty()) throw AlgebraError(ErrorCode::InvalidArgument, "empty delta vector");
  if (D == 0) throw AlgebraError(ErrorCode::InvalidArgument, "objective degree must be positive");
  std::size_t d = delta.dim();
  if (i > d) throw AlgebraError(ErrorCode::InvalidArgument, "index i exceeds d");
  if (D == 1) return mpz_class(std::to_string(delta.delta(i + 1)));
  mpz_class sum = 0, w = 1;
  for (std::size_t j = i; j <= d; ++j) {
    sum += w * mpz_class(std::to_string(delta.delta(j + 1)));
    w *= D - 1;
  }
  return sum;
}

mpz_class naive_bound(const std::vector<unsigned long>& degrees, unsigned long D, std::size_t n) {
  std::size_t m = degrees.size();
  if (m == 0 || m > n) throw AlgebraError(ErrorCode::InvalidArgument, "need 1 <= #equations <= n");
  if (D == 0) throw AlgebraError(ErrorCode::InvalidArgument, "objective degree must be positive");
  mpz_class prod = 1;
  for (auto e : degrees) {
    if (e == 0) throw AlgebraError(ErrorCode::InvalidArgument, "equation degrees must be positive");
    prod *= e;
  }
  // h[k] = complete homogeneous symmetric sum of degree k in the weights
  // (D-1, d_1-1, ..., d_m-1), built one weight at a time.
  std::size_t top = n - m;
  std::vector<mpz_class> h(top + 1, mpz_class(0));
  h[0] = 1;
  std::vector<unsigned long> weights{D - 1};
  for (auto e : degrees) weights.push_back(e - 1);
  bool first = true;
  for (auto w : weights) {
    if (first) {
      mpz_class p = 1;
      for (std::size_t k = 0; k <= top; ++k, p *= w) h[k] = p;
      first = false;
      continue;
    }
    for (std::size_t k = 1; k <= top; ++k) h[k] += h[k - 1] * w;
  }
  return prod * h[top];
}

namespace {

// Random affine subspace of codimension k, presented by substituting
// linear polynomials in the free variables for the pivot variables.
template <class F>
struct AffineCut {
  RingPtr<F> target;
  std::vector<Poly<F>> images;
};

template <class F>
AffineCut<F> random_affine_cut(const RingPtr<F>& ring, std::size_t k, Rng& rng) {
  const F& field = ring->field();
  std::size_t n = ring->nvars();
  if (k == 0) {
    AffineCut<F> cut{ring, {}};
    for (std::size_t j = 0; j < n; ++j) cut.images.push_back(Poly<F>::variable(ring, j));
    return cut;
  }
  for (int attempt = 0; attempt < 32; ++attempt) {
    Matrix<F> c(field, k, n + 1);
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t j = 0; j <= n; ++j) c(r, j) = field.from_int(draw_nonzero(rng, kDirectionBound));
    }
    // Reduced row echelon form on the first n columns.
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < k; ++col) {
      std::size_t piv = row;
      while (piv < k && field.is_zero(c(piv, col))) ++piv;
      if (piv == k) continue;
      for (std::size_t j = 0; j <= n; ++j) std::swap(c(piv, j), c(row, j));
      auto inv = field.inv(c(row, col));
      for (std::size_t j = 0; j <= n; ++j) c(row, j) = field.mul(c(row, j), inv);
      for (std::size_t r = 0; r < k; ++r) {
        if (r == row || field.is_zero(c(r, col))) continue;
        auto f = c(r, col);
        for (std::size_t j = 0; j <= n; ++j) field.sub_mul(c(r, j), f, c(row, j));
      }
      pivots.push_back(col);
      ++row;
    }
    if (pivots.size() < k) continue;
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::string> names;
    std::vector<std::size_t> free_index(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (!is_pivot[j]) {
        free_index[j] = names.size();
        names.push_back(ring->names()[j]);
      }
    }
    AffineCut<F> cut{make_ring(field, names), std::vector<Poly<F>>(n, Poly<F>(nullptr))};
    for (std::size_t j = 0; j < n; ++j) {
      if (!is_pivot[j]) cut.images[j] = Poly<F>::variable(cut.target, free_index[j]);
    }
    for (std::size_t r = 0; r < k; ++r) {
      // x_p = -(sum_free c_rj x_j + c_rn)
      Poly<F> img = Poly<F>::constant(cut.target, field.neg(c(r, n)));
      for (std::size_t j = 0; j < n; ++j) {
        if (is_pivot[j] || field.is_zero(c(r, j))) continue;
        img = img - Poly<F>::variable(cut.target, free_index[j]).scaled(c(r, j));
      }
      cut.images[pivots[r]] = img;
    }
    return cut;
  }
  throw AlgebraError(ErrorCode::Fail, "could not draw independent affine cuts");
}

}  // namespace

template <class F>
std::uint64_t polar_degree(const VarietySpec<F>& v, std::size_t i, std::uint64_t seed) {
  v.validate();
  std::size_t d = v.dim, n = v.nvars();
  if (i < 1 || i > d + 1) throw AlgebraError(ErrorCode::InvalidArgument, "polar degree index outside 1..d+1");
  const F& field = v.ring()->field();
  Rng rng(derive_seed(seed, i));
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::vector<PolyMatrix<F>> blocks;
    std::size_t order = 0, cuts = d;
    if (i <= d) {
      auto a = random_directions(rng(), i, n, field);
      PolyMatrix<F> arows(v.ring(), i, n);
      for (std::size_t r = 0; r < i; ++r) {
        for (std::size_t c = 0; c < n; ++c) arows.at(r, c) = Poly<F>::constant(v.ring(), a.rows(r, c));
      }
      blocks = {jacobian(v.generators), arows};
      order = v.codim() + i;
      cuts = i - 1;
    }
    AffineCut<F> cut = random_affine_cut(v.ring(), cuts, rng);
    std::vector<Poly<F>> gens;
    for (const auto& f : v.generators) gens.push_back(compose(f, cut.images));
    if (i <= d) {
      PolyMatrix<F> m = stack(blocks).map([&](const Poly<F>& e) { return compose(e, cut.images); });
      if (order > m.rows()) throw AlgebraError(ErrorCode::DimensionMismatch, "fewer generators than codimension");
      for (auto& p : minors(m, order)) {
        if (!p.is_zero()) gens.push_back(std::move(p));
      }
    }
    auto gb = buchberger(gens);
    if (auto dim = quotient_dimension(gb)) return *dim;
  }
  throw AlgebraError(ErrorCode::NotFinite, "cut of W(a_" + std::to_string(i) + ", V) is not zero-dimensional");
}

namespace {

template <class F>
DeltaVector delta_once(const VarietySpec<F>& v, std::uint64_t seed) {
  std::size_t jobs = v.dim + 1;
  DeltaVector out{std::vector<std::uint64_t>(jobs, 0)};
  std::vector<std::exception_ptr> errors(jobs);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t k = 0; k < jobs; ++k) {
    try {
      out.values[k] = polar_degree(v, k + 1, seed);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace

template <class F>
DeltaVector delta_of_variety(const VarietySpec<F>& v, std::uint64_t seed, const DeltaOptions& opts) {
  v.validate();
  if (v.dim >= v.nvars()) throw AlgebraError(ErrorCode::InvalidArgument, "polar degrees need d < n");
  DeltaVector first = delta_once(v, seed);
  if (!opts.check_agreement) return first;
  std::uint64_t other = opts.check_seed != 0 ? opts.check_seed : derive_seed(seed, 0xD17A);
  if (other == seed) other = derive_seed(other, 1);
  DeltaVector second = delta_once(v, other);
  if (!(first == second)) {
    throw AlgebraError(ErrorCode::Unstable, "polar degrees differ between seeds " + std::to_string(seed) + " and " +
                                                std::to_string(other));
  }
  return first;
}

template DeltaVector delta_of_variety<Rationals>(const VarietySpec<Rationals>&, std::uint64_t, const DeltaOptions&);
template DeltaVector delta_of_variety<PrimeField>(const VarietySpec<PrimeField>&, std::uint64_t,
                                                  const DeltaOptions&);
template std::uint64_t polar_degree<Rationals>(const VarietySpec<Rationals>&, std::size_t, std::uint64_t);
template std::uint64_t polar_degree<PrimeField>(const VarietySpec<PrimeField>&, std::size_t, std::uint64_t);

}  // namespace polarcrit
