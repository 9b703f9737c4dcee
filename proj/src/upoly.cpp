#include "polarcrit/upoly.hpp"

#include <algorithm>
#include <utility>

namespace polarcrit {

template <class F>
UPoly<F>::UPoly(F field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  trim();
}

template <class F>
UPoly<F> UPoly<F>::monomial(const F& field, std::size_t degree, const Elem& c) {
  std::vector<Elem> v(degree + 1, field.zero());
  v[degree] = c;
  return UPoly(field, std::move(v));
}

template <class F>
void UPoly<F>::trim() {
  while (!c_.empty() && field_.is_zero(c_.back())) c_.pop_back();
}

template <class F>
UPoly<F> UPoly<F>::operator+(const UPoly& o) const {
  std::vector<Elem> r(std::max(c_.size(), o.c_.size()), field_.zero());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = field_.add(r[i], o.c_[i]);
  return UPoly(field_, std::move(r));
}

template <class F>
UPoly<F> UPoly<F>::operator-(const UPoly& o) const {
  std::vector<Elem> r(std::max(c_.size(), o.c_.size()), field_.zero());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = field_.sub(r[i], o.c_[i]);
  return UPoly(field_, std::move(r));
}

template <class F>
UPoly<F> UPoly<F>::operator*(const UPoly& o) const {
  if (c_.empty() || o.c_.empty()) return UPoly(field_);
  std::vector<Elem> r(c_.size() + o.c_.size() - 1, field_.zero());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (field_.is_zero(c_[i])) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      r[i + j] = field_.add(r[i + j], field_.mul(c_[i], o.c_[j]));
    }
  }
  return UPoly(field_, std::move(r));
}

template <class F>
UPoly<F> UPoly<F>::operator-() const {
  std::vector<Elem> r;
  r.reserve(c_.size());
  for (const auto& c : c_) r.push_back(field_.neg(c));
  return UPoly(field_, std::move(r));
}

template <class F>
UPoly<F> UPoly<F>::scaled(const Elem& s) const {
  std::vector<Elem> r;
  r.reserve(c_.size());
  for (const auto& c : c_) r.push_back(field_.mul(c, s));
  return UPoly(field_, std::move(r));
}

template <class F>
UPoly<F> UPoly<F>::monic() const {
  if (c_.empty()) return *this;
  return scaled(field_.inv(c_.back()));
}

template <class F>
UPoly<F> UPoly<F>::derivative() const {
  if (c_.size() <= 1) return UPoly(field_);
  std::vector<Elem> r(c_.size() - 1, field_.zero());
  for (std::size_t i = 1; i < c_.size(); ++i) {
    r[i - 1] = field_.mul(c_[i], field_.from_int(static_cast<long>(i)));
  }
  return UPoly(field_, std::move(r));
}

template <class F>
typename UPoly<F>::Elem UPoly<F>::eval(const Elem& x) const {
  Elem acc = field_.zero();
  for (std::size_t i = c_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, x), c_[i]);
  return acc;
}

template <class F>
bool UPoly<F>::operator==(const UPoly& o) const {
  if (c_.size() != o.c_.size()) return false;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!field_.equal(c_[i], o.c_[i])) return false;
  }
  return true;
}

template <class F>
UDivision<F> divrem(const UPoly<F>& a, const UPoly<F>& b) {
  const F& field = a.field();
  if (b.is_zero()) throw AlgebraError(ErrorCode::InvalidArgument, "polynomial division by zero");
  if (a.degree() < b.degree()) return {UPoly<F>(field), a};
  auto r = a.coeffs();
  const auto& d = b.coeffs();
  std::size_t db = d.size() - 1;
  auto inv_lead = field.inv(d.back());
  std::vector<typename F::Elem> q(r.size() - db, field.zero());
  for (std::size_t k = r.size(); k-- > db;) {
    if (field.is_zero(r[k])) continue;
    auto c = field.mul(r[k], inv_lead);
    q[k - db] = c;
    for (std::size_t j = 0; j <= db; ++j) field.sub_mul(r[k - db + j], c, d[j]);
  }
  r.resize(db);
  return {UPoly<F>(field, std::move(q)), UPoly<F>(field, std::move(r))};
}

template <class F>
UPoly<F> gcd(const UPoly<F>& a, const UPoly<F>& b) {
  UPoly<F> x = a, y = b;
  while (!y.is_zero()) {
    UPoly<F> r = rem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

template <class F>
UPoly<F> invmod(const UPoly<F>& a, const UPoly<F>& m) {
  const F& field = a.field();
  UPoly<F> r0 = m, r1 = rem(a, m);
  UPoly<F> t0(field), t1 = UPoly<F>::constant(field, field.one());
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    UPoly<F> t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.degree() != 0) throw AlgebraError(ErrorCode::InvalidArgument, "polynomial is not invertible modulo m");
  return rem(t0.scaled(field.inv(r0.leading())), m);
}

template <class F>
UPoly<F> squarefree_part(const UPoly<F>& p) {
  if (p.degree() <= 0) return p.monic();
  UPoly<F> g = gcd(p, p.derivative());
  return divrem(p, g).quotient.monic();
}

template <class F>
typename F::Elem resultant(const UPoly<F>& a, const UPoly<F>& b) {
  const F& field = a.field();
  if (a.is_zero() || b.is_zero()) return field.zero();
  UPoly<F> x = a, y = b;
  auto result = field.one();
  for (;;) {
    int dx = x.degree(), dy = y.degree();
    if (dy == 0) {
      // res(x, c) = c^deg(x)
      auto c = y.leading();
      for (int i = 0; i < dx; ++i) result = field.mul(result, c);
      return result;
    }
    UPoly<F> r = rem(x, y);
    if (r.is_zero()) return field.zero();
    // res(x, y) = (-1)^(dx*dy) lc(y)^(dx - dr) res(y, r)
    int dr = r.degree();
    if ((dx * dy) % 2 == 1) result = field.neg(result);
    auto lc = y.leading();
    for (int i = 0; i < dx - dr; ++i) result = field.mul(result, lc);
    x = std::move(y);
    y = std::move(r);
  }
}

template <class F>
UPoly<F> interpolate(const F& field, const std::vector<typename F::Elem>& xs,
                     const std::vector<typename F::Elem>& ys) {
  UPoly<F> result(field);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    UPoly<F> basis = UPoly<F>::constant(field, field.one());
    auto denom = field.one();
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = basis * UPoly<F>(field, {field.neg(xs[j]), field.one()});
      denom = field.mul(denom, field.sub(xs[i], xs[j]));
    }
    result = result + basis.scaled(field.div(ys[i], denom));
  }
  return result;
}

template <class F>
UPoly<F> compose_mod(const Poly<F>& p, const std::vector<UPoly<F>>& images, const UPoly<F>& modulus) {
  const F& field = p.field();
  std::size_t n = p.ring()->nvars();
  if (images.size() != n) {
    throw AlgebraError(ErrorCode::DimensionMismatch, "one image per variable is required");
  }
  std::vector<std::vector<UPoly<F>>> powers(n);
  for (std::size_t v = 0; v < n; ++v) powers[v].push_back(rem(UPoly<F>::constant(field, field.one()), modulus));
  auto power = [&](std::size_t v, std::size_t e) -> const UPoly<F>& {
    auto& table = powers[v];
    while (table.size() <= e) table.push_back(mulmod(table.back(), images[v], modulus));
    return table[e];
  };
  UPoly<F> acc(field);
  for (const auto& t : p.terms()) {
    UPoly<F> prod = UPoly<F>::constant(field, t.coeff);
    for (std::size_t v = 0; v < n; ++v) {
      if (t.mono[v] != 0) prod = mulmod(prod, power(v, t.mono[v]), modulus);
    }
    acc = acc + prod;
  }
  return rem(acc, modulus);
}

template <class F>
UPoly<F> compose_mod(const UPoly<F>& p, const UPoly<F>& u, const UPoly<F>& modulus) {
  const F& field = p.field();
  UPoly<F> acc(field);
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    acc = mulmod(acc, u, modulus) + UPoly<F>::constant(field, p.coeffs()[i]);
  }
  return rem(acc, modulus);
}

template <class F>
UPoly<F> to_univariate(const Poly<F>& p, std::size_t var) {
  const F& field = p.field();
  std::vector<typename F::Elem> c(static_cast<std::size_t>(std::max(p.degree_in(var), 0)) + 1, field.zero());
  for (const auto& t : p.terms()) {
    if (t.mono.degree() != t.mono[var]) {
      throw AlgebraError(ErrorCode::InvalidArgument, "polynomial is not univariate");
    }
    c[t.mono[var]] = t.coeff;
  }
  return UPoly<F>(field, std::move(c));
}

template <class F>
Poly<F> from_univariate(const UPoly<F>& u, const RingPtr<F>& ring, std::size_t var) {
  std::vector<Term<F>> terms;
  const auto& c = u.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (!u.field().is_zero(c[k])) terms.push_back({Monomial::variable(var, static_cast<Monomial::Exponent>(k)), c[k]});
  }
  return Poly<F>::from_terms(ring, std::move(terms));
}

template <class F>
std::string to_string(const UPoly<F>& u, const std::string& name) {
  auto ring = make_ring(u.field(), {name});
  return to_string(from_univariate(u, ring, 0));
}

#define POLARCRIT_INSTANTIATE_UPOLY(F)                                                            \
  template class UPoly<F>;                                                                        \
  template UDivision<F> divrem<F>(const UPoly<F>&, const UPoly<F>&);                              \
  template UPoly<F> gcd<F>(const UPoly<F>&, const UPoly<F>&);                                     \
  template UPoly<F> invmod<F>(const UPoly<F>&, const UPoly<F>&);                                  \
  template UPoly<F> squarefree_part<F>(const UPoly<F>&);                                          \
  template F::Elem resultant<F>(const UPoly<F>&, const UPoly<F>&);                                \
  template UPoly<F> interpolate<F>(const F&, const std::vector<F::Elem>&,                         \
                                   const std::vector<F::Elem>&);                                  \
  template UPoly<F> compose_mod<F>(const Poly<F>&, const std::vector<UPoly<F>>&, const UPoly<F>&); \
  template UPoly<F> compose_mod<F>(const UPoly<F>&, const UPoly<F>&, const UPoly<F>&);            \
  template UPoly<F> to_univariate<F>(const Poly<F>&, std::size_t);                                \
  template Poly<F> from_univariate<F>(const UPoly<F>&, const RingPtr<F>&, std::size_t);           \
  template std::string to_string<F>(const UPoly<F>&, const std::string&);

POLARCRIT_INSTANTIATE_UPOLY(Rationals)
POLARCRIT_INSTANTIATE_UPOLY(PrimeField)

}  // namespace polarcrit
