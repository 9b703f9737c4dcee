#pragma once

// Dense univariate polynomials over a field, coefficients in ascending
// degree. The representation is always trimmed (no leading zeros), so the
// zero polynomial is the empty vector.

#include <vector>

#include "polarcrit/field.hpp"
#include "polarcrit/poly.hpp"

namespace polarcrit {

template <class F>
class UPoly {
 public:
  using Elem = typename F::Elem;

  explicit UPoly(F field = F{}) : field_(std::move(field)) {}
  UPoly(F field, std::vector<Elem> coeffs);

  static UPoly constant(const F& field, const Elem& c) { return UPoly(field, {c}); }
  /// The polynomial T.
  static UPoly identity(const F& field) { return UPoly(field, {field.zero(), field.one()}); }
  static UPoly monomial(const F& field, std::size_t degree, const Elem& c);

  const F& field() const { return field_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  /// -1 for zero.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Elem coeff(std::size_t k) const { return k < c_.size() ? c_[k] : field_.zero(); }
  Elem leading() const { return c_.empty() ? field_.zero() : c_.back(); }

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly operator-() const;
  UPoly scaled(const Elem& s) const;
  UPoly monic() const;
  UPoly derivative() const;
  Elem eval(const Elem& x) const;

  bool operator==(const UPoly& o) const;
  bool operator!=(const UPoly& o) const { return !(*this == o); }

 private:
  void trim();

  F field_;
  std::vector<Elem> c_;
};

template <class F>
struct UDivision {
  UPoly<F> quotient;
  UPoly<F> remainder;
};

template <class F>
UDivision<F> divrem(const UPoly<F>& a, const UPoly<F>& b);

template <class F>
UPoly<F> rem(const UPoly<F>& a, const UPoly<F>& b) {
  return divrem(a, b).remainder;
}

/// Monic greatest common divisor (zero when both inputs are zero).
template <class F>
UPoly<F> gcd(const UPoly<F>& a, const UPoly<F>& b);

/// Inverse of `a` modulo `m`; throws when they are not coprime.
template <class F>
UPoly<F> invmod(const UPoly<F>& a, const UPoly<F>& m);

/// Monic squarefree part p / gcd(p, p').
template <class F>
UPoly<F> squarefree_part(const UPoly<F>& p);

template <class F>
bool is_squarefree(const UPoly<F>& p) {
  return p.degree() <= 0 || gcd(p, p.derivative()).degree() == 0;
}

template <class F>
UPoly<F> mulmod(const UPoly<F>& a, const UPoly<F>& b, const UPoly<F>& m) {
  return rem(a * b, m);
}

/// Resultant by the Euclidean remainder sequence.
template <class F>
typename F::Elem resultant(const UPoly<F>& a, const UPoly<F>& b);

/// Polynomial of degree < points.size() through the given (x, y) pairs.
template <class F>
UPoly<F> interpolate(const F& field, const std::vector<typename F::Elem>& xs,
                     const std::vector<typename F::Elem>& ys);

/// p(images[0], ..., images[n-1]) reduced modulo `modulus`.
template <class F>
UPoly<F> compose_mod(const Poly<F>& p, const std::vector<UPoly<F>>& images, const UPoly<F>& modulus);

/// Univariate polynomial p(u(T)) mod `modulus`.
template <class F>
UPoly<F> compose_mod(const UPoly<F>& p, const UPoly<F>& u, const UPoly<F>& modulus);

/// Interprets a polynomial that involves only variable `var` as univariate.
template <class F>
UPoly<F> to_univariate(const Poly<F>& p, std::size_t var);

template <class F>
Poly<F> from_univariate(const UPoly<F>& u, const RingPtr<F>& ring, std::size_t var);

/// Text form in the variable `name`, e.g. `T^2-1`.
template <class F>
std::string to_string(const UPoly<F>& u, const std::string& name = "T");

}  // namespace polarcrit
