#pragma once

// Sparse multivariate polynomials over an exact field.
//
// A Poly is an immutable value: a shared ring context plus a vector of
// terms sorted strictly decreasingly in graded reverse lexicographic order,
// with no zero coefficients stored.

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polarcrit/errors.hpp"
#include "polarcrit/field.hpp"
#include "polarcrit/monomial.hpp"

namespace polarcrit {

template <class F>
class Ring {
 public:
  Ring(F field, std::vector<std::string> names);

  const F& field() const { return field_; }
  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool same_as(const Ring& o) const {
    return this == &o || (field_ == o.field_ && names_ == o.names_);
  }

 private:
  F field_;
  std::vector<std::string> names_;
};

template <class F>
using RingPtr = std::shared_ptr<const Ring<F>>;

template <class F>
RingPtr<F> make_ring(F field, std::vector<std::string> names) {
  return std::make_shared<const Ring<F>>(std::move(field), std::move(names));
}

/// Ring with one extra variable appended; the name is `hint` unless it is
/// taken, in which case primes are appended until it is fresh.
template <class F>
RingPtr<F> extend_ring(const RingPtr<F>& ring, const std::string& hint);

template <class F>
struct Term {
  Monomial mono;
  typename F::Elem coeff;
};

template <class F>
class Poly {
 public:
  using Elem = typename F::Elem;
  using TermT = Term<F>;

  explicit Poly(RingPtr<F> ring) : ring_(std::move(ring)) {}

  static Poly constant(RingPtr<F> ring, const Elem& c);
  static Poly variable(RingPtr<F> ring, std::size_t index);
  static Poly monomial(RingPtr<F> ring, const Monomial& m, const Elem& c);
  /// Sorts, merges equal monomials and drops zeros.
  static Poly from_terms(RingPtr<F> ring, std::vector<TermT> terms);
  /// Caller guarantees the canonical form.
  static Poly from_sorted_terms(RingPtr<F> ring, std::vector<TermT> terms);

  const RingPtr<F>& ring() const { return ring_; }
  const F& field() const { return ring_->field(); }
  const std::vector<TermT>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || terms_.front().mono.is_one(); }
  /// -1 for the zero polynomial.
  int total_degree() const {
    return terms_.empty() ? -1 : static_cast<int>(terms_.front().mono.degree());
  }
  int degree_in(std::size_t var) const;
  const TermT& leading() const { return terms_.front(); }
  Elem constant_term() const;
  Elem coefficient(const Monomial& m) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly scaled(const Elem& c) const;
  Poly mul_term(const Monomial& m, const Elem& c) const;
  Poly pow(unsigned e) const;
  /// Scaled so that the leading coefficient is one (zero stays zero).
  Poly monic() const;

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

 private:
  RingPtr<F> ring_;
  std::vector<TermT> terms_;
};

template <class F>
Poly<F> partial_derivative(const Poly<F>& p, std::size_t var_index);

template <class F>
typename F::Elem evaluate(const Poly<F>& p, std::span<const typename F::Elem> point);

/// Replaces every variable i of `p` by `images[i]`; all images live in a
/// common target ring.
template <class F>
Poly<F> compose(const Poly<F>& p, const std::vector<Poly<F>>& images);

/// Replaces the assigned variables; every other variable of `p` is mapped to
/// the variable of `target` with the same name.
template <class F>
Poly<F> substitute(const Poly<F>& p, const std::map<std::size_t, Poly<F>>& assignments,
                   const RingPtr<F>& target);

/// Re-expresses `p` in `target`, mapping variables by name.
template <class F>
Poly<F> embed(const Poly<F>& p, const RingPtr<F>& target);

/// Canonical text form, e.g. `x^2+y^2-1`. Prime-field coefficients are
/// printed in the symmetric range (-p/2, p/2].
template <class F>
std::string to_string(const Poly<F>& p);

/// Coefficient text used by `to_string`.
template <class F>
std::string coefficient_to_string(const F& field, const typename F::Elem& c);

/// Parses `+ - * ^`, parentheses, identifiers and integer or a/b literals.
/// Throws ParseError (with byte position) or AlgebraError when a literal is
/// not representable in the field.
template <class F>
Poly<F> parse_poly(std::string_view text, const RingPtr<F>& ring);

template <class F>
std::vector<Poly<F>> parse_polys(const std::vector<std::string>& texts, const RingPtr<F>& ring) {
  std::vector<Poly<F>> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(parse_poly(t, ring));
  return out;
}

}  // namespace polarcrit
