#pragma once

// Buchberger's algorithm and the zero-dimensional toolkit built on it:
// normal forms, standard monomials, dimension and multiplication matrices.

#include <memory>
#include <optional>
#include <vector>

#include "polarcrit/dense_matrix.hpp"
#include "polarcrit/monomial.hpp"
#include "polarcrit/poly.hpp"

namespace polarcrit {

/// Polynomial with terms sorted decreasingly in some term order.
template <class F>
struct OrderedPoly {
  std::vector<Monomial> monos;
  std::vector<typename F::Elem> coeffs;

  std::size_t size() const { return monos.size(); }
  bool empty() const { return monos.empty(); }
};

struct GroebnerStats {
  std::size_t input_polynomials = 0;
  std::size_t pairs_created = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t reduction_steps = 0;
};

template <class F>
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr<F> ring, MonomialOrder order, std::vector<OrderedPoly<F>> reduced, GroebnerStats stats);

  const RingPtr<F>& ring() const { return ring_; }
  const MonomialOrder& order() const { return order_; }
  /// Reduced, monic, sorted by increasing leading monomial.
  const std::vector<Poly<F>>& generators() const { return generators_; }
  const std::vector<OrderedPoly<F>>& ordered() const { return ordered_; }
  const std::vector<Monomial>& leading_monomials() const { return leads_; }
  const std::vector<std::uint64_t>& lead_masks() const { return masks_; }
  const GroebnerStats& stats() const { return stats_; }
  bool is_unit() const { return leads_.size() == 1 && leads_.front().is_one(); }

 private:
  RingPtr<F> ring_;
  MonomialOrder order_;
  std::vector<OrderedPoly<F>> ordered_;
  std::vector<Poly<F>> generators_;
  std::vector<Monomial> leads_;
  std::vector<std::uint64_t> masks_;
  GroebnerStats stats_;
};

/// Reduced Groebner basis of the ideal generated by `gens`.
template <class F>
GroebnerBasis<F> buchberger(const std::vector<Poly<F>>& gens, const MonomialOrder& order = MonomialOrder::grevlex());

template <class F>
Poly<F> normal_form(const Poly<F>& p, const GroebnerBasis<F>& gb);

/// Standard monomials in increasing order; throws NotFinite when the
/// quotient is infinite-dimensional.
template <class F>
std::vector<Monomial> quotient_basis(const GroebnerBasis<F>& gb);

/// Number of standard monomials, or nullopt when infinite.
template <class F>
std::optional<std::size_t> quotient_dimension(const GroebnerBasis<F>& gb);

/// Krull dimension of the leading-term ideal; -1 for the unit ideal.
template <class F>
int affine_dimension(const GroebnerBasis<F>& gb);

/// Finite-dimensional quotient ring with cached standard monomials and
/// the multiplication matrices of the variables.
template <class F>
class Quotient {
 public:
  explicit Quotient(std::shared_ptr<const GroebnerBasis<F>> gb);

  const GroebnerBasis<F>& basis() const { return *gb_; }
  const F& field() const { return gb_->ring()->field(); }
  std::size_t dimension() const { return monomials_.size(); }
  const std::vector<Monomial>& monomials() const { return monomials_; }

  /// Coordinates of the normal form of p on the standard monomials.
  std::vector<typename F::Elem> coordinates(const Poly<F>& p) const;
  /// Matrix of multiplication by p; column k is the image of monomial k.
  Matrix<F> multiplication(const Poly<F>& p) const;
  const Matrix<F>& variable_matrix(std::size_t var) const { return variable_matrices_[var]; }

 private:
  std::shared_ptr<const GroebnerBasis<F>> gb_;
  std::vector<Monomial> monomials_;
  std::vector<Matrix<F>> variable_matrices_;
};

/// Matrix of multiplication by `form` on the standard monomials, columns
/// filled in parallel.
template <class F>
Matrix<F> multiplication_matrix(const GroebnerBasis<F>& gb, const Poly<F>& form);

/// Single-threaded reference for `multiplication_matrix`.
template <class F>
Matrix<F> multiplication_matrix_serial(const GroebnerBasis<F>& gb, const Poly<F>& form);

}  // namespace polarcrit
