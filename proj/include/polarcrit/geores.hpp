#pragma once

// Rational parametrizations of finite sets and lifting fibers.
//
// A RationalParametrization (lambda, q, v) encodes the points
//   X_i = v_i(t) / q'(t),  q(t) = 0
// with q monic squarefree, deg v_i < deg q and lambda(v) = T q' mod q.
// Coordinates without the q' denominator ("plain" form, X_i = w_i(t))
// are available through `coordinates()`.

#include <cstdint>
#include <string>
#include <vector>

#include "polarcrit/dense_matrix.hpp"
#include "polarcrit/groebner.hpp"
#include "polarcrit/polar.hpp"
#include "polarcrit/upoly.hpp"

namespace polarcrit {

template <class F>
struct RationalParametrization {
  using Elem = typename F::Elem;

  RingPtr<F> ring;
  std::vector<Elem> lambda;  // coefficients of the linear form on X_1..X_n
  UPoly<F> q;
  std::vector<UPoly<F>> v;

  std::size_t degree() const { return static_cast<std::size_t>(std::max(q.degree(), 0)); }
  /// w_i = v_i / q' mod q, so that X_i = w_i(t) at the roots of q.
  std::vector<UPoly<F>> coordinates() const;
  bool operator==(const RationalParametrization& o) const;
};

template <class F>
Poly<F> linear_form(const RingPtr<F>& ring, const std::vector<typename F::Elem>& coeffs);

/// Reads the homogeneous linear part; throws if `p` is not a linear form.
template <class F>
std::vector<typename F::Elem> linear_coefficients(const Poly<F>& p);

/// Builds (lambda, q, v) from plain coordinates X_i = w_i(T) mod q.
template <class F>
RationalParametrization<F> from_coordinates(const RingPtr<F>& ring, std::vector<typename F::Elem> lambda,
                                            const UPoly<F>& q, const std::vector<UPoly<F>>& w);

/// Throws NotFinite, NotRadical or NotSeparating.
template <class F>
RationalParametrization<F> solve_zero_dim(const GroebnerBasis<F>& gb, const std::vector<typename F::Elem>& lambda);

template <class F>
RationalParametrization<F> solve_zero_dim(const Quotient<F>& quotient, const std::vector<typename F::Elem>& lambda);

/// Exact radicality test for a zero-dimensional ideal: for every variable,
/// the squarefree part of its characteristic polynomial lies in the ideal.
template <class F>
bool check_radical(const GroebnerBasis<F>& gb);

template <class F>
bool check_radical(const Quotient<F>& quotient);

/// Generators of the radical of a zero-dimensional ideal.
template <class F>
std::vector<Poly<F>> radical_generators(const GroebnerBasis<F>& gb);

/// Coordinates first, then seeded random forms with coefficients in
/// {-50..50}; 64 attempts in total. Throws NotRadical or Fail.
template <class F>
std::vector<typename F::Elem> find_primitive_element(const GroebnerBasis<F>& gb, std::uint64_t seed);

template <class F>
std::vector<typename F::Elem> find_primitive_element(const Quotient<F>& quotient, std::uint64_t seed);

inline constexpr long kPrimitiveBound = 50;
inline constexpr int kPrimitiveAttempts = 64;

/// Same point set, new linear form. Throws NotSeparating.
template <class F>
RationalParametrization<F> change_primitive_element(const RationalParametrization<F>& p,
                                                    const std::vector<typename F::Elem>& u_new);

struct ParametrizationReport {
  bool squarefree = true;
  bool degrees_ok = true;
  bool normalization_ok = true;
  bool membership_ok = true;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Checks the invariants; membership uses q'^{deg f} f(v/q') = 0 mod q for
/// each f in `equations` (may be empty).
template <class F>
ParametrizationReport check_parametrization(const RationalParametrization<F>& p,
                                            const std::vector<Poly<F>>& equations);

/// The point v(t) / q'(t) for a root t of q lying in the field.
template <class F>
std::vector<typename F::Elem> point_at(const RationalParametrization<F>& p, const typename F::Elem& t);

template <class F>
struct LiftingFiber {
  using Elem = typename F::Elem;

  RingPtr<F> ring;                   // X_1..X_n
  std::size_t dim = 0;
  std::vector<Poly<F>> lifting;      // H, n-d polynomials in X
  std::vector<Poly<F>> equations;    // full defining system of V in X
  Matrix<F> M;                       // X = M Y
  std::vector<Elem> z;               // Y_1..Y_d
  std::vector<Elem> u;               // primitive form on X
  UPoly<F> Q;
  std::vector<UPoly<F>> v;           // Y_{d+j} = v_j(T)

  std::size_t nvars() const { return ring->nvars(); }
  /// X = M (z || v(T)) as univariate polynomials.
  std::vector<UPoly<F>> x_coordinates() const;
  /// The fiber as a parametrization over X with lambda = u.
  RationalParametrization<F> parametrization() const;
};

/// Single attempt at a fixed change of coordinates and lifting point.
template <class F>
LiftingFiber<F> lifting_fiber_at(const VarietySpec<F>& v, const Matrix<F>& M,
                                 const std::vector<typename F::Elem>& z, std::uint64_t seed);

/// Whether the projection of V onto Y_1..Y_d, X = M Y, is finite.
template <class F>
bool in_noether_position(const VarietySpec<F>& v, const Matrix<F>& M);

/// Random M (entries in {-20..20}) in Noether position and z, up to 8 draws.
template <class F>
LiftingFiber<F> build_lifting_fiber(const VarietySpec<F>& v, std::uint64_t seed);

inline constexpr long kMatrixBound = 20;

/// Fiber of V' = {(x, g(x))}: M' = diag(M, 1), H + {g - X_{n+1}}, same z, u
/// extended by 0, and X_{n+1} = g(X(T)) mod Q.
template <class F>
LiftingFiber<F> extend_fiber(const LiftingFiber<F>& L, const Poly<F>& g);

struct FiberReport {
  bool q_squarefree = true;
  bool residues_vanish = true;
  bool equations_vanish = true;
  bool primitive_ok = true;
  bool m_invertible = true;
  bool shapes_ok = true;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

template <class F>
FiberReport validate_fiber(const LiftingFiber<F>& L);

}  // namespace polarcrit
