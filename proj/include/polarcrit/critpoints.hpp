#pragma once

// Critical points of g restricted to V: the lifting-fiber route
// (extended fiber, polar variety of the graph, change of primitive element,
// projection) and the direct route through the critical ideal.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polarcrit/bounds.hpp"
#include "polarcrit/geores.hpp"

namespace polarcrit {

struct HypothesisReport {
  bool finite = false;
  bool radical = false;
  bool smooth_sampled = false;
  std::size_t count = 0;         // distinct critical points, when finite
  std::size_t multiplicity = 0;  // quotient dimension of the critical ideal
  std::vector<std::string> warnings;

  bool all_pass() const { return finite && radical && smooth_sampled; }
};

template <class F>
struct CritResult {
  RationalParametrization<F> parametrization;
  std::size_t count = 0;         // deg q
  std::size_t multiplicity = 0;  // points counted with multiplicity
  std::optional<mpz_class> bound;
  HypothesisReport hypotheses;
  /// True when the ideal was not radical and the parametrization describes
  /// its radical instead.
  bool count_only = false;
  bool reseeded = false;
};

/// Groebner-backed polar variety W(a_1) of the fiber's variety, built from
/// the full equations. Throws Fail when the result is not finite and reduced.
template <class F>
RationalParametrization<F> polar_var(std::size_t d, const LiftingFiber<F>& L, const DirectionSequence<F>& a,
                                     std::uint64_t seed);

/// Polar-variety algorithm on a lifting fiber. When u_crit is empty a separating form on
/// the original coordinates is searched (coordinates, then seeded forms).
template <class F>
CritResult<F> crit_points(const LiftingFiber<F>& L, const Poly<F>& g, const DirectionSequence<F>& a,
                          const std::optional<std::vector<typename F::Elem>>& u_crit, std::uint64_t seed);

/// Builds the fiber and directions from `seed` and runs crit_points,
/// reseeding everything once on Fail. Linear g goes through the same
/// steps; constant g throws NotFinite.
template <class F>
CritResult<F> run_algorithm1(const VarietySpec<F>& v, const Poly<F>& g, std::uint64_t seed,
                             const std::optional<std::vector<typename F::Elem>>& u_crit = std::nullopt);

/// Solves the critical ideal directly. Throws NotFinite; a non-radical ideal
/// yields a warning and a count-only result.
template <class F>
CritResult<F> crit_points_direct(const VarietySpec<F>& v, const Poly<F>& g, std::uint64_t seed,
                                 const std::optional<std::vector<typename F::Elem>>& u_crit = std::nullopt);

/// Whether jac(f) has rank n-d at every point of the parametrized set.
template <class F>
bool smooth_at(const VarietySpec<F>& v, const RationalParametrization<F>& p);

template <class F>
HypothesisReport check_hypotheses(const VarietySpec<F>& v, const Poly<F>& g, std::uint64_t seed);

template <class F>
struct BoundReport {
  DeltaVector delta;
  unsigned long objective_degree = 0;
  mpz_class bound;
  std::size_t count = 0;  // with multiplicity
  std::size_t distinct = 0;
  bool holds = false;
  bool tight = false;
  HypothesisReport hypotheses;
};

template <class F>
BoundReport<F> verify_bound(const VarietySpec<F>& v, const Poly<F>& g, std::uint64_t seed);

}  // namespace polarcrit
