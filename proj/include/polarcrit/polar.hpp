#pragma once

// Ideals of classical and modified polar varieties, and the extended
// system (f, g - X_{n+1}) used by the lifting-fiber route.

#include <cstdint>
#include <vector>

#include "polarcrit/dense_matrix.hpp"
#include "polarcrit/minors.hpp"
#include "polarcrit/poly.hpp"

namespace polarcrit {

template <class F>
struct VarietySpec {
  std::vector<Poly<F>> generators;
  std::size_t dim = 0;
  bool smooth_asserted = true;

  const RingPtr<F>& ring() const { return generators.front().ring(); }
  std::size_t nvars() const { return ring()->nvars(); }
  std::size_t codim() const { return nvars() - dim; }
  /// Throws unless generators are nonempty, share a ring and dim <= n.
  void validate() const;
};

/// Rows a_1..a_i of linearly independent direction vectors.
template <class F>
struct DirectionSequence {
  Matrix<F> rows;
  std::uint64_t seed = 0;

  std::size_t count() const { return rows.rows(); }
  std::size_t width() const { return rows.cols(); }
  /// The first k rows.
  DirectionSequence prefix(std::size_t k) const;
};

template <class F>
DirectionSequence<F> empty_directions(const F& field, std::size_t n) {
  return {Matrix<F>(field, 0, n), 0};
}

/// f plus the (n-d+i+1)-minors of [jac(f); grad g; a_1..a_i].
/// Throws Degenerate when the minor order exceeds the number of columns.
template <class F>
std::vector<Poly<F>> crit_ideal(const VarietySpec<F>& v, const Poly<F>& g, const DirectionSequence<F>& a,
                                std::size_t i);

/// f plus the (n-d+i)-minors of [jac(f); a_1..a_i], for 1 <= i <= d.
template <class F>
std::vector<Poly<F>> classical_polar_ideal(const VarietySpec<F>& v, const DirectionSequence<F>& a, std::size_t i);

template <class F>
struct ExtendedSystem {
  VarietySpec<F> variety;         // f, g - X_{n+1} in n+1 variables
  DirectionSequence<F> a_prime;   // e_{n+1} on top of (a_j | 0)
};

/// Ring with the extra coordinate X_{n+1} used for the objective value.
template <class F>
RingPtr<F> objective_ring(const RingPtr<F>& ring) {
  return extend_ring(ring, "x" + std::to_string(ring->nvars() + 1));
}

template <class F>
ExtendedSystem<F> extend_system(const VarietySpec<F>& v, const Poly<F>& g, const DirectionSequence<F>& a);

/// i rows with entries in {-997..997}\{0}, resampled until of rank i
/// (at most 32 attempts).
template <class F>
DirectionSequence<F> random_directions(std::uint64_t seed, std::size_t i, std::size_t n, const F& field);

inline constexpr long kDirectionBound = 997;

}  // namespace polarcrit
