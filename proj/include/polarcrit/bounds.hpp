#pragma once

// Truncated bidegree classes in N[T,U] / <T^{n+1}, U^{n+1}>, the polar
// degree bound built from them, and an empirical computation of the polar
// degrees of a variety.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "polarcrit/polar.hpp"

namespace polarcrit {

class Bidegree {
 public:
  /// Zero class for ambient dimension n.
  explicit Bidegree(std::size_t n);
  /// The class 1 = T^0 U^0.
  static Bidegree unit(std::size_t n);

  std::size_t n() const { return n_; }
  /// Coefficient of T^a U^b; throws when a or b exceeds n.
  const mpz_class& coeff(std::size_t a, std::size_t b) const;
  void set(std::size_t a, std::size_t b, const mpz_class& v);

  bool is_zero() const;
  /// Common total degree a+b of the nonzero entries, -1 if zero, -2 if mixed.
  int homogeneous_degree() const;

  bool operator==(const Bidegree& o) const { return n_ == o.n_ && c_ == o.c_; }
  std::string to_string() const;

 private:
  std::size_t index(std::size_t a, std::size_t b) const;

  std::size_t n_;
  std::vector<mpz_class> c_;
};

/// Polar degrees delta_1..delta_{d+1}; the last one is deg V.
struct DeltaVector {
  std::vector<std::uint64_t> values;

  std::size_t dim() const { return values.size() - 1; }
  /// 1-based access, delta(k) for 1 <= k <= d+1.
  std::uint64_t delta(std::size_t k) const { return values.at(k - 1); }
  bool operator==(const DeltaVector&) const = default;
};

/// sum_{k=0}^{d} delta_{k+1} T^{n-k} U^{k+1}; requires d < n.
Bidegree conormal_bidegree(const DeltaVector& delta, std::size_t n);

/// sum_{k=0}^{n-i} (D-1)^k T^k U^{n-k-i}.
Bidegree s_variety_bidegree(std::size_t n, std::size_t i, unsigned long D);

/// Product modulo <T^{n+1}, U^{n+1}>.
Bidegree bidegree_product(const Bidegree& x, const Bidegree& y);

/// Coefficient of T^{n-i} U^n.
mpz_class projection_degree(const Bidegree& x, std::size_t n, std::size_t i);

/// The projection degree of conormal x S_{i+1}: the bound for index i
/// computed through bidegrees (i < n).
mpz_class pipeline_bound(const DeltaVector& delta, unsigned long D, std::size_t i, std::size_t n);

/// delta_{i+1} when D = 1, otherwise sum_{j=i}^{d} delta_{j+1} (D-1)^{j-i}.
mpz_class theorem1_bound(const DeltaVector& delta, unsigned long D, std::size_t i);

/// Bezout-type count for a regular sequence of the given degrees and an
/// objective of degree D in n variables:
/// (prod d_j) * sum_{i_0+...+i_m = n-m} (D-1)^{i_0} prod_j (d_j-1)^{i_j}.
mpz_class naive_bound(const std::vector<unsigned long>& degrees, unsigned long D, std::size_t n);

struct DeltaOptions {
  /// Second seed used for the agreement check; 0 derives one from the first.
  std::uint64_t check_seed = 0;
  bool check_agreement = true;
};

/// delta_i = degree of W(a_i, V) cut by i-1 random affine hyperplanes;
/// delta_{d+1} = degree of V cut by d of them. Jobs for different i run in
/// parallel. Throws Unstable if two seeds disagree, NotFinite if a cut stays
/// positive-dimensional after 8 draws.
template <class F>
DeltaVector delta_of_variety(const VarietySpec<F>& v, std::uint64_t seed, const DeltaOptions& opts = {});

/// One delta_i (1 <= i <= d+1) for a single seed.
template <class F>
std::uint64_t polar_degree(const VarietySpec<F>& v, std::size_t i, std::uint64_t seed);

}  // namespace polarcrit
