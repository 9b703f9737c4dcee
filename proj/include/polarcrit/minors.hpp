#pragma once

// Polynomial matrices, Jacobians and exact minor extraction.
//
// `minors` is the production kernel: it builds sub-determinants level by
// level (all s x s minors needed for the (s+1) x (s+1) ones) and spreads each
// level across OpenMP threads. `minors_serial` is the straightforward
// memoized cofactor recursion, kept as the reference the parallel kernel is
// tested and benchmarked against.

#include <functional>
#include <vector>

#include "polarcrit/poly.hpp"

namespace polarcrit {

template <class F>
class PolyMatrix {
 public:
  PolyMatrix(RingPtr<F> ring, std::size_t rows, std::size_t cols);
  PolyMatrix(std::size_t rows, std::size_t cols, std::vector<Poly<F>> entries);

  const RingPtr<F>& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Poly<F>& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Poly<F>& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const std::vector<Poly<F>>& entries() const { return entries_; }

  /// Applies `fn` to every entry, e.g. a substitution into another ring.
  PolyMatrix map(const std::function<Poly<F>(const Poly<F>&)>& fn) const;
  bool operator==(const PolyMatrix& o) const;

 private:
  RingPtr<F> ring_;
  std::size_t rows_, cols_;
  std::vector<Poly<F>> entries_;
};

/// p x n matrix of partial derivatives d f_i / d X_j.
template <class F>
PolyMatrix<F> jacobian(const std::vector<Poly<F>>& polys);

/// Single row holding the gradient of `p`.
template <class F>
PolyMatrix<F> gradient_row(const Poly<F>& p);

/// Single row of constants.
template <class F>
PolyMatrix<F> row_of_constants(const RingPtr<F>& ring, const std::vector<typename F::Elem>& values);

/// Vertical concatenation; every block must have the same width.
template <class F>
PolyMatrix<F> stack(const std::vector<PolyMatrix<F>>& blocks);

/// All r x r minors, row subsets in lexicographic order and, within one row
/// subset, column subsets in lexicographic order.
template <class F>
std::vector<Poly<F>> minors(const PolyMatrix<F>& m, std::size_t r);

/// Reference implementation of `minors` (single-threaded recursion).
template <class F>
std::vector<Poly<F>> minors_serial(const PolyMatrix<F>& m, std::size_t r);

template <class F>
Poly<F> determinant(const PolyMatrix<F>& m);

/// Evaluates every entry at `point`, producing a dense matrix row-major.
template <class F>
std::vector<typename F::Elem> evaluate(const PolyMatrix<F>& m, std::span<const typename F::Elem> point);

}  // namespace polarcrit
