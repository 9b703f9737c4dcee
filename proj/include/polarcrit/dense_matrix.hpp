#pragma once

#include <vector>

#include "polarcrit/field.hpp"
#include "polarcrit/upoly.hpp"

namespace polarcrit {

/// Row-major dense matrix over a field.
template <class F>
class Matrix {
 public:
  using Elem = typename F::Elem;

  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, field_.zero()) {}

  static Matrix identity(const F& field, std::size_t n);
  static Matrix from_rows(const F& field, const std::vector<std::vector<Elem>>& rows);

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Elem& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Elem& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix scaled(const Elem& s) const;
  std::vector<Elem> apply(const std::vector<Elem>& x) const;
  bool operator==(const Matrix& o) const;

 private:
  F field_;
  std::size_t rows_, cols_;
  std::vector<Elem> a_;
};

template <class F>
typename F::Elem determinant(Matrix<F> m);

template <class F>
std::size_t rank(Matrix<F> m);

/// Throws AlgebraError when singular.
template <class F>
Matrix<F> inverse(const Matrix<F>& m);

/// Characteristic polynomial det(T*I - m) via Hessenberg reduction.
template <class F>
UPoly<F> characteristic_polynomial(const Matrix<F>& m);

/// Solves m * X = rhs for a square invertible m, one column per right-hand side.
template <class F>
Matrix<F> solve(const Matrix<F>& m, const Matrix<F>& rhs);

}  // namespace polarcrit
