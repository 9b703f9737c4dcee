#include "polarcrit/dense_matrix.hpp"

#include <utility>

namespace polarcrit {

template <class F>
Matrix<F> Matrix<F>::identity(const F& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

template <class F>
Matrix<F> Matrix<F>::from_rows(const F& field, const std::vector<std::vector<Elem>>& rows) {
  std::size_t c = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw AlgebraError(ErrorCode::DimensionMismatch, "ragged rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

template <class F>
Matrix<F> Matrix<F>::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw AlgebraError(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  Matrix r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Elem& a = (*this)(i, k);
      if (field_.is_zero(a)) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) = field_.add(r(i, j), field_.mul(a, o(k, j)));
    }
  }
  return r;
}

template <class F>
Matrix<F> Matrix<F>::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw AlgebraError(ErrorCode::DimensionMismatch, "shape mismatch");
  Matrix r(field_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.add(a_[i], o.a_[i]);
  return r;
}

template <class F>
Matrix<F> Matrix<F>::scaled(const Elem& s) const {
  Matrix r(field_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.mul(a_[i], s);
  return r;
}

template <class F>
std::vector<typename F::Elem> Matrix<F>::apply(const std::vector<Elem>& x) const {
  if (x.size() != cols_) throw AlgebraError(ErrorCode::DimensionMismatch, "vector length mismatch");
  std::vector<Elem> y(rows_, field_.zero());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) y[i] = field_.add(y[i], field_.mul((*this)(i, j), x[j]));
  }
  return y;
}

template <class F>
bool Matrix<F>::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (!field_.equal(a_[i], o.a_[i])) return false;
  }
  return true;
}

template <class F>
typename F::Elem determinant(Matrix<F> m) {
  const F& field = m.field();
  if (m.rows() != m.cols()) throw AlgebraError(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  std::size_t n = m.rows();
  auto det = field.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && field.is_zero(m(piv, c))) ++piv;
    if (piv == n) return field.zero();
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
      det = field.neg(det);
    }
    det = field.mul(det, m(c, c));
    auto inv = field.inv(m(c, c));
    for (std::size_t r = c + 1; r < n; ++r) {
      if (field.is_zero(m(r, c))) continue;
      auto f = field.mul(m(r, c), inv);
      for (std::size_t j = c; j < n; ++j) field.sub_mul(m(r, j), f, m(c, j));
    }
  }
  return det;
}

template <class F>
std::size_t rank(Matrix<F> m) {
  const F& field = m.field();
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && field.is_zero(m(piv, c))) ++piv;
    if (piv == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    auto inv = field.inv(m(r, c));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (field.is_zero(m(i, c))) continue;
      auto f = field.mul(m(i, c), inv);
      for (std::size_t j = c; j < m.cols(); ++j) field.sub_mul(m(i, j), f, m(r, j));
    }
    ++r;
  }
  return r;
}

template <class F>
Matrix<F> solve(const Matrix<F>& m, const Matrix<F>& rhs) {
  const F& field = m.field();
  std::size_t n = m.rows();
  if (m.cols() != n || rhs.rows() != n) throw AlgebraError(ErrorCode::DimensionMismatch, "solve shape mismatch");
  Matrix<F> a = m, b = rhs;
  std::size_t k = b.cols();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && field.is_zero(a(piv, c))) ++piv;
    if (piv == n) throw AlgebraError(ErrorCode::InvalidArgument, "singular matrix");
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(c, j));
      for (std::size_t j = 0; j < k; ++j) std::swap(b(piv, j), b(c, j));
    }
    auto inv = field.inv(a(c, c));
    for (std::size_t j = c; j < n; ++j) a(c, j) = field.mul(a(c, j), inv);
    for (std::size_t j = 0; j < k; ++j) b(c, j) = field.mul(b(c, j), inv);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || field.is_zero(a(r, c))) continue;
      auto f = a(r, c);
      for (std::size_t j = c; j < n; ++j) field.sub_mul(a(r, j), f, a(c, j));
      for (std::size_t j = 0; j < k; ++j) field.sub_mul(b(r, j), f, b(c, j));
    }
  }
  return b;
}

template <class F>
Matrix<F> inverse(const Matrix<F>& m) {
  return solve(m, Matrix<F>::identity(m.field(), m.rows()));
}

template <class F>
UPoly<F> characteristic_polynomial(const Matrix<F>& input) {
  const F& field = input.field();
  std::size_t n = input.rows();
  if (input.cols() != n) throw AlgebraError(ErrorCode::DimensionMismatch, "charpoly of non-square matrix");
  Matrix<F> h = input;
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t c = 0; c + 2 <= n; ++c) {
    std::size_t piv = c + 1;
    while (piv < n && field.is_zero(h(piv, c))) ++piv;
    if (piv == n) continue;
    if (piv != c + 1) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(piv, j), h(c + 1, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h(i, piv), h(i, c + 1));
    }
    auto inv = field.inv(h(c + 1, c));
    for (std::size_t r = c + 2; r < n; ++r) {
      if (field.is_zero(h(r, c))) continue;
      auto f = field.mul(h(r, c), inv);
      for (std::size_t j = 0; j < n; ++j) field.sub_mul(h(r, j), f, h(c + 1, j));
      for (std::size_t i = 0; i < n; ++i) h(i, c + 1) = field.add(h(i, c + 1), field.mul(f, h(i, r)));
    }
  }
  // p_k = (T - h_kk) p_{k-1} - sum_{i<k} h_ik (prod_{j=i+1}^{k} h_{j,j-1}) p_{i-1}
  std::vector<UPoly<F>> p;
  p.reserve(n + 1);
  p.push_back(UPoly<F>::constant(field, field.one()));
  for (std::size_t k = 0; k < n; ++k) {
    UPoly<F> next = p[k] * UPoly<F>(field, {field.neg(h(k, k)), field.one()});
    auto prod = field.one();
    for (std::size_t i = k; i-- > 0;) {
      prod = field.mul(prod, h(i + 1, i));
      if (field.is_zero(prod)) break;
      auto coef = field.mul(h(i, k), prod);
      if (!field.is_zero(coef)) next = next - p[i].scaled(coef);
    }
    p.push_back(std::move(next));
  }
  return p[n];
}

#define POLARCRIT_INSTANTIATE_MATRIX(F)                                   \
  template class Matrix<F>;                                              \
  template F::Elem determinant<F>(Matrix<F>);                            \
  template std::size_t rank<F>(Matrix<F>);                               \
  template Matrix<F> inverse<F>(const Matrix<F>&);                       \
  template UPoly<F> characteristic_polynomial<F>(const Matrix<F>&);      \
  template Matrix<F> solve<F>(const Matrix<F>&, const Matrix<F>&);

POLARCRIT_INSTANTIATE_MATRIX(Rationals)
POLARCRIT_INSTANTIATE_MATRIX(PrimeField)

}  // namespace polarcrit
