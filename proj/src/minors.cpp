#include "polarcrit/minors.hpp"

#include <cstdint>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace polarcrit {

template <class F>
PolyMatrix<F>::PolyMatrix(RingPtr<F> ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, Poly<F>(ring_)) {}

template <class F>
PolyMatrix<F>::PolyMatrix(std::size_t rows, std::size_t cols, std::vector<Poly<F>> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols || entries_.empty()) {
    throw AlgebraError(ErrorCode::DimensionMismatch, "entry count differs from rows*cols");
  }
  ring_ = entries_.front().ring();
  for (const auto& e : entries_) {
    if (!e.ring()->same_as(*ring_)) throw AlgebraError(ErrorCode::RingMismatch, "entries in different rings");
  }
}

template <class F>
PolyMatrix<F> PolyMatrix<F>::map(const std::function<Poly<F>(const Poly<F>&)>& fn) const {
  if (entries_.empty()) return *this;
  std::vector<Poly<F>> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(fn(e));
  return PolyMatrix(rows_, cols_, std::move(out));
}

template <class F>
bool PolyMatrix<F>::operator==(const PolyMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
}

template <class F>
PolyMatrix<F> jacobian(const std::vector<Poly<F>>& polys) {
  if (polys.empty()) throw AlgebraError(ErrorCode::InvalidArgument, "jacobian of an empty list");
  const auto& ring = polys.front().ring();
  std::size_t n = ring->nvars();
  PolyMatrix<F> m(ring, polys.size(), n);
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (!polys[i].ring()->same_as(*ring)) throw AlgebraError(ErrorCode::RingMismatch, "jacobian over mixed rings");
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = partial_derivative(polys[i], j);
  }
  return m;
}

template <class F>
PolyMatrix<F> gradient_row(const Poly<F>& p) {
  return jacobian(std::vector<Poly<F>>{p});
}

template <class F>
PolyMatrix<F> row_of_constants(const RingPtr<F>& ring, const std::vector<typename F::Elem>& values) {
  PolyMatrix<F> m(ring, 1, values.size());
  for (std::size_t j = 0; j < values.size(); ++j) m.at(0, j) = Poly<F>::constant(ring, values[j]);
  return m;
}

template <class F>
PolyMatrix<F> stack(const std::vector<PolyMatrix<F>>& blocks) {
  if (blocks.empty()) throw AlgebraError(ErrorCode::InvalidArgument, "stack of no blocks");
  std::size_t cols = blocks.front().cols();
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw AlgebraError(ErrorCode::DimensionMismatch, "stacked blocks differ in width");
    if (!b.ring()->same_as(*blocks.front().ring())) {
      throw AlgebraError(ErrorCode::RingMismatch, "stacked blocks in different rings");
    }
    rows += b.rows();
  }
  PolyMatrix<F> m(blocks.front().ring(), rows, cols);
  std::size_t r0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i) {
      for (std::size_t j = 0; j < cols; ++j) m.at(r0 + i, j) = b(i, j);
    }
    r0 += b.rows();
  }
  return m;
}

namespace {

using Mask = std::uint64_t;

// All k-subsets of {lo, ..., hi-1} as bitmasks, in lexicographic order.
std::vector<Mask> subsets(std::size_t lo, std::size_t hi, std::size_t k) {
  std::vector<Mask> out;
  if (k > hi - lo) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = lo + i;
  for (;;) {
    Mask m = 0;
    for (auto i : idx) m |= Mask{1} << i;
    out.push_back(m);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == hi - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::size_t lowest_bit(Mask m) { return static_cast<std::size_t>(__builtin_ctzll(m)); }

void check_minor_order(std::size_t rows, std::size_t cols, std::size_t r) {
  if (r == 0 || r > rows || r > cols) {
    throw AlgebraError(ErrorCode::InvalidArgument,
                       "minor order " + std::to_string(r) + " out of range for a " + std::to_string(rows) +
                           "x" + std::to_string(cols) + " matrix");
  }
  if (rows > 63 || cols > 63) throw AlgebraError(ErrorCode::InvalidArgument, "matrix too large for minors");
}

}  // namespace

template <class F>
std::vector<Poly<F>> minors(const PolyMatrix<F>& m, std::size_t r) {
  check_minor_order(m.rows(), m.cols(), r);
  const std::size_t R = m.rows(), C = m.cols();
  const auto& ring = m.ring();

  // Level s holds det(S, K) for row sets S whose smallest row is >= r - s
  // (only those occur when expanding r x r minors along their first row)
  // and for every column set K of size s.
  std::vector<Mask> prev_rows, prev_cols;
  std::unordered_map<Mask, std::size_t> prev_row_index, prev_col_index;
  std::vector<Poly<F>> prev;

  for (std::size_t s = 1; s <= r; ++s) {
    std::vector<Mask> rows = subsets(r - s, R, s);
    std::vector<Mask> cols = subsets(0, C, s);
    std::vector<Poly<F>> cur(rows.size() * cols.size(), Poly<F>(ring));

#pragma omp parallel for schedule(dynamic)
    for (std::size_t ri = 0; ri < rows.size(); ++ri) {
      Mask rs = rows[ri];
      std::size_t first = lowest_bit(rs);
      Mask rest = rs & (rs - 1);
      for (std::size_t ci = 0; ci < cols.size(); ++ci) {
        Mask cs = cols[ci];
        Poly<F>& out = cur[ri * cols.size() + ci];
        if (s == 1) {
          out = m(first, lowest_bit(cs));
          continue;
        }
        const std::size_t sub_row = prev_row_index.at(rest);
        bool negative = false;
        for (Mask bits = cs; bits != 0; bits &= bits - 1) {
          std::size_t col = lowest_bit(bits);
          const Poly<F>& entry = m(first, col);
          if (!entry.is_zero()) {
            const Poly<F>& sub = prev[sub_row * prev_cols.size() + prev_col_index.at(cs & ~(Mask{1} << col))];
            if (!sub.is_zero()) {
              Poly<F> term = entry * sub;
              out = negative ? out - term : out + term;
            }
          }
          negative = !negative;
        }
      }
    }

    prev = std::move(cur);
    prev_rows = std::move(rows);
    prev_cols = std::move(cols);
    prev_row_index.clear();
    prev_col_index.clear();
    for (std::size_t i = 0; i < prev_rows.size(); ++i) prev_row_index[prev_rows[i]] = i;
    for (std::size_t i = 0; i < prev_cols.size(); ++i) prev_col_index[prev_cols[i]] = i;
  }
  return prev;
}

namespace {

template <class F>
class CofactorRecursion {
 public:
  explicit CofactorRecursion(const PolyMatrix<F>& m) : m_(m) {}

  const Poly<F>& det(Mask rows, Mask cols) {
    Key key{rows, cols};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Poly<F> acc(m_.ring());
    std::size_t first = lowest_bit(rows);
    Mask rest = rows & (rows - 1);
    if (rest == 0) {
      acc = m_(first, lowest_bit(cols));
    } else {
      int sign = 1;
      for (std::size_t c = 0; c < m_.cols(); ++c) {
        if (!(cols >> c & 1)) continue;
        if (!m_(first, c).is_zero()) {
          Poly<F> term = m_(first, c) * det(rest, cols & ~(Mask{1} << c));
          acc = sign > 0 ? acc + term : acc - term;
        }
        sign = -sign;
      }
    }
    return memo_.emplace(key, std::move(acc)).first->second;
  }

 private:
  struct Key {
    Mask rows, cols;
    bool operator==(const Key& o) const { return rows == o.rows && cols == o.cols; }
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const { return std::hash<Mask>()(k.rows * 0x9E3779B97F4A7C15ull ^ k.cols); }
  };

  const PolyMatrix<F>& m_;
  std::unordered_map<Key, Poly<F>, KeyHash> memo_;
};

}  // namespace

template <class F>
std::vector<Poly<F>> minors_serial(const PolyMatrix<F>& m, std::size_t r) {
  check_minor_order(m.rows(), m.cols(), r);
  CofactorRecursion<F> rec(m);
  std::vector<Poly<F>> out;
  for (Mask rows : subsets(0, m.rows(), r)) {
    for (Mask cols : subsets(0, m.cols(), r)) out.push_back(rec.det(rows, cols));
  }
  return out;
}

template <class F>
Poly<F> determinant(const PolyMatrix<F>& m) {
  if (m.rows() != m.cols()) throw AlgebraError(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  if (m.rows() == 0) return Poly<F>::constant(m.ring(), m.ring()->field().one());
  return minors(m, m.rows()).front();
}

template <class F>
std::vector<typename F::Elem> evaluate(const PolyMatrix<F>& m, std::span<const typename F::Elem> point) {
  std::vector<typename F::Elem> out;
  out.reserve(m.entries().size());
  for (const auto& e : m.entries()) out.push_back(evaluate(e, point));
  return out;
}

#define POLARCRIT_INSTANTIATE_MINORS(F)                                                           \
  template class PolyMatrix<F>;                                                                   \
  template PolyMatrix<F> jacobian<F>(const std::vector<Poly<F>>&);                                \
  template PolyMatrix<F> gradient_row<F>(const Poly<F>&);                                         \
  template PolyMatrix<F> row_of_constants<F>(const RingPtr<F>&, const std::vector<F::Elem>&);     \
  template PolyMatrix<F> stack<F>(const std::vector<PolyMatrix<F>>&);                             \
  template std::vector<Poly<F>> minors<F>(const PolyMatrix<F>&, std::size_t);                     \
  template std::vector<Poly<F>> minors_serial<F>(const PolyMatrix<F>&, std::size_t);              \
  template Poly<F> determinant<F>(const PolyMatrix<F>&);                                          \
  template std::vector<F::Elem> evaluate<F>(const PolyMatrix<F>&, std::span<const F::Elem>);

POLARCRIT_INSTANTIATE_MINORS(Rationals)
POLARCRIT_INSTANTIATE_MINORS(PrimeField)

}  // namespace polarcrit
