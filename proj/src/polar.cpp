#include "polarcrit/polar.hpp"

#include "polarcrit/random.hpp"

namespace polarcrit {

template <class F>
void VarietySpec<F>::validate() const {
  if (generators.empty()) throw AlgebraError(ErrorCode::InvalidArgument, "variety has no generators");
  for (const auto& f : generators) {
    if (!f.ring()->same_as(*ring())) throw AlgebraError(ErrorCode::RingMismatch, "generators in different rings");
  }
  if (dim > nvars()) throw AlgebraError(ErrorCode::DimensionMismatch, "dimension exceeds number of variables");
}

template <class F>
DirectionSequence<F> DirectionSequence<F>::prefix(std::size_t k) const {
  if (k > count()) throw AlgebraError(ErrorCode::DimensionMismatch, "not enough direction rows");
  Matrix<F> m(rows.field(), k, width());
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < width(); ++c) m(r, c) = rows(r, c);
  }
  return {std::move(m), seed};
}

namespace {

template <class F>
PolyMatrix<F> direction_block(const RingPtr<F>& ring, const DirectionSequence<F>& a, std::size_t i) {
  PolyMatrix<F> m(ring, i, a.width());
  for (std::size_t r = 0; r < i; ++r) {
    for (std::size_t c = 0; c < a.width(); ++c) m.at(r, c) = Poly<F>::constant(ring, a.rows(r, c));
  }
  return m;
}

template <class F>
void check_directions(const VarietySpec<F>& v, const DirectionSequence<F>& a, std::size_t i) {
  if (a.width() != v.nvars()) throw AlgebraError(ErrorCode::DimensionMismatch, "direction width differs from n");
  if (a.count() < i) throw AlgebraError(ErrorCode::DimensionMismatch, "fewer direction rows than i");
}

template <class F>
std::vector<Poly<F>> with_minors(const VarietySpec<F>& v, const PolyMatrix<F>& m, std::size_t order) {
  std::vector<Poly<F>> out = v.generators;
  for (auto& p : minors(m, order)) {
    if (!p.is_zero()) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

template <class F>
std::vector<Poly<F>> crit_ideal(const VarietySpec<F>& v, const Poly<F>& g, const DirectionSequence<F>& a,
                                std::size_t i) {
  v.validate();
  if (!g.ring()->same_as(*v.ring())) throw AlgebraError(ErrorCode::RingMismatch, "objective in another ring");
  if (i > v.dim) throw AlgebraError(ErrorCode::DimensionMismatch, "index i exceeds dimension");
  check_directions(v, a, i);
  std::size_t order = v.codim() + i + 1;
  if (order > v.nvars()) {
    throw AlgebraError(ErrorCode::Degenerate, "minor order " + std::to_string(order) + " exceeds " +
                                                  std::to_string(v.nvars()) + " columns; W would be all of V");
  }
  std::vector<PolyMatrix<F>> blocks{jacobian(v.generators), gradient_row(g)};
  if (i > 0) blocks.push_back(direction_block(v.ring(), a, i));
  PolyMatrix<F> m = stack(blocks);
  if (order > m.rows()) throw AlgebraError(ErrorCode::DimensionMismatch, "fewer generators than codimension");
  return with_minors(v, m, order);
}

template <class F>
std::vector<Poly<F>> classical_polar_ideal(const VarietySpec<F>& v, const DirectionSequence<F>& a, std::size_t i) {
  v.validate();
  if (i < 1 || i > v.dim) throw AlgebraError(ErrorCode::DimensionMismatch, "polar index outside 1..d");
  check_directions(v, a, i);
  PolyMatrix<F> m = stack(std::vector<PolyMatrix<F>>{jacobian(v.generators), direction_block(v.ring(), a, i)});
  std::size_t order = v.codim() + i;
  if (order > m.rows()) throw AlgebraError(ErrorCode::DimensionMismatch, "fewer generators than codimension");
  return with_minors(v, m, order);
}

template <class F>
ExtendedSystem<F> extend_system(const VarietySpec<F>& v, const Poly<F>& g, const DirectionSequence<F>& a) {
  v.validate();
  if (!g.ring()->same_as(*v.ring())) throw AlgebraError(ErrorCode::RingMismatch, "objective in another ring");
  std::size_t n = v.nvars();
  if (a.count() > 0 && a.width() != n) throw AlgebraError(ErrorCode::DimensionMismatch, "direction width");
  RingPtr<F> ext = objective_ring(v.ring());
  VarietySpec<F> variety;
  for (const auto& f : v.generators) variety.generators.push_back(embed(f, ext));
  variety.generators.push_back(embed(g, ext) - Poly<F>::variable(ext, n));
  variety.dim = v.dim;
  variety.smooth_asserted = v.smooth_asserted;
  const F& field = v.ring()->field();
  Matrix<F> rows(field, a.count() + 1, n + 1);
  rows(0, n) = field.one();
  for (std::size_t r = 0; r < a.count(); ++r) {
    for (std::size_t c = 0; c < n; ++c) rows(r + 1, c) = a.rows(r, c);
  }
  return {std::move(variety), {std::move(rows), a.seed}};
}

template <class F>
DirectionSequence<F> random_directions(std::uint64_t seed, std::size_t i, std::size_t n, const F& field) {
  if (i > n) throw AlgebraError(ErrorCode::InvalidArgument, "more directions than variables");
  Rng rng(seed);
  for (int attempt = 0; attempt < 32; ++attempt) {
    Matrix<F> m(field, i, n);
    for (std::size_t r = 0; r < i; ++r) {
      for (std::size_t c = 0; c < n; ++c) m(r, c) = field.from_int(draw_nonzero(rng, kDirectionBound));
    }
    if (rank(m) == i) return {std::move(m), seed};
  }
  throw AlgebraError(ErrorCode::Fail, "could not draw independent directions");
}

#define POLARCRIT_INSTANTIATE_POLAR(F)                                                                      \
  template struct VarietySpec<F>;                                                                           \
  template struct DirectionSequence<F>;                                                                     \
  template std::vector<Poly<F>> crit_ideal<F>(const VarietySpec<F>&, const Poly<F>&,                        \
                                              const DirectionSequence<F>&, std::size_t);                    \
  template std::vector<Poly<F>> classical_polar_ideal<F>(const VarietySpec<F>&, const DirectionSequence<F>&, \
                                                         std::size_t);                                      \
  template ExtendedSystem<F> extend_system<F>(const VarietySpec<F>&, const Poly<F>&,                        \
                                              const DirectionSequence<F>&);                                 \
  template DirectionSequence<F> random_directions<F>(std::uint64_t, std::size_t, std::size_t, const F&);

POLARCRIT_INSTANTIATE_POLAR(Rationals)
POLARCRIT_INSTANTIATE_POLAR(PrimeField)

}  // namespace polarcrit
