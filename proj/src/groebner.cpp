#include "polarcrit/groebner.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace polarcrit {

namespace {

template <class F>
OrderedPoly<F> to_ordered(const Poly<F>& p, const MonomialOrder& order) {
  std::vector<const Term<F>*> refs;
  refs.reserve(p.size());
  for (const auto& t : p.terms()) refs.push_back(&t);
  if (!(order == MonomialOrder::grevlex())) {
    std::sort(refs.begin(), refs.end(),
              [&](const Term<F>* a, const Term<F>* b) { return order.compare(a->mono, b->mono) > 0; });
  }
  OrderedPoly<F> out;
  out.monos.reserve(refs.size());
  out.coeffs.reserve(refs.size());
  for (const auto* t : refs) {
    out.monos.push_back(t->mono);
    out.coeffs.push_back(t->coeff);
  }
  return out;
}

template <class F>
Poly<F> from_ordered(const OrderedPoly<F>& p, const RingPtr<F>& ring, const MonomialOrder& order) {
  std::vector<Term<F>> terms;
  terms.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) terms.push_back({p.monos[i], p.coeffs[i]});
  if (order == MonomialOrder::grevlex()) return Poly<F>::from_sorted_terms(ring, std::move(terms));
  return Poly<F>::from_terms(ring, std::move(terms));
}

template <class F>
void make_monic(const F& field, OrderedPoly<F>& p) {
  if (p.empty() || field.is_one(p.coeffs.front())) return;
  auto inv = field.inv(p.coeffs.front());
  for (auto& c : p.coeffs) c = field.mul(c, inv);
}

// Sum of polynomials kept as buckets of geometrically growing size. Each
// bucket is sorted increasingly so the leading term sits at the back.
template <class F>
class Geobucket {
 public:
  using Elem = typename F::Elem;
  struct Entry {
    Monomial mono;
    Elem coeff;
  };

  Geobucket(const F& field, const MonomialOrder& order) : field_(field), order_(order) {}

  void add(std::vector<Entry>&& ascending) {
    if (ascending.empty()) return;
    std::size_t k = 0;
    while (capacity(k) < ascending.size()) ++k;
    if (buckets_.size() <= k) buckets_.resize(k + 1);
    merge_into(buckets_[k], std::move(ascending));
    while (buckets_[k].size() > capacity(k)) {
      if (buckets_.size() <= k + 1) buckets_.resize(k + 2);
      std::vector<Entry> moved = std::move(buckets_[k]);
      buckets_[k].clear();
      merge_into(buckets_[k + 1], std::move(moved));
      ++k;
    }
  }

  /// Adds factor * shift * p[start..] (p sorted decreasingly).
  void add_scaled(const OrderedPoly<F>& p, std::size_t start, const Monomial& shift, const Elem& factor) {
    std::vector<Entry> v;
    v.reserve(p.size() - start);
    for (std::size_t i = p.size(); i-- > start;) {
      v.push_back({p.monos[i] * shift, field_.mul(p.coeffs[i], factor)});
    }
    add(std::move(v));
  }

  bool pop_leading(Monomial& mono, Elem& coeff) {
    for (;;) {
      int best = -1;
      for (std::size_t k = 0; k < buckets_.size(); ++k) {
        if (buckets_[k].empty()) continue;
        if (best < 0 || order_.compare(buckets_[k].back().mono, buckets_[best].back().mono) > 0) {
          best = static_cast<int>(k);
        }
      }
      if (best < 0) return false;
      mono = buckets_[best].back().mono;
      coeff = buckets_[best].back().coeff;
      buckets_[best].pop_back();
      for (std::size_t k = 0; k < buckets_.size(); ++k) {
        if (static_cast<int>(k) != best && !buckets_[k].empty() && buckets_[k].back().mono == mono) {
          coeff = field_.add(coeff, buckets_[k].back().coeff);
          buckets_[k].pop_back();
        }
      }
      if (!field_.is_zero(coeff)) return true;
    }
  }

 private:
  static std::size_t capacity(std::size_t k) { return std::size_t{4} << (2 * k); }

  void merge_into(std::vector<Entry>& dst, std::vector<Entry>&& src) {
    if (dst.empty()) {
      dst = std::move(src);
      return;
    }
    std::vector<Entry> out;
    out.reserve(dst.size() + src.size());
    std::size_t i = 0, j = 0;
    while (i < dst.size() && j < src.size()) {
      int c = order_.compare(dst[i].mono, src[j].mono);
      if (c < 0) {
        out.push_back(std::move(dst[i++]));
      } else if (c > 0) {
        out.push_back(std::move(src[j++]));
      } else {
        auto s = field_.add(dst[i].coeff, src[j].coeff);
        if (!field_.is_zero(s)) out.push_back({dst[i].mono, s});
        ++i;
        ++j;
      }
    }
    for (; i < dst.size(); ++i) out.push_back(std::move(dst[i]));
    for (; j < src.size(); ++j) out.push_back(std::move(src[j]));
    dst = std::move(out);
  }

  const F& field_;
  const MonomialOrder& order_;
  std::vector<std::vector<Entry>> buckets_;
};

// Full reduction against a list of monic polynomials.
template <class F>
class Reducer {
 public:
  Reducer(const F& field, const MonomialOrder& order) : field_(field), order_(order) {}

  void set(std::vector<const OrderedPoly<F>*> polys) {
    polys_ = std::move(polys);
    masks_.clear();
    for (const auto* p : polys_) masks_.push_back(p->monos.front().divmask());
  }

  const OrderedPoly<F>* find(const Monomial& m) const {
    std::uint64_t mask = m.divmask();
    for (std::size_t i = 0; i < polys_.size(); ++i) {
      if ((masks_[i] & ~mask) == 0 && polys_[i]->monos.front().divides(m)) return polys_[i];
    }
    return nullptr;
  }

  OrderedPoly<F> reduce(Geobucket<F>& bucket, std::size_t* steps) const {
    OrderedPoly<F> out;
    Monomial m;
    typename F::Elem c = field_.zero();
    while (bucket.pop_leading(m, c)) {
      if (const auto* g = find(m)) {
        bucket.add_scaled(*g, 1, m / g->monos.front(), field_.neg(c));
        if (steps) ++*steps;
      } else {
        out.monos.push_back(m);
        out.coeffs.push_back(c);
      }
    }
    return out;
  }

  OrderedPoly<F> reduce(const OrderedPoly<F>& p, std::size_t* steps = nullptr) const {
    Geobucket<F> bucket(field_, order_);
    bucket.add_scaled(p, 0, Monomial{}, field_.one());
    return reduce(bucket, steps);
  }

 private:
  const F& field_;
  const MonomialOrder& order_;
  std::vector<const OrderedPoly<F>*> polys_;
  std::vector<std::uint64_t> masks_;
};

template <class F>
class BuchbergerEngine {
 public:
  BuchbergerEngine(const F& field, const MonomialOrder& order) : field_(field), order_(order), reducer_(field, order) {}

  std::vector<OrderedPoly<F>> run(std::vector<OrderedPoly<F>> inputs, GroebnerStats& stats) {
    inputs_ = std::move(inputs);
    std::size_t next_input = 0;
    while (!unit_ && (next_input < inputs_.size() || !pairs_.empty())) {
      std::size_t best = select_pair();
      bool take_input = next_input < inputs_.size() &&
                        (pairs_.empty() || order_.compare(inputs_[next_input].monos.front(), pairs_[best].lcm) <= 0);
      Geobucket<F> bucket(field_, order_);
      if (take_input) {
        bucket.add_scaled(inputs_[next_input], 0, Monomial{}, field_.one());
        ++next_input;
      } else {
        Pair p = pairs_[best];
        pairs_[best] = pairs_.back();
        pairs_.pop_back();
        ++stats.pairs_reduced;
        const auto& a = polys_[p.i];
        const auto& b = polys_[p.j];
        bucket.add_scaled(a, 1, p.lcm / a.monos.front(), field_.one());
        bucket.add_scaled(b, 1, p.lcm / b.monos.front(), field_.neg(field_.one()));
      }
      OrderedPoly<F> h = reducer_.reduce(bucket, &stats.reduction_steps);
      if (h.empty()) {
        if (!take_input) ++stats.zero_reductions;
        continue;
      }
      make_monic(field_, h);
      insert(std::move(h), stats);
    }
    return finish();
  }

 private:
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };

  std::size_t select_pair() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      int c = order_.compare(pairs_[k].lcm, pairs_[best].lcm);
      if (c < 0 || (c == 0 && std::tie(pairs_[k].j, pairs_[k].i) < std::tie(pairs_[best].j, pairs_[best].i))) {
        best = k;
      }
    }
    return best;
  }

  void insert(OrderedPoly<F> h, GroebnerStats& stats) {
    std::size_t idx = polys_.size();
    if (h.monos.front().is_one()) unit_ = true;
    polys_.push_back(std::move(h));
    update(idx, stats);
    std::vector<const OrderedPoly<F>*> view;
    for (auto a : active_) view.push_back(&polys_[a]);
    reducer_.set(std::move(view));
  }

  // Gebauer-Moeller installation of the new element h.
  void update(std::size_t h, GroebnerStats& stats) {
    const Monomial lh = polys_[h].monos.front();
    struct Candidate {
      std::size_t g;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Candidate> cands;
    for (auto g : active_) {
      const Monomial& lg = polys_[g].monos.front();
      cands.push_back({g, lh.lcm(lg), lh.coprime(lg)});
    }
    std::vector<Candidate> kept;
    for (std::size_t a = 0; a < cands.size(); ++a) {
      bool keep = cands[a].coprime;
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < cands.size() && keep; ++b) {
          if (cands[b].lcm.divides(cands[a].lcm)) keep = false;
        }
        for (const auto& d : kept) {
          if (!keep) break;
          if (d.lcm.divides(cands[a].lcm)) keep = false;
        }
      }
      if (keep) kept.push_back(cands[a]);
    }
    std::vector<Pair> survivors;
    survivors.reserve(pairs_.size());
    for (const auto& p : pairs_) {
      bool drop = lh.divides(p.lcm) && lh.lcm(polys_[p.i].monos.front()) != p.lcm &&
                  lh.lcm(polys_[p.j].monos.front()) != p.lcm;
      if (!drop) survivors.push_back(p);
    }
    pairs_ = std::move(survivors);
    for (const auto& c : kept) {
      if (c.coprime) continue;
      pairs_.push_back({c.g, h, c.lcm});
      ++stats.pairs_created;
    }
    std::vector<std::size_t> still;
    for (auto g : active_) {
      if (!lh.divides(polys_[g].monos.front())) still.push_back(g);
    }
    still.push_back(h);
    active_ = std::move(still);
  }

  std::vector<OrderedPoly<F>> finish() {
    std::vector<OrderedPoly<F>> out;
    if (unit_) {
      OrderedPoly<F> one;
      one.monos.push_back(Monomial{});
      one.coeffs.push_back(field_.one());
      out.push_back(std::move(one));
      return out;
    }
    for (auto a : active_) {
      const auto& g = polys_[a];
      OrderedPoly<F> tail;
      tail.monos.assign(g.monos.begin() + 1, g.monos.end());
      tail.coeffs.assign(g.coeffs.begin() + 1, g.coeffs.end());
      OrderedPoly<F> reduced;
      reduced.monos.push_back(g.monos.front());
      reduced.coeffs.push_back(g.coeffs.front());
      if (!tail.empty()) {
        OrderedPoly<F> r = reducer_.reduce(tail);
        reduced.monos.insert(reduced.monos.end(), r.monos.begin(), r.monos.end());
        reduced.coeffs.insert(reduced.coeffs.end(), r.coeffs.begin(), r.coeffs.end());
      }
      out.push_back(std::move(reduced));
    }
    std::sort(out.begin(), out.end(), [&](const OrderedPoly<F>& a, const OrderedPoly<F>& b) {
      return order_.compare(a.monos.front(), b.monos.front()) < 0;
    });
    return out;
  }

  const F& field_;
  const MonomialOrder& order_;
  Reducer<F> reducer_;
  std::vector<OrderedPoly<F>> inputs_;
  std::vector<OrderedPoly<F>> polys_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
  bool unit_ = false;
};

template <class F>
struct PolyKeyHash {
  std::size_t operator()(const OrderedPoly<F>& p) const {
    std::size_t h = p.size();
    for (const auto& m : p.monos) h = h * 31 + m.hash();
    return h;
  }
};

template <class F>
struct PolyKeyEq {
  const F* field;
  bool operator()(const OrderedPoly<F>& a, const OrderedPoly<F>& b) const {
    if (a.monos != b.monos) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!field->equal(a.coeffs[i], b.coeffs[i])) return false;
    }
    return true;
  }
};

}  // namespace

template <class F>
GroebnerBasis<F>::GroebnerBasis(RingPtr<F> ring, MonomialOrder order, std::vector<OrderedPoly<F>> reduced,
                                 GroebnerStats stats)
    : ring_(std::move(ring)), order_(std::move(order)), ordered_(std::move(reduced)), stats_(stats) {
  for (const auto& p : ordered_) {
    generators_.push_back(from_ordered(p, ring_, order_));
    leads_.push_back(p.monos.front());
    masks_.push_back(p.monos.front().divmask());
  }
}

template <class F>
GroebnerBasis<F> buchberger(const std::vector<Poly<F>>& gens, const MonomialOrder& order) {
  if (gens.empty()) throw AlgebraError(ErrorCode::InvalidArgument, "no generators");
  const RingPtr<F>& ring = gens.front().ring();
  const F& field = ring->field();
  GroebnerStats stats;
  std::vector<OrderedPoly<F>> inputs;
  std::unordered_set<OrderedPoly<F>, PolyKeyHash<F>, PolyKeyEq<F>> seen(16, PolyKeyHash<F>{}, PolyKeyEq<F>{&field});
  for (const auto& g : gens) {
    if (!g.ring()->same_as(*ring)) throw AlgebraError(ErrorCode::RingMismatch, "generators in different rings");
    if (g.is_zero()) continue;
    OrderedPoly<F> op = to_ordered(g, order);
    make_monic(field, op);
    if (seen.insert(op).second) inputs.push_back(std::move(op));
  }
  stats.input_polynomials = inputs.size();
  std::stable_sort(inputs.begin(), inputs.end(), [&](const OrderedPoly<F>& a, const OrderedPoly<F>& b) {
    int c = order.compare(a.monos.front(), b.monos.front());
    return c < 0 || (c == 0 && a.size() < b.size());
  });
  std::vector<OrderedPoly<F>> basis;
  if (!inputs.empty()) {
    BuchbergerEngine<F> engine(field, order);
    basis = engine.run(std::move(inputs), stats);
  }
  return GroebnerBasis<F>(ring, order, std::move(basis), stats);
}

template <class F>
Poly<F> normal_form(const Poly<F>& p, const GroebnerBasis<F>& gb) {
  if (!p.ring()->same_as(*gb.ring())) throw AlgebraError(ErrorCode::RingMismatch, "normal form across rings");
  if (p.is_zero() || gb.ordered().empty()) return p;
  Reducer<F> reducer(gb.ring()->field(), gb.order());
  std::vector<const OrderedPoly<F>*> view;
  for (const auto& g : gb.ordered()) view.push_back(&g);
  reducer.set(std::move(view));
  return from_ordered(reducer.reduce(to_ordered(p, gb.order())), gb.ring(), gb.order());
}

template <class F>
int affine_dimension(const GroebnerBasis<F>& gb) {
  if (gb.is_unit()) return -1;
  std::size_t n = gb.ring()->nvars();
  std::vector<std::uint32_t> supports;
  for (const auto& m : gb.leading_monomials()) {
    std::uint32_t s = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (m[v] != 0) s |= 1u << v;
    }
    supports.push_back(s);
  }
  int best = 0;
  for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
    int size = __builtin_popcount(subset);
    if (size <= best) continue;
    bool free = std::none_of(supports.begin(), supports.end(),
                             [&](std::uint32_t s) { return (s & ~subset) == 0; });
    if (free) best = size;
  }
  return best;
}

template <class F>
std::vector<Monomial> quotient_basis(const GroebnerBasis<F>& gb) {
  if (gb.is_unit()) return {};
  if (affine_dimension(gb) != 0) throw AlgebraError(ErrorCode::NotFinite, "ideal is not zero-dimensional");
  const auto& leads = gb.leading_monomials();
  const auto& masks = gb.lead_masks();
  auto standard = [&](const Monomial& m) {
    std::uint64_t mask = m.divmask();
    for (std::size_t i = 0; i < leads.size(); ++i) {
      if ((masks[i] & ~mask) == 0 && leads[i].divides(m)) return false;
    }
    return true;
  };
  std::size_t n = gb.ring()->nvars();
  std::vector<Monomial> out{Monomial{}};
  std::unordered_set<Monomial, MonomialHash> seen{Monomial{}};
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (std::size_t v = 0; v < n; ++v) {
      Monomial m = out[k] * Monomial::variable(v);
      if (seen.insert(m).second && standard(m)) out.push_back(m);
    }
  }
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return gb.order().less(a, b); });
  return out;
}

template <class F>
std::optional<std::size_t> quotient_dimension(const GroebnerBasis<F>& gb) {
  if (gb.is_unit()) return 0;
  if (affine_dimension(gb) != 0) return std::nullopt;
  return quotient_basis(gb).size();
}

namespace {

template <class F>
class QuotientCoordinates {
 public:
  QuotientCoordinates(const GroebnerBasis<F>& gb, const std::vector<Monomial>& monomials)
      : gb_(gb), reducer_(gb.ring()->field(), gb.order()) {
    for (std::size_t i = 0; i < monomials.size(); ++i) index_[monomials[i]] = i;
    std::vector<const OrderedPoly<F>*> view;
    for (const auto& g : gb.ordered()) view.push_back(&g);
    reducer_.set(std::move(view));
  }

  std::vector<typename F::Elem> of(const Poly<F>& p) const {
    const F& field = gb_.ring()->field();
    std::vector<typename F::Elem> out(index_.size(), field.zero());
    if (p.is_zero()) return out;
    OrderedPoly<F> nf = reducer_.reduce(to_ordered(p, gb_.order()));
    for (std::size_t i = 0; i < nf.size(); ++i) out[index_.at(nf.monos[i])] = nf.coeffs[i];
    return out;
  }

  // Coordinates of c * m for a single monomial, skipping reduction when m is standard.
  std::vector<typename F::Elem> of_monomial(const Monomial& m) const {
    const F& field = gb_.ring()->field();
    if (auto it = index_.find(m); it != index_.end()) {
      std::vector<typename F::Elem> out(index_.size(), field.zero());
      out[it->second] = field.one();
      return out;
    }
    return of(Poly<F>::monomial(gb_.ring(), m, field.one()));
  }

 private:
  const GroebnerBasis<F>& gb_;
  Reducer<F> reducer_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

template <class F>
Matrix<F> multiplication_columns(const GroebnerBasis<F>& gb, const std::vector<Monomial>& basis,
                                 const Poly<F>& form, bool parallel) {
  if (!form.ring()->same_as(*gb.ring())) throw AlgebraError(ErrorCode::RingMismatch, "form in another ring");
  const F& field = gb.ring()->field();
  QuotientCoordinates<F> coords(gb, basis);
  std::size_t D = basis.size();
  Matrix<F> m(field, D, D);
  auto column = [&](std::size_t k) {
    std::vector<typename F::Elem> col;
    if (form.size() == 1 && field.is_one(form.leading().coeff)) {
      col = coords.of_monomial(form.leading().mono * basis[k]);
    } else {
      col = coords.of(form.mul_term(basis[k], field.one()));
    }
    for (std::size_t i = 0; i < D; ++i) m(i, k) = col[i];
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::size_t k = 0; k < D; ++k) column(k);
  } else {
    for (std::size_t k = 0; k < D; ++k) column(k);
  }
  return m;
}

}  // namespace

template <class F>
Quotient<F>::Quotient(std::shared_ptr<const GroebnerBasis<F>> gb) : gb_(std::move(gb)) {
  monomials_ = quotient_basis(*gb_);
  if (monomials_.empty()) throw AlgebraError(ErrorCode::NotFinite, "quotient of the unit ideal is trivial");
  for (std::size_t v = 0; v < gb_->ring()->nvars(); ++v) {
    variable_matrices_.push_back(
        multiplication_columns(*gb_, monomials_, Poly<F>::variable(gb_->ring(), v), true));
  }
}

template <class F>
std::vector<typename F::Elem> Quotient<F>::coordinates(const Poly<F>& p) const {
  return QuotientCoordinates<F>(*gb_, monomials_).of(p);
}

template <class F>
Matrix<F> Quotient<F>::multiplication(const Poly<F>& p) const {
  const F& f = field();
  if (p.total_degree() <= 1) {
    Matrix<F> m = Matrix<F>::identity(f, dimension()).scaled(p.constant_term());
    for (const auto& t : p.terms()) {
      if (t.mono.is_one()) continue;
      for (std::size_t v = 0; v < gb_->ring()->nvars(); ++v) {
        if (t.mono[v] == 1) m = m + variable_matrices_[v].scaled(t.coeff);
      }
    }
    return m;
  }
  return multiplication_columns(*gb_, monomials_, p, true);
}

template <class F>
Matrix<F> multiplication_matrix(const GroebnerBasis<F>& gb, const Poly<F>& form) {
  return multiplication_columns(gb, quotient_basis(gb), form, true);
}

template <class F>
Matrix<F> multiplication_matrix_serial(const GroebnerBasis<F>& gb, const Poly<F>& form) {
  return multiplication_columns(gb, quotient_basis(gb), form, false);
}

#define POLARCRIT_INSTANTIATE_GROEBNER(F)                                                         \
  template class GroebnerBasis<F>;                                                                \
  template class Quotient<F>;                                                                     \
  template GroebnerBasis<F> buchberger<F>(const std::vector<Poly<F>>&, const MonomialOrder&);     \
  template Poly<F> normal_form<F>(const Poly<F>&, const GroebnerBasis<F>&);                       \
  template std::vector<Monomial> quotient_basis<F>(const GroebnerBasis<F>&);                      \
  template std::optional<std::size_t> quotient_dimension<F>(const GroebnerBasis<F>&);             \
  template int affine_dimension<F>(const GroebnerBasis<F>&);                                      \
  template Matrix<F> multiplication_matrix<F>(const GroebnerBasis<F>&, const Poly<F>&);           \
  template Matrix<F> multiplication_matrix_serial<F>(const GroebnerBasis<F>&, const Poly<F>&);

POLARCRIT_INSTANTIATE_GROEBNER(Rationals)
POLARCRIT_INSTANTIATE_GROEBNER(PrimeField)

}  // namespace polarcrit
