#include "polarcrit/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace polarcrit {

namespace {

const MonomialOrder kCanonical = MonomialOrder::grevlex();

bool valid_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  });
}

template <class F>
void check_same_ring(const Poly<F>& a, const Poly<F>& b) {
  if (!a.ring()->same_as(*b.ring())) {
    throw AlgebraError(ErrorCode::RingMismatch, "operands live in different rings");
  }
}

// Merges two canonical term vectors, computing a + s*b.
template <class F>
std::vector<Term<F>> merge_add(const F& field, const std::vector<Term<F>>& a,
                               const std::vector<Term<F>>& b, bool subtract) {
  std::vector<Term<F>> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = kCanonical.compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].mono, subtract ? field.neg(b[j].coeff) : b[j].coeff});
      ++j;
    } else {
      auto s = subtract ? field.sub(a[i].coeff, b[j].coeff) : field.add(a[i].coeff, b[j].coeff);
      if (!field.is_zero(s)) out.push_back({a[i].mono, s});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back({b[j].mono, subtract ? field.neg(b[j].coeff) : b[j].coeff});
  }
  return out;
}

}  // namespace

template <class F>
Ring<F>::Ring(F field, std::vector<std::string> names) : field_(std::move(field)), names_(std::move(names)) {
  if (names_.size() > kMaxVariables) {
    throw AlgebraError(ErrorCode::InvalidArgument,
                       "at most " + std::to_string(kMaxVariables) + " variables are supported");
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!valid_identifier(names_[i])) {
      throw AlgebraError(ErrorCode::InvalidArgument, "invalid variable name '" + names_[i] + "'");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) {
        throw AlgebraError(ErrorCode::InvalidArgument, "duplicate variable '" + names_[i] + "'");
      }
    }
  }
}

template <class F>
std::optional<std::size_t> Ring<F>::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

template <class F>
RingPtr<F> extend_ring(const RingPtr<F>& ring, const std::string& hint) {
  std::string name = hint;
  while (ring->index_of(name)) name += "'";
  auto names = ring->names();
  names.push_back(name);
  return make_ring(ring->field(), std::move(names));
}

template <class F>
Poly<F> Poly<F>::constant(RingPtr<F> ring, const Elem& c) {
  Poly p(std::move(ring));
  if (!p.field().is_zero(c)) p.terms_.push_back({Monomial{}, c});
  return p;
}

template <class F>
Poly<F> Poly<F>::variable(RingPtr<F> ring, std::size_t index) {
  if (index >= ring->nvars()) {
    throw AlgebraError(ErrorCode::InvalidArgument, "variable index out of range");
  }
  Poly p(std::move(ring));
  p.terms_.push_back({Monomial::variable(index), p.field().one()});
  return p;
}

template <class F>
Poly<F> Poly<F>::monomial(RingPtr<F> ring, const Monomial& m, const Elem& c) {
  Poly p(std::move(ring));
  if (!p.field().is_zero(c)) p.terms_.push_back({m, c});
  return p;
}

template <class F>
Poly<F> Poly<F>::from_terms(RingPtr<F> ring, std::vector<TermT> terms) {
  Poly p(std::move(ring));
  const F& field = p.field();
  std::sort(terms.begin(), terms.end(),
            [](const TermT& a, const TermT& b) { return kCanonical.compare(a.mono, b.mono) > 0; });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff = field.add(p.terms_.back().coeff, t.coeff);
    } else {
      if (!p.terms_.empty() && field.is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && field.is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
  return p;
}

template <class F>
Poly<F> Poly<F>::from_sorted_terms(RingPtr<F> ring, std::vector<TermT> terms) {
  Poly p(std::move(ring));
  p.terms_ = std::move(terms);
  return p;
}

template <class F>
int Poly<F>::degree_in(std::size_t var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono[var]));
  return d;
}

template <class F>
typename Poly<F>::Elem Poly<F>::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return field().zero();
}

template <class F>
typename Poly<F>::Elem Poly<F>::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const TermT& t, const Monomial& x) {
    return kCanonical.compare(t.mono, x) > 0;
  });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return field().zero();
}

template <class F>
Poly<F> Poly<F>::operator+(const Poly& o) const {
  check_same_ring(*this, o);
  return from_sorted_terms(ring_, merge_add(field(), terms_, o.terms_, false));
}

template <class F>
Poly<F> Poly<F>::operator-(const Poly& o) const {
  check_same_ring(*this, o);
  return from_sorted_terms(ring_, merge_add(field(), terms_, o.terms_, true));
}

template <class F>
Poly<F> Poly<F>::operator-() const {
  Poly r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, field().neg(t.coeff)});
  return r;
}

template <class F>
Poly<F> Poly<F>::scaled(const Elem& c) const {
  Poly r(ring_);
  if (field().is_zero(c)) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, field().mul(t.coeff, c)});
  return r;
}

template <class F>
Poly<F> Poly<F>::mul_term(const Monomial& m, const Elem& c) const {
  Poly r(ring_);
  if (field().is_zero(c)) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, field().mul(t.coeff, c)});
  return r;
}

template <class F>
Poly<F> Poly<F>::operator*(const Poly& o) const {
  check_same_ring(*this, o);
  if (terms_.empty() || o.terms_.empty()) return Poly(ring_);
  const Poly& small = terms_.size() <= o.terms_.size() ? *this : o;
  const Poly& big = terms_.size() <= o.terms_.size() ? o : *this;
  if (small.size() <= 8) {
    std::vector<TermT> acc;
    for (const auto& t : small.terms_) {
      acc = merge_add(field(), acc, big.mul_term(t.mono, t.coeff).terms_, false);
    }
    return from_sorted_terms(ring_, std::move(acc));
  }
  std::vector<TermT> all;
  all.reserve(small.size() * big.size());
  for (const auto& a : small.terms_) {
    for (const auto& b : big.terms_) all.push_back({a.mono * b.mono, field().mul(a.coeff, b.coeff)});
  }
  return from_terms(ring_, std::move(all));
}

template <class F>
Poly<F> Poly<F>::pow(unsigned e) const {
  Poly result = constant(ring_, field().one());
  Poly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

template <class F>
Poly<F> Poly<F>::monic() const {
  if (terms_.empty()) return *this;
  return scaled(field().inv(terms_.front().coeff));
}

template <class F>
bool Poly<F>::operator==(const Poly& o) const {
  if (!ring_->same_as(*o.ring_) || terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].mono != o.terms_[i].mono || !field().equal(terms_[i].coeff, o.terms_[i].coeff)) {
      return false;
    }
  }
  return true;
}

template <class F>
Poly<F> partial_derivative(const Poly<F>& p, std::size_t var_index) {
  if (var_index >= p.ring()->nvars()) {
    throw AlgebraError(ErrorCode::InvalidArgument, "variable index out of range");
  }
  const F& field = p.field();
  std::vector<Term<F>> out;
  for (const auto& t : p.terms()) {
    auto e = t.mono[var_index];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(var_index, static_cast<Monomial::Exponent>(e - 1));
    auto c = field.mul(t.coeff, field.from_int(e));
    if (!field.is_zero(c)) out.push_back({m, c});
  }
  // Lowering one exponent by one keeps grevlex order among surviving terms.
  return Poly<F>::from_sorted_terms(p.ring(), std::move(out));
}

template <class F>
typename F::Elem evaluate(const Poly<F>& p, std::span<const typename F::Elem> point) {
  const F& field = p.field();
  std::size_t n = p.ring()->nvars();
  if (point.size() != n) {
    throw AlgebraError(ErrorCode::DimensionMismatch, "point length differs from number of variables");
  }
  std::vector<std::vector<typename F::Elem>> powers(n, {field.one()});
  auto power = [&](std::size_t v, std::size_t e) -> const typename F::Elem& {
    auto& table = powers[v];
    while (table.size() <= e) table.push_back(field.mul(table.back(), point[v]));
    return table[e];
  };
  auto sum = field.zero();
  for (const auto& t : p.terms()) {
    auto c = t.coeff;
    for (std::size_t v = 0; v < n; ++v) {
      if (t.mono[v] != 0) c = field.mul(c, power(v, t.mono[v]));
    }
    sum = field.add(sum, c);
  }
  return sum;
}

template <class F>
Poly<F> compose(const Poly<F>& p, const std::vector<Poly<F>>& images) {
  std::size_t n = p.ring()->nvars();
  if (images.size() != n) {
    throw AlgebraError(ErrorCode::DimensionMismatch, "one image per variable is required");
  }
  if (n == 0) {
    throw AlgebraError(ErrorCode::InvalidArgument, "compose needs at least one variable");
  }
  const RingPtr<F>& target = images.front().ring();
  for (const auto& img : images) {
    if (!img.ring()->same_as(*target)) {
      throw AlgebraError(ErrorCode::RingMismatch, "substituted polynomials live in different rings");
    }
  }
  std::vector<std::vector<Poly<F>>> powers(n);
  for (std::size_t v = 0; v < n; ++v) powers[v].push_back(Poly<F>::constant(target, target->field().one()));
  auto power = [&](std::size_t v, std::size_t e) -> const Poly<F>& {
    auto& table = powers[v];
    while (table.size() <= e) table.push_back(table.back() * images[v]);
    return table[e];
  };
  std::vector<Term<F>> acc;
  for (const auto& t : p.terms()) {
    Poly<F> prod = Poly<F>::constant(target, t.coeff);
    for (std::size_t v = 0; v < n && !prod.is_zero(); ++v) {
      if (t.mono[v] != 0) prod = prod * power(v, t.mono[v]);
    }
    for (const auto& term : prod.terms()) acc.push_back(term);
  }
  return Poly<F>::from_terms(target, std::move(acc));
}

template <class F>
Poly<F> substitute(const Poly<F>& p, const std::map<std::size_t, Poly<F>>& assignments,
                   const RingPtr<F>& target) {
  std::vector<Poly<F>> images;
  const auto& names = p.ring()->names();
  for (std::size_t v = 0; v < names.size(); ++v) {
    auto it = assignments.find(v);
    if (it != assignments.end()) {
      if (!it->second.ring()->same_as(*target)) {
        throw AlgebraError(ErrorCode::RingMismatch, "assignment for '" + names[v] + "' is in another ring");
      }
      images.push_back(it->second);
    } else if (auto idx = target->index_of(names[v])) {
      images.push_back(Poly<F>::variable(target, *idx));
    } else if (p.degree_in(v) <= 0) {
      images.push_back(Poly<F>(target));
    } else {
      throw AlgebraError(ErrorCode::RingMismatch, "variable '" + names[v] + "' has no image");
    }
  }
  if (images.empty()) return Poly<F>::constant(target, p.constant_term());
  return compose(p, images);
}

template <class F>
Poly<F> embed(const Poly<F>& p, const RingPtr<F>& target) {
  if (p.ring()->same_as(*target)) return Poly<F>::from_sorted_terms(target, p.terms());
  const auto& names = p.ring()->names();
  std::vector<std::size_t> map(names.size(), 0);
  std::vector<bool> used(names.size(), false);
  for (const auto& t : p.terms()) {
    for (std::size_t v = 0; v < names.size(); ++v) used[v] = used[v] || t.mono[v] != 0;
  }
  for (std::size_t v = 0; v < names.size(); ++v) {
    if (!used[v]) continue;
    auto idx = target->index_of(names[v]);
    if (!idx) throw AlgebraError(ErrorCode::RingMismatch, "variable '" + names[v] + "' missing in target");
    map[v] = *idx;
  }
  std::vector<Term<F>> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m;
    for (std::size_t v = 0; v < names.size(); ++v) {
      if (t.mono[v] != 0) m.set(map[v], t.mono[v]);
    }
    out.push_back({m, t.coeff});
  }
  return Poly<F>::from_terms(target, std::move(out));
}

template <>
std::string coefficient_to_string<Rationals>(const Rationals&, const mpq_class& c) {
  return c.get_str();
}

template <>
std::string coefficient_to_string<PrimeField>(const PrimeField& field, const std::uint32_t& c) {
  if (c > field.modulus() / 2) return "-" + std::to_string(field.modulus() - c);
  return std::to_string(c);
}

template <class F>
std::string to_string(const Poly<F>& p) {
  if (p.is_zero()) return "0";
  const auto& names = p.ring()->names();
  const F& field = p.field();
  std::ostringstream out;
  bool first = true;
  for (const auto& t : p.terms()) {
    std::string c = coefficient_to_string(field, t.coeff);
    bool negative = c[0] == '-';
    if (negative) c.erase(0, 1);
    if (negative) {
      out << '-';
    } else if (!first) {
      out << '+';
    }
    first = false;
    bool unit = c == "1";
    bool wrote = false;
    if (!unit || t.mono.is_one()) {
      out << c;
      wrote = true;
    }
    for (std::size_t v = 0; v < names.size(); ++v) {
      auto e = t.mono[v];
      if (e == 0) continue;
      if (wrote) out << '*';
      out << names[v];
      if (e > 1) out << '^' << e;
      wrote = true;
    }
  }
  return out.str();
}

namespace {

template <class F>
class PolyParser {
 public:
  PolyParser(std::string_view text, const RingPtr<F>& ring) : text_(text), ring_(ring) {}

  Poly<F> run() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("empty polynomial", pos_);
    Poly<F> p = expr();
    skip_ws();
    if (pos_ < text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly<F> expr() {
    Poly<F> acc = signed_term();
    for (;;) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Poly<F> signed_term() {
    if (accept('-')) return -term();
    accept('+');
    return term();
  }

  Poly<F> term() {
    Poly<F> acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  Poly<F> factor() {
    Poly<F> base = primary();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      std::string digits = read_digits();
      if (digits.empty()) fail("expected exponent");
      if (digits.size() > 5 || std::stoul(digits) > 65535) throw ParseError("exponent too large", start);
      base = base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Poly<F> primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly<F> inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      std::string num = read_digits();
      std::string lit = num;
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        skip_ws();
        std::string den = read_digits();
        if (den.empty()) fail("expected denominator");
        lit += "/" + den;
      }
      mpq_class q(lit, 10);
      if (q.get_den() == 0) throw ParseError("zero denominator", start);
      q.canonicalize();
      return Poly<F>::constant(ring_, ring_->field().from_rational(q));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '_' || text_[pos_] == '\'')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      auto idx = ring_->index_of(name);
      if (!idx) throw ParseError("unknown variable '" + name + "'", start);
      return Poly<F>::variable(ring_, *idx);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  const RingPtr<F>& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

template <class F>
Poly<F> parse_poly(std::string_view text, const RingPtr<F>& ring) {
  return PolyParser<F>(text, ring).run();
}

#define POLARCRIT_INSTANTIATE_POLY(F)                                                              \
  template class Ring<F>;                                                                          \
  template class Poly<F>;                                                                          \
  template RingPtr<F> extend_ring<F>(const RingPtr<F>&, const std::string&);                       \
  template Poly<F> partial_derivative<F>(const Poly<F>&, std::size_t);                             \
  template F::Elem evaluate<F>(const Poly<F>&, std::span<const F::Elem>);                          \
  template Poly<F> compose<F>(const Poly<F>&, const std::vector<Poly<F>>&);                        \
  template Poly<F> substitute<F>(const Poly<F>&, const std::map<std::size_t, Poly<F>>&,            \
                                 const RingPtr<F>&);                                               \
  template Poly<F> embed<F>(const Poly<F>&, const RingPtr<F>&);                                    \
  template std::string to_string<F>(const Poly<F>&);                                               \
  template Poly<F> parse_poly<F>(std::string_view, const RingPtr<F>&);

POLARCRIT_INSTANTIATE_POLY(Rationals)
POLARCRIT_INSTANTIATE_POLY(PrimeField)

}  // namespace polarcrit
