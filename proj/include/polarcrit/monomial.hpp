#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace polarcrit {

/// Upper bound on the number of variables of a ring.
inline constexpr std::size_t kMaxVariables = 16;

/// Dense exponent vector with a cached total degree. Unused trailing slots
/// are always zero, so monomials of rings with fewer variables compare and
/// hash consistently.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;

  static Monomial variable(std::size_t index, Exponent power = 1) {
    Monomial m;
    m.exps_[index] = power;
    m.degree_ = power;
    return m;
  }

  static Monomial from_exponents(const std::vector<int>& e) {
    Monomial m;
    for (std::size_t i = 0; i < e.size(); ++i) {
      m.exps_[i] = static_cast<Exponent>(e[i]);
      m.degree_ += static_cast<std::uint32_t>(e[i]);
    }
    return m;
  }

  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  void set(std::size_t i, Exponent e) {
    degree_ = degree_ - exps_[i] + e;
    exps_[i] = e;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) r.exps_[i] = exps_[i] + o.exps_[i];
    r.degree_ = degree_ + o.degree_;
    return r;
  }

  /// Requires `o.divides(*this)`.
  Monomial operator/(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) r.exps_[i] = exps_[i] - o.exps_[i];
    r.degree_ = degree_ - o.degree_;
    return r;
  }

  bool divides(const Monomial& o) const {
    if (degree_ > o.degree_) return false;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (exps_[i] > o.exps_[i]) return false;
    }
    return true;
  }

  Monomial lcm(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      r.exps_[i] = std::max(exps_[i], o.exps_[i]);
      r.degree_ += r.exps_[i];
    }
    return r;
  }

  bool coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (exps_[i] != 0 && o.exps_[i] != 0) return false;
    }
    return true;
  }

  /// Bitmask used to reject divisibility quickly: bit v (resp. 16+v, 32+v,
  /// 48+v) is set when exponent v is at least 1 (resp. 2, 4, 8).
  std::uint64_t divmask() const {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      Exponent e = exps_[i];
      if (e >= 1) m |= 1ull << i;
      if (e >= 2) m |= 1ull << (16 + i);
      if (e >= 4) m |= 1ull << (32 + i);
      if (e >= 8) m |= 1ull << (48 + i);
    }
    return m;
  }

  bool operator==(const Monomial& o) const { return degree_ == o.degree_ && exps_ == o.exps_; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  std::size_t hash() const {
    std::size_t h = degree_;
    for (Exponent e : exps_) h = h * 1000003u ^ e;
    return h;
  }

 private:
  std::array<Exponent, kMaxVariables> exps_{};
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

enum class OrderKind { GradedReverseLex, Lex };

/// Term order. `permutation[k]` names the variable playing the role of the
/// k-th variable; an empty permutation is the identity.
struct MonomialOrder {
  OrderKind kind = OrderKind::GradedReverseLex;
  std::vector<int> permutation;

  static MonomialOrder grevlex() { return {}; }
  static MonomialOrder lex() { return {OrderKind::Lex, {}}; }

  /// Three-way comparison: negative when a < b.
  int compare(const Monomial& a, const Monomial& b) const {
    if (kind == OrderKind::GradedReverseLex) {
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
      if (permutation.empty()) {
        for (std::size_t i = kMaxVariables; i-- > 0;) {
          if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
        }
      } else {
        for (std::size_t k = permutation.size(); k-- > 0;) {
          auto v = static_cast<std::size_t>(permutation[k]);
          if (a[v] != b[v]) return a[v] > b[v] ? -1 : 1;
        }
      }
      return 0;
    }
    if (permutation.empty()) {
      for (std::size_t i = 0; i < kMaxVariables; ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      }
    } else {
      for (int v : permutation) {
        auto u = static_cast<std::size_t>(v);
        if (a[u] != b[u]) return a[u] < b[u] ? -1 : 1;
      }
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool operator==(const MonomialOrder& o) const {
    return kind == o.kind && permutation == o.permutation;
  }
};

}  // namespace polarcrit
