#pragma once

// Exact coefficient fields. A field is a small value object that owns the
// arithmetic; elements are plain values (mpq_class or a reduced residue).
// Generic code is written against the interface shared by both classes.

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "polarcrit/errors.hpp"

namespace polarcrit {

enum class FieldKind { Rationals, PrimeField };

/// The default characteristic: the Mersenne prime 2^31 - 1.
inline constexpr std::uint32_t kDefaultPrime = 2147483647u;
/// A second word-size prime used to cross-check modular degree counts.
inline constexpr std::uint32_t kSecondaryPrime = 2147483629u;

bool is_prime(std::uint64_t n);

class Rationals {
 public:
  using Elem = mpq_class;
  static constexpr FieldKind kind = FieldKind::Rationals;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long v) const { return Elem(v); }
  Elem from_rational(const mpq_class& q) const { return q; }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    if (sgn(a) == 0) throw AlgebraError(ErrorCode::InvalidArgument, "division by zero");
    return 1 / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool is_one(const Elem& a) const { return a == 1; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }

  /// In-place fused update a -= c * b.
  void sub_mul(Elem& a, const Elem& c, const Elem& b) const { a -= c * b; }

  std::string to_string(const Elem& a) const { return a.get_str(); }
  Elem parse(const std::string& s) const;

  std::uint64_t characteristic() const { return 0; }
  std::string describe() const { return "rationals"; }
  bool operator==(const Rationals&) const { return true; }
};

class PrimeField {
 public:
  using Elem = std::uint32_t;
  static constexpr FieldKind kind = FieldKind::PrimeField;

  /// `modulus` must be an odd prime below 2^31 so that sums of two
  /// residues fit in 32 bits and products in 64.
  explicit PrimeField(std::uint32_t modulus = kDefaultPrime);

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long v) const {
    long r = v % static_cast<long>(p_);
    return static_cast<Elem>(r < 0 ? r + p_ : r);
  }
  Elem from_integer(const mpz_class& z) const;
  /// Throws AlgebraError when the denominator vanishes mod p.
  Elem from_rational(const mpq_class& q) const;

  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == 1; }
  bool equal(Elem a, Elem b) const { return a == b; }
  void sub_mul(Elem& a, Elem c, Elem b) const { a = sub(a, mul(c, b)); }

  std::string to_string(Elem a) const { return std::to_string(a); }
  Elem parse(const std::string& s) const;

  std::uint32_t modulus() const { return p_; }
  std::uint64_t characteristic() const { return p_; }
  std::string describe() const { return "prime " + std::to_string(p_); }
  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

}  // namespace polarcrit
