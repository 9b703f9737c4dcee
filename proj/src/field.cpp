#include "polarcrit/field.hpp"

#include <cctype>

namespace polarcrit {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotSeparating: return "NOT_SEPARATING";
    case ErrorCode::NotRadical: return "NOT_RADICAL";
    case ErrorCode::NotFinite: return "NOT_FINITE";
    case ErrorCode::Fail: return "FAIL";
    case ErrorCode::Degenerate: return "DEGENERATE";
    case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::RingMismatch: return "RING_MISMATCH";
    case ErrorCode::EmptyFiber: return "EMPTY_FIBER";
    case ErrorCode::Unstable: return "UNSTABLE";
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
  }
  return "UNKNOWN";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
    if (n % d == 0) return n == d;
  }
  for (std::uint64_t d = 17; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

bool well_formed_rational(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool digits = false, slash = false, den_digits = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      (slash ? den_digits : digits) = true;
    } else if (c == '/' && !slash && digits) {
      slash = true;
    } else {
      return false;
    }
  }
  return digits && (!slash || den_digits);
}

mpq_class parse_rational_text(const std::string& s) {
  if (!well_formed_rational(s)) {
    throw AlgebraError(ErrorCode::InvalidArgument, "malformed coefficient '" + s + "'");
  }
  std::string body = s[0] == '+' ? s.substr(1) : s;
  mpq_class q;
  if (q.set_str(body, 10) != 0 || q.get_den() == 0) {
    throw AlgebraError(ErrorCode::InvalidArgument, "malformed coefficient '" + s + "'");
  }
  q.canonicalize();
  return q;
}

}  // namespace

Rationals::Elem Rationals::parse(const std::string& s) const { return parse_rational_text(s); }

PrimeField::PrimeField(std::uint32_t modulus) : p_(modulus) {
  if (modulus < 3 || modulus >= (1u << 31) || !is_prime(modulus)) {
    throw AlgebraError(ErrorCode::InvalidArgument,
                       "modulus " + std::to_string(modulus) + " is not an odd prime below 2^31");
  }
}

PrimeField::Elem PrimeField::from_integer(const mpz_class& z) const {
  mpz_class r = z % p_;
  if (r < 0) r += p_;
  return static_cast<Elem>(r.get_ui());
}

PrimeField::Elem PrimeField::from_rational(const mpq_class& q) const {
  Elem den = from_integer(q.get_den());
  if (den == 0) {
    throw AlgebraError(ErrorCode::InvalidArgument,
                       "coefficient " + q.get_str() + " is not representable mod " + std::to_string(p_));
  }
  return div(from_integer(q.get_num()), den);
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw AlgebraError(ErrorCode::InvalidArgument, "division by zero");
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<Elem>(t);
}

PrimeField::Elem PrimeField::parse(const std::string& s) const {
  return from_rational(parse_rational_text(s));
}

}  // namespace polarcrit
