#include "mfd/field.hpp"

#include <stdexcept>

namespace mfd {

namespace {

std::int64_t mod_norm(std::int64_t v, std::int64_t p) {
  std::int64_t r = v % p;
  return r < 0 ? r + p : r;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p);
}

std::int64_t pow_mod(std::int64_t a, std::uint64_t e, std::int64_t p) {
  std::int64_t r = 1 % p;
  std::int64_t base = mod_norm(a, p);
  while (e != 0) {
    if (e & 1) r = mul_mod(r, base, p);
    base = mul_mod(base, base, p);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_modulus(std::int64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::int64_t q = 3; q * q <= p; q += 2) {
    if (p % q == 0) return false;
  }
  return true;
}

Field Field::rationals() { return Field(FieldKind::rational_exact, 0); }

Field Field::prime(std::int64_t p) {
  if (!is_prime_modulus(p)) {
    throw std::invalid_argument("field modulus must be prime, got " + std::to_string(p));
  }
  if (p >= (std::int64_t{1} << 62)) {
    throw std::invalid_argument("prime modulus too large");
  }
  return Field(FieldKind::prime_field, p);
}

std::int64_t Field::modulus() const {
  if (kind_ != FieldKind::prime_field) {
    throw std::logic_error("modulus() called on the rational field");
  }
  return p_;
}

void Field::check(const Value& a) const {
  const bool is_rat = std::holds_alternative<Rational>(a);
  if (is_rat != (kind_ == FieldKind::rational_exact)) {
    throw std::invalid_argument("field element does not belong to this field");
  }
}

FVal Field::zero() const { return from_int(0); }
FVal Field::one() const { return from_int(1); }

FVal Field::from_int(std::int64_t v) const {
  if (kind_ == FieldKind::rational_exact) return Rational(v);
  return mod_norm(v, p_);
}

FVal Field::from_rational(const Rational& q) const {
  if (kind_ == FieldKind::rational_exact) return q;
  const auto num = boost::multiprecision::numerator(q);
  const auto den = boost::multiprecision::denominator(q);
  const std::int64_t n = static_cast<std::int64_t>(num % p_);
  const std::int64_t d = static_cast<std::int64_t>(den % p_);
  if (mod_norm(d, p_) == 0) {
    throw std::domain_error("denominator is divisible by the field characteristic");
  }
  return mul_mod(mod_norm(n, p_), pow_mod(d, static_cast<std::uint64_t>(p_ - 2), p_), p_);
}

FVal Field::add(const Value& a, const Value& b) const {
  check(a);
  check(b);
  if (kind_ == FieldKind::rational_exact) return std::get<Rational>(a) + std::get<Rational>(b);
  return mod_norm(std::get<std::int64_t>(a) + std::get<std::int64_t>(b), p_);
}

FVal Field::sub(const Value& a, const Value& b) const {
  check(a);
  check(b);
  if (kind_ == FieldKind::rational_exact) return std::get<Rational>(a) - std::get<Rational>(b);
  return mod_norm(std::get<std::int64_t>(a) - std::get<std::int64_t>(b), p_);
}

FVal Field::mul(const Value& a, const Value& b) const {
  check(a);
  check(b);
  if (kind_ == FieldKind::rational_exact) return std::get<Rational>(a) * std::get<Rational>(b);
  return mul_mod(std::get<std::int64_t>(a), std::get<std::int64_t>(b), p_);
}

FVal Field::neg(const Value& a) const {
  check(a);
  if (kind_ == FieldKind::rational_exact) return -std::get<Rational>(a);
  return mod_norm(-std::get<std::int64_t>(a), p_);
}

FVal Field::inv(const Value& a) const {
  check(a);
  if (is_zero(a)) throw std::domain_error("division by zero in the coefficient field");
  if (kind_ == FieldKind::rational_exact) return Rational(1) / std::get<Rational>(a);
  return pow_mod(std::get<std::int64_t>(a), static_cast<std::uint64_t>(p_ - 2), p_);
}

FVal Field::div(const Value& a, const Value& b) const { return mul(a, inv(b)); }

FVal Field::pow(const Value& a, std::uint64_t e) const {
  check(a);
  if (kind_ == FieldKind::prime_field) return pow_mod(std::get<std::int64_t>(a), e, p_);
  Rational r(1);
  Rational base = std::get<Rational>(a);
  while (e != 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

bool Field::is_zero(const Value& a) const {
  check(a);
  if (kind_ == FieldKind::rational_exact) return std::get<Rational>(a).is_zero();
  return std::get<std::int64_t>(a) == 0;
}

bool Field::is_one(const Value& a) const { return eq(a, one()); }

bool Field::eq(const Value& a, const Value& b) const {
  check(a);
  check(b);
  if (kind_ == FieldKind::rational_exact) return std::get<Rational>(a) == std::get<Rational>(b);
  return std::get<std::int64_t>(a) == std::get<std::int64_t>(b);
}

std::string Field::str(const Value& a) const {
  check(a);
  if (kind_ == FieldKind::rational_exact) {
    const Rational& q = std::get<Rational>(a);
    return q.str();
  }
  return std::to_string(std::get<std::int64_t>(a));
}

}  // namespace mfd
