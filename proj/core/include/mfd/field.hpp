#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <variant>

namespace mfd {

using Rational = boost::multiprecision::cpp_rational;

enum class FieldKind { rational_exact, prime_field };

/// Coefficient field: exact rationals or Z/p for a prime p.
///
/// Elements are tagged values; every operation goes through the Field so a
/// prime-field element is never mixed into a rational computation. Prime
/// moduli are limited to 62 bits so products fit in 128-bit intermediates.
class Field {
 public:
  using Value = std::variant<Rational, std::int64_t>;

  static Field rationals();
  static Field prime(std::int64_t p);  // throws std::invalid_argument if p is not prime

  FieldKind kind() const { return kind_; }
  bool is_prime_field() const { return kind_ == FieldKind::prime_field; }
  std::int64_t modulus() const;  // prime fields only

  bool operator==(const Field& other) const {
    return kind_ == other.kind_ && p_ == other.p_;
  }

  Value zero() const;
  Value one() const;
  Value from_int(std::int64_t v) const;
  Value from_rational(const Rational& q) const;  // reduces mod p when prime

  Value add(const Value& a, const Value& b) const;
  Value sub(const Value& a, const Value& b) const;
  Value mul(const Value& a, const Value& b) const;
  Value neg(const Value& a) const;
  Value inv(const Value& a) const;  // throws std::domain_error on zero
  Value div(const Value& a, const Value& b) const;
  Value pow(const Value& a, std::uint64_t e) const;

  bool is_zero(const Value& a) const;
  bool is_one(const Value& a) const;
  bool eq(const Value& a, const Value& b) const;

  std::string str(const Value& a) const;

 private:
  Field(FieldKind kind, std::int64_t p) : kind_(kind), p_(p) {}
  void check(const Value& a) const;

  FieldKind kind_;
  std::int64_t p_;  // 0 for rationals
};

using FVal = Field::Value;

bool is_prime_modulus(std::int64_t p);

}  // namespace mfd
