#pragma once

#include "mfd/field.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace mfd {

/// Shared polynomial-ring context: the coefficient field and the ordered
/// variable list. Every Poly carries a pointer to one of these; operations on
/// polynomials from different rings are usage errors.
struct PolyRing {
  Field field;
  std::vector<std::string> vars;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(Field field, std::vector<std::string> vars);
bool same_ring(const RingPtr& a, const RingPtr& b);
void require_same_ring(const RingPtr& a, const RingPtr& b);

using Mono = std::vector<std::uint32_t>;

unsigned total_degree(const Mono& m);

/// Graded lexicographic, largest first, so map iteration starts at the
/// leading term.
struct GrlexGreater {
  bool operator()(const Mono& a, const Mono& b) const;
};

struct PolyParseError : std::runtime_error {
  PolyParseError(std::string msg, std::size_t column)
      : std::runtime_error(std::move(msg)), column(column) {}
  std::size_t column;  // 1-based position in the input string
};

/// Sparse multivariate polynomial in canonical form: no zero coefficients,
/// terms ordered graded-lexicographically. Models an element of the local
/// ring k[[x_1..x_m]]; a unit is exactly a polynomial with nonzero constant
/// term.
class Poly {
 public:
  using TermMap = std::map<Mono, FVal, GrlexGreater>;

  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

  static Poly constant(RingPtr ring, FVal c);
  static Poly from_int(RingPtr ring, std::int64_t v);
  static Poly variable(RingPtr ring, std::size_t var_index);
  /// Grammar: signed integer or a/b coefficients, `*` products, `^` powers,
  /// declared variable names; e.g. `x^2*y - 3*x`.
  static Poly parse(RingPtr ring, const std::string& text);

  const RingPtr& ring() const { return ring_; }
  const Field& field() const { return ring_->field; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_unit() const;  // nonzero constant term
  /// True for a nonzero element of the coefficient field (degree-0 monomial).
  bool is_scalar() const { return is_constant() && !is_zero(); }
  FVal constant_term() const;
  unsigned degree() const;  // total degree; 0 for the zero polynomial

  void add_term(const Mono& m, const FVal& c);

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);

  Poly scaled(const FVal& c) const;
  Poly truncated(unsigned max_degree) const;

  FVal eval(const std::vector<FVal>& point) const;

  std::string str() const;

  bool operator==(const Poly& other) const;
  bool operator!=(const Poly& other) const { return !(*this == other); }

 private:
  RingPtr ring_;
  TermMap terms_;
};

/// Polynomial truncation of a power series: all terms of total degree <= precision.
struct TruncatedSeries {
  Poly poly;
  unsigned precision;
};

/// Inverse of a unit of k[[x]] up to total degree N.
/// Throws std::domain_error when p is not a unit.
TruncatedSeries series_inverse(const Poly& p, unsigned precision);

}  // namespace mfd
