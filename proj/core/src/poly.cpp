#include "mfd/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace mfd {

RingPtr make_ring(Field field, std::vector<std::string> vars) {
  for (std::size_t i = 0; i < vars.size(); ++i) {
    for (std::size_t j = i + 1; j < vars.size(); ++j) {
      if (vars[i] == vars[j]) {
        throw std::invalid_argument("duplicate variable name: " + vars[i]);
      }
    }
  }
  return std::make_shared<PolyRing>(PolyRing{std::move(field), std::move(vars)});
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->field == b->field && a->vars == b->vars;
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) {
    throw std::invalid_argument("operands live in different polynomial rings");
  }
}

unsigned total_degree(const Mono& m) {
  unsigned d = 0;
  for (auto e : m) d += e;
  return d;
}

bool GrlexGreater::operator()(const Mono& a, const Mono& b) const {
  const unsigned da = total_degree(a);
  const unsigned db = total_degree(b);
  if (da != db) return da > db;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return a.size() > b.size();
}

Poly Poly::constant(RingPtr ring, FVal c) {
  Poly p(std::move(ring));
  p.add_term(Mono(p.ring_->vars.size(), 0), c);
  return p;
}

Poly Poly::from_int(RingPtr ring, std::int64_t v) {
  FVal c = ring->field.from_int(v);
  return constant(std::move(ring), c);
}

Poly Poly::variable(RingPtr ring, std::size_t var_index) {
  if (var_index >= ring->vars.size()) {
    throw std::invalid_argument("variable index out of range");
  }
  Poly p(ring);
  Mono m(ring->vars.size(), 0);
  m[var_index] = 1;
  p.add_term(m, ring->field.one());
  return p;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0;
}

bool Poly::is_unit() const {
  return !field().is_zero(constant_term());
}

FVal Poly::constant_term() const {
  const Mono zero_mono(ring_->vars.size(), 0);
  auto it = terms_.find(zero_mono);
  if (it == terms_.end()) return field().zero();
  return it->second;
}

unsigned Poly::degree() const {
  if (terms_.empty()) return 0;
  return total_degree(terms_.begin()->first);
}

void Poly::add_term(const Mono& m, const FVal& c) {
  if (m.size() != ring_->vars.size()) {
    throw std::invalid_argument("exponent vector has wrong length");
  }
  if (field().is_zero(c)) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second = field().add(it->second, c);
    if (field().is_zero(it->second)) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r(ring_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, field().neg(c));
  return r;
}

Poly& Poly::operator+=(const Poly& other) {
  require_same_ring(ring_, other.ring_);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  require_same_ring(ring_, other.ring_);
  for (const auto& [m, c] : other.terms_) add_term(m, field().neg(c));
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_ring(a.ring_, b.ring_);
  Poly r(a.ring_);
  const Field& F = a.field();
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Mono m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, F.mul(ca, cb));
    }
  }
  return r;
}

Poly Poly::scaled(const FVal& c) const {
  Poly r(ring_);
  if (field().is_zero(c)) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, field().mul(v, c));
  return r;
}

Poly Poly::truncated(unsigned max_degree) const {
  Poly r(ring_);
  for (const auto& [m, c] : terms_) {
    if (total_degree(m) <= max_degree) r.terms_.emplace(m, c);
  }
  return r;
}

FVal Poly::eval(const std::vector<FVal>& point) const {
  if (point.size() != ring_->vars.size()) {
    throw std::invalid_argument("evaluation point has wrong length");
  }
  const Field& F = field();
  FVal acc = F.zero();
  for (const auto& [m, c] : terms_) {
    FVal t = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] != 0) t = F.mul(t, F.pow(point[i], m[i]));
    }
    acc = F.add(acc, t);
  }
  return acc;
}

bool Poly::operator==(const Poly& other) const {
  if (!same_ring(ring_, other.ring_)) return false;
  if (terms_.size() != other.terms_.size()) return false;
  auto it = terms_.begin();
  auto jt = other.terms_.begin();
  const Field& F = field();
  for (; it != terms_.end(); ++it, ++jt) {
    if (it->first != jt->first || !F.eq(it->second, jt->second)) return false;
  }
  return true;
}

namespace {

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw PolyParseError(msg, pos + 1);
  }
};

std::int64_t parse_integer_digits(Cursor& cur) {
  cur.skip_ws();
  std::size_t start = cur.pos;
  while (cur.pos < cur.s.size() && std::isdigit(static_cast<unsigned char>(cur.s[cur.pos]))) {
    ++cur.pos;
  }
  if (cur.pos == start) cur.fail("expected an integer");
  try {
    return std::stoll(cur.s.substr(start, cur.pos - start));
  } catch (const std::out_of_range&) {
    cur.pos = start;
    cur.fail("integer literal too large");
  }
}

std::string parse_identifier(Cursor& cur) {
  cur.skip_ws();
  std::size_t start = cur.pos;
  while (cur.pos < cur.s.size() &&
         (std::isalnum(static_cast<unsigned char>(cur.s[cur.pos])) || cur.s[cur.pos] == '_')) {
    ++cur.pos;
  }
  if (cur.pos == start) cur.fail("expected a variable name");
  return cur.s.substr(start, cur.pos - start);
}

}  // namespace

Poly Poly::parse(RingPtr ring, const std::string& text) {
  const Field& F = ring->field;
  const std::size_t nvars = ring->vars.size();
  Cursor cur{text};
  Poly result(ring);

  bool first_term = true;
  while (true) {
    cur.skip_ws();
    if (cur.done()) {
      if (first_term) cur.fail("empty polynomial");
      break;
    }
    bool negative = false;
    char c = cur.peek();
    if (c == '+' || c == '-') {
      negative = (c == '-');
      ++cur.pos;
    } else if (!first_term) {
      cur.fail("expected '+' or '-' between terms");
    }
    first_term = false;

    FVal coeff = F.one();
    Mono mono(nvars, 0);
    bool saw_factor = false;
    bool expect_factor = true;
    while (expect_factor) {
      cur.skip_ws();
      if (cur.done()) break;
      char ch = cur.peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        std::int64_t num = parse_integer_digits(cur);
        if (cur.peek() == '/') {
          ++cur.pos;
          std::int64_t den = parse_integer_digits(cur);
          if (den == 0) cur.fail("zero denominator");
          coeff = F.mul(coeff, F.from_rational(Rational(num) / Rational(den)));
        } else {
          coeff = F.mul(coeff, F.from_int(num));
        }
        saw_factor = true;
      } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        std::size_t at = cur.pos;
        std::string name = parse_identifier(cur);
        auto it = std::find(ring->vars.begin(), ring->vars.end(), name);
        if (it == ring->vars.end()) {
          cur.pos = at;
          cur.fail("unknown variable '" + name + "'");
        }
        std::size_t idx = static_cast<std::size_t>(it - ring->vars.begin());
        std::int64_t exp = 1;
        if (cur.peek() == '^') {
          ++cur.pos;
          exp = parse_integer_digits(cur);
          if (exp < 0) cur.fail("negative exponent");
        }
        mono[idx] += static_cast<std::uint32_t>(exp);
        saw_factor = true;
      } else {
        cur.fail("unexpected character in term");
      }
      if (cur.peek() == '*') {
        ++cur.pos;
      } else {
        expect_factor = false;
      }
    }
    if (!saw_factor) cur.fail("empty term");
    if (negative) coeff = F.neg(coeff);
    result.add_term(mono, coeff);
  }
  return result;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  const Field& F = field();
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string cs = F.str(c);
    bool neg = !cs.empty() && cs[0] == '-';
    std::string abs = neg ? cs.substr(1) : cs;
    if (first) {
      if (neg) out << '-';
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    const bool has_vars = total_degree(m) > 0;
    const bool unit_coeff = (abs == "1");
    if (!has_vars || !unit_coeff) out << abs;
    bool need_star = !has_vars ? false : !unit_coeff;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (need_star) out << '*';
      out << ring_->vars[i];
      if (m[i] > 1) out << '^' << m[i];
      need_star = true;
    }
  }
  return out.str();
}

TruncatedSeries series_inverse(const Poly& p, unsigned precision) {
  if (!p.is_unit()) {
    throw std::domain_error("series_inverse requires a unit (nonzero constant term)");
  }
  const Field& F = p.field();
  Poly q = Poly::constant(p.ring(), F.inv(p.constant_term()));
  Poly two = Poly::from_int(p.ring(), 2);
  // Newton iteration q <- q(2 - pq), doubling the correct order each step.
  unsigned correct = 1;
  while (correct <= precision) {
    q = (q * (two - (p * q).truncated(precision))).truncated(precision);
    correct *= 2;
  }
  return TruncatedSeries{q, precision};
}

}  // namespace mfd
