#pragma once

#include "mfd/poly.hpp"

#include <random>

namespace mfd::testutil {

inline FVal random_scalar(const Field& f, std::mt19937_64& rng) {
  if (f.is_prime_field()) {
    std::uniform_int_distribution<std::int64_t> dist(0, f.modulus() - 1);
    return f.from_int(dist(rng));
  }
  std::uniform_int_distribution<std::int64_t> num(-9, 9);
  std::uniform_int_distribution<std::int64_t> den(1, 5);
  return f.from_rational(Rational(num(rng)) / Rational(den(rng)));
}

inline Mono random_mono(std::size_t nvars, unsigned maxdeg, std::mt19937_64& rng) {
  Mono m(nvars, 0);
  std::uniform_int_distribution<unsigned> dist(0, maxdeg);
  unsigned budget = dist(rng);
  std::uniform_int_distribution<std::size_t> pick(0, nvars == 0 ? 0 : nvars - 1);
  for (unsigned t = 0; t < budget && nvars > 0; ++t) m[pick(rng)] += 1;
  return m;
}

inline Poly random_poly(const RingPtr& ring, std::mt19937_64& rng, unsigned maxdeg = 3,
                        unsigned terms = 4) {
  Poly p(ring);
  std::uniform_int_distribution<unsigned> nterms(0, terms);
  const unsigned count = nterms(rng);
  for (unsigned t = 0; t < count; ++t) {
    p.add_term(random_mono(ring->vars.size(), maxdeg, rng), random_scalar(ring->field, rng));
  }
  return p;
}

inline Poly random_unit(const RingPtr& ring, std::mt19937_64& rng, unsigned maxdeg = 3,
                        unsigned terms = 3) {
  Poly p = random_poly(ring, rng, maxdeg, terms);
  if (!p.is_unit()) {
    std::uniform_int_distribution<std::int64_t> c(1, 5);
    p += Poly::from_int(ring, c(rng));
  }
  if (!p.is_unit()) p += Poly::from_int(ring, 1);
  return p;
}

}  // namespace mfd::testutil
