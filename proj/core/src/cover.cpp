#include "mfd/cover.hpp"

#include <stdexcept>

namespace mfd {

namespace {

int norm0(int v, int d) {
  int r = v % d;
  if (r < 0) r += d;
  return r;
}

std::int64_t pow_mod(std::int64_t a, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1 % p;
  std::int64_t base = ((a % p) + p) % p;
  while (e > 0) {
    if (e & 1) r = static_cast<std::int64_t>(static_cast<__int128>(r) * base % p);
    base = static_cast<std::int64_t>(static_cast<__int128>(base) * base % p);
    e >>= 1;
  }
  return r;
}

}  // namespace

RootData find_roots(std::int64_t p, int d) {
  if (!is_prime_modulus(p)) throw std::domain_error("p must be prime");
  if (d < 2) throw std::domain_error("d must be at least 2");
  if (p % d == 0) throw std::domain_error("the characteristic must not divide d");

  std::int64_t omega = 0;
  for (std::int64_t w = 1; w < p; ++w) {
    if (pow_mod(w, d, p) != 1) continue;
    bool primitive = true;
    for (int t = 1; t < d; ++t) {
      if (pow_mod(w, t, p) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      omega = w;
      break;
    }
  }
  if (omega == 0) {
    throw std::domain_error("F_" + std::to_string(p) + " has no primitive " +
                            std::to_string(d) + "-th root of unity");
  }

  std::int64_t mu = 0;
  for (std::int64_t m = 1; m < p; ++m) {
    if (pow_mod(m, d, p) == p - 1) {
      mu = m;
      break;
    }
  }
  if (mu == 0) {
    throw std::domain_error("x^" + std::to_string(d) + " + 1 has no root in F_" +
                            std::to_string(p));
  }
  return RootData{p, omega, mu};
}

SkewElement::SkewElement(RingPtr ring, RootData roots, Poly f, int d)
    : ring_(std::move(ring)),
      roots_(roots),
      f_(std::move(f)),
      d_(d),
      c_(static_cast<std::size_t>(d) * d, Poly(ring_)) {
  if (!ring_->field.is_prime_field() || ring_->field.modulus() != roots_.p) {
    throw std::invalid_argument("skew elements live over F_p matching the root data");
  }
}

SkewElement SkewElement::basis(const Poly& f, const RootData& roots, int d, int a, int b) {
  SkewElement e(f.ring(), roots, f, d);
  e.coeff(a, b) = Poly::from_int(f.ring(), 1);
  return e;
}

SkewElement SkewElement::one(const Poly& f, const RootData& roots, int d) {
  return basis(f, roots, d, 0, 0);
}

const Poly& SkewElement::coeff(int a, int b) const {
  return c_[static_cast<std::size_t>(norm0(a, d_)) * d_ + norm0(b, d_)];
}

Poly& SkewElement::coeff(int a, int b) {
  return c_[static_cast<std::size_t>(norm0(a, d_)) * d_ + norm0(b, d_)];
}

SkewElement operator+(const SkewElement& x, const SkewElement& y) {
  if (x.d_ != y.d_ || x.f_ != y.f_) throw std::invalid_argument("mismatched skew algebras");
  SkewElement r(x.ring_, x.roots_, x.f_, x.d_);
  for (std::size_t t = 0; t < x.c_.size(); ++t) r.c_[t] = x.c_[t] + y.c_[t];
  return r;
}

SkewElement SkewElement::scaled(const Poly& c) const {
  SkewElement r(ring_, roots_, f_, d_);
  for (std::size_t t = 0; t < c_.size(); ++t) r.c_[t] = c_[t] * c;
  return r;
}

bool SkewElement::operator==(const SkewElement& other) const {
  if (d_ != other.d_ || f_ != other.f_) return false;
  for (std::size_t t = 0; t < c_.size(); ++t) {
    if (c_[t] != other.c_[t]) return false;
  }
  return true;
}

SkewElement skew_mul(const SkewElement& x, const SkewElement& y) {
  if (x.d() != y.d() || x.f() != y.f()) throw std::invalid_argument("mismatched skew algebras");
  const int d = x.d();
  const Field& F = x.ring()->field;
  SkewElement r(x.ring(), x.roots(), x.f(), d);
  const Poly minus_f = -x.f();
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      if (x.coeff(a, b).is_zero()) continue;
      for (int c = 0; c < d; ++c) {
        for (int e = 0; e < d; ++e) {
          if (y.coeff(c, e).is_zero()) continue;
          // (z^a s^b)(z^c s^e) = omega^{bc} z^{a+c} s^{b+e}, z^d = -f.
          const FVal tw = F.pow(F.from_int(x.roots().omega),
                                static_cast<std::uint64_t>(b) * static_cast<std::uint64_t>(c));
          Poly term = (x.coeff(a, b) * y.coeff(c, e)).scaled(tw);
          if (a + c >= d) term = term * minus_f;
          r.coeff((a + c) % d, (b + e) % d) += term;
        }
      }
    }
  }
  return r;
}

SigmaReport sigma_verify(const SigmaModule& n) {
  SigmaReport report;
  const PolyMatrix id = PolyMatrix::identity(n.ring, n.rank);
  PolyMatrix spow = id;
  PolyMatrix zpow = id;
  for (int t = 0; t < n.d; ++t) {
    spow = spow * n.smat;
    zpow = zpow * n.zmat;
  }
  report.sigma_order = (spow == id);
  report.z_relation = (zpow == PolyMatrix::scalar(n.ring, n.rank, -n.f));
  const Poly omega = Poly::constant(n.ring, n.ring->field.from_int(n.roots.omega));
  report.twist = (n.smat * n.zmat == (n.zmat * n.smat).scaled(omega));
  report.valid = report.sigma_order && report.z_relation && report.twist;
  return report;
}

SigmaModule functor_B(const MatrixFactorization& x, const RootData& roots) {
  const RingPtr& ring = x.ring();
  if (!ring->field.is_prime_field() || ring->field.modulus() != roots.p) {
    throw std::invalid_argument("functor_B needs a factorization over F_p matching the roots");
  }
  const int d = x.factor_count();
  const std::size_t n = x.size();
  const Field& F = ring->field;
  const FVal mu_inv = F.inv(F.from_int(roots.mu));

  // Basis order F_d, F_{d-1}, ..., F_1: slot k sits at block position d - k.
  auto pos = [&](int k) { return static_cast<std::size_t>(d - (norm0(k - 1, d) + 1)); };
  PolyMatrix zmat(ring, d * n, d * n);
  PolyMatrix smat(ring, d * n, d * n);
  for (int k = 1; k <= d; ++k) {
    const PolyMatrix blockk = x.factor(k).scaled(Poly::constant(ring, mu_inv));
    const std::size_t row0 = pos(k) * n;
    const std::size_t col0 = pos(k + 1) * n;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) zmat.at(row0 + r, col0 + c) = blockk.at(r, c);
  }
  for (int b = 0; b < d; ++b) {
    const FVal w = F.pow(F.from_int(roots.omega), static_cast<std::uint64_t>(b));
    for (std::size_t r = 0; r < n; ++r) {
      smat.at(static_cast<std::size_t>(b) * n + r, static_cast<std::size_t>(b) * n + r) =
          Poly::constant(ring, w);
    }
  }
  return SigmaModule{ring, roots, x.f(), d, d * n, std::move(zmat), std::move(smat), true, n};
}

PolyMatrix functor_B_morphism(const Morphism& alpha) {
  const int d = alpha.source().factor_count();
  PolyMatrix m = alpha.component(d);
  for (int k = d - 1; k >= 1; --k) m = direct_sum(m, alpha.component(k));
  return m;
}

EigenDecomposition eigenspace_decompose(const SigmaModule& n, unsigned trials,
                                        std::uint64_t seed) {
  const Field& F = n.ring->field;
  if (n.d % F.modulus() == 0) {
    throw std::domain_error("the characteristic must not divide d");
  }
  const PolyMatrix id = PolyMatrix::identity(n.ring, n.rank);
  {
    PolyMatrix spow = id;
    for (int t = 0; t < n.d; ++t) spow = spow * n.smat;
    if (!(spow == id)) throw std::domain_error("sigma action does not have order dividing d");
  }
  const FVal inv_d = F.inv(F.from_int(n.d));
  const FVal omega = F.from_int(n.roots.omega);

  EigenDecomposition dec;
  std::vector<PolyMatrix> spowers;
  spowers.push_back(id);
  for (int i = 1; i < n.d; ++i) spowers.push_back(spowers.back() * n.smat);
  for (int k = 0; k < n.d; ++k) {
    PolyMatrix pk(n.ring, n.rank, n.rank);
    for (int i = 0; i < n.d; ++i) {
      const FVal w = F.inv(F.pow(omega, static_cast<std::uint64_t>(i) * k));
      pk = pk + spowers[i].scaled(Poly::constant(n.ring, F.mul(inv_d, w)));
    }
    dec.projectors.push_back(pk);
    dec.ranks.push_back(generic_rank(pk, trials, seed));
  }
  PolyMatrix sum(n.ring, n.rank, n.rank);
  dec.idempotent = true;
  dec.orthogonal = true;
  for (int k = 0; k < n.d; ++k) {
    sum = sum + dec.projectors[k];
    dec.idempotent = dec.idempotent && (dec.projectors[k] * dec.projectors[k] == dec.projectors[k]);
    for (int l = 0; l < n.d; ++l) {
      if (l == k) continue;
      dec.orthogonal = dec.orthogonal && (dec.projectors[k] * dec.projectors[l]).is_zero();
    }
  }
  dec.sum_identity = (sum == id);
  dec.valid = dec.sum_identity && dec.idempotent && dec.orthogonal;
  return dec;
}

MatrixFactorization functor_A(const SigmaModule& n) {
  if (!n.adapted) throw std::domain_error("functor_A needs an adapted sigma module");
  if (n.rank != static_cast<std::size_t>(n.d) * n.block) {
    throw std::domain_error("eigenblocks must have equal rank");
  }
  const Field& F = n.ring->field;
  // Adapted: sigma = diag(1, omega, ..., omega^{d-1}) on equal blocks.
  for (int b = 0; b < n.d; ++b) {
    const FVal w = F.pow(F.from_int(n.roots.omega), static_cast<std::uint64_t>(b));
    for (std::size_t r = 0; r < n.block; ++r) {
      for (std::size_t c = 0; c < n.rank; ++c) {
        const std::size_t row = static_cast<std::size_t>(b) * n.block + r;
        const Poly& entry = n.smat.at(row, c);
        if (row == c) {
          if (!(entry == Poly::constant(n.ring, w))) {
            throw std::domain_error("sigma action is not in adapted diagonal form");
          }
        } else if (!entry.is_zero()) {
          throw std::domain_error("sigma action is not in adapted diagonal form");
        }
      }
    }
  }
  const Poly mu = Poly::constant(n.ring, F.from_int(n.roots.mu));
  const PolyMatrix muz = n.zmat.scaled(mu);
  std::vector<PolyMatrix> factors;
  for (int k = 1; k <= n.d; ++k) {
    // psi_k: eigenblock omega^{d-k-1} -> eigenblock omega^{d-k}.
    const std::size_t row0 = static_cast<std::size_t>(norm0(n.d - k, n.d)) * n.block;
    const std::size_t col0 = static_cast<std::size_t>(norm0(n.d - k - 1, n.d)) * n.block;
    factors.push_back(muz.submatrix(row0, col0, n.block, n.block));
    for (std::size_t r = 0; r < n.rank; ++r) {
      for (std::size_t c = col0; c < col0 + n.block; ++c) {
        if ((r < row0 || r >= row0 + n.block) && !muz.at(r, c).is_zero()) {
          throw std::domain_error("z action does not shift eigenblocks by one step");
        }
      }
    }
  }
  return MatrixFactorization(n.f, std::move(factors));
}

PsiCertificate psi_iso(const Poly& f, int d, const RootData& roots) {
  const RingPtr& ring = f.ring();
  const Field& F = ring->field;
  if (!F.is_prime_field() || F.modulus() != roots.p) {
    throw std::invalid_argument("psi_iso needs F_p coefficients matching the root data");
  }
  const FVal omega = F.from_int(roots.omega);
  const FVal mu = F.from_int(roots.mu);

  // psi(z^a sigma^b) = mu^a sum_i omega^{-ib} e_{i(i-a)}.
  auto image = [&](int a, int b) {
    GammaElement g(ring, f, d);
    const FVal mua = F.pow(mu, static_cast<std::uint64_t>(a));
    for (int i = 1; i <= d; ++i) {
      const FVal w = F.inv(F.pow(omega, static_cast<std::uint64_t>(i) * b));
      g.coeff(i, i - a) += Poly::constant(ring, F.mul(mua, w));
    }
    return g;
  };

  PsiCertificate cert{{}, true, false, true, false};
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) cert.images.push_back(image(a, b));
  }
  auto img = [&](int a, int b) -> const GammaElement& {
    return cert.images[static_cast<std::size_t>(norm0(a, d)) * d + norm0(b, d)];
  };

  // Multiplicativity on every basis pair, with the skew product expanded
  // through the linear extension of psi.
  for (int a = 0; a < d && cert.multiplicative; ++a) {
    for (int b = 0; b < d && cert.multiplicative; ++b) {
      for (int c = 0; c < d && cert.multiplicative; ++c) {
        for (int e = 0; e < d && cert.multiplicative; ++e) {
          SkewElement prod = skew_mul(SkewElement::basis(f, roots, d, a, b),
                                      SkewElement::basis(f, roots, d, c, e));
          GammaElement lhs(ring, f, d);
          for (int a2 = 0; a2 < d; ++a2) {
            for (int b2 = 0; b2 < d; ++b2) {
              if (prod.coeff(a2, b2).is_zero()) continue;
              lhs = lhs + img(a2, b2).scaled(prod.coeff(a2, b2));
            }
          }
          GammaElement rhs = gamma_mul(img(a, b), img(c, e));
          cert.multiplicative = cert.multiplicative && (lhs == rhs);
        }
      }
    }
  }

  // Bijectivity: the d^2 x d^2 coefficient matrix has unit determinant at
  // the origin, i.e. full rank over the residue field.
  std::vector<std::vector<FVal>> coeffs(static_cast<std::size_t>(d) * d,
                                        std::vector<FVal>(static_cast<std::size_t>(d) * d,
                                                          F.zero()));
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      const GammaElement& g = img(a, b);
      for (int i = 1; i <= d; ++i) {
        for (int j = 1; j <= d; ++j) {
          coeffs[static_cast<std::size_t>(i - 1) * d + (j - 1)]
                [static_cast<std::size_t>(a) * d + b] = g.coeff(i, j).constant_term();
        }
      }
    }
  }
  cert.bijective = (scalar_rank(coeffs, F) == static_cast<std::size_t>(d) * d);

  // The sigma-averaged idempotents land exactly on e_kk.
  const FVal inv_d = F.inv(F.from_int(d));
  for (int k = 1; k <= d; ++k) {
    GammaElement avg(ring, f, d);
    for (int j = 0; j < d; ++j) {
      const FVal w = F.mul(inv_d, F.pow(omega, static_cast<std::uint64_t>(j) * k));
      avg = avg + img(0, j).scaled(Poly::constant(ring, w));
    }
    cert.averaged_idempotents =
        cert.averaged_idempotents && (avg == GammaElement::basis(f, d, k, k));
  }
  cert.valid = cert.multiplicative && cert.bijective && cert.averaged_idempotents;
  return cert;
}

MatrixFactorization reduce_mod_p(const MatrixFactorization& x, std::int64_t p) {
  if (x.ring()->field.is_prime_field()) {
    if (x.ring()->field.modulus() == p) return x;
    throw std::invalid_argument("factorization already lives over a different prime field");
  }
  RingPtr ring = make_ring(Field::prime(p), x.ring()->vars);
  auto convert = [&](const Poly& q) {
    Poly r(ring);
    for (const auto& [mono, c] : q.terms()) {
      r.add_term(mono, ring->field.from_rational(std::get<Rational>(c)));
    }
    return r;
  };
  std::vector<PolyMatrix> factors;
  for (int k = 1; k <= x.factor_count(); ++k) {
    PolyMatrix m(ring, x.size(), x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < x.size(); ++j) m.at(i, j) = convert(x.factor(k).at(i, j));
    factors.push_back(std::move(m));
  }
  return MatrixFactorization(convert(x.f()), std::move(factors));
}

}  // namespace mfd
