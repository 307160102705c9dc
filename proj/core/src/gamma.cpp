#include "mfd/gamma.hpp"

#include <sstream>
#include <stdexcept>

namespace mfd {

namespace {

int norm1(int v, int d) {
  int r = (v - 1) % d;
  if (r < 0) r += d;
  return r + 1;
}

// Number of f-marked components of e_ij: the cyclic path length from j to i.
int path_weight(int i, int j, int d) {
  int w = (norm1(i, d) - norm1(j, d)) % d;
  if (w < 0) w += d;
  return w;
}

Poly f_power(const Poly& f, int e) {
  Poly r = Poly::from_int(f.ring(), 1);
  for (int t = 0; t < e; ++t) r = r * f;
  return r;
}

}  // namespace

GammaElement::GammaElement(RingPtr ring, Poly f, int d)
    : ring_(std::move(ring)), f_(std::move(f)), d_(d), c_(static_cast<std::size_t>(d) * d, Poly(ring_)) {
  if (d < 2) throw std::invalid_argument("the e_ij algebra needs d >= 2");
}

GammaElement GammaElement::basis(const Poly& f, int d, int i, int j) {
  GammaElement e(f.ring(), f, d);
  e.coeff(i, j) = Poly::from_int(f.ring(), 1);
  return e;
}

GammaElement GammaElement::one(const Poly& f, int d) {
  GammaElement e(f.ring(), f, d);
  for (int i = 1; i <= d; ++i) e.coeff(i, i) = Poly::from_int(f.ring(), 1);
  return e;
}

GammaElement GammaElement::z(const Poly& f, int d) {
  GammaElement e(f.ring(), f, d);
  for (int i = 1; i <= d; ++i) e.coeff(i, i - 1) = Poly::from_int(f.ring(), 1);
  return e;
}

const Poly& GammaElement::coeff(int i, int j) const {
  return c_[static_cast<std::size_t>(norm1(i, d_) - 1) * d_ + (norm1(j, d_) - 1)];
}

Poly& GammaElement::coeff(int i, int j) {
  return c_[static_cast<std::size_t>(norm1(i, d_) - 1) * d_ + (norm1(j, d_) - 1)];
}

GammaElement GammaElement::operator-() const {
  GammaElement r(ring_, f_, d_);
  for (std::size_t t = 0; t < c_.size(); ++t) r.c_[t] = -c_[t];
  return r;
}

GammaElement operator+(const GammaElement& a, const GammaElement& b) {
  if (a.d_ != b.d_ || a.f_ != b.f_) throw std::invalid_argument("mismatched algebras");
  GammaElement r(a.ring_, a.f_, a.d_);
  for (std::size_t t = 0; t < a.c_.size(); ++t) r.c_[t] = a.c_[t] + b.c_[t];
  return r;
}

GammaElement operator-(const GammaElement& a, const GammaElement& b) { return a + (-b); }

GammaElement GammaElement::scaled(const Poly& c) const {
  GammaElement r(ring_, f_, d_);
  for (std::size_t t = 0; t < c_.size(); ++t) r.c_[t] = c_[t] * c;
  return r;
}

bool GammaElement::operator==(const GammaElement& other) const {
  if (d_ != other.d_ || f_ != other.f_) return false;
  for (std::size_t t = 0; t < c_.size(); ++t) {
    if (c_[t] != other.c_[t]) return false;
  }
  return true;
}

std::string GammaElement::str() const {
  std::ostringstream out;
  bool first = true;
  for (int i = 1; i <= d_; ++i) {
    for (int j = 1; j <= d_; ++j) {
      if (coeff(i, j).is_zero()) continue;
      if (!first) out << " + ";
      out << "(" << coeff(i, j).str() << ")*e[" << i << "," << j << "]";
      first = false;
    }
  }
  if (first) out << "0";
  return out.str();
}

GammaElement gamma_mul(const GammaElement& a, const GammaElement& b) {
  if (a.d() != b.d() || a.f() != b.f()) throw std::invalid_argument("mismatched algebras");
  const int d = a.d();
  GammaElement r(a.ring(), a.f(), d);
  for (int i = 1; i <= d; ++i) {
    for (int j = 1; j <= d; ++j) {
      if (a.coeff(i, j).is_zero()) continue;
      for (int p = 1; p <= d; ++p) {
        // e_ij e_pq is nonzero exactly when q = i; the product lands on e_pj.
        const Poly& bc = b.coeff(p, i);
        if (bc.is_zero()) continue;
        const int laps =
            (path_weight(i, j, d) + path_weight(p, i, d) - path_weight(p, j, d)) / d;
        Poly term = a.coeff(i, j) * bc;
        if (laps > 0) term = term * f_power(a.f(), laps);
        r.coeff(p, j) += term;
      }
    }
  }
  return r;
}

GammaElement gamma_z_power(const Poly& f, int d, unsigned s) {
  if (s < 1) throw std::invalid_argument("power must be at least 1");
  const unsigned q = s / static_cast<unsigned>(d);
  const unsigned rr = s % static_cast<unsigned>(d);
  GammaElement e(f.ring(), f, d);
  const Poly fq = f_power(f, static_cast<int>(q));
  for (int i = 1; i <= d; ++i) e.coeff(i, i - static_cast<int>(rr)) += fq;
  return e;
}

EijFactorization eij_factorization(const Poly& f, int d, int i, int j) {
  if (norm1(i, d) == norm1(j, d)) {
    throw std::invalid_argument("the chain factorization needs i != j");
  }
  std::vector<std::pair<int, int>> chain;
  int l = norm1(j + 1, d);
  while (true) {
    chain.emplace_back(l, norm1(l - 1, d));
    if (l == norm1(i, d)) break;
    l = norm1(l + 1, d);
  }
  GammaElement prod = GammaElement::basis(f, d, chain[0].first, chain[0].second);
  for (std::size_t t = 1; t < chain.size(); ++t) {
    prod = gamma_mul(prod, GammaElement::basis(f, d, chain[t].first, chain[t].second));
  }
  const bool matches = (prod == GammaElement::basis(f, d, i, j));
  return EijFactorization{std::move(chain), std::move(prod), matches};
}

const PolyMatrix& GammaModule::act(int i, int j) const {
  return action[static_cast<std::size_t>(norm1(i, d) - 1) * d + (norm1(j, d) - 1)];
}

GammaModuleReport gamma_module_verify(const GammaModule& m) {
  GammaModuleReport report;
  const int d = m.d;
  const PolyMatrix id = PolyMatrix::identity(m.ring, m.rank);
  PolyMatrix sum(m.ring, m.rank, m.rank);
  report.idempotents = true;
  report.orthogonal = true;
  for (int i = 1; i <= d; ++i) {
    const PolyMatrix& ei = m.act(i, i);
    sum = sum + ei;
    report.idempotents = report.idempotents && (ei * ei == ei);
    for (int j = 1; j <= d; ++j) {
      if (i == j) continue;
      report.orthogonal = report.orthogonal && (ei * m.act(j, j)).is_zero();
    }
  }
  report.sum_identity = (sum == id);

  report.structure_constants = true;
  for (int i = 1; i <= d && report.structure_constants; ++i) {
    for (int j = 1; j <= d && report.structure_constants; ++j) {
      for (int p = 1; p <= d && report.structure_constants; ++p) {
        for (int q = 1; q <= d && report.structure_constants; ++q) {
          const PolyMatrix lhs = m.act(i, j) * m.act(p, q);
          GammaElement prod = gamma_mul(GammaElement::basis(m.f, d, i, j),
                                        GammaElement::basis(m.f, d, p, q));
          PolyMatrix rhs(m.ring, m.rank, m.rank);
          for (int a = 1; a <= d; ++a) {
            for (int b = 1; b <= d; ++b) {
              if (prod.coeff(a, b).is_zero()) continue;
              rhs = rhs + m.act(a, b).scaled(prod.coeff(a, b));
            }
          }
          report.structure_constants = report.structure_constants && (lhs == rhs);
        }
      }
    }
  }
  report.valid = report.idempotents && report.orthogonal && report.sum_identity &&
                 report.structure_constants;
  return report;
}

GammaModule functor_F(const MatrixFactorization& x) {
  const int d = x.factor_count();
  const std::size_t n = x.size();
  const RingPtr& ring = x.ring();
  std::vector<PolyMatrix> action;
  action.reserve(static_cast<std::size_t>(d) * d);
  for (int i = 1; i <= d; ++i) {
    for (int j = 1; j <= d; ++j) {
      // e_ij reads the F_i block and writes theta_{ji} into the F_j block.
      PolyMatrix a(ring, d * n, d * n);
      const PolyMatrix th = theta(x, j, i);
      const std::size_t row0 = static_cast<std::size_t>(norm1(j, d) - 1) * n;
      const std::size_t col0 = static_cast<std::size_t>(norm1(i, d) - 1) * n;
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) a.at(row0 + r, col0 + c) = th.at(r, c);
      }
      action.push_back(std::move(a));
    }
  }
  return GammaModule{ring, x.f(), d, d * n, std::move(action), true, n};
}

PolyMatrix functor_F_morphism(const Morphism& alpha) {
  const int d = alpha.source().factor_count();
  PolyMatrix m = alpha.component(1);
  for (int k = 2; k <= d; ++k) m = direct_sum(m, alpha.component(k));
  return m;
}

MatrixFactorization functor_H(const GammaModule& m) {
  if (!m.adapted) {
    throw std::domain_error("functor_H needs an adapted module basis");
  }
  if (m.rank != static_cast<std::size_t>(m.d) * m.block) {
    throw std::domain_error("adapted module must have equal block ranks");
  }
  const int d = m.d;
  PolyMatrix zact(m.ring, m.rank, m.rank);
  for (int i = 1; i <= d; ++i) zact = zact + m.act(i, i - 1);
  std::vector<PolyMatrix> factors;
  for (int k = 1; k <= d; ++k) {
    const std::size_t row0 = static_cast<std::size_t>(norm1(k, d) - 1) * m.block;
    const std::size_t col0 = static_cast<std::size_t>(norm1(k + 1, d) - 1) * m.block;
    factors.push_back(zact.submatrix(row0, col0, m.block, m.block));
    // Left multiplication by z must not leak outside the adjacent block.
    for (std::size_t r = 0; r < m.rank; ++r) {
      for (std::size_t c = col0; c < col0 + m.block; ++c) {
        if ((r < row0 || r >= row0 + m.block) && !zact.at(r, c).is_zero()) {
          throw std::domain_error("module basis is not adapted to the idempotent blocks");
        }
      }
    }
  }
  return MatrixFactorization(m.f, std::move(factors));
}

GammaModule gamma_regular_module(const Poly& f, int d) {
  const RingPtr& ring = f.ring();
  const std::size_t rank = static_cast<std::size_t>(d) * d;
  // Basis position of e_pq: block q holds e_1q .. e_dq.
  auto pos = [&](int p, int q) {
    return static_cast<std::size_t>(norm1(q, d) - 1) * d + (norm1(p, d) - 1);
  };
  std::vector<PolyMatrix> action;
  for (int i = 1; i <= d; ++i) {
    for (int j = 1; j <= d; ++j) {
      PolyMatrix a(ring, rank, rank);
      for (int p = 1; p <= d; ++p) {
        for (int q = 1; q <= d; ++q) {
          GammaElement prod = gamma_mul(GammaElement::basis(f, d, i, j),
                                        GammaElement::basis(f, d, p, q));
          for (int a2 = 1; a2 <= d; ++a2) {
            for (int b2 = 1; b2 <= d; ++b2) {
              if (prod.coeff(a2, b2).is_zero()) continue;
              a.at(pos(a2, b2), pos(p, q)) = prod.coeff(a2, b2);
            }
          }
        }
      }
      action.push_back(std::move(a));
    }
  }
  return GammaModule{ring, f, d, rank, std::move(action), true, static_cast<std::size_t>(d)};
}

Morphism functor_HF_roundtrip(const MatrixFactorization& x) {
  MatrixFactorization hfx = functor_H(functor_F(x));
  std::vector<PolyMatrix> comp(x.factor_count(), PolyMatrix::identity(x.ring(), x.size()));
  return Morphism(x, hfx, std::move(comp));
}

}  // namespace mfd
