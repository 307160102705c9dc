#include "mfd/mf.hpp"

#include <stdexcept>

namespace mfd {

namespace {

int norm1(int v, int d) {
  int r = (v - 1) % d;
  if (r < 0) r += d;
  return r + 1;
}

}  // namespace

CyclicIndex::CyclicIndex(int value, int modulus) : v_(0), d_(modulus) {
  if (modulus < 1) throw std::invalid_argument("cyclic modulus must be positive");
  v_ = norm1(value, modulus);
}

MatrixFactorization::MatrixFactorization(Poly f, std::vector<PolyMatrix> factors)
    : ring_(f.ring()), f_(std::move(f)), n_(0), factors_(std::move(factors)) {
  if (factors_.size() < 2) {
    throw std::invalid_argument("a matrix factorization needs d >= 2 factors");
  }
  if (f_.is_zero() || f_.is_unit()) {
    throw std::invalid_argument("f must be a nonzero non-unit");
  }
  n_ = factors_[0].rows();
  for (const auto& m : factors_) {
    require_same_ring(ring_, m.ring());
    if (m.rows() != n_ || m.cols() != n_) {
      throw std::invalid_argument("factors must be square matrices of equal size");
    }
  }
}

const PolyMatrix& MatrixFactorization::factor(int k) const {
  return factors_[norm1(k, factor_count()) - 1];
}

PolyMatrix& MatrixFactorization::factor(int k) {
  return factors_[norm1(k, factor_count()) - 1];
}

bool MatrixFactorization::operator==(const MatrixFactorization& other) const {
  if (factor_count() != other.factor_count() || n_ != other.n_) return false;
  if (!same_ring(ring_, other.ring_) || f_ != other.f_) return false;
  for (int k = 1; k <= factor_count(); ++k) {
    if (factor(k) != other.factor(k)) return false;
  }
  return true;
}

RotationReport mf_verify(const MatrixFactorization& x) {
  const int d = x.factor_count();
  RotationReport report;
  report.rotation_ok.assign(d, false);
  const PolyMatrix target = PolyMatrix::scalar(x.ring(), x.size(), x.f());
  for (int k = 1; k <= d; ++k) {
    PolyMatrix prod = PolyMatrix::identity(x.ring(), x.size());
    for (int t = 0; t < d; ++t) prod = prod * x.factor(k + t);
    report.rotation_ok[k - 1] = (prod == target);
  }
  report.valid = true;
  for (bool ok : report.rotation_ok) report.valid = report.valid && ok;
  return report;
}

MatrixFactorization mf_shift(const MatrixFactorization& x, int j) {
  const int d = x.factor_count();
  std::vector<PolyMatrix> factors;
  factors.reserve(d);
  for (int k = 1; k <= d; ++k) factors.push_back(x.factor(j + k));
  return MatrixFactorization(x.f(), std::move(factors));
}

MatrixFactorization mf_sum(const MatrixFactorization& x, const MatrixFactorization& y) {
  if (x.factor_count() != y.factor_count()) {
    throw std::invalid_argument("direct sum needs equal factor counts");
  }
  if (!same_ring(x.ring(), y.ring()) || x.f() != y.f()) {
    throw std::invalid_argument("direct sum needs the same f");
  }
  std::vector<PolyMatrix> factors;
  for (int k = 1; k <= x.factor_count(); ++k) {
    factors.push_back(direct_sum(x.factor(k), y.factor(k)));
  }
  return MatrixFactorization(x.f(), std::move(factors));
}

PolyMatrix theta(const MatrixFactorization& x, int k, int i) {
  const int d = x.factor_count();
  CyclicIndex from(k, d), to(i, d);
  PolyMatrix prod = PolyMatrix::identity(x.ring(), x.size());
  CyclicIndex j = from;
  while (!(j == to)) {
    prod = prod * x.factor(j.value());
    j = j + 1;
  }
  return prod;
}

MatrixFactorization proj_P(int i, int d, const Poly& f) {
  if (d < 2) throw std::invalid_argument("d must be at least 2");
  const int slot = norm1(i, d);
  std::vector<PolyMatrix> factors;
  for (int k = 1; k <= d; ++k) {
    factors.push_back(k == slot ? PolyMatrix::scalar(f.ring(), 1, f)
                                : PolyMatrix::identity(f.ring(), 1));
  }
  return MatrixFactorization(f, std::move(factors));
}

MatrixFactorization proj_sum(const Poly& f, const std::vector<int>& mult) {
  const int d = static_cast<int>(mult.size());
  if (d < 2) throw std::invalid_argument("multiplicity list needs one entry per slot, d >= 2");
  std::vector<PolyMatrix> factors(d, PolyMatrix(f.ring(), 0, 0));
  MatrixFactorization acc(f, std::move(factors));
  for (int i = 1; i <= d; ++i) {
    for (int c = 0; c < mult[i - 1]; ++c) acc = mf_sum(acc, proj_P(i, d, f));
  }
  return acc;
}

std::size_t min_gens(const MatrixFactorization& x, int k) {
  return x.size() - residue_rank(x.factor(k));
}

bool is_reduced(const MatrixFactorization& x) {
  for (int k = 1; k <= x.factor_count(); ++k) {
    const PolyMatrix& m = x.factor(k);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (!m.ring()->field.is_zero(m.at(i, j).constant_term())) return false;
      }
    }
  }
  return true;
}

MatrixFactorization zero_object(const MatrixFactorization& like) {
  std::vector<PolyMatrix> factors(like.factor_count(), PolyMatrix(like.ring(), 0, 0));
  return MatrixFactorization(like.f(), std::move(factors));
}

Morphism::Morphism(MatrixFactorization source, MatrixFactorization target,
                   std::vector<PolyMatrix> components)
    : source_(std::move(source)), target_(std::move(target)), comp_(std::move(components)) {
  if (source_.factor_count() != target_.factor_count()) {
    throw std::invalid_argument("morphism endpoints need equal factor counts");
  }
  if (!same_ring(source_.ring(), target_.ring()) || source_.f() != target_.f()) {
    throw std::invalid_argument("morphism endpoints need the same f");
  }
  if (static_cast<int>(comp_.size()) != source_.factor_count()) {
    throw std::invalid_argument("morphism needs one component per factor");
  }
  for (const auto& c : comp_) {
    if (c.rows() != target_.size() || c.cols() != source_.size()) {
      throw std::invalid_argument("morphism component has wrong shape");
    }
  }
}

const PolyMatrix& Morphism::component(int k) const {
  return comp_[norm1(k, source_.factor_count()) - 1];
}

bool Morphism::operator==(const Morphism& other) const {
  if (!(source_ == other.source_) || !(target_ == other.target_)) return false;
  for (int k = 1; k <= source_.factor_count(); ++k) {
    if (component(k) != other.component(k)) return false;
  }
  return true;
}

MorphismReport morphism_verify(const Morphism& alpha) {
  const int d = alpha.source().factor_count();
  MorphismReport report;
  report.square_ok.assign(d, false);
  for (int k = 1; k <= d; ++k) {
    report.square_ok[k - 1] =
        (alpha.component(k) * alpha.source().factor(k) ==
         alpha.target().factor(k) * alpha.component(k + 1));
  }
  report.valid = true;
  for (bool ok : report.square_ok) report.valid = report.valid && ok;
  return report;
}

Morphism identity_morphism(const MatrixFactorization& x) {
  std::vector<PolyMatrix> comp(x.factor_count(), PolyMatrix::identity(x.ring(), x.size()));
  return Morphism(x, x, std::move(comp));
}

Morphism zero_morphism(const MatrixFactorization& source, const MatrixFactorization& target) {
  std::vector<PolyMatrix> comp(source.factor_count(),
                               PolyMatrix(source.ring(), target.size(), source.size()));
  return Morphism(source, target, std::move(comp));
}

Morphism scalar_morphism(const MatrixFactorization& x, const Poly& c) {
  std::vector<PolyMatrix> comp(x.factor_count(), PolyMatrix::scalar(x.ring(), x.size(), c));
  return Morphism(x, x, std::move(comp));
}

Morphism morphism_compose(const Morphism& alpha, const Morphism& beta) {
  if (!(beta.target() == alpha.source())) {
    throw std::invalid_argument("composition needs matching middle object");
  }
  std::vector<PolyMatrix> comp;
  for (int k = 1; k <= alpha.source().factor_count(); ++k) {
    comp.push_back(alpha.component(k) * beta.component(k));
  }
  return Morphism(beta.source(), alpha.target(), std::move(comp));
}

Morphism morphism_shift(const Morphism& alpha, int j) {
  std::vector<PolyMatrix> comp;
  const int d = alpha.source().factor_count();
  for (int k = 1; k <= d; ++k) comp.push_back(alpha.component(j + k));
  return Morphism(mf_shift(alpha.source(), j), mf_shift(alpha.target(), j), std::move(comp));
}

namespace {

void require_verified(const Morphism& alpha) {
  if (!morphism_verify(alpha).valid) {
    throw std::invalid_argument("morphism squares do not commute");
  }
}

}  // namespace

bool is_admissible_mono(const Morphism& alpha) {
  require_verified(alpha);
  for (int k = 1; k <= alpha.source().factor_count(); ++k) {
    if (residue_rank(alpha.component(k)) != alpha.source().size()) return false;
  }
  return true;
}

bool is_admissible_epi(const Morphism& alpha) {
  require_verified(alpha);
  for (int k = 1; k <= alpha.source().factor_count(); ++k) {
    if (residue_rank(alpha.component(k)) != alpha.target().size()) return false;
  }
  return true;
}

bool is_componentwise_iso(const Morphism& alpha) {
  require_verified(alpha);
  if (alpha.source().size() != alpha.target().size()) return false;
  // Over the local ring S, a square matrix is invertible exactly when its
  // constant-term matrix is invertible over the residue field.
  for (int k = 1; k <= alpha.source().factor_count(); ++k) {
    if (residue_rank(alpha.component(k)) != alpha.source().size()) return false;
  }
  return true;
}

}  // namespace mfd
