#pragma once

#include "mfd/mf.hpp"

namespace mfd {

/// Element of the rank-d^2 algebra on the basis {e_ij}: a d x d grid of
/// S-coefficients, coeff(i, j) multiplying e_ij. Multiplication follows the
/// structure constants: e_ij e_pq vanishes unless i = q, and the surviving
/// product is e_pj times f to the number of full laps the composite path
/// j -> i -> p makes around Z_d.
class GammaElement {
 public:
  GammaElement(RingPtr ring, Poly f, int d);  // zero

  static GammaElement basis(const Poly& f, int d, int i, int j);  // e_ij
  static GammaElement one(const Poly& f, int d);
  /// z = sum_i e_{i(i-1)}.
  static GammaElement z(const Poly& f, int d);

  const RingPtr& ring() const { return ring_; }
  const Poly& f() const { return f_; }
  int d() const { return d_; }

  const Poly& coeff(int i, int j) const;  // indices taken mod d, 1-based
  Poly& coeff(int i, int j);

  GammaElement operator-() const;
  friend GammaElement operator+(const GammaElement& a, const GammaElement& b);
  friend GammaElement operator-(const GammaElement& a, const GammaElement& b);
  GammaElement scaled(const Poly& c) const;

  bool operator==(const GammaElement& other) const;
  bool operator!=(const GammaElement& other) const { return !(*this == other); }

  std::string str() const;

 private:
  RingPtr ring_;
  Poly f_;
  int d_;
  std::vector<Poly> c_;  // row-major (i-1)*d + (j-1)
};

GammaElement gamma_mul(const GammaElement& a, const GammaElement& b);

/// Closed form z^s = f^q sum_i e_{i(i-r)} for s = dq + r.
GammaElement gamma_z_power(const Poly& f, int d, unsigned s);

struct EijFactorization {
  std::vector<std::pair<int, int>> chain;  // e_{(j+1)j}, e_{(j+2)(j+1)}, ..., e_{i(i-1)}
  GammaElement product;
  bool matches;  // product equals e_ij
};

/// e_ij as the ordered product of the adjacent-step generators.
/// Throws std::invalid_argument when i = j.
EijFactorization eij_factorization(const Poly& f, int d, int i, int j);

/// Left module over the e_ij algebra, free over S, given by one action
/// matrix per basis element. Adapted means the S-basis is grouped by the
/// idempotent blocks e_11 M, ..., e_dd M, in that order, with equal block
/// ranks.
struct GammaModule {
  RingPtr ring;
  Poly f;
  int d;
  std::size_t rank;
  std::vector<PolyMatrix> action;  // action[(i-1)*d + (j-1)] = matrix of e_ij
  bool adapted;
  std::size_t block;  // block rank when adapted

  const PolyMatrix& act(int i, int j) const;
};

struct GammaModuleReport {
  bool idempotents = false;       // e_ii^2 = e_ii
  bool orthogonal = false;        // e_ii e_jj = 0 for i != j
  bool sum_identity = false;      // sum e_ii = 1
  bool structure_constants = false;  // action is multiplicative on all basis pairs
  bool valid = false;
};

GammaModuleReport gamma_module_verify(const GammaModule& m);

/// Hom(P, X) with the theta identification: rank dn, adapted, e_ij acting by
/// theta_{ji} from block i into block j.
GammaModule functor_F(const MatrixFactorization& x);

/// Block-diagonal matrix of a morphism under functor_F.
PolyMatrix functor_F_morphism(const Morphism& alpha);

/// Matrix factorization (z: e_22 M -> e_11 M, ..., z: e_11 M -> e_dd M).
/// Requires an adapted module with equal block ranks.
MatrixFactorization functor_H(const GammaModule& m);

/// The left regular module on the basis {e_pq}, grouped into idempotent
/// blocks: block k has basis e_1k, ..., e_dk.
GammaModule gamma_regular_module(const Poly& f, int d);

/// The identification X -> H(F(X)) as a morphism (identity components in
/// adapted coordinates).
Morphism functor_HF_roundtrip(const MatrixFactorization& x);

}  // namespace mfd
