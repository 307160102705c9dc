#pragma once

#include "mfd/gamma.hpp"
#include "mfd/mf.hpp"

namespace mfd {

/// Roots needed by the d-fold branched cover over F_p: omega a primitive
/// d-th root of unity and mu a d-th root of -1. Both properties are
/// re-verified on construction.
struct RootData {
  std::int64_t p;
  std::int64_t omega;
  std::int64_t mu;
};

/// Deterministic smallest-witness search. Throws std::domain_error naming
/// the failed constraint when no omega or no mu exists in F_p.
RootData find_roots(std::int64_t p, int d);

/// Element of the skew group algebra of the cover: coefficients on the basis
/// {z^a sigma^b}, 0 <= a, b < d, with z^d rewritten to -f and
/// sigma z = omega z sigma.
class SkewElement {
 public:
  SkewElement(RingPtr ring, RootData roots, Poly f, int d);  // zero

  static SkewElement basis(const Poly& f, const RootData& roots, int d, int a, int b);
  static SkewElement one(const Poly& f, const RootData& roots, int d);

  const RingPtr& ring() const { return ring_; }
  const RootData& roots() const { return roots_; }
  const Poly& f() const { return f_; }
  int d() const { return d_; }

  const Poly& coeff(int a, int b) const;  // exponents taken mod d
  Poly& coeff(int a, int b);

  friend SkewElement operator+(const SkewElement& x, const SkewElement& y);
  SkewElement scaled(const Poly& c) const;
  bool operator==(const SkewElement& other) const;
  bool operator!=(const SkewElement& other) const { return !(*this == other); }

 private:
  RingPtr ring_;
  RootData roots_;
  Poly f_;
  int d_;
  std::vector<Poly> c_;
};

SkewElement skew_mul(const SkewElement& x, const SkewElement& y);

/// Free module over the cover's skew algebra: action matrices for z and
/// sigma. Adapted means sigma acts diagonally with weights 1, omega, ...,
/// omega^{d-1} on equal blocks (the functor_B basis order F_d, ..., F_1).
struct SigmaModule {
  RingPtr ring;
  RootData roots;
  Poly f;
  int d;
  std::size_t rank;
  PolyMatrix zmat;
  PolyMatrix smat;
  bool adapted;
  std::size_t block;
};

struct SigmaReport {
  bool sigma_order = false;    // smat^d = I
  bool z_relation = false;     // zmat^d = -f I
  bool twist = false;          // smat zmat = omega zmat smat
  bool valid = false;
};

SigmaReport sigma_verify(const SigmaModule& n);

/// The cover-side module of X: basis F_d, F_{d-1}, ..., F_1 with
/// z (x_d,...,x_1) = (mu^{-1} phi_d x_1, mu^{-1} phi_{d-1} x_d, ...) and
/// sigma acting diagonally. X must live over F_p matching the root data.
SigmaModule functor_B(const MatrixFactorization& x, const RootData& roots);

/// Block-diagonal matrix of a morphism under functor_B (order alpha_d..alpha_1).
PolyMatrix functor_B_morphism(const Morphism& alpha);

struct EigenDecomposition {
  std::vector<PolyMatrix> projectors;  // pi_k = (1/d) sum_i omega^{-ik} smat^i
  std::vector<std::size_t> ranks;
  bool sum_identity = false;
  bool idempotent = false;
  bool orthogonal = false;
  bool valid = false;
};

/// Eigenspace projectors of the sigma action; requires smat^d = I and p not
/// dividing d.
EigenDecomposition eigenspace_decompose(const SigmaModule& n, unsigned trials,
                                        std::uint64_t seed);

/// Matrix factorization cut out of an adapted sigma module by multiplication
/// with mu z between consecutive eigenblocks.
MatrixFactorization functor_A(const SigmaModule& n);

/// Images of the basis z^a sigma^b inside the e_ij algebra, with evidence.
struct PsiCertificate {
  std::vector<GammaElement> images;  // index a*d + b
  bool multiplicative;               // on all basis pairs
  bool bijective;                    // coefficient matrix invertible over k
  bool averaged_idempotents;         // (1/d) sum_j omega^{jk} sigma^j maps to e_kk
  bool valid;
};

/// The ring identification psi: z -> mu sum e_{i(i-1)}, sigma -> sum omega^{-i} e_ii.
PsiCertificate psi_iso(const Poly& f, int d, const RootData& roots);

/// Coefficientwise reduction of a rational factorization mod p.
MatrixFactorization reduce_mod_p(const MatrixFactorization& x, std::int64_t p);

}  // namespace mfd
