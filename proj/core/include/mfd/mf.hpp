#pragma once

#include "mfd/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mfd {

/// Index in Z_d, stored as a representative in 1..d. All factor indices are
/// taken modulo the factor count.
class CyclicIndex {
 public:
  CyclicIndex(int value, int modulus);

  int value() const { return v_; }  // in 1..d
  int modulus() const { return d_; }

  CyclicIndex operator+(int shift) const { return CyclicIndex(v_ + shift, d_); }
  CyclicIndex operator-(int shift) const { return CyclicIndex(v_ - shift, d_); }
  bool operator==(const CyclicIndex& other) const = default;

 private:
  int v_, d_;
};

/// A d-tuple of n x n matrices over S whose cyclic products all equal f * I.
/// Factor phi_k is read as a map F_{k+1} -> F_k. Size 0 is the zero object.
class MatrixFactorization {
 public:
  MatrixFactorization(Poly f, std::vector<PolyMatrix> factors);

  const RingPtr& ring() const { return ring_; }
  const Poly& f() const { return f_; }
  int factor_count() const { return static_cast<int>(factors_.size()); }  // d
  std::size_t size() const { return n_; }                                 // n

  /// phi_k, with k taken mod d (1-based).
  const PolyMatrix& factor(int k) const;
  PolyMatrix& factor(int k);

  bool operator==(const MatrixFactorization& other) const;
  bool operator!=(const MatrixFactorization& other) const { return !(*this == other); }

 private:
  RingPtr ring_;
  Poly f_;
  std::size_t n_;
  std::vector<PolyMatrix> factors_;  // factors_[k-1] = phi_k
};

struct RotationReport {
  std::vector<bool> rotation_ok;  // rotation_ok[k-1]: product starting at phi_k equals f*I
  bool valid = false;
};

/// Check every cyclic rotation product against f * I, exactly.
RotationReport mf_verify(const MatrixFactorization& x);

/// Shift functor T^j: (phi_1..phi_d) -> (phi_{j+1},...,phi_j).
MatrixFactorization mf_shift(const MatrixFactorization& x, int j);

/// Blockwise direct sum; requires equal f and d.
MatrixFactorization mf_sum(const MatrixFactorization& x, const MatrixFactorization& y);

/// theta_{ki} = identity when i == k, phi_k phi_{k+1} ... phi_{i-1} otherwise.
PolyMatrix theta(const MatrixFactorization& x, int k, int i);

/// Size-1 projective P_i: multiplication by f in slot i, identity elsewhere.
MatrixFactorization proj_P(int i, int d, const Poly& f);
/// Direct sum of P_i^{mult[i-1]} in slot order.
MatrixFactorization proj_sum(const Poly& f, const std::vector<int>& mult);

/// mu_R(cok phi_k) = n - residue_rank(phi_k).
std::size_t min_gens(const MatrixFactorization& x, int k);

/// Every entry of every factor lies in the maximal ideal.
bool is_reduced(const MatrixFactorization& x);

/// Zero object of the same ring, f and d.
MatrixFactorization zero_object(const MatrixFactorization& like);

/// A d-tuple of maps alpha_k: F_k -> F'_k with alpha_k phi_k = phi'_k alpha_{k+1}.
class Morphism {
 public:
  Morphism(MatrixFactorization source, MatrixFactorization target,
           std::vector<PolyMatrix> components);

  const MatrixFactorization& source() const { return source_; }
  const MatrixFactorization& target() const { return target_; }
  const PolyMatrix& component(int k) const;  // alpha_k, k mod d

  bool operator==(const Morphism& other) const;

 private:
  MatrixFactorization source_, target_;
  std::vector<PolyMatrix> comp_;
};

struct MorphismReport {
  std::vector<bool> square_ok;  // square_ok[k-1]: alpha_k phi_k == phi'_k alpha_{k+1}
  bool valid = false;
};

MorphismReport morphism_verify(const Morphism& alpha);

Morphism identity_morphism(const MatrixFactorization& x);
Morphism zero_morphism(const MatrixFactorization& source, const MatrixFactorization& target);
Morphism scalar_morphism(const MatrixFactorization& x, const Poly& c);

/// Composite alpha o beta; requires beta.target == alpha.source.
Morphism morphism_compose(const Morphism& alpha, const Morphism& beta);

/// Shift a morphism along T^j.
Morphism morphism_shift(const Morphism& alpha, int j);

/// Componentwise split injectivity, via full residue column rank (Nakayama).
/// Throws std::invalid_argument on a morphism whose squares do not commute.
bool is_admissible_mono(const Morphism& alpha);
/// Componentwise surjectivity, via full residue row rank.
bool is_admissible_epi(const Morphism& alpha);

/// True when every component is invertible over S, certified by an exact
/// two-sided inverse (unitriangular components) or by unit scalar determinant
/// at the origin plus residue rank.
bool is_componentwise_iso(const Morphism& alpha);

}  // namespace mfd
