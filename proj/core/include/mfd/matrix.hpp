#pragma once

#include "mfd/poly.hpp"

#include <cstddef>
#include <vector>

namespace mfd {

/// Dense matrix of polynomials, modeling a homomorphism of free S-modules.
/// Zero-by-zero and other degenerate shapes are allowed (the zero object
/// needs them).
class PolyMatrix {
 public:
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);

  static PolyMatrix identity(RingPtr ring, std::size_t n);
  static PolyMatrix scalar(RingPtr ring, std::size_t n, const Poly& c);  // c * I_n

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Poly& at(std::size_t i, std::size_t j);
  const Poly& at(std::size_t i, std::size_t j) const;

  bool is_zero() const;
  bool operator==(const PolyMatrix& other) const;
  bool operator!=(const PolyMatrix& other) const { return !(*this == other); }

  PolyMatrix operator-() const;
  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);

  PolyMatrix scaled(const Poly& c) const;
  PolyMatrix truncated(unsigned max_degree) const;
  PolyMatrix submatrix(std::size_t row0, std::size_t col0,
                       std::size_t nrows, std::size_t ncols) const;

  std::string str() const;

 private:
  RingPtr ring_;
  std::size_t rows_, cols_;
  std::vector<Poly> a_;  // row-major
};

PolyMatrix direct_sum(const PolyMatrix& a, const PolyMatrix& b);
/// Assemble from a rectangular grid of blocks; row heights and column widths
/// must be consistent across the grid.
PolyMatrix block(const std::vector<std::vector<PolyMatrix>>& grid);

/// Rank over the residue field k of the constant-term matrix M(0).
std::size_t residue_rank(const PolyMatrix& m);

/// Rank over Frac(S), estimated as the max scalar rank over `trials` random
/// evaluation points (deterministic for a fixed seed). Rational inputs are
/// evaluated at small random integers; prime-field inputs at random field
/// elements.
std::size_t generic_rank(const PolyMatrix& m, unsigned trials, std::uint64_t seed);

/// Exact inverse of a triangular matrix with unit diagonal (upper or lower).
/// Throws std::domain_error otherwise.
PolyMatrix invert_unitriangular(const PolyMatrix& m);

/// Constant-term matrix evaluated over the residue field, with field ranks.
std::size_t scalar_rank(const std::vector<std::vector<FVal>>& rows, const Field& F);

}  // namespace mfd
