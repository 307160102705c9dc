#pragma once

#include "mfd/matrix.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace mfd {

/// Pivot admissibility: scalar_units pivots only on nonzero field constants
/// (exact arithmetic throughout); any_unit also pivots on entries with a unit
/// constant term, inverting them as truncated series at a fixed precision.
enum class PivotPolicy { scalar_units, any_unit };

struct ArithMode {
  bool exact = true;
  unsigned precision = 0;

  static ArithMode exact_mode() { return {true, 0}; }
  static ArithMode truncated(unsigned precision) { return {false, precision}; }
};

/// Raised when an exact-mode reduction stalls on a unit that is not a field
/// constant; the caller may retry with PivotPolicy::any_unit.
struct NeedsTruncatedMode : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Invertible row/column base change M' = left * M * right, with explicit
/// inverses. In truncated mode the inverse products equal the identity only
/// up to the stated precision.
struct BaseChange {
  PolyMatrix left, left_inv, right, right_inv;
  bool exact = true;
  unsigned precision = 0;
};

struct ReduceResult {
  PolyMatrix reduced;  // left * input * right
  BaseChange change;
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // cleared to 1 at these positions
  bool fixpoint;  // no admissible pivot with remaining work
};

/// Clear unit pivots by invertible row/column operations. Each pivot leaves
/// its row equal to a coordinate row and its column equal to a coordinate
/// column; the loop stops when no admissible pivot remains in the unpivoted
/// submatrix.
ReduceResult elementary_reduce(const PolyMatrix& m, PivotPolicy policy,
                               ArithMode mode = ArithMode::exact_mode());

/// For a split injection q (residue_rank == cols): invertible U, V with
/// U q V = [I; 0]. Throws NeedsTruncatedMode in exact mode when a non-scalar
/// unit pivot would be required, std::domain_error if q is not split.
struct SplitInjection {
  PolyMatrix u, u_inv, v, v_inv;
};
SplitInjection split_injection(const PolyMatrix& q, PivotPolicy policy,
                               ArithMode mode = ArithMode::exact_mode());

/// For a surjection p between free modules (residue_rank == rows):
/// invertible U, V with U p V = [I 0].
struct SplitSurjection {
  PolyMatrix u, u_inv, v, v_inv;
};
SplitSurjection split_surjection(const PolyMatrix& p, PivotPolicy policy,
                                 ArithMode mode = ArithMode::exact_mode());

PolyMatrix permutation_matrix(RingPtr ring, const std::vector<std::size_t>& image);

}  // namespace mfd
