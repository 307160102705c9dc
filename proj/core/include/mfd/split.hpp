#pragma once

#include "mfd/mf.hpp"
#include "mfd/reduce.hpp"

namespace mfd {

/// Some factor is invertible over S (its cokernel vanishes), tested by full
/// residue rank. Throws std::invalid_argument on the zero object.
bool is_pseudoprojective(const MatrixFactorization& x);

struct SplitPrediction {
  std::vector<std::size_t> m;  // multiplicity of P_k inside the syzygy, per slot
  std::size_t stable_size;     // sum of min_gens - n
};

/// Exact counts for the projective part of the syzygy of x:
/// m_k = n - mu_R(cok phi_k), stable size = sum mu_R(cok phi_k) - n.
SplitPrediction predict_syzygy_split(const MatrixFactorization& x);

struct SplitResult {
  MatrixFactorization stable;
  std::vector<int> multiplicities;   // s_i: copies of P_i detached, slot-indexed
  std::vector<int> strand_slots;     // slot of each detached projective, in detach order
  std::vector<PolyMatrix> u, u_inv;  // per slot: u_k phi_k u_{k+1}^{-1} = stable + tail
  bool exact = true;
  unsigned precision = 0;
  bool fixpoint_scalars_left = false;  // field constants remain in the stable part
  bool fixpoint_units_left = false;    // unit entries remain in the stable part
  bool change_verified = false;        // base-change and block-diagonal identities checked
};

/// Detach projective strands by unit pivoting. A P_i block is detached only
/// when a full size-1 cyclic strand (d-1 ones and one f) decouples in every
/// factor simultaneously; the search backtracks, so a failed attempt leaves
/// the factorization untouched. Stops at a fixpoint when no seed leads to a
/// detachable strand.
SplitResult split_projectives(const MatrixFactorization& x,
                              PivotPolicy policy = PivotPolicy::scalar_units,
                              ArithMode mode = ArithMode::exact_mode());

}  // namespace mfd
