#pragma once

#include "mfd/mf.hpp"
#include "mfd/reduce.hpp"

namespace mfd {

/// Short exact sequence of matrix factorizations: inclusion an admissible
/// mono, surjection an admissible epi, composite zero, componentwise rank
/// additivity.
struct ShortExactSeq {
  Morphism inclusion;
  Morphism surjection;
};

struct SesReport {
  bool composite_zero = false;
  bool admissible_mono = false;
  bool admissible_epi = false;
  bool rank_additive = false;
  bool valid = false;
};

SesReport ses_verify(const ShortExactSeq& ses, unsigned trials, std::uint64_t seed);

/// The canonical projective cover / injective envelope data attached to X:
/// P(X), I(X), the theta-sums and their transposes, and the four structure
/// morphisms, together with the syzygy and cosyzygy they cut out.
struct StructureMaps {
  MatrixFactorization px;           // P(X)
  MatrixFactorization ix;           // I(X)
  MatrixFactorization omega;        // syzygy
  MatrixFactorization omega_minus;  // cosyzygy
  std::vector<PolyMatrix> theta_sum;  // Theta_k: Fhat_k -> F_k
  std::vector<PolyMatrix> xi;         // Xi_k: F_k -> Fhat_k
  Morphism rho;  // P(X) ->> X,  (1 Theta_k)
  Morphism lam;  // X >-> I(X),  (1; Xi_k)
  Morphism eps;  // omega >-> P(X), (-Theta_k; 1)
  Morphism eta;  // I(X) ->> omega_minus, (-Xi_k 1)
};

StructureMaps structure_maps(const MatrixFactorization& x);

struct SyzygyResult {
  MatrixFactorization omega;
  ShortExactSeq ses;  // omega >-> P(X) ->> X
};
SyzygyResult syzygy(const MatrixFactorization& x);

struct CosyzygyResult {
  MatrixFactorization omega_minus;
  ShortExactSeq ses;  // X >-> I(X) ->> omega_minus
};
CosyzygyResult cosyzygy(const MatrixFactorization& x);

/// The unitriangular isomorphism syzygy -> cosyzygy (identity when d = 2).
Morphism syzygy_cosyzygy_iso(const MatrixFactorization& x);

/// Mapping cone of alpha: X -> X' with its triangle maps.
struct ConeResult {
  MatrixFactorization cone;
  Morphism inclusion;   // q: X' >-> cone
  Morphism projection;  // p: cone ->> cosyzygy(X)
  Morphism envelope;    // beta: I(X) -> cone completing the ladder
};
ConeResult mapping_cone(const Morphism& alpha);

/// Null-homotopy witness: s[j-1] = s_j : F_j -> F'_{j-1}.
struct Homotopy {
  std::vector<PolyMatrix> s;
};

struct HomotopyReport {
  std::vector<bool> index_ok;
  bool valid = false;
};

/// Check alpha_i = sum_k theta'_{i(i-k)} s_{i-k+1} theta_{(i-k+1)i} for all i.
HomotopyReport homotopy_verify(const Morphism& alpha, const Homotopy& h);

/// Any family s_j : F_j -> F'_{j-1} assembles into a morphism I(X) -> X';
/// composing with lambda^X yields the null-homotopic morphism witnessed by s.
Morphism morphism_from_homotopy(const MatrixFactorization& x, const MatrixFactorization& xprime,
                                const std::vector<PolyMatrix>& s);

/// Extract the homotopy witnessing that beta o lambda^X is null-homotopic,
/// for any morphism beta: I(X) -> X'.
Homotopy homotopy_from_injective_factorization(const Morphism& beta,
                                               const MatrixFactorization& x);

struct PushoutResult {
  MatrixFactorization object;  // Y'
  Morphism induced_mono;       // X' >-> Y'
  Morphism projection;         // Y -> Y'
};

/// Pushout of an admissible mono q: X >-> Y along beta: X -> X'.
/// Exact mode requires the splittings of q_k to be reachable with scalar
/// pivots, else NeedsTruncatedMode is raised.
PushoutResult pushout(const Morphism& q, const Morphism& beta,
                      PivotPolicy policy = PivotPolicy::scalar_units,
                      ArithMode mode = ArithMode::exact_mode());

struct PullbackResult {
  MatrixFactorization object;  // Q
  Morphism induced_epi;        // Q ->> Y
  Morphism lift;               // Q -> X'
};

/// Pullback of an admissible epi p: X' ->> Y' along g: Y -> Y'.
PullbackResult pullback(const Morphism& p, const Morphism& g,
                        PivotPolicy policy = PivotPolicy::scalar_units,
                        ArithMode mode = ArithMode::exact_mode());

struct ResolutionResult {
  Morphism p;  // I(X) -> P(X)
  Morphism q;  // P(X) -> I(X)
  bool pq_zero = false;
  bool qp_zero = false;
  std::vector<std::size_t> p_ranks;  // generic rank per component
  std::vector<std::size_t> q_ranks;
};

/// Two-periodic projective resolution data: p = eps o alpha^{-1} o eta and
/// q = lam o rho, with exact zero compositions and rank evidence.
ResolutionResult periodic_resolution(const MatrixFactorization& x, unsigned trials,
                                     std::uint64_t seed);

/// Permutation separating the interleaved hat-blocks of a direct sum, the
/// same matrix for every slot k.
PolyMatrix hat_interleave_permutation(const RingPtr& ring, int d, std::size_t na,
                                      std::size_t nb);

}  // namespace mfd
