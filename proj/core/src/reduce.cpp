#include "mfd/reduce.hpp"

#include <stdexcept>

namespace mfd {

namespace {

/// Working state for a single-matrix reduction: tracks M together with the
/// accumulated left/right changes and their inverses.
struct Tracker {
  PolyMatrix m, l, linv, r, rinv;
  ArithMode mode;

  explicit Tracker(const PolyMatrix& input, ArithMode mode)
      : m(input),
        l(PolyMatrix::identity(input.ring(), input.rows())),
        linv(PolyMatrix::identity(input.ring(), input.rows())),
        r(PolyMatrix::identity(input.ring(), input.cols())),
        rinv(PolyMatrix::identity(input.ring(), input.cols())),
        mode(mode) {}

  Poly trunc(Poly p) const {
    return mode.exact ? p : p.truncated(mode.precision);
  }

  // row i of M scaled by c (and of L); Linv column i picks up c_inv
  void row_scale(std::size_t i, const Poly& c, const Poly& c_inv) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = trunc(m.at(i, j) * c);
    for (std::size_t j = 0; j < l.cols(); ++j) l.at(i, j) = trunc(l.at(i, j) * c);
    for (std::size_t j = 0; j < linv.rows(); ++j) linv.at(j, i) = trunc(linv.at(j, i) * c_inv);
  }

  // row dst += coef * row src
  void row_axpy(std::size_t dst, std::size_t src, const Poly& coef) {
    for (std::size_t j = 0; j < m.cols(); ++j)
      m.at(dst, j) = trunc(m.at(dst, j) + coef * m.at(src, j));
    for (std::size_t j = 0; j < l.cols(); ++j)
      l.at(dst, j) = trunc(l.at(dst, j) + coef * l.at(src, j));
    for (std::size_t j = 0; j < linv.rows(); ++j)
      linv.at(j, src) = trunc(linv.at(j, src) - coef * linv.at(j, dst));
  }

  // col dst += coef * col src
  void col_axpy(std::size_t dst, std::size_t src, const Poly& coef) {
    for (std::size_t i = 0; i < m.rows(); ++i)
      m.at(i, dst) = trunc(m.at(i, dst) + coef * m.at(i, src));
    for (std::size_t i = 0; i < r.rows(); ++i)
      r.at(i, dst) = trunc(r.at(i, dst) + coef * r.at(i, src));
    for (std::size_t i = 0; i < rinv.cols(); ++i)
      rinv.at(src, i) = trunc(rinv.at(src, i) - coef * rinv.at(dst, i));
  }
};

bool pivot_admissible(const Poly& p, PivotPolicy policy) {
  if (p.is_zero()) return false;
  if (policy == PivotPolicy::scalar_units) return p.is_scalar();
  return p.is_unit();
}

// Inverse of an admissible pivot entry: exact field inverse for scalars,
// truncated series inverse otherwise.
Poly pivot_inverse(const Poly& p, ArithMode mode) {
  if (p.is_scalar()) {
    return Poly::constant(p.ring(), p.ring()->field.inv(p.constant_term()));
  }
  if (mode.exact) {
    throw NeedsTruncatedMode("non-scalar unit pivot requires truncated mode");
  }
  return series_inverse(p, mode.precision).poly;
}

struct PivotRun {
  Tracker t;
  std::vector<std::pair<std::size_t, std::size_t>> pivots;
  bool stalled_on_unit = false;
};

PivotRun run_pivots(const PolyMatrix& input, PivotPolicy policy, ArithMode mode) {
  PivotRun run{Tracker(input, mode), {}, false};
  Tracker& t = run.t;
  std::vector<bool> row_done(input.rows(), false), col_done(input.cols(), false);

  while (true) {
    std::size_t pr = 0, pc = 0;
    bool found = false;
    for (std::size_t i = 0; i < t.m.rows() && !found; ++i) {
      if (row_done[i]) continue;
      for (std::size_t j = 0; j < t.m.cols() && !found; ++j) {
        if (col_done[j]) continue;
        if (pivot_admissible(t.m.at(i, j), policy)) {
          pr = i;
          pc = j;
          found = true;
        }
      }
    }
    if (!found) break;

    const Poly pivot = t.m.at(pr, pc);
    t.row_scale(pr, pivot_inverse(pivot, mode), pivot);
    for (std::size_t i = 0; i < t.m.rows(); ++i) {
      if (i == pr || t.m.at(i, pc).is_zero()) continue;
      t.row_axpy(i, pr, -t.m.at(i, pc));
    }
    for (std::size_t j = 0; j < t.m.cols(); ++j) {
      if (j == pc || t.m.at(pr, j).is_zero()) continue;
      t.col_axpy(j, pc, -t.m.at(pr, j));
    }
    row_done[pr] = true;
    col_done[pc] = true;
    run.pivots.emplace_back(pr, pc);
  }
  if (policy == PivotPolicy::scalar_units) {
    for (std::size_t i = 0; i < t.m.rows(); ++i) {
      if (row_done[i]) continue;
      for (std::size_t j = 0; j < t.m.cols(); ++j) {
        if (!col_done[j] && t.m.at(i, j).is_unit()) run.stalled_on_unit = true;
      }
    }
  }
  return run;
}

}  // namespace

ReduceResult elementary_reduce(const PolyMatrix& m, PivotPolicy policy, ArithMode mode) {
  if (policy == PivotPolicy::any_unit && mode.exact) {
    throw std::invalid_argument("any_unit pivots need a truncation precision");
  }
  PivotRun run = run_pivots(m, policy, mode);
  ReduceResult result{
      run.t.m,
      BaseChange{run.t.l, run.t.linv, run.t.r, run.t.rinv, mode.exact, mode.precision},
      run.pivots,
      true,
  };
  return result;
}

PolyMatrix permutation_matrix(RingPtr ring, const std::vector<std::size_t>& image) {
  // image[i] = position the i-th basis vector moves to; P * e_i = e_image[i].
  PolyMatrix p(ring, image.size(), image.size());
  for (std::size_t i = 0; i < image.size(); ++i) {
    p.at(image[i], i) = Poly::from_int(ring, 1);
  }
  return p;
}

SplitInjection split_injection(const PolyMatrix& q, PivotPolicy policy, ArithMode mode) {
  const std::size_t n = q.cols();
  PivotRun run = run_pivots(q, policy, mode);
  if (run.pivots.size() < n) {
    if (policy == PivotPolicy::scalar_units && run.stalled_on_unit) {
      throw NeedsTruncatedMode("splitting stalls on a non-scalar unit pivot; retry truncated");
    }
    throw std::domain_error("matrix is not a split injection");
  }
  // Each column holds a single 1 at its pivot row; permute pivot rows upward
  // so the product becomes [I; 0].
  std::vector<std::size_t> image(q.rows(), q.rows());
  std::vector<bool> used(q.rows(), false);
  for (const auto& [r, c] : run.pivots) {
    image[r] = c;
    used[r] = true;
  }
  std::size_t next = n;
  for (std::size_t i = 0; i < q.rows(); ++i) {
    if (!used[i]) image[i] = next++;
  }
  PolyMatrix p = permutation_matrix(q.ring(), image);
  std::vector<std::size_t> inverse_image(q.rows());
  for (std::size_t i = 0; i < q.rows(); ++i) inverse_image[image[i]] = i;
  PolyMatrix pinv = permutation_matrix(q.ring(), inverse_image);
  return SplitInjection{p * run.t.l, run.t.linv * pinv, run.t.r, run.t.rinv};
}

SplitSurjection split_surjection(const PolyMatrix& p, PivotPolicy policy, ArithMode mode) {
  const std::size_t n = p.rows();
  PivotRun run = run_pivots(p, policy, mode);
  if (run.pivots.size() < n) {
    if (policy == PivotPolicy::scalar_units && run.stalled_on_unit) {
      throw NeedsTruncatedMode("splitting stalls on a non-scalar unit pivot; retry truncated");
    }
    throw std::domain_error("matrix is not a surjection between free modules");
  }
  // Each pivot row holds a single 1 at its pivot column; permute pivot
  // columns leftward so the product becomes [I 0].
  std::vector<std::size_t> image(p.cols(), p.cols());
  std::vector<bool> used(p.cols(), false);
  for (const auto& [r, c] : run.pivots) {
    image[c] = r;
    used[c] = true;
  }
  std::size_t next = n;
  for (std::size_t j = 0; j < p.cols(); ++j) {
    if (!used[j]) image[j] = next++;
  }
  // We need column permutation Q with (reduced * Q) = [I 0]: column c of the
  // reduced matrix must land at position image[c], i.e. Q = P(image)^T.
  std::vector<std::size_t> inverse_image(p.cols());
  for (std::size_t j = 0; j < p.cols(); ++j) inverse_image[image[j]] = j;
  PolyMatrix qperm = permutation_matrix(p.ring(), inverse_image);
  PolyMatrix qperm_inv = permutation_matrix(p.ring(), image);
  return SplitSurjection{run.t.l, run.t.linv, run.t.r * qperm, qperm_inv * run.t.rinv};
}

}  // namespace mfd
