#include "mfd/matrix.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

namespace mfd {

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), a_(rows * cols, Poly(ring_)) {}

PolyMatrix PolyMatrix::identity(RingPtr ring, std::size_t n) {
  return scalar(std::move(ring), n, Poly::from_int(ring, 1));
}

PolyMatrix PolyMatrix::scalar(RingPtr ring, std::size_t n, const Poly& c) {
  PolyMatrix m(std::move(ring), n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = c;
  return m;
}

Poly& PolyMatrix::at(std::size_t i, std::size_t j) {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index out of range");
  return a_[i * cols_ + j];
}

const Poly& PolyMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index out of range");
  return a_[i * cols_ + j];
}

bool PolyMatrix::is_zero() const {
  for (const auto& p : a_) {
    if (!p.is_zero()) return false;
  }
  return true;
}

bool PolyMatrix::operator==(const PolyMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) return false;
  if (!same_ring(ring_, other.ring_)) return false;
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (a_[i] != other.a_[i]) return false;
  }
  return true;
}

PolyMatrix PolyMatrix::operator-() const {
  PolyMatrix r(ring_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
  return r;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  require_same_ring(a.ring_, b.ring_);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw std::invalid_argument("matrix addition shape mismatch");
  }
  PolyMatrix r(a.ring_, a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] + b.a_[i];
  return r;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) { return a + (-b); }

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  require_same_ring(a.ring_, b.ring_);
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  PolyMatrix r(a.ring_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Poly& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Poly& bkj = b.at(k, j);
        if (bkj.is_zero()) continue;
        r.at(i, j) += aik * bkj;
      }
    }
  }
  return r;
}

PolyMatrix PolyMatrix::scaled(const Poly& c) const {
  PolyMatrix r(ring_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
  return r;
}

PolyMatrix PolyMatrix::truncated(unsigned max_degree) const {
  PolyMatrix r(ring_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i].truncated(max_degree);
  return r;
}

PolyMatrix PolyMatrix::submatrix(std::size_t row0, std::size_t col0,
                                 std::size_t nrows, std::size_t ncols) const {
  if (row0 + nrows > rows_ || col0 + ncols > cols_) {
    throw std::out_of_range("submatrix out of range");
  }
  PolyMatrix r(ring_, nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i) {
    for (std::size_t j = 0; j < ncols; ++j) r.at(i, j) = at(row0 + i, col0 + j);
  }
  return r;
}

std::string PolyMatrix::str() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    out << (i == 0 ? "[" : " [");
    for (std::size_t j = 0; j < cols_; ++j) {
      out << at(i, j).str();
      if (j + 1 < cols_) out << ", ";
    }
    out << ']';
    if (i + 1 < rows_) out << ",\n";
  }
  out << ']';
  return out.str();
}

PolyMatrix direct_sum(const PolyMatrix& a, const PolyMatrix& b) {
  require_same_ring(a.ring(), b.ring());
  PolyMatrix r(a.ring(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) r.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return r;
}

PolyMatrix block(const std::vector<std::vector<PolyMatrix>>& grid) {
  if (grid.empty() || grid[0].empty()) {
    throw std::invalid_argument("block() requires a nonempty grid");
  }
  const std::size_t brows = grid.size();
  const std::size_t bcols = grid[0].size();
  RingPtr ring = grid[0][0].ring();
  std::vector<std::size_t> heights(brows), widths(bcols);
  for (std::size_t i = 0; i < brows; ++i) {
    if (grid[i].size() != bcols) throw std::invalid_argument("ragged block grid");
    heights[i] = grid[i][0].rows();
  }
  for (std::size_t j = 0; j < bcols; ++j) widths[j] = grid[0][j].cols();
  std::size_t rows = 0, cols = 0;
  for (auto h : heights) rows += h;
  for (auto w : widths) cols += w;
  PolyMatrix r(ring, rows, cols);
  std::size_t roff = 0;
  for (std::size_t i = 0; i < brows; ++i) {
    std::size_t coff = 0;
    for (std::size_t j = 0; j < bcols; ++j) {
      const PolyMatrix& blk = grid[i][j];
      if (blk.rows() != heights[i] || blk.cols() != widths[j]) {
        throw std::invalid_argument("block partition mismatch");
      }
      for (std::size_t r0 = 0; r0 < blk.rows(); ++r0)
        for (std::size_t c0 = 0; c0 < blk.cols(); ++c0) r.at(roff + r0, coff + c0) = blk.at(r0, c0);
      coff += widths[j];
    }
    roff += heights[i];
  }
  return r;
}

std::size_t scalar_rank(const std::vector<std::vector<FVal>>& rows, const Field& F) {
  std::vector<std::vector<FVal>> m = rows;
  const std::size_t nr = m.size();
  const std::size_t nc = nr == 0 ? 0 : m[0].size();
  std::size_t rank = 0;
  std::size_t prow = 0;
  for (std::size_t col = 0; col < nc && prow < nr; ++col) {
    std::size_t piv = prow;
    while (piv < nr && F.is_zero(m[piv][col])) ++piv;
    if (piv == nr) continue;
    std::swap(m[piv], m[prow]);
    const FVal inv = F.inv(m[prow][col]);
    for (std::size_t j = col; j < nc; ++j) m[prow][j] = F.mul(m[prow][j], inv);
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == prow || F.is_zero(m[i][col])) continue;
      const FVal factor = m[i][col];
      for (std::size_t j = col; j < nc; ++j) {
        m[i][j] = F.sub(m[i][j], F.mul(factor, m[prow][j]));
      }
    }
    ++prow;
    ++rank;
  }
  return rank;
}

std::size_t residue_rank(const PolyMatrix& m) {
  const Field& F = m.ring()->field;
  std::vector<std::vector<FVal>> rows(m.rows(), std::vector<FVal>(m.cols(), F.zero()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m.at(i, j).constant_term();
  return scalar_rank(rows, F);
}

std::size_t generic_rank(const PolyMatrix& m, unsigned trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("generic_rank needs trials >= 1");
  const Field& F = m.ring()->field;
  const std::size_t nvars = m.ring()->vars.size();
  std::mt19937_64 rng(seed);
  std::size_t best = 0;
  for (unsigned t = 0; t < trials; ++t) {
    std::vector<FVal> point(nvars, F.zero());
    for (std::size_t v = 0; v < nvars; ++v) {
      if (F.is_prime_field()) {
        std::uniform_int_distribution<std::int64_t> dist(0, F.modulus() - 1);
        point[v] = F.from_int(dist(rng));
      } else {
        std::uniform_int_distribution<std::int64_t> dist(-20, 20);
        point[v] = F.from_int(dist(rng));
      }
    }
    std::vector<std::vector<FVal>> rows(m.rows(), std::vector<FVal>(m.cols(), F.zero()));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m.at(i, j).eval(point);
    best = std::max(best, scalar_rank(rows, F));
  }
  return best;
}

PolyMatrix invert_unitriangular(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw std::domain_error("not square");
  const std::size_t n = m.rows();
  const Field& F = m.ring()->field;
  bool upper = true, lower = true;
  for (std::size_t i = 0; i < n; ++i) {
    const Poly& d = m.at(i, i);
    if (!d.is_constant() || !F.is_one(d.constant_term())) {
      throw std::domain_error("diagonal is not the identity");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (!m.at(i, j).is_zero()) lower = false;
      if (!m.at(j, i).is_zero()) upper = false;
    }
  }
  if (!upper && !lower) throw std::domain_error("matrix is not unitriangular");
  // m = I + N with N nilpotent; inverse is the alternating Neumann sum.
  PolyMatrix N = m - PolyMatrix::identity(m.ring(), n);
  PolyMatrix inv = PolyMatrix::identity(m.ring(), n);
  PolyMatrix power = PolyMatrix::identity(m.ring(), n);
  for (std::size_t k = 1; k < n; ++k) {
    power = power * N;
    if (power.is_zero()) break;
    inv = (k % 2 == 1) ? inv - power : inv + power;
  }
  return inv;
}

}  // namespace mfd
