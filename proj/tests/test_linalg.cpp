#include <doctest.h>

#include "mfd/corpus.hpp"
#include "mfd/mf.hpp"
#include "mfd/reduce.hpp"
#include "test_util.hpp"

using namespace mfd;

namespace {

RingPtr qring() { return make_ring(Field::rationals(), {"x", "y"}); }

PolyMatrix M(const RingPtr& r, const std::vector<std::vector<std::string>>& rows) {
  PolyMatrix m(r, rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = Poly::parse(r, rows[i][j]);
  return m;
}

// Rank by evaluation with an elimination written independently of
// scalar_rank: Laplace-style minor scan for up to 2x2.
std::size_t small_rank_oracle(const PolyMatrix& m, const std::vector<FVal>& pt) {
  const Field& F = m.ring()->field;
  std::vector<std::vector<FVal>> v(m.rows(), std::vector<FVal>(m.cols(), F.zero()));
  bool nonzero = false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      v[i][j] = m.at(i, j).eval(pt);
      nonzero = nonzero || !F.is_zero(v[i][j]);
    }
  if (!nonzero) return 0;
  for (std::size_t i = 0; i + 1 < m.rows(); ++i)
    for (std::size_t j = 0; j + 1 < m.cols(); ++j)
      for (std::size_t i2 = i + 1; i2 < m.rows(); ++i2)
        for (std::size_t j2 = j + 1; j2 < m.cols(); ++j2) {
          FVal det = F.sub(F.mul(v[i][j], v[i2][j2]), F.mul(v[i][j2], v[i2][j]));
          if (!F.is_zero(det)) return 2;
        }
  return 1;
}

}  // namespace

TEST_CASE("matrix arithmetic basics") {
  RingPtr r = qring();
  PolyMatrix m = M(r, {{"x", "y"}, {"0", "-x"}});
  CHECK(PolyMatrix::identity(r, 2) * m == m);
  CHECK(m + (-m) == PolyMatrix(r, 2, 2));

  PolyMatrix a = M(r, {{"x"}});
  PolyMatrix b = M(r, {{"y", "0"}, {"1", "x"}});
  PolyMatrix s = direct_sum(a, b);
  CHECK(s.rows() == 3);
  CHECK(s.cols() == 3);
  CHECK(s.at(0, 0) == Poly::parse(r, "x"));
  CHECK(s.at(1, 1) == Poly::parse(r, "y"));
  CHECK(s.at(0, 1).is_zero());

  CHECK_THROWS_AS((void)(a * b), std::invalid_argument);
}

TEST_CASE("two-factor product of the E6 pair") {
  RingPtr r = qring();
  PolyMatrix beta = M(r, {{"y", "0", "x"}, {"x", "-y^2", "0"}, {"0", "x", "-y"}});
  PolyMatrix alpha = M(r, {{"y^3", "x^2", "x*y^2"}, {"x*y", "-y^2", "x^2"}, {"x^2", "-x*y", "-y^3"}});
  PolyMatrix expected = PolyMatrix::scalar(r, 3, Poly::parse(r, "x^3 + y^4"));
  CHECK(beta * alpha == expected);
  CHECK(alpha * beta == expected);
}

TEST_CASE("residue rank examples") {
  RingPtr r = qring();
  CHECK(residue_rank(M(r, {{"x", "y"}, {"0", "-x"}})) == 0);
  CHECK(residue_rank(M(r, {{"1", "0"}, {"x", "y"}})) == 1);
  CHECK(residue_rank(PolyMatrix::identity(r, 4)) == 4);
  CHECK(residue_rank(PolyMatrix(r, 0, 0)) == 0);
}

TEST_CASE("generic rank examples") {
  RingPtr r = qring();
  PolyMatrix a = M(r, {{"x", "y"}, {"0", "-x"}});
  // Symbolic determinant oracle: -x^2 is nonzero, so the rank is full.
  Poly det = a.at(0, 0) * a.at(1, 1) - a.at(0, 1) * a.at(1, 0);
  CHECK_FALSE(det.is_zero());
  CHECK(generic_rank(a, 5, 0) == 2);

  CHECK(generic_rank(PolyMatrix(r, 3, 3), 5, 0) == 0);

  PolyMatrix c = M(r, {{"x", "x"}, {"y", "y"}});
  std::mt19937_64 rng(3);
  std::size_t oracle = 0;
  for (int t = 0; t < 5; ++t) {
    std::vector<FVal> pt{testutil::random_scalar(r->field, rng),
                         testutil::random_scalar(r->field, rng)};
    oracle = std::max(oracle, small_rank_oracle(c, pt));
  }
  CHECK(oracle == 1);
  CHECK(generic_rank(c, 5, 0) == 1);
}

TEST_CASE("residue rank never exceeds generic rank") {
  for (auto field : {Field::rationals(), Field::prime(7)}) {
    RingPtr r = make_ring(field, {"x", "y"});
    std::mt19937_64 rng(77);
    for (int t = 0; t < 40; ++t) {
      PolyMatrix m(r, 3, 3);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m.at(i, j) = testutil::random_poly(r, rng, 2, 2);
      CHECK(residue_rank(m) <= generic_rank(m, 5, 1234));
    }
  }
}

TEST_CASE("unitriangular inversion") {
  RingPtr r = qring();
  PolyMatrix u = M(r, {{"1", "x + y^2"}, {"0", "1"}});
  PolyMatrix inv = invert_unitriangular(u);
  CHECK(inv == M(r, {{"1", "-x - y^2"}, {"0", "1"}}));
  CHECK(invert_unitriangular(PolyMatrix::identity(r, 3)) == PolyMatrix::identity(r, 3));

  PolyMatrix l = M(r, {{"1", "0", "0"}, {"x", "1", "0"}, {"x*y", "y", "1"}});
  CHECK(invert_unitriangular(l) * l == PolyMatrix::identity(r, 3));
  CHECK(l * invert_unitriangular(l) == PolyMatrix::identity(r, 3));

  CHECK_THROWS_AS((void)invert_unitriangular(M(r, {{"2", "x"}, {"0", "1"}})), std::domain_error);
  CHECK_THROWS_AS((void)invert_unitriangular(M(r, {{"1", "x"}, {"y", "1"}})), std::domain_error);
}

TEST_CASE("elementary reduction with a scalar pivot") {
  RingPtr r = qring();
  ReduceResult res = elementary_reduce(M(r, {{"1", "0"}, {"x", "y"}}), PivotPolicy::scalar_units);
  CHECK(res.reduced == M(r, {{"1", "0"}, {"0", "y"}}));
  CHECK(res.change.left * M(r, {{"1", "0"}, {"x", "y"}}) * res.change.right == res.reduced);
  CHECK(res.change.left * res.change.left_inv == PolyMatrix::identity(r, 2));
  CHECK(res.change.right * res.change.right_inv == PolyMatrix::identity(r, 2));
  CHECK(res.pivots.size() == 1);
}

TEST_CASE("reduction of the D-infinity syzygy blocks") {
  // Reducing each 4x4 syzygy block on its own clears the structural identity
  // rows and leaves a complement with the cokernel of phi_{k+1}...phi_{k-1};
  // the base change is certified by explicit inverses.
  MatrixFactorization x = corpus_item("dinfty").doc.to_mf();
  const int d = x.factor_count();
  for (int k = 1; k <= d; ++k) {
    PolyMatrix omega_k = block({{-theta(x, k + 1, k + 2), -theta(x, k + 1, k)},
                                {PolyMatrix::identity(x.ring(), 2), PolyMatrix(x.ring(), 2, 2)}});
    ReduceResult res = elementary_reduce(omega_k, PivotPolicy::scalar_units);
    CHECK(res.change.left * omega_k * res.change.right == res.reduced);
    CHECK(res.change.left * res.change.left_inv == PolyMatrix::identity(x.ring(), 4));
    CHECK(res.change.right_inv * res.change.right == PolyMatrix::identity(x.ring(), 4));
    const std::size_t mu_reduced = 4 - residue_rank(res.reduced);
    const std::size_t mu_theta = 2 - residue_rank(theta(x, k + 1, k));
    CHECK(res.pivots.size() == 2 + residue_rank(theta(x, k + 1, k)));
    CHECK(mu_reduced - 0 == mu_theta + 2 - res.pivots.size() + residue_rank(theta(x, k + 1, k)));
  }
}

TEST_CASE("truncated pivot matches the series-inverse Schur complement") {
  RingPtr r = qring();
  PolyMatrix m = M(r, {{"1 + x", "y"}, {"y", "x"}});
  ReduceResult res = elementary_reduce(m, PivotPolicy::any_unit, ArithMode::truncated(4));
  CHECK(res.pivots.size() == 2);
  // After the first pivot the complement is x - y^2/(1+x); multiplying back
  // by the unit must reproduce x(1+x) - y^2 up to the precision.
  ReduceResult one = elementary_reduce(M(r, {{"1 + x", "y"}, {"y", "x"}}),
                                       PivotPolicy::any_unit, ArithMode::truncated(4));
  CHECK((res.change.left * m * res.change.right).truncated(4) == res.reduced.truncated(4));
  CHECK((res.change.left * res.change.left_inv).truncated(4) == PolyMatrix::identity(r, 2));
  (void)one;
}

TEST_CASE("exact mode reports a stall on non-scalar units") {
  RingPtr r = qring();
  PolyMatrix q = M(r, {{"1 + x"}, {"y"}});
  CHECK_THROWS_AS((void)split_injection(q, PivotPolicy::scalar_units), NeedsTruncatedMode);
  SplitInjection sp = split_injection(q, PivotPolicy::any_unit, ArithMode::truncated(5));
  PolyMatrix prod = (sp.u * q * sp.v).truncated(5);
  CHECK(prod.at(0, 0) == Poly::from_int(r, 1));
  CHECK(prod.at(1, 0).is_zero());
}

TEST_CASE("split injection and surjection normal forms") {
  RingPtr r = qring();
  PolyMatrix q = M(r, {{"1", "0"}, {"x", "1"}, {"y", "x*y"}});
  SplitInjection sp = split_injection(q, PivotPolicy::scalar_units);
  PolyMatrix normal = sp.u * q * sp.v;
  CHECK(normal.submatrix(0, 0, 2, 2) == PolyMatrix::identity(r, 2));
  CHECK(normal.submatrix(2, 0, 1, 2).is_zero());
  CHECK(sp.u * sp.u_inv == PolyMatrix::identity(r, 3));
  CHECK(sp.v * sp.v_inv == PolyMatrix::identity(r, 2));

  PolyMatrix p = M(r, {{"1", "x", "y"}, {"0", "1", "x^2"}});
  SplitSurjection ss = split_surjection(p, PivotPolicy::scalar_units);
  PolyMatrix pn = ss.u * p * ss.v;
  CHECK(pn.submatrix(0, 0, 2, 2) == PolyMatrix::identity(r, 2));
  CHECK(pn.submatrix(0, 2, 2, 1).is_zero());
  CHECK(ss.v * ss.v_inv == PolyMatrix::identity(r, 3));

  CHECK_THROWS_AS((void)split_injection(M(r, {{"x"}, {"y"}}), PivotPolicy::scalar_units),
                  std::domain_error);
}
