#include "mfd/frobenius.hpp"

#include <stdexcept>

namespace mfd {

namespace {

PolyMatrix zero_block(const RingPtr& ring, std::size_t r, std::size_t c) {
  return PolyMatrix(ring, r, c);
}

}  // namespace

SesReport ses_verify(const ShortExactSeq& ses, unsigned trials, std::uint64_t seed) {
  SesReport report;
  const Morphism& inc = ses.inclusion;
  const Morphism& sur = ses.surjection;
  Morphism composite = morphism_compose(sur, inc);
  report.composite_zero = true;
  for (int k = 1; k <= inc.source().factor_count(); ++k) {
    report.composite_zero = report.composite_zero && composite.component(k).is_zero();
  }
  report.admissible_mono = is_admissible_mono(inc);
  report.admissible_epi = is_admissible_epi(sur);
  report.rank_additive = true;
  for (int k = 1; k <= inc.source().factor_count(); ++k) {
    const std::size_t ri = generic_rank(inc.component(k), trials, seed);
    const std::size_t rs = generic_rank(sur.component(k), trials, seed);
    report.rank_additive = report.rank_additive && ri == inc.source().size() &&
                           rs == sur.target().size() &&
                           ri + rs == inc.target().size();
  }
  report.valid = report.composite_zero && report.admissible_mono && report.admissible_epi &&
                 report.rank_additive;
  return report;
}

StructureMaps structure_maps(const MatrixFactorization& x) {
  const int d = x.factor_count();
  const std::size_t n = x.size();
  const RingPtr& ring = x.ring();
  const Poly& f = x.f();
  const PolyMatrix id_n = PolyMatrix::identity(ring, n);
  const PolyMatrix fid = PolyMatrix::scalar(ring, n, f);
  const PolyMatrix zero_n = zero_block(ring, n, n);

  // Block position j in F_k + Fhat_k is F_{k+j}; in Fhat_k position t is F_{k+1+t}.
  std::vector<PolyMatrix> dk, dkp, omega_k, omega_minus_k;
  std::vector<PolyMatrix> theta_sum, xi;
  std::vector<PolyMatrix> rho_k, lam_k, eps_k, eta_k;

  for (int k = 1; k <= d; ++k) {
    // D_k and D'_k on the d x d block grid.
    std::vector<std::vector<PolyMatrix>> dg(d, std::vector<PolyMatrix>(d, zero_n));
    std::vector<std::vector<PolyMatrix>> dpg(d, std::vector<PolyMatrix>(d, zero_n));
    dg[0][d - 1] = fid;
    dpg[0][d - 1] = id_n;
    if (d >= 2) dpg[1][0] = fid;
    for (int i = 1; i < d; ++i) {
      dg[i][i - 1] = id_n;
      if (i >= 2) dpg[i][i - 1] = id_n;
    }
    dk.push_back(block(dg));
    dkp.push_back(block(dpg));

    // Theta_k = (theta_{k(k+1)} ... theta_{k(k-1)}), Xi_k its column mate.
    std::vector<std::vector<PolyMatrix>> tg(1), xg(d - 1, std::vector<PolyMatrix>(1, zero_n));
    for (int t = 1; t <= d - 1; ++t) {
      tg[0].push_back(theta(x, k, k + t));
      xg[t - 1][0] = theta(x, k + t, k);
    }
    theta_sum.push_back(block(tg));
    xi.push_back(block(xg));

    // rho = (1 Theta), eps = (-Theta; 1), lam = (1; Xi), eta = (-Xi 1).
    rho_k.push_back(block({{id_n, theta_sum.back()}}));
    eps_k.push_back(block({{-theta_sum.back()},
                           {PolyMatrix::identity(ring, (d - 1) * n)}}));
    lam_k.push_back(block({{id_n}, {xi.back()}}));
    eta_k.push_back(block({{-xi.back(), PolyMatrix::identity(ring, (d - 1) * n)}}));

    // Syzygy block: top row -theta_{(k+1)(k+2+t)}, subdiagonal identities.
    std::vector<std::vector<PolyMatrix>> og(d - 1, std::vector<PolyMatrix>(d - 1, zero_n));
    for (int t = 0; t <= d - 2; ++t) og[0][t] = -theta(x, k + 1, k + 2 + t);
    for (int s = 1; s <= d - 2; ++s) og[s][s - 1] = id_n;
    omega_k.push_back(block(og));

    // Cosyzygy block: last column -theta_{(k+1+s)k}, subdiagonal identities.
    std::vector<std::vector<PolyMatrix>> omg(d - 1, std::vector<PolyMatrix>(d - 1, zero_n));
    for (int s = 0; s <= d - 2; ++s) omg[s][d - 2] = -theta(x, k + 1 + s, k);
    for (int s = 1; s <= d - 2; ++s) omg[s][s - 1] = id_n;
    omega_minus_k.push_back(block(omg));
  }

  MatrixFactorization px(f, dk);
  MatrixFactorization ix(f, dkp);
  MatrixFactorization omega(f, omega_k);
  MatrixFactorization omega_minus(f, omega_minus_k);

  Morphism rho(px, x, rho_k);
  Morphism lam(x, ix, lam_k);
  Morphism eps(omega, px, eps_k);
  Morphism eta(ix, omega_minus, eta_k);

  return StructureMaps{std::move(px),  std::move(ix),  std::move(omega),
                       std::move(omega_minus), std::move(theta_sum), std::move(xi),
                       std::move(rho), std::move(lam), std::move(eps), std::move(eta)};
}

SyzygyResult syzygy(const MatrixFactorization& x) {
  StructureMaps maps = structure_maps(x);
  return SyzygyResult{maps.omega, ShortExactSeq{maps.eps, maps.rho}};
}

CosyzygyResult cosyzygy(const MatrixFactorization& x) {
  StructureMaps maps = structure_maps(x);
  return CosyzygyResult{maps.omega_minus, ShortExactSeq{maps.lam, maps.eta}};
}

Morphism syzygy_cosyzygy_iso(const MatrixFactorization& x) {
  const int d = x.factor_count();
  const std::size_t n = x.size();
  StructureMaps maps = structure_maps(x);
  std::vector<PolyMatrix> comp;
  for (int k = 1; k <= d; ++k) {
    std::vector<std::vector<PolyMatrix>> g(d - 1,
                                           std::vector<PolyMatrix>(d - 1, zero_block(x.ring(), n, n)));
    for (int s = 0; s <= d - 2; ++s) {
      for (int t = s; t <= d - 2; ++t) {
        g[s][t] = theta(x, k + 1 + s, k + 1 + t);  // identity on the diagonal
      }
    }
    comp.push_back(block(g));
  }
  return Morphism(maps.omega, maps.omega_minus, std::move(comp));
}

ConeResult mapping_cone(const Morphism& alpha) {
  if (!morphism_verify(alpha).valid) {
    throw std::invalid_argument("mapping cone needs a verified morphism");
  }
  const MatrixFactorization& x = alpha.source();
  const MatrixFactorization& xp = alpha.target();
  const int d = x.factor_count();
  const std::size_t n = x.size();
  const std::size_t np = xp.size();
  const RingPtr& ring = x.ring();
  StructureMaps maps = structure_maps(x);

  std::vector<PolyMatrix> delta, qk, pk, betak;
  for (int k = 1; k <= d; ++k) {
    // Rows: F'_k, F_{k+1}, ..., F_{k-1}; columns: F'_{k+1}, F_{k+2}, ..., F_k.
    std::vector<std::vector<PolyMatrix>> g(d, std::vector<PolyMatrix>(d, zero_block(ring, n, n)));
    g[0][0] = xp.factor(k);
    g[0][d - 1] = alpha.component(k);
    for (int i = 1; i <= d - 1; ++i) {
      g[i][0] = zero_block(ring, n, np);
      g[i][d - 1] = -theta(x, k + i, k);
      if (i >= 2) g[i][i - 1] = PolyMatrix::identity(ring, n);
    }
    for (int j = 1; j <= d - 2; ++j) g[0][j] = zero_block(ring, np, n);
    delta.push_back(block(g));

    qk.push_back(block({{PolyMatrix::identity(ring, np)},
                        {zero_block(ring, (d - 1) * n, np)}}));
    pk.push_back(block({{zero_block(ring, (d - 1) * n, np),
                         PolyMatrix::identity(ring, (d - 1) * n)}}));
    betak.push_back(block({{alpha.component(k), zero_block(ring, np, (d - 1) * n)},
                           {-maps.xi[k - 1], PolyMatrix::identity(ring, (d - 1) * n)}}));
  }

  MatrixFactorization cone(x.f(), delta);
  Morphism q(xp, cone, qk);
  Morphism p(cone, maps.omega_minus, pk);
  Morphism beta(maps.ix, cone, betak);
  return ConeResult{std::move(cone), std::move(q), std::move(p), std::move(beta)};
}

HomotopyReport homotopy_verify(const Morphism& alpha, const Homotopy& h) {
  const MatrixFactorization& x = alpha.source();
  const MatrixFactorization& xp = alpha.target();
  const int d = x.factor_count();
  if (static_cast<int>(h.s.size()) != d) {
    throw std::invalid_argument("homotopy needs one map per index");
  }
  auto s_at = [&](int j) -> const PolyMatrix& {
    int r = (j - 1) % d;
    if (r < 0) r += d;
    return h.s[r];
  };
  HomotopyReport report;
  report.index_ok.assign(d, false);
  for (int i = 1; i <= d; ++i) {
    PolyMatrix acc(x.ring(), xp.size(), x.size());
    for (int k = 0; k < d; ++k) {
      acc = acc + theta(xp, i, i - k) * s_at(i - k + 1) * theta(x, i - k + 1, i);
    }
    report.index_ok[i - 1] = (acc == alpha.component(i));
  }
  report.valid = true;
  for (bool ok : report.index_ok) report.valid = report.valid && ok;
  return report;
}

Morphism morphism_from_homotopy(const MatrixFactorization& x, const MatrixFactorization& xprime,
                                const std::vector<PolyMatrix>& s) {
  const int d = x.factor_count();
  if (static_cast<int>(s.size()) != d) {
    throw std::invalid_argument("need one map s_j per index");
  }
  auto s_at = [&](int j) -> const PolyMatrix& {
    int r = (j - 1) % d;
    if (r < 0) r += d;
    return s[r];
  };
  StructureMaps maps = structure_maps(x);
  std::vector<PolyMatrix> comp;
  for (int k = 1; k <= d; ++k) {
    std::vector<std::vector<PolyMatrix>> g(1);
    g[0].push_back(theta(xprime, k, k - 1) * s_at(k));
    for (int j = 1; j <= d - 1; ++j) {
      if (j == 1) {
        g[0].push_back(s_at(k + 1));
      } else {
        g[0].push_back(theta(xprime, k, k + j - 1) * s_at(k + j));
      }
    }
    comp.push_back(block(g));
  }
  return Morphism(maps.ix, xprime, std::move(comp));
}

Homotopy homotopy_from_injective_factorization(const Morphism& beta,
                                               const MatrixFactorization& x) {
  const int d = x.factor_count();
  const std::size_t n = x.size();
  StructureMaps maps = structure_maps(x);
  if (!(beta.source() == maps.ix)) {
    throw std::invalid_argument("morphism does not start at I(X)");
  }
  Homotopy h;
  for (int j = 1; j <= d; ++j) {
    // s_j = -beta_{(j-1) j}: block column 1 (the F_j summand) of beta_{j-1}.
    const PolyMatrix& b = beta.component(j - 1);
    h.s.push_back(-b.submatrix(0, n, b.rows(), n));
  }
  return h;
}

PushoutResult pushout(const Morphism& q, const Morphism& beta, PivotPolicy policy,
                      ArithMode mode) {
  if (!(q.source() == beta.source())) {
    throw std::invalid_argument("pushout legs must share their source");
  }
  if (!is_admissible_mono(q)) {
    throw std::invalid_argument("pushout needs an admissible monomorphism");
  }
  if (!morphism_verify(beta).valid) {
    throw std::invalid_argument("pushout needs a verified morphism");
  }
  const MatrixFactorization& y = q.target();
  const MatrixFactorization& xp = beta.target();
  const int d = y.factor_count();
  const std::size_t n = q.source().size();
  const std::size_t m = y.size();
  const std::size_t np = xp.size();
  const std::size_t c = m - n;  // cokernel rank
  const RingPtr& ring = y.ring();

  // Per slot: U q V = [I; 0] gives the splitting t, the cokernel projection w
  // and its section s.
  std::vector<PolyMatrix> tk, wk, sk;
  for (int k = 1; k <= d; ++k) {
    SplitInjection sp = split_injection(q.component(k), policy, mode);
    PolyMatrix in_top = block({{PolyMatrix::identity(ring, n), zero_block(ring, n, c)}});
    PolyMatrix in_bot = block({{zero_block(ring, c, n), PolyMatrix::identity(ring, c)}});
    tk.push_back(sp.v * in_top * sp.u);
    wk.push_back(in_bot * sp.u);
    sk.push_back(sp.u_inv * block({{zero_block(ring, n, c)}, {PolyMatrix::identity(ring, c)}}));
  }
  auto at = [&](std::vector<PolyMatrix>& v, int k) -> PolyMatrix& {
    int r = (k - 1) % d;
    if (r < 0) r += d;
    return v[r];
  };

  std::vector<PolyMatrix> chi, mono_k, proj_k;
  for (int k = 1; k <= d; ++k) {
    PolyMatrix glue = at(tk, k) * y.factor(k) * at(sk, k + 1);
    PolyMatrix corner = at(wk, k) * y.factor(k) * at(sk, k + 1);
    chi.push_back(block({{xp.factor(k), beta.component(k) * glue},
                         {zero_block(ring, c, np), corner}}));
    mono_k.push_back(block({{PolyMatrix::identity(ring, np)}, {zero_block(ring, c, np)}}));
    proj_k.push_back(block({{beta.component(k) * at(tk, k)}, {at(wk, k)}}));
  }
  MatrixFactorization object(y.f(), chi);
  Morphism induced_mono(xp, object, mono_k);
  Morphism projection(y, object, proj_k);
  return PushoutResult{std::move(object), std::move(induced_mono), std::move(projection)};
}

PullbackResult pullback(const Morphism& p, const Morphism& g, PivotPolicy policy,
                        ArithMode mode) {
  if (!(p.target() == g.target())) {
    throw std::invalid_argument("pullback legs must share their target");
  }
  if (!is_admissible_epi(p)) {
    throw std::invalid_argument("pullback needs an admissible epimorphism");
  }
  if (!morphism_verify(g).valid) {
    throw std::invalid_argument("pullback needs a verified morphism");
  }
  const MatrixFactorization& xp = p.source();  // X'
  const MatrixFactorization& y = g.source();   // Y
  const int d = y.factor_count();
  const std::size_t m = xp.size();
  const std::size_t npr = p.target().size();
  const std::size_t c = m - npr;  // kernel rank
  const std::size_t ny = y.size();
  const RingPtr& ring = y.ring();

  std::vector<PolyMatrix> sec, ker, wk;
  for (int k = 1; k <= d; ++k) {
    SplitSurjection sp = split_surjection(p.component(k), policy, mode);
    sec.push_back(sp.v * block({{PolyMatrix::identity(ring, npr)}, {zero_block(ring, c, npr)}}) *
                  sp.u);
    ker.push_back(sp.v * block({{zero_block(ring, npr, c)}, {PolyMatrix::identity(ring, c)}}));
    wk.push_back(block({{zero_block(ring, c, npr), PolyMatrix::identity(ring, c)}}) * sp.v_inv);
  }
  auto at = [&](std::vector<PolyMatrix>& v, int k) -> PolyMatrix& {
    int r = (k - 1) % d;
    if (r < 0) r += d;
    return v[r];
  };

  std::vector<PolyMatrix> chi, epi_k, lift_k;
  for (int k = 1; k <= d; ++k) {
    PolyMatrix a_of_b = xp.factor(k) * at(sec, k + 1) * g.component(k + 1) -
                        at(sec, k) * g.component(k) * y.factor(k);
    chi.push_back(block({{y.factor(k), zero_block(ring, ny, c)},
                         {at(wk, k) * a_of_b, at(wk, k) * xp.factor(k) * at(ker, k + 1)}}));
    epi_k.push_back(block({{PolyMatrix::identity(ring, ny), zero_block(ring, ny, c)}}));
    lift_k.push_back(block({{at(sec, k) * g.component(k), at(ker, k)}}));
  }
  MatrixFactorization object(y.f(), chi);
  Morphism induced_epi(object, y, epi_k);
  Morphism lift(object, xp, lift_k);
  return PullbackResult{std::move(object), std::move(induced_epi), std::move(lift)};
}

ResolutionResult periodic_resolution(const MatrixFactorization& x, unsigned trials,
                                     std::uint64_t seed) {
  StructureMaps maps = structure_maps(x);
  Morphism iso = syzygy_cosyzygy_iso(x);
  std::vector<PolyMatrix> inv_comp;
  for (int k = 1; k <= x.factor_count(); ++k) {
    inv_comp.push_back(invert_unitriangular(iso.component(k)));
  }
  Morphism iso_inv(maps.omega_minus, maps.omega, std::move(inv_comp));

  Morphism p = morphism_compose(maps.eps, morphism_compose(iso_inv, maps.eta));
  Morphism q = morphism_compose(maps.lam, maps.rho);

  ResolutionResult result{p, q, true, true, {}, {}};
  Morphism pq = morphism_compose(p, q);
  Morphism qp = morphism_compose(q, p);
  for (int k = 1; k <= x.factor_count(); ++k) {
    result.pq_zero = result.pq_zero && pq.component(k).is_zero();
    result.qp_zero = result.qp_zero && qp.component(k).is_zero();
    result.p_ranks.push_back(generic_rank(p.component(k), trials, seed));
    result.q_ranks.push_back(generic_rank(q.component(k), trials, seed));
  }
  return result;
}

PolyMatrix hat_interleave_permutation(const RingPtr& ring, int d, std::size_t na,
                                      std::size_t nb) {
  const std::size_t total = static_cast<std::size_t>(d - 1) * (na + nb);
  std::vector<std::size_t> image(total);
  for (int t = 0; t <= d - 2; ++t) {
    for (std::size_t r = 0; r < na; ++r) {
      image[static_cast<std::size_t>(t) * (na + nb) + r] = static_cast<std::size_t>(t) * na + r;
    }
    for (std::size_t r = 0; r < nb; ++r) {
      image[static_cast<std::size_t>(t) * (na + nb) + na + r] =
          static_cast<std::size_t>(d - 1) * na + static_cast<std::size_t>(t) * nb + r;
    }
  }
  return permutation_matrix(ring, image);
}

}  // namespace mfd
