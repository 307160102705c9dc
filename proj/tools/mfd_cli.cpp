// Command-line front end: every subcommand reads documents, runs the
// corresponding library operation and writes one JSON certificate to stdout.
// Exit status is nonzero only for usage or domain errors; failed mathematical
// verdicts still exit 0.

#include <CLI11.hpp>

#include "mfd/corpus.hpp"
#include "mfd/cover.hpp"
#include "mfd/document.hpp"
#include "mfd/frobenius.hpp"
#include "mfd/gamma.hpp"
#include "mfd/split.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace {

struct CommonOpts {
  std::uint64_t seed = 0;
  unsigned trials = 5;
  std::string mode = "exact";
  unsigned precision = 8;
  std::int64_t prime = 0;
  std::string out;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

mfd::MFDocument load_doc(const std::string& path) {
  return mfd::MFDocument::parse(read_file(path));
}

mfd::ArithMode arith_mode(const CommonOpts& opts) {
  if (opts.mode == "exact") return mfd::ArithMode::exact_mode();
  if (opts.mode == "truncated") return mfd::ArithMode::truncated(opts.precision);
  throw CLI::ValidationError("--mode must be 'exact' or 'truncated'");
}

mfd::PivotPolicy pivot_policy(const CommonOpts& opts) {
  return opts.mode == "exact" ? mfd::PivotPolicy::scalar_units : mfd::PivotPolicy::any_unit;
}

void emit(const mfd::Certificate& cert, const CommonOpts& opts) {
  const std::string text = cert.str();
  std::cout << text;
  if (!opts.out.empty()) {
    std::ofstream out(opts.out, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + opts.out + "'");
    out << text;
  }
}

std::vector<long long> to_ll(const std::vector<std::size_t>& v) {
  return std::vector<long long>(v.begin(), v.end());
}
std::vector<long long> to_ll(const std::vector<int>& v) {
  return std::vector<long long>(v.begin(), v.end());
}

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--seed", opts.seed, "random seed for rank sampling");
  cmd->add_option("--trials", opts.trials, "evaluation points per generic rank");
  cmd->add_option("--mode", opts.mode, "exact|truncated");
  cmd->add_option("--precision", opts.precision, "series precision for truncated mode");
  cmd->add_option("--prime", opts.prime, "host prime for cover operations");
  cmd->add_option("--out", opts.out, "also write the certificate to this file");
}

mfd::Certificate base_cert(const std::string& command, const CommonOpts& opts) {
  return mfd::Certificate(command, opts.seed, opts.trials, opts.mode);
}

void run_verify(const std::string& path, const CommonOpts& opts) {
  mfd::MFDocument doc = load_doc(path);
  mfd::Certificate cert = base_cert("verify", opts);
  cert.input(doc.name.empty() ? path : doc.name, doc.print());
  mfd::MatrixFactorization x = doc.to_mf();
  mfd::RotationReport report = mfd::mf_verify(x);
  cert.verdict("valid", report.valid);
  cert.verdicts("rotations", report.rotation_ok);
  if (!report.valid) {
    for (std::size_t k = 0; k < report.rotation_ok.size(); ++k) {
      if (!report.rotation_ok[k]) {
        cert.evidence_int("first_failing_rotation", static_cast<long long>(k + 1));
        break;
      }
    }
  }
  cert.evidence_int("d", x.factor_count());
  cert.evidence_int("n", static_cast<long long>(x.size()));
  cert.evidence_str("reduced", mfd::is_reduced(x) ? "true" : "false");
  emit(cert, opts);
}

void run_shift(const std::string& path, int j, const CommonOpts& opts) {
  mfd::MFDocument doc = load_doc(path);
  mfd::Certificate cert = base_cert("shift", opts);
  cert.input(doc.name.empty() ? path : doc.name, doc.print());
  mfd::MatrixFactorization shifted = mfd::mf_shift(doc.to_mf(), j);
  cert.evidence_int("j", j);
  cert.verdict("valid", mfd::mf_verify(shifted).valid);
  cert.result_document(mfd::MFDocument::from_mf(shifted, doc.name).print());
  emit(cert, opts);
}

void run_sum(const std::string& patha, const std::string& pathb, const CommonOpts& opts) {
  mfd::MFDocument da = load_doc(patha), db = load_doc(pathb);
  mfd::Certificate cert = base_cert("sum", opts);
  cert.input(da.name.empty() ? patha : da.name, da.print());
  cert.input(db.name.empty() ? pathb : db.name, db.print());
  mfd::MatrixFactorization sum = mfd::mf_sum(da.to_mf(), db.to_mf());
  cert.verdict("valid", mfd::mf_verify(sum).valid);
  cert.result_document(mfd::MFDocument::from_mf(sum, "").print());
  emit(cert, opts);
}

void run_syzygy(const std::string& path, bool co, const CommonOpts& opts) {
  mfd::MFDocument doc = load_doc(path);
  mfd::Certificate cert = base_cert(co ? "cosyzygy" : "syzygy", opts);
  cert.input(doc.name.empty() ? path : doc.name, doc.print());
  mfd::MatrixFactorization x = doc.to_mf();
  mfd::MatrixFactorization result =
      co ? mfd::cosyzygy(x).omega_minus : mfd::syzygy(x).omega;
  const mfd::ShortExactSeq ses = co ? mfd::cosyzygy(x).ses : mfd::syzygy(x).ses;
  mfd::SesReport sr = mfd::ses_verify(ses, opts.trials, opts.seed);
  cert.verdict("valid", mfd::mf_verify(result).valid);
  cert.verdict("ses_composite_zero", sr.composite_zero);
  cert.verdict("ses_admissible_mono", sr.admissible_mono);
  cert.verdict("ses_admissible_epi", sr.admissible_epi);
  cert.verdict("ses_rank_additive", sr.rank_additive);
  cert.result_document(mfd::MFDocument::from_mf(result, "").print());
  emit(cert, opts);
}

void run_iso_check(const std::string& path, const CommonOpts& opts) {
  mfd::MFDocument doc = load_doc(path);
  mfd::Certificate cert = base_cert("iso-check", opts);
  cert.input(doc.name.empty() ? path : doc.name, doc.print());
  mfd::MatrixFactorization x = doc.to_mf();
  mfd::Morphism iso = mfd::syzygy_cosyzygy_iso(x);
  cert.verdict("squares_commute", mfd::morphism_verify(iso).valid);
  bool inverse_ok = true;
  for (int k = 1; k <= x.factor_count(); ++k) {
    mfd::PolyMatrix inv = mfd::invert_unitriangular(iso.component(k));
    const mfd::PolyMatrix id = mfd::PolyMatrix::identity(x.ring(), iso.component(k).rows());
    inverse_ok = inverse_ok && (inv * iso.component(k) == id) && (iso.component(k) * inv == id);
  }
  cert.verdict("componentwise_invertible", inverse_ok);
  const bool identity_when_d2 =
      x.factor_count() != 2 ||
      iso == mfd::Morphism(iso.source(), iso.target(),
                           std::vector<mfd::PolyMatrix>(
                               2, mfd::PolyMatrix::identity(x.ring(), x.size())));
  cert.verdict("identity_when_d2", identity_when_d2);
  emit(cert, opts);
}

void run_cone(const std::string& path, const CommonOpts& opts) {
  mfd::MorphismDocument doc = mfd::MorphismDocument::parse(read_file(path));
  mfd::Certificate cert = base_cert("cone", opts);
  cert.input(path, doc.print());
  mfd::Morphism alpha = doc.to_morphism();
  mfd::ConeResult cone = mfd::mapping_cone(alpha);
  cert.verdict("valid", mfd::mf_verify(cone.cone).valid);
  cert.verdict("inclusion_morphism", mfd::morphism_verify(cone.inclusion).valid);
  cert.verdict("projection_morphism", mfd::morphism_verify(cone.projection).valid);
  cert.verdict("envelope_morphism", mfd::morphism_verify(cone.envelope).valid);
  cert.result_document(mfd::MFDocument::from_mf(cone.cone, "").print());
  emit(cert, opts);
}

void run_homotopy_verify(const std::string& path, const CommonOpts& opts) {
  mfd::HomotopyDocument doc = mfd::HomotopyDocument::parse(read_file(path));
  mfd::Certificate cert = base_cert("homotopy-verify", opts);
  cert.input(path, doc.print());
  mfd::Morphism alpha = doc.morphism.to_morphism();
  mfd::Homotopy h = doc.to_homotopy();
  mfd::HomotopyReport report = mfd::homotopy_verify(alpha, h);
  cert.verdict("morphism", mfd::morphism_verify(alpha).valid);
  cert.verdict("null_homotopic", report.valid);
  cert.verdicts("indices", report.index_ok);
  emit(cert, opts);
}

void run_split(const std::string& path, const CommonOpts& opts) {
  mfd::MFDocument doc = load_doc(path);
  mfd::Certificate cert = base_cert("split", opts);
  cert.input(doc.name.empty() ? path : doc.name, doc.print());
  mfd::MatrixFactorization x = doc.to_mf();
  mfd::SplitResult res = mfd::split_projectives(x, pivot_policy(opts), arith_mode(opts));
  cert.verdict("base_change_verified", res.change_verified);
  cert.verdict("stable_part_valid", res.stable.size() == 0 || mfd::mf_verify(res.stable).valid);
  cert.evidence_ints("multiplicities", to_ll(res.multiplicities));
  cert.evidence_int("stable_size", static_cast<long long>(res.stable.size()));
  cert.evidence_str("fixpoint_units_left", res.fixpoint_units_left ? "true" : "false");
  cert.evidence_str("pseudoprojective_input",
                    (x.size() > 0 && mfd::is_pseudoprojective(x)) ? "true" : "false");
  cert.result_document(mfd::MFDocument::from_mf(res.stable, "").print());
  emit(cert, opts);
}

void run_predict(const std::string& path, const CommonOpts& opts) {
  mfd::MFDocument doc = load_doc(path);
  mfd::Certificate cert = base_cert("predict", opts);
  cert.input(doc.name.empty() ? path : doc.name, doc.print());
  mfd::MatrixFactorization x = doc.to_mf();
  mfd::SplitPrediction pred = mfd::predict_syzygy_split(x);
  std::vector<long long> mins;
  for (int k = 1; k <= x.factor_count(); ++k) {
    mins.push_back(static_cast<long long>(mfd::min_gens(x, k)));
  }
  cert.evidence_ints("min_gens", mins);
  cert.evidence_ints("m", to_ll(pred.m));
  cert.evidence_int("stable_size", static_cast<long long>(pred.stable_size));
  emit(cert, opts);
}

void run_resolution(const std::string& path, const CommonOpts& opts) {
  mfd::MFDocument doc = load_doc(path);
  mfd::Certificate cert = base_cert("resolution", opts);
  cert.input(doc.name.empty() ? path : doc.name, doc.print());
  mfd::MatrixFactorization x = doc.to_mf();
  mfd::ResolutionResult res = mfd::periodic_resolution(x, opts.trials, opts.seed);
  cert.verdict("pq_zero", res.pq_zero);
  cert.verdict("qp_zero", res.qp_zero);
  bool ranks_ok = true;
  const std::size_t n = x.size();
  const std::size_t d = static_cast<std::size_t>(x.factor_count());
  for (std::size_t k = 0; k < d; ++k) {
    ranks_ok = ranks_ok && res.p_ranks[k] == (d - 1) * n && res.q_ranks[k] == n;
  }
  cert.verdict("ranks_match", ranks_ok);
  cert.evidence_ints("p_ranks", to_ll(res.p_ranks));
  cert.evidence_ints("q_ranks", to_ll(res.q_ranks));
  emit(cert, opts);
}

void run_gamma_check(const std::string& path, unsigned samples, const CommonOpts& opts) {
  mfd::MFDocument doc = load_doc(path);
  mfd::Certificate cert = base_cert("gamma-check", opts);
  cert.input(doc.name.empty() ? path : doc.name, doc.print());
  mfd::MatrixFactorization x = doc.to_mf();
  const mfd::Poly f = x.f();
  const int d = x.factor_count();

  std::mt19937_64 rng(opts.seed);
  bool assoc = true;
  for (unsigned t = 0; t < samples && assoc; ++t) {
    auto pick = [&]() {
      int i = static_cast<int>(rng() % static_cast<unsigned>(d)) + 1;
      int j = static_cast<int>(rng() % static_cast<unsigned>(d)) + 1;
      return mfd::GammaElement::basis(f, d, i, j);
    };
    mfd::GammaElement a = pick(), b = pick(), c = pick();
    assoc = assoc && (mfd::gamma_mul(mfd::gamma_mul(a, b), c) ==
                      mfd::gamma_mul(a, mfd::gamma_mul(b, c)));
  }
  cert.verdict("associative", assoc);

  mfd::GammaElement zd = mfd::gamma_z_power(f, d, static_cast<unsigned>(d));
  cert.verdict("z_pow_d_is_f", zd == mfd::GammaElement::one(f, d).scaled(f));

  bool chains = true;
  for (int i = 1; i <= d; ++i) {
    for (int j = 1; j <= d; ++j) {
      if (i == j) continue;
      chains = chains && mfd::eij_factorization(f, d, i, j).matches;
    }
  }
  cert.verdict("eij_chains", chains);

  mfd::GammaModule fx = mfd::functor_F(x);
  cert.verdict("module_relations", mfd::gamma_module_verify(fx).valid);
  mfd::Morphism round = mfd::functor_HF_roundtrip(x);
  cert.verdict("roundtrip_iso",
               mfd::morphism_verify(round).valid && mfd::is_componentwise_iso(round));
  cert.evidence_int("module_rank", static_cast<long long>(fx.rank));
  emit(cert, opts);
}

void run_cover_check(const std::string& path, const CommonOpts& opts) {
  mfd::MFDocument doc = load_doc(path);
  mfd::Certificate cert = base_cert("cover-check", opts);
  cert.input(doc.name.empty() ? path : doc.name, doc.print());
  mfd::MatrixFactorization x0 = doc.to_mf();
  std::int64_t p = opts.prime;
  if (p == 0) {
    p = x0.ring()->field.is_prime_field() ? x0.ring()->field.modulus() : 7;
  }
  mfd::MatrixFactorization x =
      x0.ring()->field.is_prime_field() ? x0 : mfd::reduce_mod_p(x0, p);
  mfd::RootData roots = mfd::find_roots(p, x.factor_count());
  cert.roots(roots.p, roots.omega, roots.mu);

  mfd::SigmaModule bx = mfd::functor_B(x, roots);
  mfd::SigmaReport sr = mfd::sigma_verify(bx);
  cert.verdict("sigma_order", sr.sigma_order);
  cert.verdict("z_relation", sr.z_relation);
  cert.verdict("twist", sr.twist);

  mfd::EigenDecomposition dec = mfd::eigenspace_decompose(bx, opts.trials, opts.seed);
  cert.verdict("projectors", dec.valid);
  cert.evidence_ints("eigen_ranks", to_ll(dec.ranks));

  mfd::MatrixFactorization abx = mfd::functor_A(bx);
  cert.verdict("roundtrip_equal", abx == x);

  mfd::PsiCertificate psi = mfd::psi_iso(x.f(), x.factor_count(), roots);
  cert.verdict("psi_multiplicative", psi.multiplicative);
  cert.verdict("psi_bijective", psi.bijective);
  cert.verdict("psi_idempotents", psi.averaged_idempotents);
  emit(cert, opts);
}

void run_corpus(const CommonOpts& opts, const std::string& dump_dir) {
  mfd::Certificate cert = base_cert("corpus-run", opts);
  bool all = true;
  std::vector<std::string> names;
  for (const auto& item : mfd::corpus()) {
    names.push_back(item.name);
    cert.input(item.name, item.doc.print());
    mfd::MatrixFactorization x = item.doc.to_mf();
    bool ok = mfd::mf_verify(x).valid;

    mfd::SyzygyResult syz = mfd::syzygy(x);
    ok = ok && mfd::mf_verify(syz.omega).valid;
    ok = ok && mfd::ses_verify(syz.ses, opts.trials, opts.seed).valid;
    mfd::Morphism iso = mfd::syzygy_cosyzygy_iso(x);
    ok = ok && mfd::morphism_verify(iso).valid;
    mfd::ResolutionResult res = mfd::periodic_resolution(x, opts.trials, opts.seed);
    ok = ok && res.pq_zero && res.qp_zero;

    mfd::SplitPrediction pred = mfd::predict_syzygy_split(x);
    mfd::SplitResult split = mfd::split_projectives(syz.omega);
    ok = ok && split.change_verified;
    bool mults_match = split.stable.size() == pred.stable_size;
    for (int k = 1; k <= x.factor_count(); ++k) {
      mults_match = mults_match &&
                    split.multiplicities[k - 1] == static_cast<int>(pred.m[k - 1]);
    }
    ok = ok && mults_match;

    mfd::Morphism round = mfd::functor_HF_roundtrip(x);
    ok = ok && mfd::morphism_verify(round).valid && mfd::is_componentwise_iso(round);

    if (item.expect_reduced) ok = ok && (mfd::is_reduced(x) == *item.expect_reduced);
    cert.verdict(item.name, ok);
    all = all && ok;

    if (!dump_dir.empty()) {
      std::filesystem::create_directories(dump_dir);
      std::ofstream out(std::filesystem::path(dump_dir) / (item.name + ".mf"),
                        std::ios::binary);
      out << item.doc.print();
    }
  }
  cert.verdict("all", all);
  cert.evidence_int("documents", static_cast<long long>(names.size()));
  emit(cert, opts);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for matrix factorizations with d factors"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string path, path_b, dump_dir;
  int shift_j = 1;
  unsigned gamma_samples = 300;

  auto* verify = app.add_subcommand("verify", "check all cyclic rotation products");
  verify->add_option("file", path, "matrix factorization document")->required();
  add_common(verify, opts);

  auto* shift = app.add_subcommand("shift", "apply the shift functor T^j");
  shift->add_option("file", path)->required();
  shift->add_option("-j,--shift", shift_j, "shift amount");
  add_common(shift, opts);

  auto* sum = app.add_subcommand("sum", "direct sum of two factorizations");
  sum->add_option("a", path)->required();
  sum->add_option("b", path_b)->required();
  add_common(sum, opts);

  auto* syz = app.add_subcommand("syzygy", "syzygy with its short exact sequence");
  syz->add_option("file", path)->required();
  add_common(syz, opts);

  auto* cosyz = app.add_subcommand("cosyzygy", "cosyzygy with its short exact sequence");
  cosyz->add_option("file", path)->required();
  add_common(cosyz, opts);

  auto* iso = app.add_subcommand("iso-check", "syzygy/cosyzygy isomorphism certificate");
  iso->add_option("file", path)->required();
  add_common(iso, opts);

  auto* cone = app.add_subcommand("cone", "mapping cone of a morphism document");
  cone->add_option("file", path)->required();
  add_common(cone, opts);

  auto* hv = app.add_subcommand("homotopy-verify", "verify a null-homotopy witness");
  hv->add_option("file", path)->required();
  add_common(hv, opts);

  auto* split = app.add_subcommand("split", "detach projective summands");
  split->add_option("file", path)->required();
  add_common(split, opts);

  auto* predict = app.add_subcommand("predict", "syzygy splitting counts");
  predict->add_option("file", path)->required();
  add_common(predict, opts);

  auto* resolution = app.add_subcommand("resolution", "two-periodic resolution maps");
  resolution->add_option("file", path)->required();
  add_common(resolution, opts);

  auto* gamma = app.add_subcommand("gamma-check", "structure-constant algebra suite");
  gamma->add_option("file", path)->required();
  gamma->add_option("--samples", gamma_samples, "random associativity samples");
  add_common(gamma, opts);

  auto* cover = app.add_subcommand("cover-check", "branched cover suite over F_p");
  cover->add_option("file", path)->required();
  add_common(cover, opts);

  auto* corpus_cmd = app.add_subcommand("corpus-run", "run the built-in corpus checks");
  corpus_cmd->add_option("--dump", dump_dir, "write the corpus documents to this directory");
  add_common(corpus_cmd, opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) run_verify(path, opts);
    if (shift->parsed()) run_shift(path, shift_j, opts);
    if (sum->parsed()) run_sum(path, path_b, opts);
    if (syz->parsed()) run_syzygy(path, false, opts);
    if (cosyz->parsed()) run_syzygy(path, true, opts);
    if (iso->parsed()) run_iso_check(path, opts);
    if (cone->parsed()) run_cone(path, opts);
    if (hv->parsed()) run_homotopy_verify(path, opts);
    if (split->parsed()) run_split(path, opts);
    if (predict->parsed()) run_predict(path, opts);
    if (resolution->parsed()) run_resolution(path, opts);
    if (gamma->parsed()) run_gamma_check(path, gamma_samples, opts);
    if (cover->parsed()) run_cover_check(path, opts);
    if (corpus_cmd->parsed()) run_corpus(opts, dump_dir);
  } catch (const mfd::DocParseError& e) {
    std::cerr << "parse error (line " << e.line << ", column " << e.col << "): " << e.what()
              << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
