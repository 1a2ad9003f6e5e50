#include <chrono>
#include <future>
#include <random>
#include <sstream>

#include "pbwlab/formal.hpp"
#include "pbwlab/harish_chandra.hpp"
#include "pbwlab/jacobi.hpp"
#include "pbwlab/report.hpp"

namespace pbwlab {

namespace {

using ParamList = std::vector<std::pair<std::string, std::string>>;

std::string int_set_str(const std::vector<int>& xs) {
  std::string out = "{";
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(xs[i]);
  }
  return out + "}";
}

std::string rat_str(const BigRat& r) {
  BigRat c = r;
  c.canonicalize();
  return c.get_str();
}

std::string rat_set_str(const std::vector<BigRat>& xs) {
  std::string out = "{";
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += rat_str(xs[i]);
  }
  return out + "}";
}

Mat<Scalar> identity_index(int j) {
  Mat<Scalar> m(j, j);
  for (int i = 0; i < j; ++i) m.at(i, i) = Scalar(1);
  return m;
}

std::string index_str(const Mat<Scalar>& m) {
  std::string out;
  for (int r = 0; r < m.rows(); ++r) {
    if (r) out += ";";
    for (int c = 0; c < m.cols(); ++c) {
      if (c) out += ",";
      out += m.at(r, c).str();
    }
  }
  return out;
}

std::vector<Mat<Scalar>> index_choices(const SuiteConfig& cfg, int j) {
  std::vector<Mat<Scalar>> out{identity_index(j)};
  if (cfg.index.rows() == j && !(cfg.index == out[0])) out.push_back(cfg.index);
  return out;
}

// ---------------------------------------------------------------- sanity

Scalar random_scalar(std::mt19937& rng, bool allow_ratio) {
  std::uniform_int_distribution<int> coef(-5, 5), den(1, 4), pick(0, 3);
  auto poly = [&]() {
    Scalar s = Scalar::rational(coef(rng), den(rng));
    if (pick(rng) == 0) s += Scalar::weight_k() * Scalar(coef(rng));
    if (pick(rng) == 0) s += Scalar::pi_hat() * Scalar(coef(rng));
    return s;
  };
  Scalar s = poly();
  if (allow_ratio && pick(rng) == 0) {
    Scalar d = poly();
    if (!d.is_zero()) s = s / d;
  }
  return s;
}

UeaElement random_element(std::mt19937& rng, const ContextRef& ctx, int max_degree) {
  std::uniform_int_distribution<int> npos(0, ctx->dim() - 1), coef(-3, 3);
  UeaElement out(ctx);
  for (int t = 0; t < 3; ++t) {
    std::uniform_int_distribution<int> degd(0, max_degree);
    int deg = degd(rng);
    std::vector<int> positions;
    for (int i = 0; i < deg; ++i) positions.push_back(npos(rng));
    std::sort(positions.begin(), positions.end());
    PbwMono m;
    for (int p : positions) {
      if (!m.empty() && m.back().first == p)
        m.back().second += 1;
      else
        m.emplace_back(p, 1);
    }
    int c = coef(rng);
    if (c != 0) out.add_term(m, Scalar(c));
  }
  return out;
}

std::vector<CheckRecord> sanity_algebra_unit(const std::string& name,
                                             const AlgebraRef& alg) {
  ParamList params{{"algebra", name}};
  std::vector<CheckRecord> out;
  out.push_back(CheckRecord::checked("antisymmetry", params, "holds",
                                     alg->check_antisymmetry() ? "holds" : "fails",
                                     alg->check_antisymmetry()));
  bool jaco = alg->check_jacobi_identity();
  out.push_back(CheckRecord::checked("jacobi-identity", params, "holds",
                                     jaco ? "holds" : "fails", jaco));
  bool real = alg->check_realization_consistency();
  out.push_back(CheckRecord::checked("realization-consistency", params, "holds",
                                     real ? "holds" : "fails", real));
  return out;
}

std::vector<CheckRecord> sanity_field_unit() {
  std::mt19937 rng(20240901);
  bool assoc = true, distrib = true, inverse = true, roundtrip = true;
  for (int t = 0; t < 24; ++t) {
    Scalar x = random_scalar(rng, true), y = random_scalar(rng, true),
           z = random_scalar(rng, true);
    if (!((x + y) + z == x + (y + z)) || !((x * y) * z == x * (y * z)))
      assoc = false;
    if (!(x * (y + z) == x * y + x * z)) distrib = false;
    if (!(x - x == Scalar(0))) inverse = false;
    if (!x.is_zero() && !(x / x == Scalar(1))) inverse = false;
    if (!(Scalar::parse(x.str()) == x)) roundtrip = false;
  }
  std::vector<CheckRecord> out;
  out.push_back(CheckRecord::checked("field-associativity", {}, "holds",
                                     assoc ? "holds" : "fails", assoc));
  out.push_back(CheckRecord::checked("field-distributivity", {}, "holds",
                                     distrib ? "holds" : "fails", distrib));
  out.push_back(CheckRecord::checked("field-inverses", {}, "holds",
                                     inverse ? "holds" : "fails", inverse));
  out.push_back(CheckRecord::checked("render-parse-round-trip", {}, "holds",
                                     roundtrip ? "holds" : "fails", roundtrip));
  return out;
}

std::vector<CheckRecord> sanity_pbw_unit() {
  std::vector<CheckRecord> out;
  auto alg = LieAlgebra::symplectic(2);
  auto ctx = PbwContext::natural(alg);

  bool pairs_ok = true;
  for (int a = 0; a < alg->dim() && pairs_ok; ++a)
    for (int b = 0; b < alg->dim() && pairs_ok; ++b) {
      UeaElement xa = UeaElement::generator(ctx, a), xb = UeaElement::generator(ctx, b);
      UeaElement lhs = xa * xb - xb * xa;
      UeaElement rhs = UeaElement::lift(
          ctx, alg->bracket(AlgElem::basis(alg, a), AlgElem::basis(alg, b)));
      if (!(lhs == rhs)) pairs_ok = false;
    }
  out.push_back(CheckRecord::checked("pbw-bracket-consistency",
                                     {{"algebra", "sp(4)"}}, "holds",
                                     pairs_ok ? "holds" : "fails", pairs_ok));

  std::mt19937 rng(987654);
  bool assoc = true;
  for (int t = 0; t < 5 && assoc; ++t) {
    UeaElement a = random_element(rng, ctx, 2), b = random_element(rng, ctx, 2),
               c = random_element(rng, ctx, 2);
    if (!((a * b) * c == a * (b * c))) assoc = false;
  }
  out.push_back(CheckRecord::checked("pbw-associativity", {{"algebra", "sp(4)"}},
                                     "holds", assoc ? "holds" : "fails", assoc));

  std::vector<int> reversed(alg->dim());
  for (int i = 0; i < alg->dim(); ++i) reversed[i] = alg->dim() - 1 - i;
  auto rctx = PbwContext::with_order(alg, reversed);
  bool rt = true;
  for (int t = 0; t < 5 && rt; ++t) {
    UeaElement a = random_element(rng, ctx, 3);
    if (!(reorder(reorder(a, rctx), ctx) == a)) rt = false;
  }
  out.push_back(CheckRecord::checked("reorder-round-trip", {{"algebra", "sp(4)"}},
                                     "holds", rt ? "holds" : "fails", rt));

  bool fixpow = true;
  for (int b : {0, 4, 7}) {
    UeaElement g = UeaElement::generator(ctx, b);
    if (!(symmetrize(ctx, {b, b, b}) == g * g * g)) fixpow = false;
  }
  out.push_back(CheckRecord::checked("symmetrize-fixes-powers",
                                     {{"algebra", "sp(4)"}}, "holds",
                                     fixpow ? "holds" : "fails", fixpow));

  // cofactor expansion along every row reproduces the determinant
  bool cof_ok = true;
  for (int n : {2, 3}) {
    auto alg_n = LieAlgebra::symplectic(n);
    auto ctx_n = PbwContext::natural(alg_n);
    RaisingOperator r = raising_operator(ctx_n);
    for (int i = 0; i < n && cof_ok; ++i) {
      UeaElement sum(ctx_n);
      for (int l = 0; l < n; ++l)
        sum = sum + r.matrix.at(i, l) * r.matrix.cofactor(i, l);
      if (!(sum == r.det)) cof_ok = false;
    }
  }
  out.push_back(CheckRecord::checked("cofactor-row-expansion",
                                     {{"ranks", "2,3"}}, "det",
                                     cof_ok ? "det" : "mismatch", cof_ok));

  // raising determinant is a Levi weight vector of weight 2 Tr
  bool levi_ok = true;
  for (int n : {2, 3}) {
    auto alg_n = LieAlgebra::symplectic(n);
    auto ctx_n = PbwContext::natural(alg_n);
    UeaElement det = raising_operator(ctx_n).det;
    for (int levi : alg_n->subspace("levi")) {
      UeaElement lhs = ad_action(ctx_n, levi, det);
      UeaElement rhs = det.scaled(Scalar(2) * alg_n->levi_trace(levi));
      if (!(lhs == rhs)) levi_ok = false;
    }
  }
  out.push_back(CheckRecord::checked("raising-levi-weight", {{"ranks", "2,3"}},
                                     "2*trace", levi_ok ? "2*trace" : "mismatch",
                                     levi_ok));
  return out;
}

std::vector<CheckRecord> sanity_suite(const SuiteConfig& cfg) {
  std::vector<CheckRecord> out;
  int max_rank = std::min(4, cfg.n + cfg.j);
  for (int rank = 1; rank <= max_rank; ++rank) {
    auto recs = sanity_algebra_unit("sp(" + std::to_string(2 * rank) + ")",
                                    LieAlgebra::symplectic(rank));
    out.insert(out.end(), recs.begin(), recs.end());
  }
  for (int a = 1; a <= cfg.n; ++a)
    for (int b = 1; b <= cfg.j; ++b) {
      if (a + b > 4) continue;
      auto recs = sanity_algebra_unit(
          "g(" + std::to_string(a) + "," + std::to_string(b) + ")",
          LieAlgebra::jacobi(a, b));
      out.insert(out.end(), recs.begin(), recs.end());
    }
  auto f = sanity_field_unit();
  out.insert(out.end(), f.begin(), f.end());
  auto p = sanity_pbw_unit();
  out.insert(out.end(), p.begin(), p.end());
  return out;
}

// ------------------------------------------------------- siegel recovery

std::vector<CheckRecord> siegel_scan_unit(int n, int r) {
  ParamList params{{"n", std::to_string(n)}, {"r", std::to_string(r)}};
  std::vector<CheckRecord> out;
  Scalar weight = Scalar::rational(-2 * r + n - 1, 2);
  auto mod = InducedModule::siegel(n, weight);
  int m_top = r + 3;
  auto rows = recovery_scan(mod, m_top);

  std::vector<int> holset;
  bool nonzero = true, ladder = true;
  for (auto& row : rows) {
    if (row.holomorphic) holset.push_back(row.m);
    if (!row.nonzero) nonzero = false;
    if (!row.weight_ok) ladder = false;
  }
  std::vector<int> expect_set{0, r + 1};
  out.push_back(CheckRecord::checked("holomorphic-set", params,
                                     int_set_str(expect_set), int_set_str(holset),
                                     holset == expect_set));
  Scalar expect_weight = Scalar::rational(2 * r + n + 3, 2);
  const ScanRow& rec = rows[r + 1];
  out.push_back(CheckRecord::checked(
      "weight-at-recovery", params, expect_weight.str(),
      rec.weight_ok ? rec.weight.str() : "not semispherical",
      rec.weight_ok && rec.weight == expect_weight));
  out.push_back(CheckRecord::checked("weight-ladder", params, "k+2m at every m",
                                     ladder ? "holds" : "fails", ladder));
  out.push_back(CheckRecord::checked("raising-powers-nonzero", params, "all nonzero",
                                     nonzero ? "all nonzero" : "zero vector met",
                                     nonzero));
  return out;
}

std::vector<CheckRecord> siegel_symbolic_unit(int n, int m_top) {
  ParamList base{{"n", std::to_string(n)}, {"weight", "k"}};
  std::vector<CheckRecord> out;
  auto mod = InducedModule::siegel(n, Scalar::weight_k());
  auto rows = recovery_scan(mod, m_top);
  for (int m = 1; m <= m_top; ++m) {
    ParamList params = base;
    params.emplace_back("m", std::to_string(m));
    BigRat expect_root(n + 1 - 2 * m, 2);
    expect_root.canonicalize();
    const Scalar& obstruction = rows[m].obstruction;
    bool ok = false;
    std::string actual;
    if (obstruction.is_zero()) {
      actual = "obstruction vanishes identically";
    } else {
      RootAnalysis ra = rational_roots_in_weight(obstruction);
      actual = rat_set_str(ra.roots) + " from " + obstruction.str();
      ok = ra.complete && ra.roots.size() == 1 && ra.roots[0] == expect_root;
    }
    out.push_back(CheckRecord::checked("obstruction-root-set", params,
                                       "{" + rat_str(expect_root) + "}", actual, ok));
  }
  return out;
}

std::vector<CheckRecord> siegel_suite(const SuiteConfig& cfg) {
  std::vector<CheckRecord> out;
  for (int n = cfg.n_min; n <= cfg.n; ++n) {
    if (cfg.symbolic_k) {
      auto recs = siegel_symbolic_unit(n, std::min(cfg.m_max, 4));
      out.insert(out.end(), recs.begin(), recs.end());
      continue;
    }
    int r_top = (n >= 3) ? std::min(cfg.r_max, 1) : cfg.r_max;
    for (int r = 0; r <= r_top; ++r) {
      auto recs = siegel_scan_unit(n, r);
      out.insert(out.end(), recs.begin(), recs.end());
    }
  }
  return out;
}

// ----------------------------------------------------------- delta eigen

std::vector<CheckRecord> delta_suite(const SuiteConfig& cfg) {
  std::vector<CheckRecord> out;
  Scalar k = Scalar::weight_k();
  for (int n = cfg.n_min; n <= cfg.n; ++n) {
    DeltaEigenReport rep = delta_eigencheck(n, k, cfg.r_max);
    ParamList params{{"n", std::to_string(n)}, {"weight", "k"}};
    out.push_back(CheckRecord::checked("delta-eigenvalue", params,
                                       rep.delta_expected.str(),
                                       rep.delta_ok ? rep.delta_expected.str()
                                                    : "mismatch",
                                       rep.delta_ok));
    for (auto& row : rep.delta1_rows) {
      ParamList p2 = params;
      p2.emplace_back("r", std::to_string(row.r));
      out.push_back(CheckRecord::checked(
          "delta1-eigenvalue", p2, row.expected.str(),
          row.ok ? row.expected.str() : row.lhs + " vs " + row.rhs, row.ok));
    }
  }
  return out;
}

// -------------------------------------------------------------- cofactor

std::vector<CheckRecord> cofactor_suite(const SuiteConfig& cfg) {
  std::vector<CheckRecord> out;
  for (int n = cfg.n_min; n <= cfg.n; ++n)
    for (int r = 0; r <= cfg.r_max; ++r) {
      CofactorReport rep = cofactor_relation_check(n, r);
      ParamList params{{"n", std::to_string(n)}, {"r", std::to_string(r)}};
      out.push_back(CheckRecord::checked("cofactor-uniform-C", params,
                                         "single C over all (i,j)",
                                         rep.uniform ? "uniform" : "not uniform",
                                         rep.uniform));
      out.push_back(CheckRecord::derived("cofactor-C", params, rep.C.str()));
      int expect_dim = n * (n + 1) / 2;
      out.push_back(CheckRecord::checked(
          "cofactor-span-dimension", params, std::to_string(expect_dim),
          std::to_string(rep.span_dim), rep.span_dim == expect_dim));
    }
  return out;
}

// ------------------------------------------------------ center projection

std::vector<CheckRecord> center_projection_unit(int n, bool with_gelfand) {
  std::vector<CheckRecord> out;
  auto alg = LieAlgebra::symplectic(n);
  auto ctx = PbwContext::natural(alg);
  Scalar k = Scalar::weight_k();

  auto add_for = [&](const std::string& label, const UeaElement& d,
                     const Scalar& expect_action, bool check_action) {
    ParamList params{{"n", std::to_string(n)}, {"element", label}};
    CenterProjectionReport rep = check_center_projection(d, n);
    out.push_back(CheckRecord::checked(label + "-ideal-membership", params,
                                       "member", rep.member_ok ? "member" : "not member",
                                       rep.member_ok));
    out.push_back(CheckRecord::checked(label + "-gamma-weyl-invariant", params,
                                       "invariant",
                                       rep.weyl_ok ? "invariant" : "not invariant",
                                       rep.weyl_ok));
    std::string expect = check_action ? expect_action.str() : rep.action_expected.str();
    bool ok = rep.action_ok && (!check_action || rep.action_expected == expect_action);
    out.push_back(CheckRecord::checked(label + "-action-cross-check", params, expect,
                                       rep.action_observed.str(), ok));
    out.push_back(CheckRecord::derived(
        label + "-projection", params,
        rep.projected.str([](int) { return std::string("H0"); })));
  };

  LaplacePair lp = laplace_pair(ctx);
  bool central = is_central(lp.delta);
  out.push_back(CheckRecord::checked(
      "delta-central", {{"n", std::to_string(n)}}, "central",
      central ? "central" : "not central", central));
  add_for("delta", lp.delta, k * Scalar(n) * (k - Scalar(n + 1)), true);

  if (with_gelfand) {
    UeaElement c4 = gelfand_invariant(ctx, 4);  // centrality checked inside
    out.push_back(CheckRecord::checked("gelfand-c4-central",
                                       {{"n", std::to_string(n)}}, "central",
                                       "central", true));
    add_for("gelfand-c4", c4, Scalar(0), false);

    UeaElement c2 = gelfand_invariant(ctx, 2);
    // solve C2 = c*delta + c' in the span of delta and 1
    Scalar c(0), c0(0);
    {
      auto lead = lp.delta.terms().rbegin();
      auto it = c2.terms().find(lead->first);
      if (it != c2.terms().end()) c = it->second / lead->second;
      UeaElement rest = c2 - lp.delta.scaled(c);
      if (!rest.is_zero() && rest.terms().count(PbwMono{}))
        c0 = rest.terms().at(PbwMono{});
      bool exact = rest == UeaElement::unit(ctx).scaled(c0);
      out.push_back(CheckRecord::checked(
          "gelfand-c2-in-laplace-span", {{"n", std::to_string(n)}},
          "c2 = c*delta + c'", exact ? "solved" : "outside span", exact));
    }
    out.push_back(CheckRecord::derived("gelfand-c2-coefficients",
                                       {{"n", std::to_string(n)}},
                                       "(" + c.str() + ", " + c0.str() + ")"));
  }
  return out;
}

std::vector<CheckRecord> center_suite(const SuiteConfig& cfg) {
  std::vector<CheckRecord> out;
  for (int n = cfg.n_min; n <= cfg.n; ++n) {
    auto recs = center_projection_unit(n, n == 2);
    out.insert(out.end(), recs.begin(), recs.end());
  }
  return out;
}

// ------------------------------------------------------------ jacobi maps

std::vector<CheckRecord> jacobi_maps_unit(const SuiteConfig& cfg, int n, int j) {
  ParamList params{{"n", std::to_string(n)}, {"j", std::to_string(j)}};
  std::vector<CheckRecord> out;
  auto alg = LieAlgebra::jacobi(n, j);
  std::string why;
  bool heis_ok = check_heis_invariants(alg, &why);
  out.push_back(CheckRecord::checked("heisenberg-invariants", params, "hold",
                                     heis_ok ? "hold" : why, heis_ok));

  auto t0 = check_t0_equivariance(n, j);
  out.push_back(CheckRecord::checked("t0-equivariance", params, "equivariant",
                                     t0.ok ? "equivariant" : t0.counterexample,
                                     t0.ok));

  TransferData td = make_transfer(alg);
  auto adinv = check_ad_invariance(td);
  out.push_back(CheckRecord::checked("ad-invariance", params, "2 det Z [V,X]",
                                     adinv.ok ? "holds" : adinv.counterexample,
                                     adinv.ok));
  auto brel = check_bracket_relation(td);
  out.push_back(CheckRecord::checked("bracket-relation", params,
                                     "2 det Z That([X,Y])",
                                     brel.ok ? "holds" : brel.counterexample,
                                     brel.ok));
  auto comm = check_that_commutes(td);
  out.push_back(CheckRecord::checked("that-commutes-with-heisenberg", params,
                                     "commutes",
                                     comm.ok ? "commutes" : comm.counterexample,
                                     comm.ok));

  Mat<Scalar> index = (cfg.index.rows() == j) ? cfg.index : identity_index(j);
  auto dt = check_det_transfer(td, index);
  out.push_back(CheckRecord::checked("det-transfer-entries-commute", params,
                                     "commute",
                                     dt.entries_commute ? "commute" : "do not commute",
                                     dt.entries_commute));
  out.push_back(CheckRecord::checked(
      "det-transfer-proportional", params, "lhs = kappa * detZ^e * rhs",
      dt.proportional ? "proportional" : "lhs = " + dt.lhs + " rhs = " + dt.rhs,
      dt.proportional));
  if (cfg.derive) {
    out.push_back(CheckRecord::derived("det-transfer-kappa", params,
                                       dt.kappa.str(), "1"));
    out.push_back(CheckRecord::derived("det-transfer-central-power", params,
                                       std::to_string(dt.central_power), "0"));
    out.push_back(CheckRecord::derived("det-transfer-kappa-on-module", params,
                                       dt.kappa_on_module.str(), "1"));
  }

  // star action and Levi trace against the index module at symbolic weight
  auto mod = InducedModule::jacobi(alg, Scalar::weight_k(), index);
  StarContext sc = make_star_context(mod);
  StarReport sr = check_star_action(sc, 2);
  ParamList mp = params;
  mp.emplace_back("index", index_str(index));
  out.push_back(CheckRecord::checked("star-action-law", mp, "bracket law",
                                     sr.action_law_ok ? "holds" : "fails",
                                     sr.action_law_ok));
  Scalar expect_weight = Scalar::weight_k() - Scalar::rational(j, 2);
  out.push_back(CheckRecord::checked("star-weight-shift", mp, expect_weight.str(),
                                     sr.star_weight.str(),
                                     sr.weight_ok && sr.star_weight == expect_weight));
  out.push_back(CheckRecord::checked("dot-implies-star-holomorphic", mp,
                                     "implication holds",
                                     sr.hol_transfer_ok ? "holds" : "fails",
                                     sr.hol_transfer_ok));
  if (cfg.derive) {
    out.push_back(CheckRecord::derived("star-c-star", mp, sr.c_star.str(),
                                       "2*det(M)"));
    out.push_back(CheckRecord::derived("star-c-star-discrepancy", mp,
                                       sr.c_star_discrepancy.str(), "1"));
  }

  LeviTraceReport lt = check_levi_trace(sc);
  out.push_back(CheckRecord::checked("levi-adjugate-identity", mp, "j det Z",
                                     lt.adjugate_identity_ok ? "holds" : "fails",
                                     lt.adjugate_identity_ok));
  out.push_back(CheckRecord::checked("levi-trace-uniform", mp,
                                     "single s over the Levi",
                                     lt.uniform ? "uniform" : "not uniform",
                                     lt.uniform));
  out.push_back(CheckRecord::checked("levi-star-weight", mp, expect_weight.str(),
                                     lt.star_weight_ok ? expect_weight.str()
                                                       : "mismatch",
                                     lt.star_weight_ok));
  if (cfg.derive)
    out.push_back(CheckRecord::derived("levi-trace-s", mp, lt.s.str(),
                                       "j/2 = " + Scalar::rational(j, 2).str()));
  return out;
}

std::vector<CheckRecord> jacobi_maps_suite(const SuiteConfig& cfg) {
  std::vector<CheckRecord> out;
  for (int a = cfg.n_min; a <= cfg.n; ++a)
    for (int b = cfg.j_min; b <= cfg.j; ++b) {
      if (a + b > 4) continue;
      auto recs = jacobi_maps_unit(cfg, a, b);
      out.insert(out.end(), recs.begin(), recs.end());
    }
  return out;
}

// -------------------------------------------------------- jacobi recovery

std::vector<CheckRecord> jacobi_recovery_unit(int n, int j, const Mat<Scalar>& index,
                                              int r) {
  ParamList params{{"n", std::to_string(n)},
                   {"j", std::to_string(j)},
                   {"index", index_str(index)},
                   {"r", std::to_string(r)}};
  std::vector<CheckRecord> out;
  Scalar weight = Scalar::rational(-2 * r + n + j + 1, 2);
  auto mod = InducedModule::jacobi(n, j, weight, index);
  int m_top = r + 2;
  auto rows = recovery_scan(mod, m_top);

  std::vector<int> holset;
  bool nonzero = true, ladder = true, index_ok = true;
  for (auto& row : rows) {
    if (row.holomorphic) holset.push_back(row.m);
    if (!row.nonzero) nonzero = false;
    if (!row.weight_ok) ladder = false;
    if (!row.index_ok) index_ok = false;
  }
  std::vector<int> expect_set{0, r};
  out.push_back(CheckRecord::checked("holomorphic-set", params,
                                     int_set_str(expect_set), int_set_str(holset),
                                     holset == expect_set));
  Scalar expect_weight = Scalar::rational(2 * r + n + j + 1, 2);
  const ScanRow& rec = rows[r];
  out.push_back(CheckRecord::checked(
      "weight-at-recovery", params, expect_weight.str(),
      rec.weight_ok ? rec.weight.str() : "not semispherical",
      rec.weight_ok && rec.weight == expect_weight));
  out.push_back(CheckRecord::checked("weight-ladder", params, "k+2m at every m",
                                     ladder ? "holds" : "fails", ladder));
  out.push_back(CheckRecord::checked("index-persistence", params,
                                     "2*2pi_i*M at every m",
                                     index_ok ? "holds" : "fails", index_ok));
  out.push_back(CheckRecord::checked("raising-powers-nonzero", params, "all nonzero",
                                     nonzero ? "all nonzero" : "zero vector met",
                                     nonzero));
  return out;
}

std::vector<CheckRecord> jacobi_recovery_suite(const SuiteConfig& cfg) {
  std::vector<CheckRecord> out;
  for (int a = cfg.n_min; a <= cfg.n; ++a)
    for (int b = cfg.j_min; b <= cfg.j; ++b) {
      if (a + b > 4) continue;
      for (const auto& index : index_choices(cfg, b))
        for (int r = 1; r <= cfg.r_max; ++r) {
          auto recs = jacobi_recovery_unit(a, b, index, r);
          out.insert(out.end(), recs.begin(), recs.end());
        }
    }
  return out;
}

// ---------------------------------------------------------- bol extension

std::vector<CheckRecord> bol_suite(const SuiteConfig& cfg) {
  std::vector<CheckRecord> out;
  for (int a = cfg.n_min; a <= cfg.n; ++a)
    for (int b = cfg.j_min; b <= cfg.j; ++b)
      for (const auto& index : index_choices(cfg, b)) {
        ParamList params{{"n", std::to_string(a)},
                         {"j", std::to_string(b)},
                         {"index", index_str(index)},
                         {"l_max", std::to_string(cfg.l_max)}};
        BolReport rep = verify_bol_extension(a, b, index, cfg.l_max);
        out.push_back(CheckRecord::checked(
            "bol-uniform-constant", params, "single c over the test set",
            rep.uniform ? "uniform" : "witness: " + rep.witness, rep.uniform));
        out.push_back(CheckRecord::checked(
            "bol-constant-powers", params, "same c for every l",
            rep.powers_ok ? "holds" : "witness: " + rep.witness, rep.powers_ok));
        std::string form =
            rep.matched_form == 0
                ? "(2*2pi_i)^(n-j)*det(M)^(n-1)"
                : rep.matched_form == 1 ? "reciprocal of (2*2pi_i)^(n-j)*det(M)^(n-1)"
                                        : "neither closed form";
        out.push_back(CheckRecord::checked("bol-matched-form", params,
                                           "stated constant or its reciprocal",
                                           form, rep.matched_form >= 0));
        out.push_back(CheckRecord::derived("bol-constant", params, rep.c.str(), form));
      }
  return out;
}

}  // namespace

std::vector<CheckRecord> run_suite(const SuiteConfig& cfg) {
  cfg.validate();
  auto t0 = std::chrono::steady_clock::now();
  std::vector<CheckRecord> out;
  if (cfg.suite == "algebra-sanity") out = sanity_suite(cfg);
  if (cfg.suite == "siegel-recovery") out = siegel_suite(cfg);
  if (cfg.suite == "delta-eigen") out = delta_suite(cfg);
  if (cfg.suite == "cofactor") out = cofactor_suite(cfg);
  if (cfg.suite == "center-projection") out = center_suite(cfg);
  if (cfg.suite == "jacobi-maps") out = jacobi_maps_suite(cfg);
  if (cfg.suite == "jacobi-recovery") out = jacobi_recovery_suite(cfg);
  if (cfg.suite == "bol-extension") out = bol_suite(cfg);
  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
  for (auto& r : out)
    if (r.elapsed_ms == 0.0) r.elapsed_ms = ms / std::max<size_t>(1, out.size());
  return out;
}

RunResult run_all(const RunConfig& cfg) {
  for (const auto& s : cfg.suites) s.validate();
  RunResult result;
  result.suites.resize(cfg.suites.size());
  if (cfg.jobs <= 1 || cfg.suites.size() <= 1) {
    for (size_t i = 0; i < cfg.suites.size(); ++i)
      result.suites[i] = {cfg.suites[i], run_suite(cfg.suites[i])};
  } else {
    std::vector<std::future<std::vector<CheckRecord>>> futures(cfg.suites.size());
    size_t next = 0;
    while (next < cfg.suites.size()) {
      size_t batch = std::min<size_t>(cfg.jobs, cfg.suites.size() - next);
      for (size_t i = 0; i < batch; ++i) {
        const SuiteConfig& sc = cfg.suites[next + i];
        futures[next + i] = std::async(std::launch::async,
                                       [&sc]() { return run_suite(sc); });
      }
      for (size_t i = 0; i < batch; ++i)
        result.suites[next + i] = {cfg.suites[next + i], futures[next + i].get()};
      next += batch;
    }
  }
  for (const auto& suite : result.suites)
    for (const auto& r : suite.records) {
      if (r.status == "pass") ++result.pass;
      if (r.status == "fail") ++result.fail;
      if (r.status == "derived") ++result.derived;
    }
  return result;
}

}  // namespace pbwlab
