#include "pbwlab/jacobi.hpp"

#include <algorithm>

namespace pbwlab {

namespace {

std::string idx_label(const AlgebraRef& alg, int b) { return alg->label(b); }

VarPoly var_of(int basis_index) { return VarPoly::variable(basis_index); }

}  // namespace

HeisMatrices heisenberg_matrices(const AlgebraRef& alg) {
  if (alg->kind() != AlgebraKind::Jacobi)
    throw Error("heisenberg matrices need a Jacobi algebra");
  int n = alg->rank_n(), j = alg->heis_j();
  HeisMatrices out;
  out.Z = Mat<VarPoly>(j, j);
  for (int p = 1; p <= j; ++p)
    for (int q = 1; q <= j; ++q) out.Z.at(p - 1, q - 1) = var_of(alg->z_index(p, q));
  out.Z_adj = mat_adjugate(out.Z);
  out.det_z = mat_det(out.Z);
  out.u_idx.assign(j, std::vector<int>(n));
  out.v_idx.assign(j, std::vector<int>(n));
  for (int p = 1; p <= j; ++p)
    for (int l = 1; l <= n; ++l) {
      out.u_idx[p - 1][l - 1] = alg->u_index(p, l);
      out.v_idx[p - 1][l - 1] = alg->v_index(p, l);
    }
  return out;
}

bool check_heis_invariants(const AlgebraRef& alg, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  int n = alg->rank_n(), j = alg->heis_j();
  // center: Z entries bracket to zero with everything
  for (int z : alg->subspace("z"))
    for (int b = 0; b < alg->dim(); ++b)
      if (!alg->bracket_basis(z, b).empty())
        return fail("center element " + idx_label(alg, z) + " is not central");
  // Z Z_adj = det Z * I over the commutative center
  HeisMatrices h = heisenberg_matrices(alg);
  Mat<VarPoly> prod = h.Z * h.Z_adj;
  for (int a = 0; a < j; ++a)
    for (int b = 0; b < j; ++b) {
      VarPoly want = (a == b) ? h.det_z : VarPoly();
      if (!(prod.at(a, b) == want)) return fail("Z * adj(Z) != det(Z) I");
    }
  // [V_(i1,l1), U_(i2,l2)] = delta_(l1,l2) Z_(i1,i2)
  for (int i1 = 1; i1 <= j; ++i1)
    for (int l1 = 1; l1 <= n; ++l1)
      for (int i2 = 1; i2 <= j; ++i2)
        for (int l2 = 1; l2 <= n; ++l2) {
          auto& br = alg->bracket_basis(alg->v_index(i1, l1), alg->u_index(i2, l2));
          if (l1 != l2) {
            if (!br.empty()) return fail("[V,U] off-column should vanish");
          } else {
            if (br.size() != 1 || br[0].first != alg->z_index(i1, i2) ||
                br[0].second != Scalar(1))
              return fail("[V,U] does not reproduce the Z pattern at (" +
                          std::to_string(i1) + "," + std::to_string(i2) + ")");
          }
        }
  return true;
}

UeaElement lambda_map(ContextRef ctx, const VarPoly& p) {
  UeaElement out(ctx);
  for (auto& [m, c] : p.terms()) {
    if (m.empty()) {
      out = out + UeaElement::unit(ctx).scaled(c);
      continue;
    }
    std::vector<int> multiset;
    for (auto& [v, e] : m)
      for (int t = 0; t < e; ++t) multiset.push_back(v);
    out = out + symmetrize(ctx, multiset).scaled(c);
  }
  return out;
}

TransferData make_transfer(const AlgebraRef& alg) {
  return make_transfer(PbwContext::natural(alg));
}

TransferData make_transfer(ContextRef ctx) {
  AlgebraRef alg = ctx->algebra();
  if (alg->kind() != AlgebraKind::Jacobi)
    throw Error("transfer data needs a Jacobi algebra");
  TransferData td;
  td.alg = alg;
  td.sp_small = LieAlgebra::symplectic(alg->rank_n());
  td.ctx = std::move(ctx);
  td.heis = heisenberg_matrices(alg);
  int n = alg->rank_n(), j = alg->heis_j();

  Mat<VarPoly> bu(j, n), bv(j, n);
  for (int p = 0; p < j; ++p)
    for (int l = 0; l < n; ++l) {
      bu.at(p, l) = var_of(td.heis.u_idx[p][l]);
      bv.at(p, l) = var_of(td.heis.v_idx[p][l]);
    }
  // stack [tU; -tV] (2n x j) and [V U] (j x 2n)
  Mat<VarPoly> stack(2 * n, j), wide(j, 2 * n);
  Mat<VarPoly> but = bu.transposed(), bvt = bv.transposed();
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < j; ++c) {
      stack.at(r, c) = but.at(r, c);
      stack.at(n + r, c) = VarPoly() - bvt.at(r, c);
    }
  for (int r = 0; r < j; ++r)
    for (int c = 0; c < n; ++c) {
      wide.at(r, c) = bv.at(r, c);
      wide.at(r, n + c) = bu.at(r, c);
    }
  td.quad = stack * td.heis.Z_adj * wide;
  td.det_z_u = lambda_map(td.ctx, td.heis.det_z);
  return td;
}

VarPoly t_poly(const TransferData& td, const Mat<Scalar>& x_small) {
  int size = 2 * td.alg->rank_n();
  VarPoly out;
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b) {
      const Scalar& c = x_small.at(a, b);
      if (!c.is_zero()) out += td.quad.at(a, b).scaled(c);
    }
  return out;
}

VarPoly t_poly(const TransferData& td, int sp_index) {
  return t_poly(td, td.sp_small->realization(sp_index));
}

UeaElement t_sym(const TransferData& td, int sp_index) {
  return lambda_map(td.ctx, t_poly(td, sp_index));
}

UeaElement t_hat(const TransferData& td, int sp_index) {
  UeaElement x = UeaElement::generator(td.ctx, td.alg->sp_embed(sp_index));
  return td.det_z_u.scaled(Scalar(2)) * x - t_sym(td, sp_index);
}

CheckReport check_t0_equivariance(int n, int j) {
  auto alg = LieAlgebra::jacobi(n, j);
  auto sp_small = LieAlgebra::symplectic(n);
  CheckReport report;

  // generic (u, v, Z) data over bookkeeping variables
  auto enc = [](int kind, int p, int l) { return (kind << 20) | (p << 10) | l; };
  Mat<VarPoly> gu(j, n), gv(j, n), gz(j, j);
  for (int p = 0; p < j; ++p)
    for (int l = 0; l < n; ++l) {
      gu.at(p, l) = VarPoly::variable(enc(0, p, l));
      gv.at(p, l) = VarPoly::variable(enc(1, p, l));
    }
  for (int p = 0; p < j; ++p)
    for (int q = 0; q < j; ++q)
      gz.at(p, q) = VarPoly::variable(enc(2, std::min(p, q), std::max(p, q)));

  // the big matrix of the generic Heisenberg element
  int s = alg->matrix_size();
  Mat<VarPoly> gh(s, s);
  for (int p = 0; p < j; ++p)
    for (int l = 0; l < n; ++l) {
      gh.at(n + p, l) += gv.at(p, l);                          // v block
      gh.at(n + j + l, 2 * n + j + p) -= gv.at(p, l);          // -tv block
      gh.at(n + p, n + j + l) += gu.at(p, l);                  // u block
      gh.at(l, 2 * n + j + p) += gu.at(p, l);                  // tu block
    }
  for (int p = 0; p < j; ++p)
    for (int q = 0; q < j; ++q) gh.at(n + p, 2 * n + j + q) += gz.at(p, q);

  Mat<VarPoly> t0_h = t0_blocks(gu, gv, gz);

  for (int k = 0; k < sp_small->dim(); ++k) {
    // [X, h] in the big realization
    Mat<VarPoly> xbig(s, s);
    {
      const Mat<Scalar>& xb = alg->realization(alg->sp_embed(k));
      for (int a = 0; a < s; ++a)
        for (int b = 0; b < s; ++b)
          if (!xb.at(a, b).is_zero())
            xbig.at(a, b) = VarPoly::constant(xb.at(a, b));
    }
    Mat<VarPoly> comm = xbig * gh - gh * xbig;
    // extract (u', v', Z') blocks; everything else must vanish
    Mat<VarPoly> du(j, n), dv(j, n), dz(j, j);
    for (int p = 0; p < j; ++p)
      for (int l = 0; l < n; ++l) {
        dv.at(p, l) = comm.at(n + p, l);
        du.at(p, l) = comm.at(n + p, n + j + l);
      }
    for (int p = 0; p < j; ++p)
      for (int q = 0; q < j; ++q) dz.at(p, q) = comm.at(n + p, 2 * n + j + q);
    for (int p = 0; p < j; ++p)
      for (int q = 0; q < j; ++q)
        if (!(dz.at(p, q) == dz.at(q, p)))
          return {false, report.checked, "Z block of [X,h] is not symmetric"};

    // directional derivative of T0 at h along [X, h]
    int size2 = 2 * n;
    Mat<VarPoly> lhs(size2, size2);
    auto add_dir = [&](int var, const VarPoly& delta) {
      if (delta.is_zero()) return;
      for (int a = 0; a < size2; ++a)
        for (int b = 0; b < size2; ++b)
          lhs.at(a, b) += t0_h.at(a, b).derivative(var) * delta;
    };
    for (int p = 0; p < j; ++p)
      for (int l = 0; l < n; ++l) {
        add_dir(enc(0, p, l), du.at(p, l));
        add_dir(enc(1, p, l), dv.at(p, l));
      }
    for (int p = 0; p < j; ++p)
      for (int q = p; q < j; ++q) add_dir(enc(2, p, q), dz.at(p, q));

    // [X, T0(h)] in the small realization
    Mat<VarPoly> xs(size2, size2);
    {
      const Mat<Scalar>& xr = sp_small->realization(k);
      for (int a = 0; a < size2; ++a)
        for (int b = 0; b < size2; ++b)
          if (!xr.at(a, b).is_zero()) xs.at(a, b) = VarPoly::constant(xr.at(a, b));
    }
    Mat<VarPoly> rhs = xs * t0_h - t0_h * xs;
    ++report.checked;
    if (!(lhs == rhs)) {
      report.ok = false;
      report.counterexample = "X = " + sp_small->label(k);
      return report;
    }
  }
  return report;
}

namespace {

// derivation ad(b) on the commutative bookkeeping ring (meaningful when all
// bracket values are central)
VarPoly ad_derivation(const AlgebraRef& alg, int b, const VarPoly& p) {
  VarPoly out;
  std::map<int, VarPoly> bracket_lin;
  for (auto& [m, c] : p.terms()) {
    for (auto& [v, e] : m) {
      if (!bracket_lin.count(v)) {
        VarPoly lin;
        for (auto& [k2, c2] : alg->bracket_basis(b, v))
          lin += var_of(k2).scaled(c2);
        bracket_lin.emplace(v, std::move(lin));
      }
    }
  }
  for (auto& [v, lin] : bracket_lin) {
    if (lin.is_zero()) continue;
    out += p.derivative(v) * lin;
  }
  return out;
}

}  // namespace

CheckReport check_ad_invariance(const TransferData& td) {
  CheckReport report;
  const auto& alg = td.alg;
  for (int vb : alg->subspace("v_heis")) {
    for (int k = 0; k < td.sp_small->dim(); ++k) {
      VarPoly tk = t_poly(td, k);
      VarPoly lhs = ad_derivation(alg, vb, tk);
      // 2 det Z [V, X]
      VarPoly lin;
      for (auto& [k2, c2] : alg->bracket_basis(vb, alg->sp_embed(k)))
        lin += var_of(k2).scaled(c2);
      VarPoly rhs = td.heis.det_z.scaled(Scalar(2)) * lin;
      ++report.checked;
      if (!(lhs == rhs)) {
        report.ok = false;
        report.counterexample = "V = " + idx_label(alg, vb) +
                                ", X = " + td.sp_small->label(k);
        return report;
      }
    }
  }
  return report;
}

CheckReport check_bracket_relation(const TransferData& td) {
  CheckReport report;
  int dim = td.sp_small->dim();
  std::vector<UeaElement> that(dim);
  for (int k = 0; k < dim; ++k) that[k] = t_hat(td, k);
  UeaElement two_detz = td.det_z_u.scaled(Scalar(2));
  for (int a = 0; a < dim; ++a)
    for (int b = a; b < dim; ++b) {
      UeaElement lhs = that[a] * that[b] - that[b] * that[a];
      UeaElement rhs(td.ctx);
      for (auto& [k2, c2] : td.sp_small->bracket_basis(a, b))
        rhs = rhs + t_hat(td, k2).scaled(c2);
      rhs = two_detz * rhs;
      ++report.checked;
      if (!(lhs == rhs)) {
        report.ok = false;
        report.counterexample = "X = " + td.sp_small->label(a) +
                                ", Y = " + td.sp_small->label(b);
        return report;
      }
    }
  return report;
}

CheckReport check_that_commutes(const TransferData& td) {
  CheckReport report;
  const auto& alg = td.alg;
  std::vector<int> heis = alg->subspace("v_heis");
  const auto& z = alg->subspace("z");
  heis.insert(heis.end(), z.begin(), z.end());
  for (int k = 0; k < td.sp_small->dim(); ++k) {
    UeaElement tk = t_hat(td, k);
    for (int h : heis) {
      UeaElement hg = UeaElement::generator(td.ctx, h);
      ++report.checked;
      if (!(tk * hg == hg * tk)) {
        report.ok = false;
        report.counterexample = "That(" + td.sp_small->label(k) + ") vs " +
                                idx_label(alg, h);
        return report;
      }
    }
  }
  return report;
}

DetTransferReport check_det_transfer(const TransferData& td,
                                     const std::optional<Mat<Scalar>>& index) {
  DetTransferReport report;
  int n = td.alg->rank_n(), j = td.alg->heis_j();
  // That applied entrywise to the small raising matrix
  OperatorMatrix that_m(td.ctx, n, n);
  const RootDatum& rd_small = td.sp_small->roots();
  for (int i = 1; i <= n; ++i)
    for (int l = 1; l <= n; ++l) {
      int x_small = rd_small.positive[rd_small.upper_root(i, l)].x_index;
      that_m.at(i - 1, l - 1) =
          t_hat(td, x_small).scaled(Scalar(i == l ? 2 : 1));
    }
  UeaElement that_det;
  try {
    that_det = that_m.det(true);
    report.entries_commute = true;
  } catch (const Error&) {
    report.entries_commute = false;
    that_det = that_m.det(false);
  }
  UeaElement lhs = td.det_z_u.pow(j) * that_det;
  UeaElement base_rhs = td.det_z_u.pow(n) * raising_operator(td.ctx).det;

  if (base_rhs.is_zero() || lhs.is_zero()) {
    report.proportional = lhs.is_zero() && base_rhs.is_zero();
    report.kappa = Scalar(0);
    return report;
  }
  for (int e = 0; e <= j; ++e) {
    UeaElement rhs = td.det_z_u.pow(e) * base_rhs;
    auto lead = rhs.terms().begin();
    auto it = lhs.terms().find(lead->first);
    if (it == lhs.terms().end()) continue;
    Scalar c = it->second / lead->second;
    if (lhs == rhs.scaled(c)) {
      report.proportional = true;
      report.kappa = c;
      report.central_power = e;
      break;
    }
  }
  if (!report.proportional) {
    report.lhs = lhs.str();
    report.rhs = base_rhs.str();
    return report;
  }
  if (index) {
    // scalar by which det Z acts on an index-M module
    Scalar two_pi = Scalar(2) * Scalar::pi_hat();
    Scalar detm = mat_det(*index);
    Scalar action = two_pi.pow(j) * detm;
    report.kappa_on_module = report.kappa * action.pow(report.central_power);
  }
  return report;
}

StarContext make_star_context(const ModuleRef& mod) {
  auto td = std::make_shared<const TransferData>(make_transfer(mod->context()));
  StarContext sc;
  sc.mod = mod;
  sc.transfer = td;
  // derive the det Z action scalar from the generator
  ModuleVector v0 = mod->generator();
  ModuleVector dz = mod->act(td->det_z_u, v0);
  if (dz.is_zero() || !dz.terms.count(PbwMono{}))
    throw Error("det Z does not act by a scalar on the generator");
  sc.det_z_scalar = dz.terms.at(PbwMono{});
  if (sc.det_z_scalar.is_zero()) throw Error("det Z acts by zero");
  sc.c_star = Scalar(2) * sc.det_z_scalar;
  for (int k = 0; k < td->sp_small->dim(); ++k)
    sc.that_elems.push_back(t_hat(*td, k));
  return sc;
}

ModuleVector star_act(const StarContext& sc, int sp_index, const ModuleVector& v) {
  return sc.mod->act(sc.that_elems[sp_index], v).scaled(Scalar(1) / sc.c_star);
}

ModuleVector star_act(const StarContext& sc, const UeaElement& u_small,
                      const ModuleVector& v) {
  if (u_small.context()->algebra().get() != sc.transfer->sp_small.get())
    throw Error("star action expects an element of U(sp(2n))");
  ModuleVector out = sc.mod->zero();
  for (auto& [m, c] : u_small.terms()) {
    ModuleVector cur = v;
    for (auto it = m.rbegin(); it != m.rend(); ++it) {
      int basis = u_small.context()->basis_at(it->first);
      for (int rep = 0; rep < it->second; ++rep) cur = star_act(sc, basis, cur);
    }
    out = out + cur.scaled(c);
  }
  return out;
}

StarReport check_star_action(const StarContext& sc, int scan_max) {
  StarReport report;
  const auto& td = *sc.transfer;
  const auto& mod = sc.mod;
  int j = td.alg->heis_j();
  ModuleVector v0 = mod->generator();
  UeaElement raising_big = raising_operator(td.ctx).det;
  ModuleVector sample = mod->act(raising_big, v0);

  // Lie-action law on all sp basis pairs, on the generator and a sample
  report.action_law_ok = true;
  int dim = td.sp_small->dim();
  for (int a = 0; a < dim && report.action_law_ok; ++a)
    for (int b = 0; b < dim && report.action_law_ok; ++b) {
      for (const ModuleVector* v : {&v0, &sample}) {
        ModuleVector lhs =
            star_act(sc, a, star_act(sc, b, *v)) - star_act(sc, b, star_act(sc, a, *v));
        ModuleVector rhs = mod->zero();
        for (auto& [k2, c2] : td.sp_small->bracket_basis(a, b))
          rhs = rhs + star_act(sc, k2, *v).scaled(c2);
        if (!(lhs == rhs)) {
          report.action_law_ok = false;
          break;
        }
      }
    }

  // star weight of the generator: k - j/2
  Scalar expect = mod->weight() - Scalar::rational(j, 2);
  report.weight_ok = true;
  for (int levi_small : td.sp_small->subspace("levi")) {
    ModuleVector image = star_act(sc, levi_small, v0);
    Scalar tr = td.sp_small->levi_trace(levi_small);
    if (!(image == v0.scaled(expect * tr))) {
      report.weight_ok = false;
      break;
    }
  }
  report.star_weight = expect;

  // dot-holomorphic implies star-holomorphic along the raising scan
  report.hol_transfer_ok = true;
  ModuleVector v = v0;
  for (int m = 0; m <= scan_max; ++m) {
    bool dot_hol = is_holomorphic_jacobi(v);
    if (dot_hol) {
      bool star_hol = true;
      for (int y_small : td.sp_small->subspace("L"))
        if (!star_act(sc, y_small, v).is_zero()) {
          star_hol = false;
          break;
        }
      if (!star_hol) {
        report.hol_transfer_ok = false;
        break;
      }
    }
    if (m < scan_max) v = mod->act(raising_big, v);
  }

  report.c_star = sc.c_star;
  Scalar det_m = mat_det(mod->index_matrix());
  report.c_star_discrepancy = sc.c_star / (Scalar(2) * det_m);
  return report;
}

LeviTraceReport check_levi_trace(const StarContext& sc) {
  LeviTraceReport report;
  const auto& td = *sc.transfer;
  int j = td.alg->heis_j();

  // adjugate identity in the commutative center
  VarPoly pairing;
  for (int a = 0; a < j; ++a)
    for (int b = 0; b < j; ++b)
      pairing += td.heis.Z_adj.at(a, b) * td.heis.Z.at(a, b);
  report.adjugate_identity_ok = pairing == td.heis.det_z.scaled(Scalar(j));

  // lambda(T(levi)) v0 = s * tr * (det Z scalar) * v0 with one s
  ModuleVector v0 = sc.mod->generator();
  std::optional<Scalar> s;
  report.uniform = true;
  for (int levi_small : td.sp_small->subspace("levi")) {
    ModuleVector image = sc.mod->act(t_sym(td, levi_small), v0);
    Scalar tr = td.sp_small->levi_trace(levi_small);
    if (tr.is_zero()) {
      if (!image.is_zero()) report.uniform = false;
      continue;
    }
    if (image.is_zero()) {
      if (s && !s->is_zero()) report.uniform = false;
      s = Scalar(0);
      continue;
    }
    if (!image.terms.count(PbwMono{})) {
      report.uniform = false;
      continue;
    }
    Scalar this_s = image.terms.at(PbwMono{}) / (tr * sc.det_z_scalar);
    if (!(image == v0.scaled(this_s * tr * sc.det_z_scalar))) report.uniform = false;
    if (s && *s != this_s) report.uniform = false;
    s = this_s;
  }
  if (s) report.s = *s;

  // consequent star weight of the generator
  Scalar expect = sc.mod->weight() - Scalar::rational(j, 2);
  report.star_weight_ok = true;
  for (int levi_small : td.sp_small->subspace("levi")) {
    ModuleVector image = star_act(sc, levi_small, v0);
    Scalar tr = td.sp_small->levi_trace(levi_small);
    if (!(image == v0.scaled(expect * tr))) {
      report.star_weight_ok = false;
      break;
    }
  }
  return report;
}

}  // namespace pbwlab
