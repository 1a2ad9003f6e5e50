#include "pbwlab/harish_chandra.hpp"

#include <algorithm>

namespace pbwlab {

HcContext make_hc_context(AlgebraRef alg) {
  if (alg->kind() != AlgebraKind::Symplectic)
    throw Error("harish-chandra projection expects sp(2n)");
  int n = alg->rank_n();
  HcContext hc;
  hc.alg = std::move(alg);
  hc.cartan = hc.alg->subspace("cartan");
  for (int i = 1; i <= n; ++i)
    for (int l = 1; l <= n; ++l) {
      if (i == l) continue;
      int idx = hc.alg->index_of("A(" + std::to_string(i) + "," + std::to_string(l) + ")");
      (i > l ? hc.nilrad : hc.opposite).push_back(idx);
    }
  const auto& lower = hc.alg->subspace("L");
  hc.nilrad.insert(hc.nilrad.end(), lower.begin(), lower.end());
  const auto& upper = hc.alg->subspace("u_plus");
  hc.opposite.insert(hc.opposite.end(), upper.begin(), upper.end());

  std::vector<int> order = hc.opposite;
  order.insert(order.end(), hc.cartan.begin(), hc.cartan.end());
  order.insert(order.end(), hc.nilrad.begin(), hc.nilrad.end());
  hc.gamma_ctx = PbwContext::with_order(hc.alg, std::move(order));
  hc.rho = hc.alg->roots().rho;
  return hc;
}

HcContext make_hc_context(int n) { return make_hc_context(LieAlgebra::symplectic(n)); }

VarPoly gamma_prime(const HcContext& hc, const UeaElement& d) {
  for (int c : hc.cartan)
    if (!ad_action(d.context(), c, d).is_zero())
      throw Error("gamma' expects an ad-Cartan-invariant element");
  UeaElement in_gamma = reorder(d, hc.gamma_ctx);
  int cartan_start = static_cast<int>(hc.opposite.size());
  int nilrad_start = cartan_start + static_cast<int>(hc.cartan.size());
  VarPoly out;
  for (auto& [m, c] : in_gamma.terms()) {
    bool has_nilrad = !m.empty() && m.back().first >= nilrad_start;
    if (has_nilrad) continue;
    VarPoly::Mono vars;
    for (auto& [p, e] : m) {
      if (p < cartan_start)
        throw Error("element not center-like for this projection: " +
                    in_gamma.str());
      vars.emplace_back(p - cartan_start, e);
    }
    out.add(vars, c);
  }
  return out;
}

VarPoly t_shift(const HcContext& hc, const VarPoly& p, bool inverse) {
  std::map<int, VarPoly> bind;
  for (size_t i = 0; i < hc.rho.size(); ++i) {
    Scalar shift = inverse ? -hc.rho[i] : hc.rho[i];
    bind[static_cast<int>(i)] =
        VarPoly::variable(static_cast<int>(i)) + VarPoly::constant(shift);
  }
  return p.substitute(bind);
}

VarPoly pr1(const VarPoly& p, int n) {
  std::map<int, VarPoly> bind;
  VarPoly h0_over_n = VarPoly::variable(0).scaled(Scalar::rational(1, n));
  for (int i = 0; i < n; ++i) bind[i] = h0_over_n;
  return p.substitute(bind);
}

bool weyl_invariant(const VarPoly& p, int n) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  do {
    for (int signs = 0; signs < (1 << n); ++signs) {
      std::map<int, VarPoly> bind;
      for (int i = 0; i < n; ++i) {
        VarPoly image = VarPoly::variable(perm[i]);
        if (signs & (1 << i)) image = VarPoly() - image;
        bind[i] = image;
      }
      if (p.substitute(bind) != p) return false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return true;
}

bool right_ideal_member(const UeaElement& u, const std::vector<int>& subalg) {
  const auto& alg = u.context()->algebra();
  std::vector<bool> in_sub(alg->dim(), false);
  for (int b : subalg) in_sub[b] = true;
  std::vector<int> order = subalg;
  for (int b = 0; b < alg->dim(); ++b)
    if (!in_sub[b]) order.push_back(b);
  auto ideal_ctx = PbwContext::with_order(alg, std::move(order));
  UeaElement reordered = reorder(u, ideal_ctx);
  int boundary = static_cast<int>(subalg.size());
  for (auto& [m, c] : reordered.terms()) {
    if (m.empty() || m.front().first >= boundary) return false;
  }
  return true;
}

UeaElement cartan_poly_to_uea(ContextRef ctx, const VarPoly& p) {
  const auto& cartan = ctx->algebra()->subspace("cartan");
  UeaElement out(ctx);
  for (auto& [m, c] : p.terms()) {
    UeaElement term = UeaElement::unit(ctx).scaled(c);
    for (auto& [v, e] : m)
      term = term * UeaElement::generator(ctx, cartan[v]).pow(e);
    out = out + term;
  }
  return out;
}

CenterProjectionReport check_center_projection(const UeaElement& d, int n) {
  HcContext hc = make_hc_context(d.context()->algebra());
  CenterProjectionReport report;
  report.gamma_prime_poly = gamma_prime(hc, d);
  report.projected = pr1(report.gamma_prime_poly, n);
  report.weyl_ok = weyl_invariant(t_shift(hc, report.gamma_prime_poly, true), n);

  // membership of D - pr1(gamma'(D)) in the right ideal generated by levi+L
  ContextRef ctx = d.context();
  std::map<int, VarPoly> back;
  VarPoly sum_d;
  for (int i = 0; i < n; ++i) sum_d += VarPoly::variable(i);
  back[0] = sum_d;
  UeaElement projected_uea = cartan_poly_to_uea(ctx, report.projected.substitute(back));
  std::vector<int> parabolic = ctx->algebra()->subspace("levi");
  const auto& lower = ctx->algebra()->subspace("L");
  parabolic.insert(parabolic.end(), lower.begin(), lower.end());
  report.member_ok = right_ideal_member(d - projected_uea, parabolic);

  // action cross-check on the symbolic-weight generator
  Scalar k = Scalar::weight_k();
  auto mod = InducedModule::siegel(d.context()->algebra(), k);
  UeaElement d_in_mod = reorder(d, mod->context());
  ModuleVector image = mod->act(d_in_mod, mod->generator());
  std::map<int, VarPoly> at_nk;
  at_nk[0] = VarPoly::constant(k * Scalar(n));
  VarPoly value = report.projected.substitute(at_nk);
  Scalar expected(0);
  if (!value.is_zero()) expected = value.terms().begin()->second;
  report.action_expected = expected;
  ModuleVector expected_vec = mod->generator().scaled(expected);
  report.action_ok = image == expected_vec;
  if (!image.is_zero() && image.terms.count(PbwMono{}))
    report.action_observed = image.terms.at(PbwMono{});
  return report;
}

}  // namespace pbwlab
