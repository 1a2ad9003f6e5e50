#pragma once

#include "pbwlab/module.hpp"
#include "pbwlab/var_poly.hpp"

namespace pbwlab {

/// The Z/U/V generator matrices of a Jacobi algebra, with entries in the
/// commutative bookkeeping ring (variables = basis indices).
struct HeisMatrices {
  Mat<VarPoly> Z;      // j x j, entries in the center
  Mat<VarPoly> Z_adj;  // classical adjoint over the center
  VarPoly det_z;
  std::vector<std::vector<int>> u_idx, v_idx;  // j x n basis-index grids
};

HeisMatrices heisenberg_matrices(const AlgebraRef& alg);

/// Entrywise checks: Z entries are central and pairwise commuting,
/// Z * Z_adj = det(Z) * I, and [V, U] reproduces the Z pattern.
bool check_heis_invariants(const AlgebraRef& alg, std::string* why = nullptr);

/// Symmetrization map from the commutative bookkeeping ring into U(g):
/// variables are basis indices, each monomial goes through lambda.
UeaElement lambda_map(ContextRef ctx, const VarPoly& p);

/// Shared data for the transfer maps between U(sp(2n)) and U(g^(n,j)).
struct TransferData {
  AlgebraRef alg;       // the Jacobi algebra
  AlgebraRef sp_small;  // sp(2n), for 2n x 2n realizations
  ContextRef ctx;       // natural context on the Jacobi algebra
  HeisMatrices heis;
  Mat<VarPoly> quad;  // 2n x 2n: [tU; -tV] Z_adj [V U] in the bookkeeping ring
  UeaElement det_z_u;  // det Z inside U(g)
};

TransferData make_transfer(const AlgebraRef& alg);
TransferData make_transfer(ContextRef ctx);

/// T(X) in the symmetric algebra: the entrywise pairing of the 2n x 2n
/// matrix of X with quad.
VarPoly t_poly(const TransferData& td, int sp_index);
VarPoly t_poly(const TransferData& td, const Mat<Scalar>& x_small);

/// lambda(T(X)) in U(g).
UeaElement t_sym(const TransferData& td, int sp_index);

/// That(X) = 2 det Z * X - lambda(T(X)).
UeaElement t_hat(const TransferData& td, int sp_index);

/// T0 on (u, v, Z) data: the block matrix
/// (tu Za v, tu Za u; -tv Za v, -tv Za u), Za the adjoint of Z.
template <class R>
Mat<R> t0_blocks(const Mat<R>& u, const Mat<R>& v, const Mat<R>& zz) {
  int n = u.cols();
  Mat<R> za = mat_adjugate(zz);
  Mat<R> ut = u.transposed(), vt = v.transposed();
  Mat<R> a = ut * za * v, b = ut * za * u;
  Mat<R> c = vt * za * v, dd = vt * za * u;
  Mat<R> out(2 * n, 2 * n);
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s) {
      out.at(r, s) = a.at(r, s);
      out.at(r, n + s) = b.at(r, s);
      out.at(n + r, s) = R{} - c.at(r, s);
      out.at(n + r, n + s) = R{} - dd.at(r, s);
    }
  return out;
}

struct CheckReport {
  bool ok = true;
  int checked = 0;
  std::string counterexample;
};

/// Infinitesimal equivariance of T0 at a generic Heisenberg element:
/// DT0|_h([X, h]) = [X, T0(h)] for every sp basis element X.
CheckReport check_t0_equivariance(int n, int j);

/// ad(V) T(X) = 2 det Z [V, X] for all V in the Heisenberg part, X in the
/// sp part (computed in the commutative bookkeeping ring).
CheckReport check_ad_invariance(const TransferData& td);

/// [That(X), That(Y)] = 2 det Z That([X, Y]) for all sp basis pairs.
CheckReport check_bracket_relation(const TransferData& td);

/// The image of That commutes with every Heisenberg generator.
CheckReport check_that_commutes(const TransferData& td);

struct DetTransferReport {
  bool entries_commute = false;
  bool proportional = false;
  Scalar kappa;           // scalar factor: lhs = kappa * detZ^central_power * rhs
  int central_power = 0;  // power of the central element det Z in the ratio
  Scalar kappa_on_module; // kappa * (det Z action scalar)^central_power
  std::string lhs, rhs;
};

/// Compares det Z^j * det(That(raising matrix)) with
/// det Z^n * (big raising determinant). The two sides are proportional up
/// to a scalar times a power of the central element det Z; both factors are
/// derived. When an index matrix is supplied, the combined scalar by which
/// the ratio acts on an index-M module is reported too.
DetTransferReport check_det_transfer(
    const TransferData& td,
    const std::optional<Mat<Scalar>>& index = std::nullopt);

/// The rescaled sp(2n) action X * v = That(X) v / c_star on an index-M
/// module, with c_star = 2 * (the scalar by which det Z acts), derived.
struct StarContext {
  ModuleRef mod;
  std::shared_ptr<const TransferData> transfer;
  Scalar det_z_scalar;  // derived from the action on the generator
  Scalar c_star;
  std::vector<UeaElement> that_elems;  // per sp(2n) basis index
};

StarContext make_star_context(const ModuleRef& mod);

ModuleVector star_act(const StarContext& sc, int sp_index, const ModuleVector& v);
/// Extends multiplicatively over PBW words of U(sp(2n)).
ModuleVector star_act(const StarContext& sc, const UeaElement& u_small,
                      const ModuleVector& v);

struct StarReport {
  bool action_law_ok = false;     // X*(Y*v) - Y*(X*v) = [X,Y]*v
  bool weight_ok = false;         // star weight of the generator is k - j/2
  Scalar star_weight;
  bool hol_transfer_ok = false;   // dot-holomorphic implies star-holomorphic
  Scalar c_star;
  Scalar c_star_discrepancy;      // c_star * (2 det M), vs the stated 1/(2 det M)
};

StarReport check_star_action(const StarContext& sc, int scan_max);

struct LeviTraceReport {
  bool adjugate_identity_ok = false;  // sum Za_(i1,i2) Z_(i1,i2) = j det Z
  bool uniform = false;
  Scalar s;  // lambda(T(levi)) v0 = s * tr * (det Z scalar) * v0
  bool star_weight_ok = false;
};

LeviTraceReport check_levi_trace(const StarContext& sc);

}  // namespace pbwlab
