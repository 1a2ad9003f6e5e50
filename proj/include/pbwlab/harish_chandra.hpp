#pragma once

#include "pbwlab/module.hpp"
#include "pbwlab/var_poly.hpp"

namespace pbwlab {

/// Data for the Harish-Chandra projection on U(sp(2n)) relative to the
/// Borel subalgebra whose Levi part is lower triangular: its nilradical is
/// the strictly lower gl generators together with L, the opposite nilradical
/// the strictly upper ones together with u_plus.
struct HcContext {
  AlgebraRef alg;
  ContextRef gamma_ctx;  // order: opposite nilradical, Cartan, nilradical
  std::vector<int> nilrad, opposite, cartan;
  std::vector<Scalar> rho;  // half sum of the Borel's roots, on each d_i
};

HcContext make_hc_context(AlgebraRef alg);
HcContext make_hc_context(int n);

/// Cartan polynomials use variable i for d_(i+1); the pr1 image uses
/// variable 0 for H0 = d_1 + ... + d_n.

/// Pure Cartan component: reorder with the nilradical last, drop every
/// monomial containing a nilradical generator, require the remainder to be
/// a Cartan polynomial. Input must be ad-Cartan-invariant (weight zero).
VarPoly gamma_prime(const HcContext& hc, const UeaElement& d);

/// The rho shift d_i -> d_i + rho(d_i) (or its inverse).
VarPoly t_shift(const HcContext& hc, const VarPoly& p, bool inverse);

/// Projection S(h) -> C[H0]: the substitution d_i -> H0/n.
VarPoly pr1(const VarPoly& p, int n);

/// Invariance under all signed permutations of d_1..d_n.
bool weyl_invariant(const VarPoly& p, int n);

/// Membership in the right ideal generated by the given subalgebra:
/// reorder with those generators first; every monomial must contain one.
bool right_ideal_member(const UeaElement& u, const std::vector<int>& subalg);

UeaElement cartan_poly_to_uea(ContextRef ctx, const VarPoly& p);

struct CenterProjectionReport {
  bool member_ok = false;  // D - pr1(gamma'(D)) lies in the right ideal of p
  bool weyl_ok = false;    // t^{-1}(gamma'(D)) is Weyl invariant
  bool action_ok = false;  // action on the weight-k generator matches
  VarPoly gamma_prime_poly;  // in the d variables
  VarPoly projected;         // in H0
  Scalar action_expected;
  Scalar action_observed;
  bool all_ok() const { return member_ok && weyl_ok && action_ok; }
};

/// Verifies D = pr1(gamma'(D)) modulo the right ideal generated by
/// levi + L, plus the Weyl-invariance of gamma(D) and the action
/// cross-check on the symbolic-weight module generator.
CenterProjectionReport check_center_projection(const UeaElement& d, int n);

}  // namespace pbwlab
