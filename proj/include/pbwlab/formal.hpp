#pragma once

#include <optional>

#include "pbwlab/matrix.hpp"
#include "pbwlab/var_poly.hpp"

namespace pbwlab {

/// Variables of the formal function space on symmetric (tau, tau') blocks
/// and the rectangular z block, canonical coordinates only (a <= b, c <= d).
namespace formal_var {
int tau(int a, int b);    // 1 <= a <= b <= n
int z(int r, int s);      // 1 <= r <= j, 1 <= s <= n
int tau_p(int c, int d);  // 1 <= c <= d <= j
std::string name(int var);
}  // namespace formal_var

/// Polynomial in tau, z, tau' times an optional exponential index factor
/// exp(2pi_i * Tr(M tau')).
struct FormalFunction {
  int n = 0, j = 0;
  VarPoly poly;
  std::optional<Mat<Scalar>> exp_index;

  static FormalFunction polynomial(int n, int j, const VarPoly& p);
  FormalFunction scaled(const Scalar& c) const;
  FormalFunction operator+(const FormalFunction& o) const;
  FormalFunction operator-(const FormalFunction& o) const;
  bool operator==(const FormalFunction& o) const;
  bool is_zero() const { return poly.is_zero(); }
  std::string str() const;
};

/// First-order derivative in a canonical variable, with the exponential
/// factor's chain rule on tau' variables.
FormalFunction derivative(const FormalFunction& f, int var);

/// Constant-coefficient differential operator: polynomial in the derivative
/// symbols (same variable encoding). Entries of all operator matrices
/// commute, so determinants are plain commutative expansions.
using DiffOp = VarPoly;

FormalFunction apply_op(const DiffOp& op, const FormalFunction& f);

/// Heat operator det(4pi_i |M| d/dtau - t(d/dz) adj(M) d/dz) for a
/// symmetric invertible index M; the (r,s) entry of d/dtau carries the
/// (1 + delta_rs) convention.
DiffOp heat_operator(int n, int j, const Mat<Scalar>& index);

/// Determinant operator of the full (n+j)-variable symmetric block
/// (tau, tz; z, tau'), same (1 + delta) convention.
DiffOp big_d_operator(int n, int j);

/// Extension by the index exponential: same polynomial, index factor added.
/// The input must not involve tau' (and must carry no factor already).
FormalFunction ext(const FormalFunction& f, const Mat<Scalar>& index);

struct BolReport {
  bool uniform = false;           // one c works for every test function
  bool powers_ok = false;         // the same c works for every l
  Scalar c;                       // bigD^l ext f = c^l ext(heat^l f)
  int matched_form = -1;          // 0: (2pi_i)^(n-j) det M^(n-1); 1: its
                                  // reciprocal; -1: neither
  std::string witness;            // failing function, if any
};

/// Derives the proportionality constant between bigD^l on extensions and
/// the extension of heat^l, over all monomial test functions of degree <= 2
/// in tau and z, for every l up to l_max.
BolReport verify_bol_extension(int n, int j, const Mat<Scalar>& index, int l_max);

}  // namespace pbwlab
