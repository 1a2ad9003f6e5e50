#pragma once

#include <functional>
#include <map>

#include "pbwlab/scalar.hpp"

namespace pbwlab {

/// Sparse commutative polynomial over Scalar in integer-keyed variables.
/// Shared by the Cartan-polynomial calculus, the symmetric-algebra
/// bookkeeping over the Heisenberg part, and the differential-symbol
/// algebra of the formal operators.
class VarPoly {
 public:
  using Mono = std::vector<std::pair<int, int>>;  // (var, exp>0), sorted

  VarPoly() = default;
  VarPoly(long c) { add(Mono{}, Scalar(c)); }  // NOLINT
  static VarPoly constant(const Scalar& c) {
    VarPoly p;
    p.add(Mono{}, c);
    return p;
  }
  static VarPoly variable(int v) {
    VarPoly p;
    p.add(Mono{{v, 1}}, Scalar(1));
    return p;
  }

  const std::map<Mono, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;

  void add(const Mono& m, const Scalar& c);

  VarPoly operator+(const VarPoly& o) const;
  VarPoly operator-(const VarPoly& o) const;
  VarPoly operator*(const VarPoly& o) const;
  VarPoly& operator+=(const VarPoly& o) { return *this = *this + o; }
  VarPoly& operator-=(const VarPoly& o) { return *this = *this - o; }
  VarPoly& operator*=(const VarPoly& o) { return *this = *this * o; }
  VarPoly scaled(const Scalar& c) const;
  VarPoly pow(int e) const;
  bool operator==(const VarPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const VarPoly& o) const { return !(*this == o); }

  /// Simultaneous substitution of variables by polynomials; variables
  /// without a binding pass through.
  VarPoly substitute(const std::map<int, VarPoly>& bindings) const;

  /// Partial derivative with respect to a variable.
  VarPoly derivative(int v) const;

  std::string str(const std::function<std::string(int)>& var_name) const;

 private:
  std::map<Mono, Scalar> terms_;
};

}  // namespace pbwlab
