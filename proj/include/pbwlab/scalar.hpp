#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pbwlab {

/// Error type for every engine failure: bad input, division by zero,
/// vanishing denominators under substitution, degree-cap overflows.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

using BigInt = mpz_class;
using BigRat = mpq_class;

/// Registry of formal parameters. Ids are stable for the process lifetime;
/// declaring new parameters never invalidates existing values. Two are
/// preregistered: "2pi_i" (stands for 2*pi*i) and "k" (a generic weight).
class Params {
 public:
  static int id(const std::string& name);  // declares the name if unknown
  static std::optional<int> lookup(const std::string& name);
  static std::string name(int id);
  static std::vector<std::string> names_snapshot();
  static int pi_hat();    // "2pi_i"
  static int weight_k();  // "k"
};

/// Monomial in the formal parameters: (param id, exponent > 0) pairs sorted
/// by id.
using ParamMono = std::vector<std::pair<int, int>>;

int mono_degree(const ParamMono& m);
ParamMono mono_mul(const ParamMono& a, const ParamMono& b);
bool mono_divides(const ParamMono& a, const ParamMono& b);
ParamMono mono_quot(const ParamMono& b, const ParamMono& a);
// Graded order, ties broken lexicographically with smaller ids dominating.
int mono_cmp(const ParamMono& a, const ParamMono& b);

struct ParamMonoLess {
  bool operator()(const ParamMono& a, const ParamMono& b) const {
    return mono_cmp(a, b) < 0;
  }
};

/// Sparse multivariate polynomial over the integers in the declared
/// parameters. Used internally by Scalar; all user-facing arithmetic goes
/// through Scalar.
class Poly {
 public:
  using Terms = std::map<ParamMono, BigInt, ParamMonoLess>;

  Poly() = default;
  static Poly constant(const BigInt& c);
  static Poly variable(int param_id);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  BigInt constant_value() const;  // requires is_constant()

  int total_degree() const;
  int degree_in(int param_id) const;
  int max_var() const;  // -1 when constant
  bool has_var(int param_id) const;

  void add_term(const ParamMono& m, const BigInt& c);

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly mul_int(const BigInt& c) const;
  BigInt integer_content() const;      // gcd of coefficients, nonnegative
  const BigInt& leading_coeff() const; // w.r.t. the graded order

 private:
  Terms terms_;
};

Poly poly_gcd(const Poly& a, const Poly& b);
// Exact division; throws when b does not divide a.
Poly poly_divexact(const Poly& a, const Poly& b);

/// Exact rational function in the declared formal parameters.
///
/// Canonical representation: numerator and denominator are integer
/// polynomials with no common polynomial factor, jointly content-reduced,
/// and the denominator's leading coefficient is positive. Equality of
/// values is therefore representational equality.
class Scalar {
 public:
  Scalar() : num_(), den_(Poly::constant(1)) {}
  Scalar(long v);  // NOLINT(google-explicit-constructor)
  explicit Scalar(const BigInt& v);
  explicit Scalar(const BigRat& v);

  static Scalar integer(long v) { return Scalar(v); }
  static Scalar rational(long num, long den);
  static Scalar rational(const BigInt& num, const BigInt& den);
  static Scalar param(const std::string& name);
  static Scalar param_id(int id);
  static Scalar from_poly(const Poly& p);
  static Scalar pi_hat() { return param_id(Params::pi_hat()); }
  static Scalar weight_k() { return param_id(Params::weight_k()); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_constant() const;  // no parameters left
  BigRat as_rational() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws on division by zero
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  bool operator==(const Scalar& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar pow(long e) const;  // negative exponents invert

  /// Exact evaluation. Unbound parameters pass through; a denominator that
  /// vanishes under the bindings raises Error.
  Scalar substitute(const std::map<int, Scalar>& bindings) const;
  Scalar substitute(const std::map<std::string, Scalar>& bindings) const;

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_polynomial() const { return den_.is_one(); }

  std::string str() const;
  static Scalar parse(const std::string& text);

 private:
  Scalar(Poly num, Poly den, bool canonical);
  void canonicalize();
  Poly num_, den_;
};

std::string poly_str(const Poly& p);

}  // namespace pbwlab
