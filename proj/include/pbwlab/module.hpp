#pragma once

#include <optional>

#include "pbwlab/uea.hpp"

namespace pbwlab {

enum class ModuleKind { Siegel, Jacobi, Generic };

class InducedModule;
using ModuleRef = std::shared_ptr<const InducedModule>;

/// Element of a character-induced module, expressed in the basis of
/// monomials in the complement generators.
struct ModuleVector {
  ModuleRef mod;
  PbwContext::TermMap terms;

  bool is_zero() const { return terms.empty(); }
  ModuleVector operator+(const ModuleVector& o) const;
  ModuleVector operator-(const ModuleVector& o) const;
  ModuleVector scaled(const Scalar& c) const;
  bool operator==(const ModuleVector& o) const;
  bool operator!=(const ModuleVector& o) const { return !(*this == o); }
  std::string str() const;
};

/// U(g) tensor_{U(q)} C_chi for a subalgebra q spanned by the trailing basis
/// elements of the context order and a character chi of q.
class InducedModule : public std::enable_shared_from_this<InducedModule> {
 public:
  /// Checks that q is bracket-closed, that chi kills [q, q], and that the
  /// context order puts q last.
  static ModuleRef build(ContextRef ctx, std::vector<int> q_basis,
                         std::map<int, Scalar> chi,
                         ModuleKind kind = ModuleKind::Generic,
                         std::optional<Mat<Scalar>> index = std::nullopt);

  /// sp(2n) module with q = levi + L, chi = weight * (gl trace) on the Levi
  /// and zero on L. The weight may be symbolic.
  static ModuleRef siegel(int n, const Scalar& weight);
  static ModuleRef siegel(AlgebraRef alg, const Scalar& weight);

  /// Jacobi module with q = levi + L + l_heis + z; the center acts through
  /// 2*2pi_i*index. The index matrix must be symmetric and invertible.
  static ModuleRef jacobi(int n, int j, const Scalar& weight,
                          const Mat<Scalar>& index);
  static ModuleRef jacobi(AlgebraRef alg, const Scalar& weight,
                          const Mat<Scalar>& index);

  const ContextRef& context() const { return ctx_; }
  ModuleKind kind() const { return kind_; }
  const std::vector<int>& q_basis() const { return q_; }
  const std::vector<int>& complement() const { return complement_; }
  int q_start_pos() const { return q_start_; }
  Scalar chi(int basis_index) const;
  Scalar weight() const;  // chi on d(1)
  const Mat<Scalar>& index_matrix() const;

  ModuleVector generator() const;
  ModuleVector zero() const;
  ModuleVector act(const UeaElement& u, const ModuleVector& v) const;
  ModuleVector act(int basis_index, const ModuleVector& v) const;

 private:
  InducedModule() = default;
  ContextRef ctx_;
  std::vector<int> q_, complement_;
  std::map<int, Scalar> chi_;
  int q_start_ = 0;
  ModuleKind kind_ = ModuleKind::Generic;
  std::optional<Mat<Scalar>> index_;
};

struct WeightCheck {
  bool semispherical = false;
  std::optional<Scalar> weight;
};

/// True iff every Levi basis element acts by weight * (gl trace).
WeightCheck weight_check(const ModuleVector& v);

bool is_holomorphic_siegel(const ModuleVector& v);
bool is_holomorphic_jacobi(const ModuleVector& v);
bool is_holomorphic(const ModuleVector& v);

/// One row of a recovery scan at power m of the raising determinant.
struct ScanRow {
  int m = 0;
  bool nonzero = false;
  bool weight_ok = false;   // semispherical of weight (module weight + 2m)
  Scalar weight;            // observed weight when semispherical
  bool holomorphic = false; // all annihilator images vanish identically
  Scalar obstruction;       // gcd of annihilator-image coefficients (0 iff holomorphic)
  bool index_ok = false;    // jacobi: center still acts by 2*2pi_i*index
};

std::vector<ScanRow> recovery_scan(const ModuleRef& mod, int m_max);

struct DeltaEigenRow {
  int r = 0;
  bool ok = false;
  Scalar expected;
  std::string lhs, rhs;  // rendered sides, for failure reports
};

struct DeltaEigenReport {
  bool delta_ok = false;
  Scalar delta_expected;
  std::vector<DeltaEigenRow> delta1_rows;
  bool all_ok() const;
};

/// delta acts on the generator by k n (k - n - 1); delta1 acts on the m-th
/// raising power by (k + 2r) n (k + 2r - n - 1).
DeltaEigenReport delta_eigencheck(int n, const Scalar& weight, int r_max);

struct CofactorReport {
  bool uniform = false;
  Scalar C;
  int span_dim = 0;
  bool w_zero = false;
};

/// With u = raising^r e and w = raising^{r+1} e at the critical weight
/// -r + (n-1)/2, finds the single scalar C with
/// Y_(i,j) w = C * cofactor(i,j) u for all i, j, and the dimension of the
/// span of the cofactor images.
CofactorReport cofactor_relation_check(int n, int r);

/// Rational roots of a polynomial in the weight parameter.
struct RootAnalysis {
  std::vector<BigRat> roots;  // sorted ascending
  bool complete = false;      // false if the search could not be exhaustive
};
RootAnalysis rational_roots_in_weight(const Scalar& poly);

int rank_of_vectors(const std::vector<ModuleVector>& vs);

}  // namespace pbwlab
