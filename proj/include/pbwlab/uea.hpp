#pragma once

#include <memory>
#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pbwlab/lie_algebra.hpp"

namespace pbwlab {

/// PBW monomial: (position in the context order, exponent > 0) pairs with
/// strictly increasing positions. The empty monomial is the unit.
using PbwMono = std::vector<std::pair<int, int>>;

int pbw_degree(const PbwMono& m);

struct PbwMonoLess {
  bool operator()(const PbwMono& a, const PbwMono& b) const;
};

class PbwContext;
using ContextRef = std::shared_ptr<const PbwContext>;

/// A total order on the basis of a Lie algebra, fixing the PBW basis of its
/// enveloping algebra. Holds the straightening memo; lookups take a shared
/// lock, inserts are idempotent.
class PbwContext {
 public:
  static ContextRef natural(AlgebraRef alg);
  static ContextRef with_order(AlgebraRef alg, std::vector<int> order);

  const AlgebraRef& algebra() const { return alg_; }
  int dim() const { return static_cast<int>(order_.size()); }
  int basis_at(int position) const { return order_[position]; }
  int position_of(int basis_index) const { return pos_[basis_index]; }

  // Straightening degree cap; exceeding it raises Error. The environment
  // variable VB_DEGREE_CAP overrides the default of 64.
  static int degree_cap();
  static void set_degree_cap(int cap);

  using TermMap = std::map<PbwMono, Scalar, PbwMonoLess>;
  std::shared_ptr<const TermMap> memo_lookup(int gen_pos, const PbwMono& m) const;
  void memo_store(int gen_pos, const PbwMono& m,
                  std::shared_ptr<const TermMap> value) const;

 private:
  PbwContext() = default;
  AlgebraRef alg_;
  std::vector<int> order_, pos_;

  struct KeyHash {
    size_t operator()(const std::pair<int, PbwMono>& k) const;
  };
  mutable std::unordered_map<std::pair<int, PbwMono>,
                             std::shared_ptr<const TermMap>, KeyHash>
      memo_;
  mutable std::shared_mutex mu_;
};

/// Element of the universal enveloping algebra in PBW normal form relative
/// to its context. Immutable value semantics; no zero coefficients stored.
class UeaElement {
 public:
  using TermMap = PbwContext::TermMap;

  UeaElement() = default;
  explicit UeaElement(ContextRef ctx) : ctx_(std::move(ctx)) {}

  static UeaElement unit(ContextRef ctx);
  static UeaElement generator(ContextRef ctx, int basis_index);
  static UeaElement lift(ContextRef ctx, const AlgElem& x);

  const ContextRef& context() const { return ctx_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;

  UeaElement operator+(const UeaElement& o) const;
  UeaElement operator-(const UeaElement& o) const;
  UeaElement operator*(const UeaElement& o) const;  // PBW normal-form product
  UeaElement scaled(const Scalar& c) const;
  UeaElement pow(int e) const;
  bool operator==(const UeaElement& o) const;
  bool operator!=(const UeaElement& o) const { return !(*this == o); }

  std::string str() const;

  void add_term(const PbwMono& m, const Scalar& c);

 private:
  ContextRef ctx_;
  TermMap terms_;
};

/// xu - ux for x in the algebra.
UeaElement ad_action(const AlgElem& x, const UeaElement& u);
UeaElement ad_action(ContextRef ctx, int basis_index, const UeaElement& u);

/// (1/m!) sum over all orderings of the product of the factors.
UeaElement symmetrize(ContextRef ctx, const std::vector<int>& basis_multiset);

/// True iff u commutes with every basis element.
bool is_central(const UeaElement& u);

/// Re-expresses u in another order on the same algebra.
UeaElement reorder(const UeaElement& u, ContextRef new_ctx);

/// Rectangular matrix of enveloping-algebra entries sharing one context.
class OperatorMatrix {
 public:
  OperatorMatrix(ContextRef ctx, int rows, int cols);
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  UeaElement& at(int i, int j) { return entries_[i * cols_ + j]; }
  const UeaElement& at(int i, int j) const { return entries_[i * cols_ + j]; }
  const ContextRef& context() const { return ctx_; }

  /// Leibniz determinant with each permutation product taken in ascending
  /// row order. With verify_commuting set, checks that all entry pairs
  /// commute first and raises Error naming an offending pair otherwise.
  UeaElement det(bool verify_commuting = false) const;
  /// Signed determinant of the (i,j)-deleted minor.
  UeaElement cofactor(int i, int j) const;

 private:
  ContextRef ctx_;
  int rows_, cols_;
  std::vector<UeaElement> entries_;
};

struct RaisingOperator {
  OperatorMatrix matrix;
  UeaElement det;
};

/// The determinant raising operator. Over sp(2N) this is the N x N matrix
/// with entries E(i,N+l) + E(l,N+i): 2 X(i,i) on the diagonal, X(i,l) off
/// it. Over the Jacobi algebra it is the (n+j) x (n+j) matrix with the same
/// entry recipe in the ambient sp(2(n+j)): sp X's, U's and Z's in blocks.
RaisingOperator raising_operator(ContextRef ctx);

/// The n x n raising matrix of the embedded sp(2n) inside a Jacobi context.
RaisingOperator raising_operator_sp_part(ContextRef ctx);

/// Degree-2 center elements of U(sp(2n)): the Laplace element normalized by
/// the invariant polynomial A -> Tr(A^2), and its pure Levi-Cartan summand
/// (the part that already acts on highest-weight lines):
///   delta  = sum d_i^2 + sum_short (XY + YX) + 2 sum_long (XY + YX)
///   delta1 = sum d_i^2 - sum c_a [X_a, Y_a]
struct LaplacePair {
  UeaElement delta;
  UeaElement delta1;
};
LaplacePair laplace_pair(ContextRef ctx);

/// Gelfand invariant Tr(F^m), with F the matrix over U whose (p,q) entry is
/// sum_a (x^a)_pq x_a for the trace-form dual basis {x^a}. Central by
/// construction; centrality is checked and failure raises Error.
UeaElement gelfand_invariant(ContextRef ctx, int m);

}  // namespace pbwlab
