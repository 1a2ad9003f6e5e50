#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "pbwlab/matrix.hpp"
#include "pbwlab/scalar.hpp"

namespace pbwlab {

class LieAlgebra;
using AlgebraRef = std::shared_ptr<const LieAlgebra>;

enum class AlgebraKind { Symplectic, Jacobi };

struct RootInfo {
  std::vector<int> coords;  // in the d* basis
  int x_index = -1;         // raising vector
  int y_index = -1;         // lowering vector
  bool is_long = false;
  int c_alpha = 1;  // 2 on long roots
  int pair_i = -1, pair_j = -1;  // alpha(i,j) labels for roots of u_plus
};

struct RootDatum {
  std::vector<int> cartan;  // basis indices of d_1..d_n
  std::vector<RootInfo> positive;
  std::vector<Scalar> rho;          // value on each d_i
  std::vector<Scalar> rho_s;        // value on each d_i
  std::vector<Scalar> omega_alpha;  // value on each d_i
  std::vector<Scalar> h_alpha;      // coordinates in the d basis

  // Index into positive[] of the u_plus root labelled alpha(i,j) (1-based
  // labels, symmetric in i and j).
  int upper_root(int i, int j) const;
};

/// Element of a Lie algebra: sparse coefficients over the basis.
struct AlgElem {
  AlgebraRef alg;
  std::map<int, Scalar> coeff;

  static AlgElem basis(AlgebraRef a, int index);
  static AlgElem zero(AlgebraRef a) { return {std::move(a), {}}; }
  AlgElem operator+(const AlgElem& o) const;
  AlgElem operator-(const AlgElem& o) const;
  AlgElem scaled(const Scalar& c) const;
  bool is_zero() const { return coeff.empty(); }
  Mat<Scalar> realize() const;
};

/// Lie algebra given by structure constants computed from a faithful matrix
/// realization, with a registry of named subspaces and (for sp and the
/// symplectic part of the Jacobi algebra) root data.
///
/// Instances are immutable after construction and safe to share across
/// threads.
class LieAlgebra {
 public:
  /// sp(2N) in the raising/Levi/lowering basis order:
  /// X(i,j) for i<=j, then d(i) and the off-diagonal gl generators A(i,j),
  /// then Y(i,j).
  static AlgebraRef symplectic(int N);

  /// The Jacobi Lie algebra g^(n,j) inside sp(2(n+j)), block order
  /// (n, j, n, j). Basis order: sp X's, then U's, then the sp Levi, then sp
  /// Y's, then V's, then the center Z's.
  static AlgebraRef jacobi(int n, int j);

  AlgebraKind kind() const { return kind_; }
  int dim() const { return static_cast<int>(labels_.size()); }
  int rank_n() const { return n_; }
  int heis_j() const { return j_; }
  int matrix_size() const { return msize_; }
  const std::string& name() const { return name_; }

  const std::string& label(int index) const { return labels_[index]; }
  int index_of(const std::string& label) const;
  const Mat<Scalar>& realization(int index) const { return real_[index]; }

  const std::vector<std::pair<int, Scalar>>& bracket_basis(int a, int b) const;
  AlgElem bracket(const AlgElem& x, const AlgElem& y) const;

  bool has_subspace(const std::string& name) const;
  const std::vector<int>& subspace(const std::string& name) const;
  const std::map<std::string, std::vector<int>>& subspaces() const {
    return subspaces_;
  }

  const RootDatum& roots() const { return roots_; }

  /// Trace of the gl block (upper-left n x n) of a basis element.
  const Scalar& levi_trace(int index) const { return levi_trace_[index]; }

  // Jacobi-only index grids (1-based labels).
  int u_index(int i, int l) const;
  int v_index(int i, int l) const;
  int z_index(int i, int l) const;
  /// Basis index in this algebra of the k-th basis element of sp(2n).
  int sp_embed(int sp_index) const;

  /// Exhaustive table-level checks, used by the sanity suite.
  bool check_antisymmetry() const;
  bool check_jacobi_identity() const;
  bool check_realization_consistency() const;

  std::string to_json() const;

 private:
  LieAlgebra() = default;
  void finalize();  // structure constants from the realization

  AlgebraKind kind_ = AlgebraKind::Symplectic;
  int n_ = 0, j_ = 0, msize_ = 0;
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<Mat<Scalar>> real_;
  std::vector<std::vector<std::vector<std::pair<int, Scalar>>>> table_;
  std::map<std::string, std::vector<int>> subspaces_;
  std::vector<Scalar> levi_trace_;
  RootDatum roots_;
  std::map<std::pair<int, int>, int> u_grid_, v_grid_, z_grid_;
  std::vector<int> sp_embed_;
};

}  // namespace pbwlab
