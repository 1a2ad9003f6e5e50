#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "pbwlab/scalar.hpp"

namespace pbwlab {

/// Dense matrix over an exact commutative ring (Scalar, polynomials, ...).
template <class R>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = R(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  R& at(int i, int j) { return a_[i * cols_ + j]; }
  const R& at(int i, int j) const { return a_[i * cols_ + j]; }

  Mat operator+(const Mat& o) const {
    Mat out(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + o.a_[i];
    return out;
  }
  Mat operator-(const Mat& o) const {
    Mat out(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - o.a_[i];
    return out;
  }
  Mat operator*(const Mat& o) const {
    Mat out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const R& x = at(i, k);
        for (int j = 0; j < o.cols_; ++j) out.at(i, j) += x * o.at(k, j);
      }
    return out;
  }
  Mat scaled(const R& c) const {
    Mat out(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] * c;
    return out;
  }
  Mat transposed() const {
    Mat out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
  }
  R trace() const {
    R t{};
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
  }
  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const R& x) { return x == R{}; });
  }

 private:
  int rows_, cols_;
  std::vector<R> a_;
};

/// Visits every permutation of {0..n-1} together with its sign.
template <class F>
void for_each_permutation(int n, F&& visit) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inv;
    visit(perm, inv % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

/// Leibniz determinant; fine for the small sizes used here.
template <class R>
R mat_det(const Mat<R>& m) {
  if (m.rows() != m.cols()) throw Error("determinant of non-square matrix");
  R det{};
  for_each_permutation(m.rows(), [&](const std::vector<int>& perm, int sign) {
    R term = R(1);
    for (int i = 0; i < m.rows(); ++i) term = term * m.at(i, perm[i]);
    det = sign > 0 ? det + term : det - term;
  });
  return det;
}

/// Classical adjoint: adj(m)*m = det(m)*I. The adjoint of a 1x1 matrix is [1].
template <class R>
Mat<R> mat_adjugate(const Mat<R>& m) {
  int n = m.rows();
  if (n != m.cols()) throw Error("adjugate of non-square matrix");
  Mat<R> adj(n, n);
  if (n == 1) {
    adj.at(0, 0) = R(1);
    return adj;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat<R> minor(n - 1, n - 1);
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (int c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor.at(rr, cc) = m.at(r, c);
          ++cc;
        }
        ++rr;
      }
      R cof = mat_det(minor);
      adj.at(j, i) = ((i + j) % 2 == 0) ? cof : R{} - cof;
    }
  return adj;
}

/// Gauss-Jordan inverse over a field.
inline Mat<Scalar> mat_inverse(const Mat<Scalar>& m) {
  int n = m.rows();
  if (n != m.cols()) throw Error("inverse of non-square matrix");
  Mat<Scalar> a = m, inv = Mat<Scalar>::identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!a.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw Error("matrix is singular");
    if (pivot != col)
      for (int c = 0; c < n; ++c) {
        std::swap(a.at(pivot, c), a.at(col, c));
        std::swap(inv.at(pivot, c), inv.at(col, c));
      }
    Scalar p = a.at(col, col);
    for (int c = 0; c < n; ++c) {
      a.at(col, c) /= p;
      inv.at(col, c) /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a.at(r, col).is_zero()) continue;
      Scalar f = a.at(r, col);
      for (int c = 0; c < n; ++c) {
        a.at(r, c) -= f * a.at(col, c);
        inv.at(r, c) -= f * inv.at(col, c);
      }
    }
  }
  return inv;
}

}  // namespace pbwlab
