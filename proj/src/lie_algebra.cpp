#include "pbwlab/lie_algebra.hpp"

#include <sstream>

#include "json.hpp"

namespace pbwlab {

int RootDatum::upper_root(int i, int j) const {
  int a = std::min(i, j), b = std::max(i, j);
  for (size_t r = 0; r < positive.size(); ++r)
    if (positive[r].pair_i == a && positive[r].pair_j == b)
      return static_cast<int>(r);
  throw Error("no raising root labelled (" + std::to_string(i) + "," +
              std::to_string(j) + ")");
}

AlgElem AlgElem::basis(AlgebraRef a, int index) {
  AlgElem e{std::move(a), {}};
  e.coeff.emplace(index, Scalar(1));
  return e;
}

AlgElem AlgElem::operator+(const AlgElem& o) const {
  AlgElem out = *this;
  for (auto& [i, c] : o.coeff) {
    auto it = out.coeff.find(i);
    if (it == out.coeff.end()) {
      out.coeff.emplace(i, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) out.coeff.erase(it);
    }
  }
  return out;
}

AlgElem AlgElem::operator-(const AlgElem& o) const {
  return *this + o.scaled(Scalar(-1));
}

AlgElem AlgElem::scaled(const Scalar& c) const {
  AlgElem out{alg, {}};
  if (c.is_zero()) return out;
  for (auto& [i, k] : coeff) out.coeff.emplace(i, k * c);
  return out;
}

Mat<Scalar> AlgElem::realize() const {
  Mat<Scalar> m(alg->matrix_size(), alg->matrix_size());
  for (auto& [i, c] : coeff) m = m + alg->realization(i).scaled(c);
  return m;
}

namespace {

// Expresses matrices in the span of the basis realization via a
// row-reduced copy of the vectorized basis.
struct CoordSolver {
  int dim = 0, flat = 0;
  std::vector<std::vector<Scalar>> rows;    // reduced vectorized combos
  std::vector<std::vector<Scalar>> combos;  // rows[r] = sum combos[r][b]*vec(basis b)
  std::vector<int> pivots;

  static std::vector<Scalar> vectorize(const Mat<Scalar>& m) {
    std::vector<Scalar> v;
    v.reserve(m.rows() * m.cols());
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
    return v;
  }

  void build(const std::vector<Mat<Scalar>>& basis) {
    dim = static_cast<int>(basis.size());
    flat = basis[0].rows() * basis[0].cols();
    for (int b = 0; b < dim; ++b) {
      std::vector<Scalar> row = vectorize(basis[b]);
      std::vector<Scalar> combo(dim, Scalar(0));
      combo[b] = Scalar(1);
      // reduce against existing rows
      for (size_t r = 0; r < rows.size(); ++r) {
        const Scalar& f = row[pivots[r]];
        if (f.is_zero()) continue;
        Scalar factor = f;
        for (int c = 0; c < flat; ++c) row[c] -= factor * rows[r][c];
        for (int c = 0; c < dim; ++c) combo[c] -= factor * combos[r][c];
      }
      int p = -1;
      for (int c = 0; c < flat; ++c)
        if (!row[c].is_zero()) {
          p = c;
          break;
        }
      if (p < 0) throw Error("basis matrices are linearly dependent");
      Scalar inv = Scalar(1) / row[p];
      for (int c = 0; c < flat; ++c) row[c] *= inv;
      for (int c = 0; c < dim; ++c) combo[c] *= inv;
      // back-substitute into earlier rows
      for (size_t r = 0; r < rows.size(); ++r) {
        Scalar f = rows[r][p];
        if (f.is_zero()) continue;
        for (int c = 0; c < flat; ++c) rows[r][c] -= f * row[c];
        for (int c = 0; c < dim; ++c) combos[r][c] -= f * combo[c];
      }
      rows.push_back(std::move(row));
      combos.push_back(std::move(combo));
      pivots.push_back(p);
    }
  }

  std::vector<std::pair<int, Scalar>> solve(const Mat<Scalar>& target) const {
    std::vector<Scalar> residual = vectorize(target);
    std::vector<Scalar> coords(dim, Scalar(0));
    for (size_t r = 0; r < rows.size(); ++r) {
      Scalar f = residual[pivots[r]];
      if (f.is_zero()) continue;
      for (int c = 0; c < flat; ++c) residual[c] -= f * rows[r][c];
      for (int c = 0; c < dim; ++c) coords[c] += f * combos[r][c];
    }
    for (int c = 0; c < flat; ++c)
      if (!residual[c].is_zero())
        throw Error("bracket escapes the algebra: closure failure");
    std::vector<std::pair<int, Scalar>> out;
    for (int b = 0; b < dim; ++b)
      if (!coords[b].is_zero()) out.emplace_back(b, coords[b]);
    return out;
  }
};

Mat<Scalar> unit(int size, int r, int c) {
  Mat<Scalar> m(size, size);
  m.at(r, c) = Scalar(1);
  return m;
}

}  // namespace

void LieAlgebra::finalize() {
  CoordSolver solver;
  solver.build(real_);
  int d = dim();
  table_.assign(d, std::vector<std::vector<std::pair<int, Scalar>>>(d));
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b) {
      Mat<Scalar> comm = real_[a] * real_[b] - real_[b] * real_[a];
      table_[a][b] = solver.solve(comm);
      for (auto& [k, c] : table_[a][b]) table_[b][a].emplace_back(k, -c);
    }
  levi_trace_.clear();
  for (int b = 0; b < d; ++b) {
    Scalar t(0);
    for (int i = 0; i < n_; ++i) t += real_[b].at(i, i);
    levi_trace_.push_back(t);
  }
}

const std::vector<std::pair<int, Scalar>>& LieAlgebra::bracket_basis(int a, int b) const {
  return table_[a][b];
}

AlgElem LieAlgebra::bracket(const AlgElem& x, const AlgElem& y) const {
  if (x.alg.get() != this || y.alg.get() != this)
    throw Error("bracket of elements from different algebras");
  AlgElem out{x.alg, {}};
  for (auto& [a, ca] : x.coeff)
    for (auto& [b, cb] : y.coeff)
      for (auto& [k, c] : bracket_basis(a, b)) {
        auto it = out.coeff.find(k);
        Scalar add = ca * cb * c;
        if (it == out.coeff.end()) {
          out.coeff.emplace(k, add);
        } else {
          it->second += add;
          if (it->second.is_zero()) out.coeff.erase(it);
        }
      }
  return out;
}

int LieAlgebra::index_of(const std::string& label) const {
  for (int i = 0; i < dim(); ++i)
    if (labels_[i] == label) return i;
  throw Error("unknown basis label " + label);
}

bool LieAlgebra::has_subspace(const std::string& name) const {
  return subspaces_.count(name) > 0;
}

const std::vector<int>& LieAlgebra::subspace(const std::string& name) const {
  auto it = subspaces_.find(name);
  if (it == subspaces_.end()) throw Error("unknown subspace " + name);
  return it->second;
}

int LieAlgebra::u_index(int i, int l) const {
  auto it = u_grid_.find({i, l});
  if (it == u_grid_.end()) throw Error("no U generator at that position");
  return it->second;
}

int LieAlgebra::v_index(int i, int l) const {
  auto it = v_grid_.find({i, l});
  if (it == v_grid_.end()) throw Error("no V generator at that position");
  return it->second;
}

int LieAlgebra::z_index(int i, int l) const {
  auto it = z_grid_.find({std::min(i, l), std::max(i, l)});
  if (it == z_grid_.end()) throw Error("no Z generator at that position");
  return it->second;
}

int LieAlgebra::sp_embed(int sp_index) const {
  if (kind_ == AlgebraKind::Symplectic) return sp_index;
  return sp_embed_.at(sp_index);
}

AlgebraRef LieAlgebra::symplectic(int N) {
  if (N < 1) throw Error("symplectic rank must be positive");
  auto alg = std::shared_ptr<LieAlgebra>(new LieAlgebra());
  alg->kind_ = AlgebraKind::Symplectic;
  alg->n_ = N;
  alg->j_ = 0;
  alg->msize_ = 2 * N;
  alg->name_ = "sp(" + std::to_string(2 * N) + ")";
  int S = 2 * N;
  auto& labels = alg->labels_;
  auto& real = alg->real_;
  std::vector<int> u_plus, levi, cartan, lower;

  auto add = [&](const std::string& label, const Mat<Scalar>& m) {
    labels.push_back(label);
    real.push_back(m);
    return static_cast<int>(labels.size()) - 1;
  };

  std::map<std::pair<int, int>, int> xidx, yidx, aidx;
  for (int i = 1; i <= N; ++i)
    for (int j = i; j <= N; ++j) {
      Mat<Scalar> m = (i == j) ? unit(S, i - 1, N + i - 1)
                               : unit(S, i - 1, N + j - 1) + unit(S, j - 1, N + i - 1);
      int id = add("X(" + std::to_string(i) + "," + std::to_string(j) + ")", m);
      xidx[{i, j}] = id;
      u_plus.push_back(id);
    }
  for (int i = 1; i <= N; ++i) {
    int id = add("d(" + std::to_string(i) + ")",
                 unit(S, i - 1, i - 1) - unit(S, N + i - 1, N + i - 1));
    cartan.push_back(id);
    levi.push_back(id);
  }
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      if (i == j) continue;
      int id = add("A(" + std::to_string(i) + "," + std::to_string(j) + ")",
                   unit(S, i - 1, j - 1) - unit(S, N + j - 1, N + i - 1));
      aidx[{i, j}] = id;
      levi.push_back(id);
    }
  for (int i = 1; i <= N; ++i)
    for (int j = i; j <= N; ++j) {
      int id = add("Y(" + std::to_string(i) + "," + std::to_string(j) + ")",
                   real[xidx[{i, j}]].transposed());
      yidx[{i, j}] = id;
      lower.push_back(id);
    }

  alg->subspaces_["u_plus"] = u_plus;
  alg->subspaces_["levi"] = levi;
  alg->subspaces_["cartan"] = cartan;
  alg->subspaces_["L"] = lower;

  RootDatum& rd = alg->roots_;
  rd.cartan = cartan;
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j) {
      RootInfo r;
      r.coords.assign(N, 0);
      r.coords[i - 1] = 1;
      r.coords[j - 1] = -1;
      r.x_index = aidx[{i, j}];
      r.y_index = aidx[{j, i}];
      r.is_long = false;
      r.c_alpha = 1;
      rd.positive.push_back(r);
    }
  for (int i = 1; i <= N; ++i)
    for (int j = i; j <= N; ++j) {
      RootInfo r;
      r.coords.assign(N, 0);
      r.coords[i - 1] += 1;
      r.coords[j - 1] += 1;
      r.x_index = xidx[{i, j}];
      r.y_index = yidx[{i, j}];
      r.is_long = (i == j);
      r.c_alpha = (i == j) ? 2 : 1;
      r.pair_i = i;
      r.pair_j = j;
      rd.positive.push_back(r);
    }
  for (int p = 1; p <= N; ++p) {
    rd.rho.push_back(Scalar(p - N - 1));
    rd.rho_s.push_back(Scalar::rational(-(N + 1), 2));
    rd.omega_alpha.push_back(Scalar(-1));
  }
  rd.h_alpha.assign(N, Scalar(0));
  rd.h_alpha[N - 1] = Scalar(-1);

  alg->finalize();
  return alg;
}

AlgebraRef LieAlgebra::jacobi(int n, int j) {
  if (n < 1 || j < 1) throw Error("jacobi parameters must be positive");
  auto sp = symplectic(n);
  auto alg = std::shared_ptr<LieAlgebra>(new LieAlgebra());
  alg->kind_ = AlgebraKind::Jacobi;
  alg->n_ = n;
  alg->j_ = j;
  alg->msize_ = 2 * (n + j);
  alg->name_ = "g(" + std::to_string(n) + "," + std::to_string(j) + ")";
  int S = alg->msize_;
  // block row offsets in the (n, j, n, j) layout, 0-based
  auto r0 = [&](int i) { return i - 1; };
  auto r1 = [&](int p) { return n + p - 1; };
  auto r2 = [&](int i) { return n + j + i - 1; };
  auto r3 = [&](int p) { return 2 * n + j + p - 1; };

  auto& labels = alg->labels_;
  auto& real = alg->real_;
  auto add = [&](const std::string& label, const Mat<Scalar>& m) {
    labels.push_back(label);
    real.push_back(m);
    return static_cast<int>(labels.size()) - 1;
  };

  std::vector<int> u_plus, levi, cartan, lower, r_heis, l_heis, z, v_heis, sp_part;
  std::map<std::pair<int, int>, int> xidx, yidx, aidx;

  for (int i = 1; i <= n; ++i)
    for (int l = i; l <= n; ++l) {
      Mat<Scalar> m = (i == l)
                          ? unit(S, r0(i), r2(i))
                          : unit(S, r0(i), r2(l)) + unit(S, r0(l), r2(i));
      int id = add("X(" + std::to_string(i) + "," + std::to_string(l) + ")", m);
      xidx[{i, l}] = id;
      u_plus.push_back(id);
    }
  for (int p = 1; p <= j; ++p)
    for (int l = 1; l <= n; ++l) {
      int id = add("U(" + std::to_string(p) + "," + std::to_string(l) + ")",
                   unit(S, r1(p), r2(l)) + unit(S, r0(l), r3(p)));
      alg->u_grid_[{p, l}] = id;
      r_heis.push_back(id);
    }
  for (int i = 1; i <= n; ++i) {
    int id = add("d(" + std::to_string(i) + ")",
                 unit(S, r0(i), r0(i)) - unit(S, r2(i), r2(i)));
    cartan.push_back(id);
    levi.push_back(id);
  }
  for (int i = 1; i <= n; ++i)
    for (int l = 1; l <= n; ++l) {
      if (i == l) continue;
      int id = add("A(" + std::to_string(i) + "," + std::to_string(l) + ")",
                   unit(S, r0(i), r0(l)) - unit(S, r2(l), r2(i)));
      aidx[{i, l}] = id;
      levi.push_back(id);
    }
  for (int i = 1; i <= n; ++i)
    for (int l = i; l <= n; ++l) {
      int id = add("Y(" + std::to_string(i) + "," + std::to_string(l) + ")",
                   real[xidx[{i, l}]].transposed());
      yidx[{i, l}] = id;
      lower.push_back(id);
    }
  for (int p = 1; p <= j; ++p)
    for (int l = 1; l <= n; ++l) {
      int id = add("V(" + std::to_string(p) + "," + std::to_string(l) + ")",
                   unit(S, r1(p), r0(l)) - unit(S, r2(l), r3(p)));
      alg->v_grid_[{p, l}] = id;
      l_heis.push_back(id);
    }
  for (int p = 1; p <= j; ++p)
    for (int q = p; q <= j; ++q) {
      int id = add("Z(" + std::to_string(p) + "," + std::to_string(q) + ")",
                   unit(S, r1(p), r3(q)) + unit(S, r1(q), r3(p)));
      alg->z_grid_[{p, q}] = id;
      z.push_back(id);
    }

  v_heis = l_heis;
  v_heis.insert(v_heis.end(), r_heis.begin(), r_heis.end());

  // sp(2n) basis order is X block, Levi block, Y block.
  for (int i = 1; i <= n; ++i)
    for (int l = i; l <= n; ++l) sp_part.push_back(xidx[{i, l}]);
  for (int i = 1; i <= n; ++i) sp_part.push_back(cartan[i - 1]);
  for (int i = 1; i <= n; ++i)
    for (int l = 1; l <= n; ++l)
      if (i != l) sp_part.push_back(aidx[{i, l}]);
  for (int i = 1; i <= n; ++i)
    for (int l = i; l <= n; ++l) sp_part.push_back(yidx[{i, l}]);

  alg->sp_embed_ = sp_part;
  alg->subspaces_["u_plus"] = u_plus;
  alg->subspaces_["levi"] = levi;
  alg->subspaces_["cartan"] = cartan;
  alg->subspaces_["L"] = lower;
  alg->subspaces_["r_heis"] = r_heis;
  alg->subspaces_["l_heis"] = l_heis;
  alg->subspaces_["z"] = z;
  alg->subspaces_["v_heis"] = v_heis;
  alg->subspaces_["sp_part"] = sp_part;

  RootDatum& rd = alg->roots_;
  const RootDatum& sp_rd = sp->roots();
  rd.cartan = cartan;
  for (const RootInfo& r0i : sp_rd.positive) {
    RootInfo r = r0i;
    r.x_index = sp_part[r0i.x_index];
    r.y_index = sp_part[r0i.y_index];
    rd.positive.push_back(r);
  }
  rd.rho = sp_rd.rho;
  rd.rho_s = sp_rd.rho_s;
  rd.omega_alpha = sp_rd.omega_alpha;
  rd.h_alpha = sp_rd.h_alpha;

  alg->finalize();

  // sanity: embedded sp bracket table must match sp(2n)'s
  for (int a = 0; a < sp->dim(); ++a)
    for (int b = 0; b < sp->dim(); ++b) {
      auto& small = sp->bracket_basis(a, b);
      auto& big = alg->bracket_basis(sp_part[a], sp_part[b]);
      if (small.size() != big.size())
        throw Error("sp embedding mismatch in jacobi construction");
      for (size_t t = 0; t < small.size(); ++t)
        if (sp_part[small[t].first] != big[t].first ||
            small[t].second != big[t].second)
          throw Error("sp embedding mismatch in jacobi construction");
    }
  return alg;
}

bool LieAlgebra::check_antisymmetry() const {
  for (int a = 0; a < dim(); ++a)
    for (int b = 0; b < dim(); ++b) {
      auto& ab = table_[a][b];
      auto& ba = table_[b][a];
      if (ab.size() != ba.size()) return false;
      for (size_t t = 0; t < ab.size(); ++t)
        if (ab[t].first != ba[t].first || !(ab[t].second + ba[t].second).is_zero())
          return false;
    }
  return true;
}

bool LieAlgebra::check_jacobi_identity() const {
  auto bracket_elem = [&](const std::map<int, Scalar>& x, int b) {
    std::map<int, Scalar> out;
    for (auto& [a, ca] : x)
      for (auto& [k, c] : table_[a][b]) {
        auto it = out.find(k);
        Scalar add = ca * c;
        if (it == out.end()) {
          out.emplace(k, add);
        } else {
          it->second += add;
          if (it->second.is_zero()) out.erase(it);
        }
      }
    return out;
  };
  for (int a = 0; a < dim(); ++a)
    for (int b = 0; b < dim(); ++b)
      for (int c = 0; c < dim(); ++c) {
        std::map<int, Scalar> sum;
        auto acc = [&](const std::map<int, Scalar>& t) {
          for (auto& [k, v] : t) {
            auto it = sum.find(k);
            if (it == sum.end()) {
              sum.emplace(k, v);
            } else {
              it->second += v;
              if (it->second.is_zero()) sum.erase(it);
            }
          }
        };
        // cyclic sum [[a,b],c] + [[b,c],a] + [[c,a],b]
        std::map<int, Scalar> bc;
        for (auto& [k, v] : table_[b][c]) bc.emplace(k, v);
        acc(bracket_elem(bc, a));
        std::map<int, Scalar> ab;
        for (auto& [k, v] : table_[a][b]) ab.emplace(k, v);
        acc(bracket_elem(ab, c));
        std::map<int, Scalar> ca;
        for (auto& [k, v] : table_[c][a]) ca.emplace(k, v);
        acc(bracket_elem(ca, b));
        if (!sum.empty()) return false;
      }
  return true;
}

bool LieAlgebra::check_realization_consistency() const {
  for (int a = 0; a < dim(); ++a)
    for (int b = 0; b < dim(); ++b) {
      Mat<Scalar> comm = real_[a] * real_[b] - real_[b] * real_[a];
      Mat<Scalar> from_table(msize_, msize_);
      for (auto& [k, c] : table_[a][b]) from_table = from_table + real_[k].scaled(c);
      if (!(comm == from_table)) return false;
    }
  return true;
}

std::string LieAlgebra::to_json() const {
  nlohmann::ordered_json doc;
  doc["name"] = name_;
  doc["dim"] = dim();
  doc["labels"] = labels_;
  nlohmann::ordered_json brackets = nlohmann::ordered_json::array();
  for (int a = 0; a < dim(); ++a)
    for (int b = a + 1; b < dim(); ++b) {
      if (table_[a][b].empty()) continue;
      nlohmann::ordered_json entry;
      entry["a"] = a;
      entry["b"] = b;
      nlohmann::ordered_json terms = nlohmann::ordered_json::array();
      for (auto& [k, c] : table_[a][b])
        terms.push_back({{"basis", k}, {"coeff", c.str()}});
      entry["terms"] = terms;
      brackets.push_back(entry);
    }
  doc["bracket"] = brackets;
  nlohmann::ordered_json subs;
  for (auto& [nm, idx] : subspaces_) subs[nm] = idx;
  doc["subspaces"] = subs;
  return doc.dump(2);
}

}  // namespace pbwlab
