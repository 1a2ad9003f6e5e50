#include "pbwlab/module.hpp"

#include <algorithm>

namespace pbwlab {

ModuleVector ModuleVector::operator+(const ModuleVector& o) const {
  if (mod.get() != o.mod.get()) throw Error("module mismatch");
  ModuleVector out = *this;
  for (auto& [m, c] : o.terms) {
    auto it = out.terms.find(m);
    if (it == out.terms.end()) {
      out.terms.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) out.terms.erase(it);
    }
  }
  return out;
}

ModuleVector ModuleVector::operator-(const ModuleVector& o) const {
  return *this + o.scaled(Scalar(-1));
}

ModuleVector ModuleVector::scaled(const Scalar& c) const {
  ModuleVector out{mod, {}};
  if (c.is_zero()) return out;
  for (auto& [m, k] : terms) out.terms.emplace(m, k * c);
  return out;
}

bool ModuleVector::operator==(const ModuleVector& o) const {
  return mod.get() == o.mod.get() && terms == o.terms;
}

std::string ModuleVector::str() const {
  if (terms.empty()) return "0";
  UeaElement as_elem(mod->context());
  for (auto& [m, c] : terms) as_elem.add_term(m, c);
  std::string body = as_elem.str();
  if (body == "1") return "e";
  if (terms.size() > 1) return "(" + body + ")*e";
  return body + "*e";
}

ModuleRef InducedModule::build(ContextRef ctx, std::vector<int> q_basis,
                               std::map<int, Scalar> chi, ModuleKind kind,
                               std::optional<Mat<Scalar>> index) {
  const auto& alg = ctx->algebra();
  int dim = alg->dim();
  std::vector<bool> in_q(dim, false);
  for (int b : q_basis) in_q[b] = true;

  // the annihilating subalgebra must occupy the trailing positions
  int q_start = dim - static_cast<int>(q_basis.size());
  for (int p = 0; p < dim; ++p) {
    bool should = p >= q_start;
    if (in_q[ctx->basis_at(p)] != should)
      throw Error("context order must place the subalgebra in the final positions");
  }
  // closure and the character condition chi([q1,q2]) = 0
  for (int a : q_basis)
    for (int b : q_basis) {
      Scalar chi_of_bracket(0);
      for (auto& [k, c] : alg->bracket_basis(a, b)) {
        if (!in_q[k])
          throw Error("subalgebra is not closed under the bracket: [" +
                      alg->label(a) + "," + alg->label(b) + "] leaves it");
        auto it = chi.find(k);
        if (it != chi.end()) chi_of_bracket += c * it->second;
      }
      if (!chi_of_bracket.is_zero())
        throw Error("chi is not a character: nonzero on [" + alg->label(a) +
                    "," + alg->label(b) + "]");
    }

  auto mod = std::shared_ptr<InducedModule>(new InducedModule());
  mod->ctx_ = std::move(ctx);
  mod->q_ = std::move(q_basis);
  mod->chi_ = std::move(chi);
  mod->q_start_ = q_start;
  mod->kind_ = kind;
  mod->index_ = std::move(index);
  for (int p = 0; p < q_start; ++p)
    mod->complement_.push_back(mod->ctx_->basis_at(p));
  return mod;
}

ModuleRef InducedModule::siegel(int n, const Scalar& weight) {
  return siegel(LieAlgebra::symplectic(n), weight);
}

ModuleRef InducedModule::siegel(AlgebraRef alg, const Scalar& weight) {
  auto ctx = PbwContext::natural(alg);
  std::vector<int> q = alg->subspace("levi");
  const auto& lower = alg->subspace("L");
  q.insert(q.end(), lower.begin(), lower.end());
  std::map<int, Scalar> chi;
  for (int b : alg->subspace("levi")) chi[b] = weight * alg->levi_trace(b);
  return build(std::move(ctx), std::move(q), std::move(chi), ModuleKind::Siegel);
}

ModuleRef InducedModule::jacobi(int n, int j, const Scalar& weight,
                                const Mat<Scalar>& index) {
  return jacobi(LieAlgebra::jacobi(n, j), weight, index);
}

ModuleRef InducedModule::jacobi(AlgebraRef alg, const Scalar& weight,
                                const Mat<Scalar>& index) {
  int j = alg->heis_j();
  if (index.rows() != j || index.cols() != j)
    throw Error("index matrix must be j x j");
  if (!(index == index.transposed()))
    throw Error("index matrix must be symmetric");
  if (mat_det(index).is_zero())
    throw Error("index matrix must be invertible: det is 0");
  auto ctx = PbwContext::natural(alg);
  std::vector<int> q = alg->subspace("levi");
  for (const char* name : {"L", "l_heis", "z"}) {
    const auto& part = alg->subspace(name);
    q.insert(q.end(), part.begin(), part.end());
  }
  std::map<int, Scalar> chi;
  for (int b : alg->subspace("levi")) chi[b] = weight * alg->levi_trace(b);
  Scalar two_pi(Scalar::pi_hat() * Scalar(2));
  for (int p = 1; p <= j; ++p)
    for (int q2 = p; q2 <= j; ++q2)
      chi[alg->z_index(p, q2)] = two_pi * index.at(p - 1, q2 - 1);
  return build(std::move(ctx), std::move(q), std::move(chi), ModuleKind::Jacobi,
               index);
}

Scalar InducedModule::chi(int basis_index) const {
  auto it = chi_.find(basis_index);
  return it == chi_.end() ? Scalar(0) : it->second;
}

Scalar InducedModule::weight() const {
  return chi(ctx_->algebra()->subspace("cartan")[0]);
}

const Mat<Scalar>& InducedModule::index_matrix() const {
  if (!index_) throw Error("module carries no index matrix");
  return *index_;
}

ModuleVector InducedModule::generator() const {
  ModuleVector v{shared_from_this(), {}};
  v.terms.emplace(PbwMono{}, Scalar(1));
  return v;
}

ModuleVector InducedModule::zero() const { return {shared_from_this(), {}}; }

ModuleVector InducedModule::act(const UeaElement& u, const ModuleVector& v) const {
  if (u.context().get() != ctx_.get()) throw Error("context mismatch");
  if (v.mod.get() != this) throw Error("module mismatch");
  UeaElement vin(ctx_);
  for (auto& [m, c] : v.terms) vin.add_term(m, c);
  UeaElement prod = u * vin;
  ModuleVector out{shared_from_this(), {}};
  for (auto& [m, c] : prod.terms()) {
    PbwMono head;
    Scalar coef = c;
    for (auto& [p, e] : m) {
      if (p < q_start_) {
        head.emplace_back(p, e);
      } else {
        coef *= chi(ctx_->basis_at(p)).pow(e);
        if (coef.is_zero()) break;
      }
    }
    if (coef.is_zero()) continue;
    auto it = out.terms.find(head);
    if (it == out.terms.end()) {
      out.terms.emplace(std::move(head), coef);
    } else {
      it->second += coef;
      if (it->second.is_zero()) out.terms.erase(it);
    }
  }
  return out;
}

ModuleVector InducedModule::act(int basis_index, const ModuleVector& v) const {
  return act(UeaElement::generator(ctx_, basis_index), v);
}

WeightCheck weight_check(const ModuleVector& v) {
  const auto& mod = v.mod;
  const auto& alg = mod->context()->algebra();
  if (v.is_zero()) return {true, std::nullopt};
  std::optional<Scalar> weight;
  for (int levi : alg->subspace("levi")) {
    ModuleVector image = mod->act(levi, v);
    const Scalar& tr = alg->levi_trace(levi);
    if (tr.is_zero()) {
      if (!image.is_zero()) return {false, std::nullopt};
      continue;
    }
    // image must be (weight * tr) v
    if (image.is_zero()) {
      if (weight && !weight->is_zero()) return {false, std::nullopt};
      weight = Scalar(0);
      continue;
    }
    auto lead = v.terms.begin();
    auto it = image.terms.find(lead->first);
    if (it == image.terms.end()) return {false, std::nullopt};
    Scalar k = it->second / (tr * lead->second);
    if (!(image == v.scaled(k * tr))) return {false, std::nullopt};
    if (weight && *weight != k) return {false, std::nullopt};
    weight = k;
  }
  return {true, weight};
}

namespace {

std::vector<int> annihilator_basis(const ModuleRef& mod) {
  const auto& alg = mod->context()->algebra();
  std::vector<int> out = alg->subspace("L");
  if (mod->kind() == ModuleKind::Jacobi) {
    const auto& lh = alg->subspace("l_heis");
    out.insert(out.end(), lh.begin(), lh.end());
  }
  return out;
}

}  // namespace

bool is_holomorphic_siegel(const ModuleVector& v) {
  const auto& alg = v.mod->context()->algebra();
  for (int y : alg->subspace("L"))
    if (!v.mod->act(y, v).is_zero()) return false;
  return true;
}

bool is_holomorphic_jacobi(const ModuleVector& v) {
  if (!is_holomorphic_siegel(v)) return false;
  const auto& alg = v.mod->context()->algebra();
  for (int w : alg->subspace("l_heis"))
    if (!v.mod->act(w, v).is_zero()) return false;
  return true;
}

bool is_holomorphic(const ModuleVector& v) {
  return v.mod->kind() == ModuleKind::Jacobi ? is_holomorphic_jacobi(v)
                                             : is_holomorphic_siegel(v);
}

std::vector<ScanRow> recovery_scan(const ModuleRef& mod, int m_max) {
  UeaElement raising = raising_operator(mod->context()).det;
  std::vector<ScanRow> rows;
  ModuleVector v = mod->generator();
  for (int m = 0; m <= m_max; ++m) {
    ScanRow row;
    row.m = m;
    row.nonzero = !v.is_zero();

    WeightCheck wc = weight_check(v);
    Scalar expected_weight = mod->weight() + Scalar(2 * m);
    row.weight_ok = wc.semispherical && (!wc.weight || *wc.weight == expected_weight);
    if (wc.weight) row.weight = *wc.weight;

    Poly obstruction;
    bool all_zero = true;
    for (int y : annihilator_basis(mod)) {
      ModuleVector image = mod->act(y, v);
      if (!image.is_zero()) all_zero = false;
      for (auto& [mono, c] : image.terms)
        obstruction = poly_gcd(obstruction, c.num());
    }
    row.holomorphic = all_zero;
    row.obstruction = all_zero ? Scalar(0) : Scalar::from_poly(obstruction);
    if (mod->kind() == ModuleKind::Jacobi) {
      row.index_ok = true;
      const auto& alg = mod->context()->algebra();
      for (int z : alg->subspace("z"))
        if (!(mod->act(z, v) == v.scaled(mod->chi(z)))) {
          row.index_ok = false;
          break;
        }
    } else {
      row.index_ok = true;
    }
    rows.push_back(row);
    if (m < m_max) v = mod->act(raising, v);
  }
  return rows;
}

bool DeltaEigenReport::all_ok() const {
  if (!delta_ok) return false;
  for (auto& r : delta1_rows)
    if (!r.ok) return false;
  return true;
}

DeltaEigenReport delta_eigencheck(int n, const Scalar& weight, int r_max) {
  auto mod = InducedModule::siegel(n, weight);
  auto ctx = mod->context();
  LaplacePair lp = laplace_pair(ctx);
  UeaElement raising = raising_operator(ctx).det;

  DeltaEigenReport report;
  Scalar k = weight;
  report.delta_expected = k * Scalar(n) * (k - Scalar(n + 1));
  ModuleVector e = mod->generator();
  report.delta_ok = mod->act(lp.delta, e) == e.scaled(report.delta_expected);

  ModuleVector v = e;
  for (int r = 0; r <= r_max; ++r) {
    DeltaEigenRow row;
    row.r = r;
    Scalar kr = k + Scalar(2 * r);
    row.expected = kr * Scalar(n) * (kr - Scalar(n + 1));
    ModuleVector lhs = mod->act(lp.delta1, v);
    ModuleVector rhs = v.scaled(row.expected);
    row.ok = lhs == rhs;
    if (!row.ok) {
      row.lhs = lhs.str();
      row.rhs = rhs.str();
    }
    report.delta1_rows.push_back(row);
    if (r < r_max) v = mod->act(raising, v);
  }
  return report;
}

int rank_of_vectors(const std::vector<ModuleVector>& vs) {
  std::vector<PbwMono> monos;
  for (auto& v : vs)
    for (auto& [m, c] : v.terms) monos.push_back(m);
  std::sort(monos.begin(), monos.end());
  monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
  std::map<PbwMono, int> col;
  for (size_t i = 0; i < monos.size(); ++i) col[monos[i]] = static_cast<int>(i);

  std::vector<std::vector<Scalar>> rows;
  for (auto& v : vs) {
    if (v.is_zero()) continue;
    std::vector<Scalar> row(monos.size(), Scalar(0));
    for (auto& [m, c] : v.terms) row[col[m]] = c;
    rows.push_back(std::move(row));
  }
  int rank = 0;
  size_t ncols = monos.size();
  std::vector<bool> used(rows.size(), false);
  for (size_t c = 0; c < ncols && rank < static_cast<int>(rows.size()); ++c) {
    int pivot = -1;
    for (size_t r = 0; r < rows.size(); ++r)
      if (!used[r] && !rows[r][c].is_zero()) {
        pivot = static_cast<int>(r);
        break;
      }
    if (pivot < 0) continue;
    used[pivot] = true;
    ++rank;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(r) == pivot || rows[r][c].is_zero()) continue;
      Scalar f = rows[r][c] / rows[pivot][c];
      for (size_t cc = c; cc < ncols; ++cc)
        rows[r][cc] -= f * rows[pivot][cc];
    }
  }
  return rank;
}

CofactorReport cofactor_relation_check(int n, int r) {
  Scalar weight = Scalar::rational(-2 * r + n - 1, 2);
  auto mod = InducedModule::siegel(n, weight);
  auto ctx = mod->context();
  RaisingOperator raising = raising_operator(ctx);

  ModuleVector u = mod->generator();
  for (int i = 0; i < r; ++i) u = mod->act(raising.det, u);
  ModuleVector w = mod->act(raising.det, u);

  const RootDatum& rd = ctx->algebra()->roots();
  CofactorReport report;
  report.w_zero = w.is_zero();

  std::vector<ModuleVector> lhs, rhs;
  std::vector<ModuleVector> span_vectors;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      int y = rd.positive[rd.upper_root(i, j)].y_index;
      lhs.push_back(mod->act(y, w));
      rhs.push_back(mod->act(raising.matrix.cofactor(i - 1, j - 1), u));
      if (i <= j) span_vectors.push_back(rhs.back());
    }

  std::optional<Scalar> C;
  for (size_t t = 0; t < rhs.size() && !C; ++t) {
    if (rhs[t].is_zero()) continue;
    if (lhs[t].is_zero()) {
      C = Scalar(0);
      break;
    }
    auto lead = rhs[t].terms.begin();
    auto it = lhs[t].terms.find(lead->first);
    if (it == lhs[t].terms.end()) {
      report.uniform = false;
      return report;
    }
    C = it->second / lead->second;
  }
  if (!C) C = Scalar(0);  // all cofactor images vanish
  report.C = *C;
  report.uniform = true;
  for (size_t t = 0; t < rhs.size(); ++t)
    if (!(lhs[t] == rhs[t].scaled(*C))) {
      report.uniform = false;
      break;
    }
  report.span_dim = rank_of_vectors(span_vectors);
  return report;
}

namespace {

// divisors of |v| by trial division; sets complete=false when |v| cannot be
// fully factored below the bound
std::vector<BigInt> divisors_of(BigInt v, bool* complete) {
  if (v < 0) v = -v;
  std::vector<std::pair<BigInt, int>> factors;
  BigInt p = 2;
  const long bound = 1000000;
  while (v > 1 && p <= bound) {
    if (v % p == 0) {
      int e = 0;
      while (v % p == 0) {
        v /= p;
        ++e;
      }
      factors.emplace_back(p, e);
    }
    p += (p == 2) ? 1 : 2;
  }
  if (v > 1) {
    // remaining cofactor: prime unless it has two factors above the bound
    if (mpz_probab_prime_p(v.get_mpz_t(), 40) > 0) {
      factors.emplace_back(v, 1);
    } else {
      *complete = false;
      factors.emplace_back(v, 1);
    }
  }
  std::vector<BigInt> divs{BigInt(1)};
  for (auto& [q, e] : factors) {
    size_t sz = divs.size();
    BigInt pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= q;
      for (size_t t = 0; t < sz; ++t) divs.push_back(divs[t] * pk);
    }
  }
  return divs;
}

}  // namespace

RootAnalysis rational_roots_in_weight(const Scalar& poly) {
  if (!poly.is_polynomial())
    throw Error("root analysis expects a polynomial");
  int kvar = Params::weight_k();
  // dense coefficients in the weight parameter
  std::vector<BigInt> coeffs(poly.num().degree_in(kvar) + 1, BigInt(0));
  for (auto& [m, c] : poly.num().terms()) {
    int e = 0;
    for (auto& [id, k] : m) {
      if (id != kvar) throw Error("obstruction involves a parameter besides the weight");
      e = k;
    }
    coeffs[e] = c;
  }
  RootAnalysis out;
  out.complete = true;
  if (poly.is_zero()) return out;

  auto eval = [&](const BigRat& x) {
    BigRat acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
      acc = acc * x + BigRat(*it);
    return acc;
  };
  auto deflate = [&](const BigRat& root) {
    // synthetic division by (x - root) over the rationals
    std::vector<BigRat> q(coeffs.size() - 1);
    BigRat carry(0);
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 1; --i) {
      carry = BigRat(coeffs[i]) + carry;
      q[i - 1] = carry;
      carry = carry * root;
    }
    // clear denominators back to integers
    BigInt lcm(1);
    for (auto& c : q) {
      BigInt d = c.get_den();
      BigInt g;
      mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
      lcm = lcm / g * d;
    }
    std::vector<BigInt> next(q.size());
    for (size_t i = 0; i < q.size(); ++i) {
      BigRat scaled = q[i] * BigRat(lcm);
      next[i] = scaled.get_num();
    }
    coeffs = std::move(next);
  };

  bool progress = true;
  while (progress && coeffs.size() > 1) {
    progress = false;
    while (coeffs.size() > 1 && coeffs[0] == 0) {
      out.roots.emplace_back(0);
      coeffs.erase(coeffs.begin());
      progress = true;
    }
    if (coeffs.size() <= 1) break;
    bool complete = true;
    auto ps = divisors_of(coeffs.front(), &complete);
    auto qs = divisors_of(coeffs.back(), &complete);
    if (!complete) out.complete = false;
    bool found = false;
    for (auto& pv : ps) {
      for (auto& qv : qs) {
        for (int sign : {1, -1}) {
          BigRat cand(sign * pv, qv);
          cand.canonicalize();
          if (eval(cand) == 0) {
            out.roots.push_back(cand);
            deflate(cand);
            found = progress = true;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const BigRat& a, const BigRat& b) { return a < b; });
  out.roots.erase(std::unique(out.roots.begin(), out.roots.end()),
                  out.roots.end());
  return out;
}

}  // namespace pbwlab
