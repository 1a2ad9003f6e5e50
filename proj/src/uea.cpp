#include "pbwlab/uea.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <sstream>

namespace pbwlab {

int pbw_degree(const PbwMono& m) {
  int d = 0;
  for (auto& [p, e] : m) d += e;
  return d;
}

bool PbwMonoLess::operator()(const PbwMono& a, const PbwMono& b) const {
  int da = pbw_degree(a), db = pbw_degree(b);
  if (da != db) return da < db;
  return a < b;
}

ContextRef PbwContext::natural(AlgebraRef alg) {
  std::vector<int> order(alg->dim());
  std::iota(order.begin(), order.end(), 0);
  return with_order(std::move(alg), std::move(order));
}

ContextRef PbwContext::with_order(AlgebraRef alg, std::vector<int> order) {
  if (static_cast<int>(order.size()) != alg->dim())
    throw Error("order must be a permutation of the basis");
  std::vector<int> pos(order.size(), -1);
  for (size_t p = 0; p < order.size(); ++p) {
    int b = order[p];
    if (b < 0 || b >= alg->dim() || pos[b] != -1)
      throw Error("order must be a permutation of the basis");
    pos[b] = static_cast<int>(p);
  }
  auto ctx = std::shared_ptr<PbwContext>(new PbwContext());
  ctx->alg_ = std::move(alg);
  ctx->order_ = std::move(order);
  ctx->pos_ = std::move(pos);
  return ctx;
}

namespace {
std::atomic<int> g_degree_cap{0};

int init_degree_cap() {
  if (const char* env = std::getenv("VB_DEGREE_CAP")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 64;
}
}  // namespace

int PbwContext::degree_cap() {
  int v = g_degree_cap.load();
  if (v == 0) {
    g_degree_cap.store(init_degree_cap());
    v = g_degree_cap.load();
  }
  return v;
}

void PbwContext::set_degree_cap(int cap) { g_degree_cap.store(cap); }

size_t PbwContext::KeyHash::operator()(const std::pair<int, PbwMono>& k) const {
  size_t h = 1469598103934665603ull ^ static_cast<size_t>(k.first);
  for (auto& [p, e] : k.second) {
    h = (h ^ static_cast<size_t>(p)) * 1099511628211ull;
    h = (h ^ static_cast<size_t>(e)) * 1099511628211ull;
  }
  return h;
}

std::shared_ptr<const PbwContext::TermMap> PbwContext::memo_lookup(
    int gen_pos, const PbwMono& m) const {
  std::shared_lock lock(mu_);
  auto it = memo_.find({gen_pos, m});
  return it == memo_.end() ? nullptr : it->second;
}

void PbwContext::memo_store(int gen_pos, const PbwMono& m,
                            std::shared_ptr<const TermMap> value) const {
  std::unique_lock lock(mu_);
  memo_.emplace(std::make_pair(gen_pos, m), std::move(value));
}

namespace {

void accumulate(PbwContext::TermMap& into, const PbwMono& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = into.find(m);
  if (it == into.end()) {
    into.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) into.erase(it);
  }
}

// x_(gen_pos) * mono in normal form; memoized.
std::shared_ptr<const PbwContext::TermMap> mul_gen_mono(const PbwContext& ctx,
                                                        int gen_pos,
                                                        const PbwMono& mono) {
  if (auto hit = ctx.memo_lookup(gen_pos, mono)) return hit;
  auto out = std::make_shared<PbwContext::TermMap>();
  if (mono.empty()) {
    out->emplace(PbwMono{{gen_pos, 1}}, Scalar(1));
  } else {
    auto [h, e] = mono.front();
    if (gen_pos < h) {
      PbwMono m = mono;
      m.insert(m.begin(), {gen_pos, 1});
      out->emplace(std::move(m), Scalar(1));
    } else if (gen_pos == h) {
      PbwMono m = mono;
      m.front().second += 1;
      out->emplace(std::move(m), Scalar(1));
    } else {
      PbwMono rest(mono.begin(), mono.end());
      if (e > 1)
        rest.front().second -= 1;
      else
        rest.erase(rest.begin());
      // x_g x_h w = x_h (x_g w) + [x_g, x_h] w
      auto inner = mul_gen_mono(ctx, gen_pos, rest);
      for (auto& [m, c] : *inner)
        for (auto& [m2, c2] : *mul_gen_mono(ctx, h, m))
          accumulate(*out, m2, c * c2);
      const auto& br = ctx.algebra()->bracket_basis(ctx.basis_at(gen_pos),
                                                    ctx.basis_at(h));
      for (auto& [k, cb] : br) {
        int kp = ctx.position_of(k);
        for (auto& [m2, c2] : *mul_gen_mono(ctx, kp, rest))
          accumulate(*out, m2, cb * c2);
      }
    }
  }
  ctx.memo_store(gen_pos, mono, out);
  return out;
}

// m1 * m2 in normal form: fold the factors of m1 from the right.
PbwContext::TermMap mul_mono_mono(const PbwContext& ctx, const PbwMono& m1,
                                  const PbwMono& m2) {
  PbwContext::TermMap result;
  result.emplace(m2, Scalar(1));
  for (auto it = m1.rbegin(); it != m1.rend(); ++it) {
    for (int rep = 0; rep < it->second; ++rep) {
      PbwContext::TermMap next;
      for (auto& [m, c] : result)
        for (auto& [m2x, c2] : *mul_gen_mono(ctx, it->first, m))
          accumulate(next, m2x, c * c2);
      result = std::move(next);
    }
  }
  return result;
}

}  // namespace

UeaElement UeaElement::unit(ContextRef ctx) {
  UeaElement u(std::move(ctx));
  u.add_term({}, Scalar(1));
  return u;
}

UeaElement UeaElement::generator(ContextRef ctx, int basis_index) {
  int p = ctx->position_of(basis_index);
  UeaElement u(std::move(ctx));
  u.add_term({{p, 1}}, Scalar(1));
  return u;
}

UeaElement UeaElement::lift(ContextRef ctx, const AlgElem& x) {
  if (x.alg.get() != ctx->algebra().get())
    throw Error("element belongs to a different algebra");
  UeaElement u(ctx);
  for (auto& [i, c] : x.coeff) u.add_term({{ctx->position_of(i), 1}}, c);
  return u;
}

int UeaElement::degree() const {
  int d = 0;
  for (auto& [m, c] : terms_) d = std::max(d, pbw_degree(m));
  return d;
}

void UeaElement::add_term(const PbwMono& m, const Scalar& c) {
  accumulate(terms_, m, c);
}

UeaElement UeaElement::operator+(const UeaElement& o) const {
  if (ctx_.get() != o.ctx_.get()) throw Error("context mismatch");
  UeaElement out = *this;
  for (auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

UeaElement UeaElement::operator-(const UeaElement& o) const {
  return *this + o.scaled(Scalar(-1));
}

UeaElement UeaElement::scaled(const Scalar& c) const {
  UeaElement out(ctx_);
  if (c.is_zero()) return out;
  for (auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
  return out;
}

UeaElement UeaElement::operator*(const UeaElement& o) const {
  if (ctx_.get() != o.ctx_.get()) throw Error("context mismatch");
  int cap = PbwContext::degree_cap();
  if (degree() + o.degree() > cap)
    throw Error("straightening degree cap (" + std::to_string(cap) +
                ") exceeded");
  UeaElement out(ctx_);
  for (auto& [ma, ca] : terms_)
    for (auto& [mb, cb] : o.terms_) {
      Scalar c = ca * cb;
      for (auto& [m, k] : mul_mono_mono(*ctx_, ma, mb))
        out.add_term(m, c * k);
    }
  return out;
}

UeaElement UeaElement::pow(int e) const {
  if (e < 0) throw Error("negative power in enveloping algebra");
  UeaElement out = unit(ctx_);
  for (int i = 0; i < e; ++i) out = out * *this;
  return out;
}

bool UeaElement::operator==(const UeaElement& o) const {
  return ctx_.get() == o.ctx_.get() && terms_ == o.terms_;
}

std::string UeaElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string cs = c.str();
    bool negated = false;
    if (cs.size() > 1 && cs[0] == '-' && cs.find(" + ") == std::string::npos &&
        cs.find(" - ") == std::string::npos) {
      negated = true;
      cs = cs.substr(1);
    }
    bool composite = cs.find(" + ") != std::string::npos ||
                     cs.find(" - ") != std::string::npos;
    if (composite) cs = "(" + (negated ? "-" + cs : cs) + ")";
    if (first) {
      out += (!composite && negated) ? "-" : "";
      first = false;
    } else {
      out += (!composite && negated) ? " - " : " + ";
    }
    std::string monos;
    for (auto& [p, e] : m) {
      if (!monos.empty()) monos += "*";
      monos += ctx_->algebra()->label(ctx_->basis_at(p));
      if (e > 1) monos += "^" + std::to_string(e);
    }
    if (monos.empty()) {
      out += cs;
    } else if (cs == "1") {
      out += monos;
    } else {
      out += cs + "*" + monos;
    }
  }
  return out;
}

UeaElement ad_action(const AlgElem& x, const UeaElement& u) {
  UeaElement xe = UeaElement::lift(u.context(), x);
  return xe * u - u * xe;
}

UeaElement ad_action(ContextRef ctx, int basis_index, const UeaElement& u) {
  return ad_action(AlgElem::basis(ctx->algebra(), basis_index), u);
}

UeaElement symmetrize(ContextRef ctx, const std::vector<int>& basis_multiset) {
  if (basis_multiset.empty()) throw Error("symmetrize needs at least one factor");
  std::vector<int> word = basis_multiset;
  std::sort(word.begin(), word.end());
  // each distinct word below stands for (prod of multiplicities!) orderings
  BigInt mult_fact = 1;
  {
    int run = 1;
    for (size_t i = 1; i <= word.size(); ++i) {
      if (i < word.size() && word[i] == word[i - 1]) {
        ++run;
        mult_fact *= run;
      } else {
        run = 1;
      }
    }
  }
  BigInt total_fact = 1;
  for (size_t i = 2; i <= word.size(); ++i) total_fact *= static_cast<long>(i);
  Scalar weight = Scalar::rational(mult_fact, total_fact);

  UeaElement sum(ctx);
  do {
    UeaElement prod = UeaElement::unit(ctx);
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      prod = UeaElement::generator(ctx, *it) * prod;
    sum = sum + prod;
  } while (std::next_permutation(word.begin(), word.end()));
  return sum.scaled(weight);
}

bool is_central(const UeaElement& u) {
  const auto& alg = u.context()->algebra();
  for (int b = 0; b < alg->dim(); ++b)
    if (!ad_action(u.context(), b, u).is_zero()) return false;
  return true;
}

UeaElement reorder(const UeaElement& u, ContextRef new_ctx) {
  if (u.context()->algebra().get() != new_ctx->algebra().get())
    throw Error("reorder requires the same algebra");
  UeaElement out(new_ctx);
  for (auto& [m, c] : u.terms()) {
    UeaElement prod = UeaElement::unit(new_ctx);
    for (auto it = m.rbegin(); it != m.rend(); ++it) {
      int basis = u.context()->basis_at(it->first);
      for (int rep = 0; rep < it->second; ++rep)
        prod = UeaElement::generator(new_ctx, basis) * prod;
    }
    out = out + prod.scaled(c);
  }
  return out;
}

OperatorMatrix::OperatorMatrix(ContextRef ctx, int rows, int cols)
    : ctx_(std::move(ctx)), rows_(rows), cols_(cols) {
  entries_.assign(rows_ * cols_, UeaElement(ctx_));
}

UeaElement OperatorMatrix::det(bool verify_commuting) const {
  if (rows_ != cols_) throw Error("determinant of a non-square operator matrix");
  if (verify_commuting) {
    for (int a = 0; a < rows_ * cols_; ++a)
      for (int b = a + 1; b < rows_ * cols_; ++b) {
        const UeaElement& x = entries_[a];
        const UeaElement& y = entries_[b];
        if (!(x * y == y * x))
          throw Error("entries (" + std::to_string(a / cols_ + 1) + "," +
                      std::to_string(a % cols_ + 1) + ") and (" +
                      std::to_string(b / cols_ + 1) + "," +
                      std::to_string(b % cols_ + 1) + ") do not commute");
      }
  }
  UeaElement out(ctx_);
  for_each_permutation(rows_, [&](const std::vector<int>& perm, int sign) {
    UeaElement term = UeaElement::unit(ctx_);
    for (int i = 0; i < rows_; ++i) term = term * at(i, perm[i]);
    out = (sign > 0) ? out + term : out - term;
  });
  return out;
}

UeaElement OperatorMatrix::cofactor(int i, int j) const {
  if (rows_ != cols_) throw Error("cofactor of a non-square operator matrix");
  OperatorMatrix minor(ctx_, rows_ - 1, cols_ - 1);
  for (int r = 0, rr = 0; r < rows_; ++r) {
    if (r == i) continue;
    for (int c = 0, cc = 0; c < cols_; ++c) {
      if (c == j) continue;
      minor.at(rr, cc) = at(r, c);
      ++cc;
    }
    ++rr;
  }
  UeaElement d = rows_ == 1 ? UeaElement::unit(ctx_) : minor.det(false);
  return ((i + j) % 2 == 0) ? d : d.scaled(Scalar(-1));
}

RaisingOperator raising_operator(ContextRef ctx) {
  const auto& alg = ctx->algebra();
  const RootDatum& rd = alg->roots();
  int n = alg->rank_n(), j = alg->heis_j();
  int N = n + j;
  OperatorMatrix m(ctx, N, N);
  for (int i = 1; i <= N; ++i)
    for (int l = 1; l <= N; ++l) {
      if (i <= n && l <= n) {
        int x = rd.positive[rd.upper_root(i, l)].x_index;
        m.at(i - 1, l - 1) =
            UeaElement::generator(ctx, x).scaled(Scalar(i == l ? 2 : 1));
      } else if (i <= n) {
        m.at(i - 1, l - 1) = UeaElement::generator(ctx, alg->u_index(l - n, i));
      } else if (l <= n) {
        m.at(i - 1, l - 1) = UeaElement::generator(ctx, alg->u_index(i - n, l));
      } else {
        m.at(i - 1, l - 1) =
            UeaElement::generator(ctx, alg->z_index(i - n, l - n));
      }
    }
  UeaElement d = m.det(false);
  return {std::move(m), std::move(d)};
}

RaisingOperator raising_operator_sp_part(ContextRef ctx) {
  const auto& alg = ctx->algebra();
  const RootDatum& rd = alg->roots();
  int n = alg->rank_n();
  OperatorMatrix m(ctx, n, n);
  for (int i = 1; i <= n; ++i)
    for (int l = 1; l <= n; ++l) {
      int x = rd.positive[rd.upper_root(i, l)].x_index;
      m.at(i - 1, l - 1) =
          UeaElement::generator(ctx, x).scaled(Scalar(i == l ? 2 : 1));
    }
  UeaElement d = m.det(false);
  return {std::move(m), std::move(d)};
}

LaplacePair laplace_pair(ContextRef ctx) {
  const auto& alg = ctx->algebra();
  if (alg->kind() != AlgebraKind::Symplectic)
    throw Error("laplace_pair expects an sp(2n) context");
  const RootDatum& rd = alg->roots();
  UeaElement delta(ctx), delta1(ctx);
  for (int d : rd.cartan) {
    UeaElement dg = UeaElement::generator(ctx, d);
    delta = delta + dg * dg;
    delta1 = delta1 + dg * dg;
  }
  for (const RootInfo& r : rd.positive) {
    UeaElement x = UeaElement::generator(ctx, r.x_index);
    UeaElement y = UeaElement::generator(ctx, r.y_index);
    UeaElement mixed = x * y + y * x;
    delta = delta + mixed.scaled(Scalar(r.c_alpha));
    AlgElem br = alg->bracket(AlgElem::basis(alg, r.x_index),
                              AlgElem::basis(alg, r.y_index));
    delta1 = delta1 - UeaElement::lift(ctx, br).scaled(Scalar(r.c_alpha));
  }
  return {std::move(delta), std::move(delta1)};
}

UeaElement gelfand_invariant(ContextRef ctx, int m) {
  if (m != 2 && m != 4) throw Error("gelfand invariant degree must be 2 or 4");
  const auto& alg = ctx->algebra();
  if (alg->kind() != AlgebraKind::Symplectic)
    throw Error("gelfand invariant expects an sp(2n) context");
  int d = alg->dim(), S = alg->matrix_size();
  Mat<Scalar> gram(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      gram.at(a, b) = (alg->realization(a) * alg->realization(b)).trace();
  Mat<Scalar> ginv = mat_inverse(gram);

  OperatorMatrix f(ctx, S, S);
  for (int p = 0; p < S; ++p)
    for (int q = 0; q < S; ++q) {
      UeaElement entry(ctx);
      for (int a = 0; a < d; ++a) {
        Scalar coef(0);
        for (int b = 0; b < d; ++b)
          coef += ginv.at(a, b) * alg->realization(b).at(p, q);
        if (!coef.is_zero())
          entry = entry + UeaElement::generator(ctx, a).scaled(coef);
      }
      f.at(p, q) = entry;
    }

  OperatorMatrix acc = f;
  for (int e = 1; e < m; ++e) {
    OperatorMatrix next(ctx, S, S);
    for (int p = 0; p < S; ++p)
      for (int q = 0; q < S; ++q) {
        UeaElement sum(ctx);
        for (int r = 0; r < S; ++r) sum = sum + acc.at(p, r) * f.at(r, q);
        next.at(p, q) = sum;
      }
    acc = next;
  }
  UeaElement tr(ctx);
  for (int p = 0; p < S; ++p) tr = tr + acc.at(p, p);
  if (!is_central(tr))
    throw Error("gelfand invariant failed the centrality check");
  return tr;
}

}  // namespace pbwlab
