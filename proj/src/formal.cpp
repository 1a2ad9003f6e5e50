#include "pbwlab/formal.hpp"

namespace pbwlab {

namespace formal_var {

namespace {
constexpr int kTau = 0, kZ = 1, kTauP = 2;
int pack(int kind, int a, int b) { return (kind << 20) | (a << 10) | b; }
}  // namespace

int tau(int a, int b) {
  if (a > b) std::swap(a, b);
  return pack(kTau, a, b);
}
int z(int r, int s) { return pack(kZ, r, s); }
int tau_p(int c, int d) {
  if (c > d) std::swap(c, d);
  return pack(kTauP, c, d);
}

std::string name(int var) {
  int kind = var >> 20, a = (var >> 10) & 1023, b = var & 1023;
  std::string base = kind == kTau ? "tau" : kind == kZ ? "z" : "taup";
  return base + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace formal_var

FormalFunction FormalFunction::polynomial(int n, int j, const VarPoly& p) {
  return {n, j, p, std::nullopt};
}

FormalFunction FormalFunction::scaled(const Scalar& c) const {
  return {n, j, poly.scaled(c), exp_index};
}

FormalFunction FormalFunction::operator+(const FormalFunction& o) const {
  if (n != o.n || j != o.j) throw Error("formal function shape mismatch");
  if (exp_index.has_value() != o.exp_index.has_value() ||
      (exp_index && !(*exp_index == *o.exp_index)))
    throw Error("cannot add formal functions with different index factors");
  return {n, j, poly + o.poly, exp_index};
}

FormalFunction FormalFunction::operator-(const FormalFunction& o) const {
  return *this + o.scaled(Scalar(-1));
}

bool FormalFunction::operator==(const FormalFunction& o) const {
  if (n != o.n || j != o.j || poly != o.poly) return false;
  if (exp_index.has_value() != o.exp_index.has_value()) return false;
  return !exp_index || *exp_index == *o.exp_index;
}

std::string FormalFunction::str() const {
  std::string body = poly.str(formal_var::name);
  if (!exp_index) return body;
  return "(" + body + ") * exp(2pi_i*Tr(M*tau'))";
}

FormalFunction derivative(const FormalFunction& f, int var) {
  FormalFunction out{f.n, f.j, f.poly.derivative(var), f.exp_index};
  int kind = var >> 20;
  if (kind == 2 && f.exp_index) {
    int c = (var >> 10) & 1023, d = var & 1023;
    // Tr(M tau') in canonical coordinates has the off-diagonal doubled
    Scalar weight = Scalar::pi_hat() * Scalar(c == d ? 1 : 2) *
                    f.exp_index->at(c - 1, d - 1);
    out.poly += f.poly.scaled(weight);
  }
  return out;
}

FormalFunction apply_op(const DiffOp& op, const FormalFunction& f) {
  FormalFunction out{f.n, f.j, VarPoly(), f.exp_index};
  for (auto& [m, c] : op.terms()) {
    FormalFunction cur = f;
    for (auto& [var, e] : m)
      for (int t = 0; t < e; ++t) cur = derivative(cur, var);
    out.poly += cur.poly.scaled(c);
  }
  return out;
}

DiffOp heat_operator(int n, int j, const Mat<Scalar>& index) {
  if (!(index == index.transposed())) throw Error("index matrix must be symmetric");
  Scalar det_m = mat_det(index);
  if (det_m.is_zero()) throw Error("index matrix must be invertible: det is 0");
  Mat<Scalar> adj = mat_adjugate(index);
  Scalar four_pi_det = Scalar(2) * Scalar::pi_hat() * det_m;

  Mat<VarPoly> op(n, n);
  for (int r = 1; r <= n; ++r)
    for (int s = 1; s <= n; ++s) {
      VarPoly entry = VarPoly::variable(formal_var::tau(r, s))
                          .scaled(four_pi_det * Scalar(r == s ? 2 : 1));
      for (int c = 1; c <= j; ++c)
        for (int d = 1; d <= j; ++d) {
          VarPoly zz = VarPoly::variable(formal_var::z(c, r)) *
                       VarPoly::variable(formal_var::z(d, s));
          entry -= zz.scaled(adj.at(c - 1, d - 1));
        }
      op.at(r - 1, s - 1) = entry;
    }
  return mat_det(op);
}

DiffOp big_d_operator(int n, int j) {
  int size = n + j;
  Mat<VarPoly> op(size, size);
  for (int a = 1; a <= size; ++a)
    for (int b = 1; b <= size; ++b) {
      int var;
      if (a <= n && b <= n) {
        var = formal_var::tau(a, b);
      } else if (a <= n) {
        var = formal_var::z(b - n, a);
      } else if (b <= n) {
        var = formal_var::z(a - n, b);
      } else {
        var = formal_var::tau_p(a - n, b - n);
      }
      op.at(a - 1, b - 1) =
          VarPoly::variable(var).scaled(Scalar(a == b ? 2 : 1));
    }
  return mat_det(op);
}

FormalFunction ext(const FormalFunction& f, const Mat<Scalar>& index) {
  if (f.exp_index) throw Error("function already carries an index factor");
  for (auto& [m, c] : f.poly.terms())
    for (auto& [v, e] : m)
      if ((v >> 20) == 2)
        throw Error("extension input must not involve tau'");
  if (!(index == index.transposed())) throw Error("index matrix must be symmetric");
  return {f.n, f.j, f.poly, index};
}

BolReport verify_bol_extension(int n, int j, const Mat<Scalar>& index, int l_max) {
  BolReport report;
  Scalar det_m = mat_det(index);
  if (det_m.is_zero()) throw Error("index matrix must be invertible: det is 0");

  // monomial test set of degree <= 2 in tau and z
  std::vector<int> vars;
  for (int a = 1; a <= n; ++a)
    for (int b = a; b <= n; ++b) vars.push_back(formal_var::tau(a, b));
  for (int r = 1; r <= j; ++r)
    for (int s = 1; s <= n; ++s) vars.push_back(formal_var::z(r, s));
  std::vector<VarPoly> tests;
  tests.push_back(VarPoly(1));
  for (size_t a = 0; a < vars.size(); ++a) {
    tests.push_back(VarPoly::variable(vars[a]));
    for (size_t b = a; b < vars.size(); ++b)
      tests.push_back(VarPoly::variable(vars[a]) * VarPoly::variable(vars[b]));
  }

  DiffOp heat = heat_operator(n, j, index);
  DiffOp big = big_d_operator(n, j);

  std::optional<Scalar> c;
  report.uniform = true;
  report.powers_ok = true;
  for (auto& t : tests) {
    FormalFunction f = FormalFunction::polynomial(n, j, t);
    FormalFunction lhs = apply_op(big, ext(f, index));
    FormalFunction rhs = ext(apply_op(heat, f), index);
    if (rhs.is_zero()) {
      if (!lhs.is_zero()) {
        report.uniform = false;
        report.witness = f.str();
        break;
      }
      continue;
    }
    auto lead = rhs.poly.terms().begin();
    auto it = lhs.poly.terms().find(lead->first);
    if (it == lhs.poly.terms().end()) {
      report.uniform = false;
      report.witness = f.str();
      break;
    }
    Scalar ratio = it->second / lead->second;
    if (!(lhs == rhs.scaled(ratio)) || (c && *c != ratio)) {
      report.uniform = false;
      report.witness = f.str();
      break;
    }
    c = ratio;
  }
  if (!report.uniform || !c) return report;
  report.c = *c;

  for (int l = 2; l <= l_max && report.powers_ok; ++l) {
    Scalar cl = c->pow(l);
    for (auto& t : tests) {
      FormalFunction f = FormalFunction::polynomial(n, j, t);
      FormalFunction lhs = ext(f, index);
      for (int rep = 0; rep < l; ++rep) lhs = apply_op(big, lhs);
      FormalFunction inner = f;
      for (int rep = 0; rep < l; ++rep) inner = apply_op(heat, inner);
      FormalFunction rhs = ext(inner, index);
      if (!(lhs == rhs.scaled(cl))) {
        report.powers_ok = false;
        report.witness = f.str();
        break;
      }
    }
  }

  Scalar stated = (Scalar(2) * Scalar::pi_hat()).pow(n - j) * det_m.pow(n - 1);
  if (*c == stated) {
    report.matched_form = 0;
  } else if (*c == Scalar(1) / stated) {
    report.matched_form = 1;
  } else {
    report.matched_form = -1;
  }
  return report;
}

}  // namespace pbwlab
