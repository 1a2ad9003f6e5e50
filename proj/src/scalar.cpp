#include "pbwlab/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <sstream>

namespace pbwlab {

namespace {

struct ParamRegistry {
  std::vector<std::string> names;
  std::map<std::string, int> ids;
  std::mutex mu;
  ParamRegistry() {
    names = {"2pi_i", "k"};
    ids = {{"2pi_i", 0}, {"k", 1}};
  }
};

ParamRegistry& registry() {
  static ParamRegistry r;
  return r;
}

BigInt int_gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

BigInt int_divexact(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

int Params::id(const std::string& name) {
  auto& r = registry();
  std::lock_guard<std::mutex> lock(r.mu);
  auto it = r.ids.find(name);
  if (it != r.ids.end()) return it->second;
  int nid = static_cast<int>(r.names.size());
  r.names.push_back(name);
  r.ids.emplace(name, nid);
  return nid;
}

std::optional<int> Params::lookup(const std::string& name) {
  auto& r = registry();
  std::lock_guard<std::mutex> lock(r.mu);
  auto it = r.ids.find(name);
  if (it == r.ids.end()) return std::nullopt;
  return it->second;
}

std::string Params::name(int id) {
  auto& r = registry();
  std::lock_guard<std::mutex> lock(r.mu);
  if (id < 0 || id >= static_cast<int>(r.names.size()))
    throw Error("unknown parameter id");
  return r.names[id];
}

std::vector<std::string> Params::names_snapshot() {
  auto& r = registry();
  std::lock_guard<std::mutex> lock(r.mu);
  return r.names;
}

int Params::pi_hat() { return 0; }
int Params::weight_k() { return 1; }

int mono_degree(const ParamMono& m) {
  int d = 0;
  for (auto& [id, e] : m) d += e;
  return d;
}

ParamMono mono_mul(const ParamMono& a, const ParamMono& b) {
  ParamMono out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i, ++j;
    }
  }
  return out;
}

bool mono_divides(const ParamMono& a, const ParamMono& b) {
  size_t j = 0;
  for (auto& [id, e] : a) {
    while (j < b.size() && b[j].first < id) ++j;
    if (j == b.size() || b[j].first != id || b[j].second < e) return false;
  }
  return true;
}

ParamMono mono_quot(const ParamMono& b, const ParamMono& a) {
  ParamMono out;
  size_t i = 0;
  for (auto& [id, e] : b) {
    int sub = 0;
    if (i < a.size() && a[i].first == id) sub = a[i++].second;
    if (e - sub > 0) out.emplace_back(id, e - sub);
  }
  if (i != a.size()) throw Error("monomial division failure");
  return out;
}

int mono_cmp(const ParamMono& a, const ParamMono& b) {
  int da = mono_degree(a), db = mono_degree(b);
  if (da != db) return da < db ? -1 : 1;
  // Same degree: smaller ids dominate; a higher exponent on the smallest
  // differing id makes the monomial larger.
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first != b[j].first)
      return a[i].first < b[j].first ? 1 : -1;
    if (a[i].second != b[j].second)
      return a[i].second > b[j].second ? 1 : -1;
    ++i, ++j;
  }
  if (i < a.size()) return 1;
  if (j < b.size()) return -1;
  return 0;
}

Poly Poly::constant(const BigInt& c) {
  Poly p;
  if (c != 0) p.terms_.emplace(ParamMono{}, c);
  return p;
}

Poly Poly::variable(int param_id) {
  Poly p;
  p.terms_.emplace(ParamMono{{param_id, 1}}, BigInt(1));
  return p;
}

bool Poly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.empty() &&
         terms_.begin()->second == 1;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

BigInt Poly::constant_value() const {
  if (terms_.empty()) return BigInt(0);
  if (!is_constant()) throw Error("polynomial is not constant");
  return terms_.begin()->second;
}

int Poly::total_degree() const {
  int d = 0;
  for (auto& [m, c] : terms_) d = std::max(d, mono_degree(m));
  return d;
}

int Poly::degree_in(int param_id) const {
  int d = 0;
  for (auto& [m, c] : terms_)
    for (auto& [id, e] : m)
      if (id == param_id) d = std::max(d, e);
  return d;
}

int Poly::max_var() const {
  int v = -1;
  for (auto& [m, c] : terms_)
    if (!m.empty()) v = std::max(v, m.back().first);
  return v;
}

bool Poly::has_var(int param_id) const {
  for (auto& [m, c] : terms_)
    for (auto& [id, e] : m)
      if (id == param_id) return true;
  return false;
}

void Poly::add_term(const ParamMono& m, const BigInt& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator+(const Poly& o) const {
  Poly out = *this;
  for (auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

Poly Poly::operator-(const Poly& o) const {
  Poly out = *this;
  for (auto& [m, c] : o.terms_) out.add_term(m, -c);
  return out;
}

Poly Poly::operator*(const Poly& o) const {
  Poly out;
  for (auto& [ma, ca] : terms_)
    for (auto& [mb, cb] : o.terms_) out.add_term(mono_mul(ma, mb), ca * cb);
  return out;
}

Poly Poly::operator-() const {
  Poly out;
  for (auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Poly Poly::mul_int(const BigInt& c) const {
  Poly out;
  if (c == 0) return out;
  for (auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
  return out;
}

BigInt Poly::integer_content() const {
  BigInt g = 0;
  for (auto& [m, c] : terms_) {
    g = int_gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

const BigInt& Poly::leading_coeff() const {
  if (terms_.empty()) throw Error("leading coefficient of zero polynomial");
  return terms_.rbegin()->second;
}

namespace {

// Univariate view of p in the variable v: exponent -> coefficient poly.
std::map<int, Poly> univar(const Poly& p, int v) {
  std::map<int, Poly> out;
  for (auto& [m, c] : p.terms()) {
    int e = 0;
    ParamMono rest;
    for (auto& [id, k] : m) {
      if (id == v)
        e = k;
      else
        rest.emplace_back(id, k);
    }
    out[e].add_term(rest, c);
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

Poly from_univar(const std::map<int, Poly>& u, int v) {
  Poly out;
  for (auto& [e, coeff] : u) {
    Poly xe = Poly::constant(1);
    if (e > 0) {
      Poly base = Poly::variable(v);
      for (int i = 0; i < e; ++i) xe = xe * base;
    }
    out = out + coeff * xe;
  }
  return out;
}

int deg_in(const Poly& p, int v) { return p.degree_in(v); }

Poly leading_coeff_in(const Poly& p, int v) {
  auto u = univar(p, v);
  if (u.empty()) return Poly();
  return u.rbegin()->second;
}

Poly sign_normalize(const Poly& p) {
  if (p.is_zero()) return p;
  return p.leading_coeff() < 0 ? -p : p;
}

// gcd of the univariate-in-v coefficient polynomials
Poly content_in(const Poly& p, int v) {
  Poly g;
  for (auto& [e, coeff] : univar(p, v)) {
    g = poly_gcd(g, coeff);
    if (g.is_one()) break;
  }
  return g;
}

// Pseudo remainder of a by b with respect to v.
Poly prem(Poly a, const Poly& b, int v) {
  int db = deg_in(b, v);
  Poly lb = leading_coeff_in(b, v);
  while (!a.is_zero() && deg_in(a, v) >= db) {
    int da = deg_in(a, v);
    Poly la = leading_coeff_in(a, v);
    Poly shift = Poly::constant(1);
    Poly xv = Poly::variable(v);
    for (int i = 0; i < da - db; ++i) shift = shift * xv;
    a = lb * a - la * shift * b;
  }
  return a;
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return sign_normalize(b);
  if (b.is_zero()) return sign_normalize(a);
  int v = std::max(a.max_var(), b.max_var());
  if (v < 0) return Poly::constant(int_gcd(a.constant_value(), b.constant_value()));
  if (!a.has_var(v)) return poly_gcd(a, content_in(b, v));
  if (!b.has_var(v)) return poly_gcd(content_in(a, v), b);

  Poly ca = content_in(a, v), cb = content_in(b, v);
  Poly c = poly_gcd(ca, cb);
  Poly p = poly_divexact(a, ca), q = poly_divexact(b, cb);
  if (deg_in(p, v) < deg_in(q, v)) std::swap(p, q);
  while (!q.is_zero()) {
    Poly r = prem(p, q, v);
    p = q;
    if (r.is_zero()) {
      q = Poly();
    } else {
      q = poly_divexact(r, content_in(r, v));
    }
  }
  return c * sign_normalize(p);
}

Poly poly_divexact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error("polynomial division by zero");
  Poly rem = a, quot;
  const auto& lead_b = *b.terms().rbegin();
  while (!rem.is_zero()) {
    const auto& lead_r = *rem.terms().rbegin();
    if (!mono_divides(lead_b.first, lead_r.first))
      throw Error("inexact polynomial division");
    if (!mpz_divisible_p(lead_r.second.get_mpz_t(), lead_b.second.get_mpz_t()))
      throw Error("inexact polynomial division");
    BigInt q = int_divexact(lead_r.second, lead_b.second);
    ParamMono mq = mono_quot(lead_r.first, lead_b.first);
    Poly t;
    t.add_term(mq, q);
    quot = quot + t;
    rem = rem - t * b;
  }
  return quot;
}

Scalar::Scalar(long v) : num_(Poly::constant(BigInt(v))), den_(Poly::constant(1)) {}

Scalar::Scalar(const BigInt& v) : num_(Poly::constant(v)), den_(Poly::constant(1)) {}

Scalar::Scalar(const BigRat& v)
    : num_(Poly::constant(v.get_num())), den_(Poly::constant(v.get_den())) {
  canonicalize();
}

Scalar::Scalar(Poly num, Poly den, bool canonical)
    : num_(std::move(num)), den_(std::move(den)) {
  if (!canonical) canonicalize();
}

Scalar Scalar::rational(long num, long den) {
  return Scalar(Poly::constant(BigInt(num)), Poly::constant(BigInt(den)), false);
}

Scalar Scalar::rational(const BigInt& num, const BigInt& den) {
  return Scalar(Poly::constant(num), Poly::constant(den), false);
}

Scalar Scalar::param(const std::string& name) { return param_id(Params::id(name)); }

Scalar Scalar::param_id(int id) {
  return Scalar(Poly::variable(id), Poly::constant(1), true);
}

Scalar Scalar::from_poly(const Poly& p) {
  return Scalar(p, Poly::constant(1), true);
}

bool Scalar::is_one() const { return num_.is_one() && den_.is_one(); }

bool Scalar::is_constant() const {
  return num_.is_constant() && den_.is_constant();
}

BigRat Scalar::as_rational() const {
  if (!is_constant()) throw Error("scalar is not a rational constant: " + str());
  if (num_.is_zero()) return BigRat(0);
  BigRat r(num_.constant_value(), den_.constant_value());
  r.canonicalize();
  return r;
}

void Scalar::canonicalize() {
  if (den_.is_zero()) throw Error("division by zero");
  if (num_.is_zero()) {
    den_ = Poly::constant(1);
    return;
  }
  Poly g = poly_gcd(num_, den_);
  if (!g.is_one()) {
    num_ = poly_divexact(num_, g);
    den_ = poly_divexact(den_, g);
  }
  if (den_.leading_coeff() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

Scalar Scalar::operator+(const Scalar& o) const {
  return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_, false);
}

Scalar Scalar::operator-(const Scalar& o) const {
  return Scalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_, false);
}

Scalar Scalar::operator*(const Scalar& o) const {
  return Scalar(num_ * o.num_, den_ * o.den_, false);
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (o.is_zero()) throw Error("division by zero");
  return Scalar(num_ * o.den_, den_ * o.num_, false);
}

Scalar Scalar::operator-() const { return Scalar(-num_, den_, true); }

Scalar Scalar::pow(long e) const {
  if (e < 0) {
    if (is_zero()) throw Error("division by zero");
    return Scalar(den_, num_, false).pow(-e);
  }
  Scalar out(1);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) out = out * base;
    base = base * base;
    e >>= 1;
  }
  return out;
}

namespace {

Scalar eval_poly(const Poly& p, const std::map<int, Scalar>& bindings) {
  Scalar out(0);
  for (auto& [m, c] : p.terms()) {
    Scalar t(c);
    for (auto& [id, e] : m) {
      auto it = bindings.find(id);
      Scalar base = (it == bindings.end()) ? Scalar::param_id(id) : it->second;
      t = t * base.pow(e);
    }
    out = out + t;
  }
  return out;
}

}  // namespace

Scalar Scalar::substitute(const std::map<int, Scalar>& bindings) const {
  Scalar den_val = eval_poly(den_, bindings);
  if (den_val.is_zero())
    throw Error("substitution makes denominator vanish in " + str());
  return eval_poly(num_, bindings) / den_val;
}

Scalar Scalar::substitute(const std::map<std::string, Scalar>& bindings) const {
  std::map<int, Scalar> byid;
  for (auto& [name, v] : bindings) byid.emplace(Params::id(name), v);
  return substitute(byid);
}

namespace {

std::string mono_str(const ParamMono& m) {
  std::string out;
  bool first = true;
  for (auto& [id, e] : m) {
    if (!first) out += "*";
    first = false;
    out += Params::name(id);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace

std::string poly_str(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  // Leading terms first.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    BigInt abs_c = c < 0 ? BigInt(-c) : c;
    if (first) {
      out += (c < 0 ? "-" : "");
      first = false;
    } else {
      out += (c < 0 ? " - " : " + ");
    }
    if (m.empty()) {
      out += abs_c.get_str();
    } else if (abs_c == 1) {
      out += mono_str(m);
    } else {
      out += abs_c.get_str() + "*" + mono_str(m);
    }
  }
  return out;
}

std::string Scalar::str() const {
  if (den_.is_one()) return poly_str(num_);
  bool neg = num_.leading_coeff() < 0;
  Poly shown = neg ? -num_ : num_;
  auto wrap = [](const Poly& p) {
    std::string s = poly_str(p);
    // parenthesize unless the polynomial is a bare positive integer or a
    // bare power of one parameter
    bool atomic = false;
    if (p.terms().size() == 1 && p.leading_coeff() > 0) {
      const auto& [m, c] = *p.terms().begin();
      atomic = m.empty() || (c == 1 && m.size() == 1);
    }
    return atomic ? s : "(" + s + ")";
  };
  return (neg ? std::string("-") : std::string()) + wrap(shown) + "/" + wrap(den_);
}

namespace {

struct Lexer {
  std::string text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool accept(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  static bool word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }
  // Longest declared parameter name starting here; names may begin with a
  // digit ("2pi_i"), so this runs before integer lexing.
  std::optional<int> try_param() {
    skip_ws();
    std::string best;
    int best_id = -1;
    for (const auto& name : Params::names_snapshot()) {
      if (name.size() <= best.size()) continue;
      if (text.compare(pos, name.size(), name) != 0) continue;
      size_t end = pos + name.size();
      if (end < text.size() && word_char(text[end])) continue;
      best = name;
      best_id = *Params::lookup(name);
    }
    if (best_id < 0) return std::nullopt;
    pos += best.size();
    return best_id;
  }
  std::optional<BigInt> try_int() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) return std::nullopt;
    return BigInt(text.substr(start, pos - start));
  }
};

class ScalarParser {
 public:
  explicit ScalarParser(const std::string& text) { lex_.text = text; }

  Scalar run() {
    Scalar v = expr();
    if (!lex_.eof()) throw Error("unexpected input at position " + std::to_string(lex_.pos));
    return v;
  }

 private:
  Scalar expr() {
    Scalar v = term();
    while (true) {
      if (lex_.accept('+'))
        v = v + term();
      else if (lex_.accept('-'))
        v = v - term();
      else
        return v;
    }
  }
  Scalar term() {
    Scalar v = unary();
    while (true) {
      if (lex_.accept('*'))
        v = v * unary();
      else if (lex_.accept('/'))
        v = v / unary();
      else
        return v;
    }
  }
  Scalar unary() {
    if (lex_.accept('-')) return -unary();
    return power();
  }
  Scalar power() {
    Scalar base = atom();
    if (lex_.accept('^')) {
      auto e = lex_.try_int();
      if (!e) throw Error("expected integer exponent");
      return base.pow(e->get_si());
    }
    return base;
  }
  Scalar atom() {
    if (lex_.accept('(')) {
      Scalar v = expr();
      if (!lex_.accept(')')) throw Error("expected ')'");
      return v;
    }
    if (auto pid = lex_.try_param()) return Scalar::param_id(*pid);
    if (auto n = lex_.try_int()) return Scalar(*n);
    throw Error("unexpected token at position " + std::to_string(lex_.pos));
  }

  Lexer lex_;
};

}  // namespace

Scalar Scalar::parse(const std::string& text) { return ScalarParser(text).run(); }

}  // namespace pbwlab
