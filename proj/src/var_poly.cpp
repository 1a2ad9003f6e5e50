#include "pbwlab/var_poly.hpp"

namespace pbwlab {

int VarPoly::degree() const {
  int d = 0;
  for (auto& [m, c] : terms_) {
    int t = 0;
    for (auto& [v, e] : m) t += e;
    d = std::max(d, t);
  }
  return d;
}

void VarPoly::add(const Mono& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

VarPoly VarPoly::operator+(const VarPoly& o) const {
  VarPoly out = *this;
  for (auto& [m, c] : o.terms_) out.add(m, c);
  return out;
}

VarPoly VarPoly::operator-(const VarPoly& o) const {
  VarPoly out = *this;
  for (auto& [m, c] : o.terms_) out.add(m, -c);
  return out;
}

namespace {
VarPoly::Mono vp_mono_mul(const VarPoly::Mono& a, const VarPoly::Mono& b) {
  VarPoly::Mono out;
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
}  // namespace

VarPoly VarPoly::operator*(const VarPoly& o) const {
  VarPoly out;
  for (auto& [ma, ca] : terms_)
    for (auto& [mb, cb] : o.terms_) out.add(vp_mono_mul(ma, mb), ca * cb);
  return out;
}

VarPoly VarPoly::scaled(const Scalar& c) const {
  VarPoly out;
  if (c.is_zero()) return out;
  for (auto& [m, k] : terms_) out.add(m, k * c);
  return out;
}

VarPoly VarPoly::pow(int e) const {
  if (e < 0) throw Error("negative polynomial power");
  VarPoly out = VarPoly(1);
  for (int i = 0; i < e; ++i) out = out * *this;
  return out;
}

VarPoly VarPoly::substitute(const std::map<int, VarPoly>& bindings) const {
  VarPoly out;
  for (auto& [m, c] : terms_) {
    VarPoly term = VarPoly::constant(c);
    for (auto& [v, e] : m) {
      auto it = bindings.find(v);
      VarPoly base = (it == bindings.end()) ? VarPoly::variable(v) : it->second;
      term = term * base.pow(e);
    }
    out += term;
  }
  return out;
}

VarPoly VarPoly::derivative(int v) const {
  VarPoly out;
  for (auto& [m, c] : terms_) {
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i].first != v) continue;
      Mono reduced;
      for (size_t t = 0; t < m.size(); ++t) {
        if (t == i) {
          if (m[t].second > 1) reduced.emplace_back(m[t].first, m[t].second - 1);
        } else {
          reduced.push_back(m[t]);
        }
      }
      out.add(reduced, c * Scalar(m[i].second));
    }
  }
  return out;
}

std::string VarPoly::str(const std::function<std::string(int)>& var_name) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string cs = c.str();
    bool negated = cs.size() > 1 && cs[0] == '-' &&
                   cs.find(" + ") == std::string::npos &&
                   cs.find(" - ") == std::string::npos;
    if (negated) cs = cs.substr(1);
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
    for (auto& [v, e] : m) {
      if (!monos.empty()) monos += "*";
      monos += var_name(v);
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

}  // namespace pbwlab
