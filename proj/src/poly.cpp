#include "jetdiff/poly.hpp"

#include <algorithm>
#include <sstream>

namespace jetdiff {

const char* var_name(int v) {
  static const char* names[kNumVars] = {"d",  "m",  "l1", "l2", "l3",
                                        "h",  "a1", "a2", "a3", "a4"};
  return names[v];
}

Poly Poly::variable(int v, int power) {
  Poly p;
  if (power < 0 || power > 255) throw std::domain_error("exponent out of range");
  Mono m = mono_one();
  m[v] = static_cast<uint8_t>(power);
  p.terms_[m] = 1;
  return p;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == mono_one();
}

Rat Poly::constant_term() const {
  auto it = terms_.find(mono_one());
  return it == terms_.end() ? Rat(0) : it->second;
}

void Poly::add_term(const Mono& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly r;
  for (const auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

Poly Poly::mul_trunc(const Poly& o, int geom_cap) const {
  Poly r;
  for (const auto& [ma, ca] : terms_) {
    int ga = geom_degree(ma);
    for (const auto& [mb, cb] : o.terms_) {
      if (geom_cap >= 0 && ga + geom_degree(mb) > geom_cap) continue;
      Mono m;
      bool overflow = false;
      for (int i = 0; i < kNumVars; ++i) {
        int e = ma[i] + mb[i];
        if (e > 255) overflow = true;
        m[i] = static_cast<uint8_t>(e);
      }
      if (overflow) throw std::domain_error("monomial exponent overflow");
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

Poly Poly::truncate_geom(int geom_cap) const {
  Poly r;
  for (const auto& [m, c] : terms_)
    if (geom_degree(m) <= geom_cap) r.terms_[m] = c;
  return r;
}

int Poly::degree_in(int v) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m[v]));
  return d;
}

int Poly::degree_in_set(const std::vector<int>& vars) const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    int t = 0;
    for (int v : vars) t += m[v];
    d = std::max(d, t);
  }
  return d;
}

Poly Poly::coeff_of(int v, int k) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    if (m[v] != k) continue;
    Mono mm = m;
    mm[v] = 0;
    r.add_term(mm, c);
  }
  return r;
}

Poly Poly::homogeneous_part(const std::vector<int>& vars, int deg) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    int t = 0;
    for (int v : vars) t += m[v];
    if (t == deg) r.terms_[m] = c;
  }
  return r;
}

Poly Poly::subst(int v, const Poly& value, int geom_cap) const {
  // Precompute powers of the replacement up to the needed degree.
  int maxe = degree_in(v);
  std::vector<Poly> pow(maxe + 1);
  pow[0] = Poly(1);
  for (int e = 1; e <= maxe; ++e) pow[e] = pow[e - 1].mul_trunc(value, geom_cap);
  Poly r;
  for (const auto& [m, c] : terms_) {
    Mono mm = m;
    int e = mm[v];
    mm[v] = 0;
    Poly t;
    t.terms_[mm] = c;
    r += t.mul_trunc(pow[e], geom_cap);
  }
  return r;
}

Poly Poly::subst_rat(int v, const Rat& value) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    Mono mm = m;
    int e = mm[v];
    mm[v] = 0;
    r.add_term(mm, c * rat_pow(value, e));
  }
  return r;
}

Poly Poly::swap_vars(int v1, int v2) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    Mono mm = m;
    std::swap(mm[v1], mm[v2]);
    r.terms_[mm] = c;
  }
  return r;
}

Poly Poly::divide_by_diff(int vi, int vj) const {
  // View f as a polynomial in x_i with coefficients f_p; the exact quotient
  // by (x_i - x_j) is  q = sum_k ( sum_{p >= k+1} f_p x_j^{p-1-k} ) x_i^k.
  int dmax = degree_in(vi);
  std::vector<Poly> fp(dmax + 1);
  for (const auto& [m, c] : terms_) {
    Mono mm = m;
    int p = mm[vi];
    mm[vi] = 0;
    fp[p].add_term(mm, c);
  }
  Poly q;
  for (int k = 0; k + 1 <= dmax; ++k) {
    for (int p = k + 1; p <= dmax; ++p) {
      Poly part = fp[p] * Poly::variable(vj, p - 1 - k);
      q += part * Poly::variable(vi, k);
    }
  }
  Poly check = q * (Poly::variable(vi) - Poly::variable(vj));
  if (check != *this)
    throw std::domain_error("not divisible by variable difference");
  return q;
}

Poly Poly::divided_difference(int vi, int vj) const {
  Poly diff = *this - swap_vars(vi, vj);
  if (diff.is_zero()) return Poly();
  return diff.divide_by_diff(vi, vj);
}

bool Poly::uses_only(const std::vector<int>& vars) const {
  for (const auto& [m, c] : terms_)
    for (int v = 0; v < kNumVars; ++v) {
      if (m[v] == 0) continue;
      if (std::find(vars.begin(), vars.end(), v) == vars.end()) return false;
    }
  return true;
}

Rat Poly::eval(const std::map<int, Rat>& assign) const {
  Rat total = 0;
  for (const auto& [m, c] : terms_) {
    Rat t = c;
    for (int v = 0; v < kNumVars; ++v) {
      if (m[v] == 0) continue;
      auto it = assign.find(v);
      if (it == assign.end())
        throw std::domain_error(std::string("unassigned variable ") + var_name(v));
      t *= rat_pow(it->second, m[v]);
    }
    total += t;
  }
  return total;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    std::string vars;
    for (int v = 0; v < kNumVars; ++v) {
      if (m[v] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += var_name(v);
      if (m[v] > 1) vars += "^" + std::to_string(static_cast<int>(m[v]));
    }
    if (vars.empty()) {
      os << to_string(a);
    } else if (a == 1) {
      os << vars;
    } else {
      os << to_string(a) << "*" << vars;
    }
  }
  return os.str();
}

Poly exp_trunc(const Poly& x, int geom_cap) {
  for (const auto& [m, c] : x.terms())
    if (geom_degree(m) == 0)
      throw std::domain_error("exp_trunc needs a nilpotent argument");
  Poly r(1);
  Poly xk(1);
  for (int k = 1; k <= geom_cap; ++k) {
    xk = xk.mul_trunc(x, geom_cap);
    if (xk.is_zero()) break;
    r += xk * rat(Int(1), factorial(k));
  }
  return r;
}

Poly todd_series(const Poly& x, int geom_cap) {
  // Coefficients t_k of x/(1-e^{-x}) obtained by inverting
  // (1-e^{-x})/x = sum (-1)^n x^n/(n+1)!.
  static const int kMax = 8;
  static std::vector<Rat> coeffs = [] {
    std::vector<Rat> s(kMax + 1), t(kMax + 1);
    for (int n = 0; n <= kMax; ++n) {
      s[n] = rat(Int((n % 2) ? -1 : 1), factorial(n + 1));
    }
    t[0] = 1;
    for (int n = 1; n <= kMax; ++n) {
      Rat acc = 0;
      for (int k = 1; k <= n; ++k) acc += s[k] * t[n - k];
      t[n] = -acc;
    }
    return t;
  }();
  if (geom_cap > kMax) throw std::domain_error("todd_series cap too large");
  for (const auto& [m, c] : x.terms())
    if (geom_degree(m) == 0)
      throw std::domain_error("todd_series needs a nilpotent argument");
  Poly r(1);
  Poly xk(1);
  for (int k = 1; k <= geom_cap; ++k) {
    xk = xk.mul_trunc(x, geom_cap);
    if (xk.is_zero()) break;
    if (coeffs[k] != 0) r += xk * coeffs[k];
  }
  return r;
}

Poly invert_one_plus(const Poly& u, int geom_cap) {
  for (const auto& [m, c] : u.terms())
    if (geom_degree(m) == 0)
      throw std::domain_error("invert_one_plus needs a nilpotent argument");
  Poly r(1);
  Poly uk(1);
  for (int k = 1; k <= geom_cap; ++k) {
    uk = uk.mul_trunc(u, geom_cap);
    if (uk.is_zero()) break;
    r += (k % 2) ? -uk : uk;
  }
  return r;
}

Poly poly_pow(const Poly& base, unsigned e, int geom_cap) {
  Poly r(1);
  for (unsigned i = 0; i < e; ++i) r = r.mul_trunc(base, geom_cap);
  return r;
}

}  // namespace jetdiff
