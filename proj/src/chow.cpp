#include "jetdiff/chow.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

namespace jetdiff::chow {

using combinat::Partition;
using combinat::SchurWeight;

Poly degree_poly(const VarietySpec& v) {
  if (v.kind == VarietyKind::ProjectiveSpace)
    throw std::logic_error("projective space has no divisor degree");
  if (v.degree) return Poly(*v.degree);
  return Poly::variable(VD);
}

Poly ChowClass::integrate() const {
  int dim = variety.dim();
  Poly top = cls.coeff_of(VH, dim);
  if (variety.kind == VarietyKind::HypersurfaceIn)
    return top * degree_poly(variety);
  return top;
}

namespace {

Poly twist_poly(const VarietySpec& v, const TwistExp& t) {
  Poly p(t.t0);
  if (t.t1 != 0) {
    if (v.kind == VarietyKind::ProjectiveSpace)
      throw std::invalid_argument("degree-dependent twist on projective space");
    p += degree_poly(v) * Rat(t.t1);
  }
  return p;
}

// (1 +- h)^{n+1} / (1 +- d h), the shared shape of every (co)tangent-type
// total Chern class here.
Poly euler_quotient_class(int exponent, bool dual, const Poly& d, bool divide,
                          int cap) {
  Poly h = Poly::variable(VH);
  if (dual) h = -h;
  Poly num = poly_pow(Poly(1) + h, exponent, cap);
  if (!divide) return num;
  Poly dh = d * h;
  return num.mul_trunc(invert_one_plus(dh, cap), cap);
}

}  // namespace

ChowClass chern_total(const VarietySpec& v, AtomKind atom) {
  atom_rank(v, atom);  // validates the atom/variety pairing
  int cap = v.dim();
  Poly cls;
  switch (v.kind) {
    case VarietyKind::ProjectiveSpace: {
      bool dual = (atom == AtomKind::CotangentX);
      cls = euler_quotient_class(v.n + 1, dual, Poly(0), false, cap);
      break;
    }
    case VarietyKind::HypersurfaceIn: {
      Poly d = degree_poly(v);
      switch (atom) {
        case AtomKind::TangentX:
          cls = euler_quotient_class(v.n + 1, false, d, true, cap);
          break;
        case AtomKind::CotangentX:
          cls = euler_quotient_class(v.n + 1, true, d, true, cap);
          break;
        case AtomKind::AmbientTangentRestricted:
          cls = euler_quotient_class(v.n + 1, false, Poly(0), false, cap);
          break;
        case AtomKind::AmbientCotangentRestricted:
          cls = euler_quotient_class(v.n + 1, true, Poly(0), false, cap);
          break;
        default:
          throw std::invalid_argument("atom/variety mismatch");
      }
      break;
    }
    case VarietyKind::LogPair: {
      Poly d = degree_poly(v);
      switch (atom) {
        case AtomKind::TangentX:
          cls = euler_quotient_class(4, false, Poly(0), false, cap);
          break;
        case AtomKind::CotangentX:
          cls = euler_quotient_class(4, true, Poly(0), false, cap);
          break;
        // Residue sequence 0 -> Omega -> Omega(log X) -> O_X -> 0 with
        // c(O_X) = (1 - d h)^{-1}; determinant O(d-4) as required by the
        // K_Y = L^{-(5,3,1)} (x) pi^* O(3d-16) formula.
        case AtomKind::LogCotangent:
          cls = euler_quotient_class(4, true, d, true, cap);
          break;
        case AtomKind::LogTangent:
          cls = euler_quotient_class(4, false, d, true, cap);
          break;
        default:
          throw std::invalid_argument("atom/variety mismatch");
      }
      break;
    }
  }
  return {v, cls};
}

std::vector<Poly> chern_classes(const VarietySpec& v, AtomKind atom) {
  size_t r = atom_rank(v, atom);
  ChowClass total = chern_total(v, atom);
  std::vector<Poly> es(r + 1, Poly(0));
  es[0] = Poly(1);
  for (size_t i = 1; i <= r && static_cast<int>(i) <= v.dim(); ++i)
    es[i] = total.cls.coeff_of(VH, static_cast<int>(i)) *
            Poly::variable(VH, static_cast<int>(i));
  return es;
}

Poly substitute_symmetric(const Poly& f, int r, const std::vector<Poly>& es,
                          int geom_cap) {
  const int avar0 = VA1;
  // Elementary symmetric polynomials in the root variables.
  std::vector<Poly> elem(r + 1, Poly(0));
  for (int i = 0; i <= r; ++i) {
    Poly acc;
    std::vector<int> idx(i);
    std::function<void(int, int)> subsets = [&](int start, int k) {
      if (k == i) {
        Poly m(1);
        for (int t = 0; t < i; ++t) m = m * Poly::variable(avar0 + idx[t]);
        acc += m;
        return;
      }
      for (int s = start; s < r; ++s) {
        idx[k] = s;
        subsets(s + 1, k + 1);
      }
    };
    subsets(0, 0);
    if (i == 0) acc = Poly(1);
    elem[i] = acc;
  }

  Poly rest = f;
  Poly out;
  while (!rest.is_zero()) {
    // Largest root-exponent vector in lex order; symmetry makes it weakly
    // decreasing.
    std::array<int, 8> best{};
    bool found = false;
    for (const auto& [m, c] : rest.terms()) {
      std::array<int, 8> a{};
      for (int i = 0; i < r; ++i) a[i] = m[avar0 + i];
      if (!found || a > best) {
        best = a;
        found = true;
      }
    }
    for (int i = 0; i + 1 < r; ++i)
      if (best[i] < best[i + 1])
        throw std::logic_error("polynomial is not symmetric in the roots");
    // Full coefficient of that root monomial.
    Poly coeff;
    for (const auto& [m, c] : rest.terms()) {
      bool match = true;
      for (int i = 0; i < r; ++i)
        if (m[avar0 + i] != best[i]) match = false;
      if (!match) continue;
      Mono mm = m;
      for (int i = 0; i < r; ++i) mm[avar0 + i] = 0;
      Poly t;
      t.add_term(mm, c);
      coeff += t;
    }
    // e-exponents beta_i = alpha_i - alpha_{i+1}.
    Poly emono(1), subst(1);
    for (int i = 0; i < r; ++i) {
      int beta = best[i] - (i + 1 < r ? best[i + 1] : 0);
      if (beta > 0) {
        emono = emono * poly_pow(elem[i + 1], beta);
        subst = subst.mul_trunc(poly_pow(es[i + 1], beta, geom_cap), geom_cap);
      }
    }
    rest -= coeff * emono;
    out += coeff.mul_trunc(subst, geom_cap);
  }
  return out;
}

namespace {

// Chern character of Gamma^p(atom) with a determinant twist, via the weight
// multiset: sum over weights mu of exp(mu . a), expanded into moment sums
// that are symmetric in the roots.
Poly schur_character(const VarietySpec& v, const Partition& p, long det_twist,
                     AtomKind atom) {
  size_t r = atom_rank(v, atom);
  int dim = v.dim();
  auto weights = combinat::enumerate_gt_patterns(p, r);

  // S_alpha = sum_mu mult * prod mu_i^{alpha_i}, assembled per exponent
  // vector alpha with |alpha| <= dim; ch = sum_alpha S_alpha/alpha! a^alpha.
  Poly ch;
  std::vector<int> alpha(r, 0);
  std::function<void(size_t, int)> walk = [&](size_t i, int remaining) {
    if (i == r) {
      Int s = 0;
      for (const auto& [mu, mult] : weights) {
        Int term = mult;
        for (size_t k = 0; k < r; ++k)
          if (alpha[k] > 0) term *= int_pow(Int(mu[k]), alpha[k]);
        s += term;
      }
      if (s != 0) {
        Int fact = 1;
        for (size_t k = 0; k < r; ++k) fact *= factorial(alpha[k]);
        Mono m = mono_one();
        for (size_t k = 0; k < r; ++k)
          m[VA1 + static_cast<int>(k)] = static_cast<uint8_t>(alpha[k]);
        Poly t;
        t.add_term(m, rat(s, fact));
        ch += t;
      }
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      alpha[i] = e;
      walk(i + 1, remaining - e);
    }
    alpha[i] = 0;
  };
  walk(0, dim);

  auto es = chern_classes(v, atom);
  Poly out = substitute_symmetric(ch, static_cast<int>(r), es, dim);
  if (det_twist != 0)
    out = out.mul_trunc(exp_trunc(es[1] * Rat(det_twist), dim), dim);
  return out;
}

}  // namespace

ChowClass chern_character(const VarietySpec& v, const BundleExpr& e) {
  int dim = v.dim();
  switch (e.node()) {
    case BundleExpr::Node::Line: {
      Poly t = twist_poly(v, e.twist_exp());
      Poly th = t * Poly::variable(VH);
      return {v, th.is_zero() ? Poly(1) : exp_trunc(th, dim)};
    }
    case BundleExpr::Node::Atom: {
      size_t r = atom_rank(v, e.atom_kind());
      std::vector<long> one(r, 0);
      one[0] = 1;
      return {v, schur_character(v, Partition(one), 0, e.atom_kind())};
    }
    case BundleExpr::Node::Schur: {
      size_t r = atom_rank(v, e.atom_kind());
      const SchurWeight& w = e.weight();
      if (w.rank() > r)
        throw std::invalid_argument("Schur weight longer than atom rank");
      std::vector<long> entries = w.entries();
      if (!entries.empty() && entries.back() < 0 && w.rank() < r)
        throw std::invalid_argument(
            "negative Schur weight must be given at full atom rank");
      entries.resize(r, 0);
      auto norm = SchurWeight(entries).normalize();
      return {v, schur_character(v, norm.partition, norm.det_twist,
                                 e.atom_kind())};
    }
    case BundleExpr::Node::Twist: {
      ChowClass inner = chern_character(v, e.child());
      Poly t = twist_poly(v, e.twist_exp());
      Poly th = t * Poly::variable(VH);
      if (th.is_zero()) return inner;
      return {v, inner.cls.mul_trunc(exp_trunc(th, dim), dim)};
    }
    case BundleExpr::Node::Sum: {
      Poly acc;
      for (const auto& part : e.parts()) acc += chern_character(v, part).cls;
      return {v, acc};
    }
  }
  throw std::logic_error("unreachable");
}

ChowClass todd_class(const VarietySpec& v) {
  int dim = v.dim();
  auto c = chern_classes(v, AtomKind::TangentX);
  c.resize(5, Poly(0));
  const Poly &c1 = c[1], &c2 = c[2], &c3 = c[3], &c4 = c[4];
  Poly td(1);
  td += c1 * rat(1, 2);
  td += (c1 * c1 + c2) * rat(1, 12);
  td += (c1 * c2) * rat(1, 24);
  if (dim >= 4)
    td += (-(poly_pow(c1, 4)) + (c1 * c1 * c2) * Rat(4) + (c2 * c2) * Rat(3) +
           c1 * c3 - c4) *
          rat(1, 720);
  return {v, td.truncate_geom(dim)};
}

std::string chi_cache_key(const VarietySpec& v, const BundleExpr& e) {
  return "chi|" + v.key() + "|" + e.key();
}

Poly euler_characteristic(const VarietySpec& v, const BundleExpr& e) {
  std::string key = chi_cache_key(v, e);
  if (auto hit = chi_cache_lookup(key)) return *hit;
  ChowClass ch = chern_character(v, e);
  ChowClass td = todd_class(v);
  Poly integrand = ch.cls.mul_trunc(td.cls, v.dim());
  Poly chi = ChowClass{v, integrand}.integrate();
  if (!chi.uses_only({VD}))
    throw std::logic_error("Euler characteristic is not a polynomial in d");
  chi_cache_store(key, chi);
  return chi;
}

AtomKind flag_atom(const VarietySpec& v) {
  if (v.dim() != 3)
    throw std::invalid_argument("flag engine needs a 3-dimensional carrier");
  return v.kind == VarietyKind::LogPair ? AtomKind::LogCotangent
                                        : AtomKind::CotangentX;
}

namespace {

std::mutex g_flag_mutex;
std::map<std::string, Poly> g_flag_cache;

}  // namespace

Poly flag_chi_closed_form(const VarietySpec& v, const std::array<Rat, 3>& rho) {
  std::string key = "flag|" + v.key() + "|" + to_string(rho[0]) + "," +
                    to_string(rho[1]) + "," + to_string(rho[2]);
  {
    std::lock_guard<std::mutex> lock(g_flag_mutex);
    auto it = g_flag_cache.find(key);
    if (it != g_flag_cache.end()) return it->second;
  }

  AtomKind atom = flag_atom(v);
  const int dim = 3;
  const int cap = dim + 3;  // flag bundle dimension

  // c1 of L^lambda (x) pi^* O(rho . lambda), with lambda symbolic.
  Poly expo;
  for (int i = 0; i < 3; ++i) {
    expo += Poly::variable(VL1 + i) * Poly::variable(VA1 + i);
    if (rho[i] != 0)
      expo += Poly::variable(VL1 + i) * Poly::variable(VH) * rho[i];
  }
  Poly chL = exp_trunc(expo, cap);

  // Relative Todd class from the roots a_i - a_j, i < j.
  Poly trel(1);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      Poly root = Poly::variable(VA1 + i) - Poly::variable(VA1 + j);
      trel = trel.mul_trunc(todd_series(root, cap), cap);
    }

  Poly total = chL.mul_trunc(trel, cap);

  // Pushforward to X: composite divided differences (the longest-element
  // operator, normalized so that a1^2 a2 maps to 1).
  total = total.divided_difference(VA1, VA2);
  total = total.divided_difference(VA2, VA3);
  total = total.divided_difference(VA1, VA2);

  Poly onX = substitute_symmetric(total, 3, chern_classes(v, atom), dim);
  Poly integrand = onX.mul_trunc(todd_class(v).cls, dim);
  Poly chi = ChowClass{v, integrand}.integrate();
  if (!chi.uses_only({VD, VL1, VL2, VL3}))
    throw std::logic_error("flag chi has unexpected variables");

  std::lock_guard<std::mutex> lock(g_flag_mutex);
  g_flag_cache.emplace(key, chi);
  return chi;
}

bool flag_positivity_condition(const Partition& lambda, long d, bool log_case) {
  for (size_t i = 1; i < 3; ++i)
    if (lambda.part(i - 1) <= lambda.part(i))
      throw std::invalid_argument("positivity condition needs strict lambda");
  long total = lambda.size();
  return log_case ? total > 3 * d + 2 : total > 4 * (d - 5) + 18;
}

}  // namespace jetdiff::chow
