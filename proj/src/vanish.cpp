#include "jetdiff/vanish.hpp"

#include <stdexcept>

namespace jetdiff::vanish {

using chow::AtomKind;
using chow::BundleExpr;
using chow::TwistExp;
using chow::VarietySpec;
using combinat::Partition;
using combinat::SchurWeight;

Poly Resolution::alternating_chi_defect() const {
  Poly acc;
  for (const auto& term : terms) {
    Poly chi = chow::euler_characteristic(variety, term.bundle) *
               Rat(term.multiplicity);
    if (term.j % 2 == 0)
      acc += chi;
    else
      acc -= chi;
  }
  acc -= chow::euler_characteristic(variety, resolved);
  return acc;
}

namespace {

Int expr_rank(const VarietySpec& v, const BundleExpr& e) {
  switch (e.node()) {
    case BundleExpr::Node::Line:
      return 1;
    case BundleExpr::Node::Atom:
      return Int(atom_rank(v, e.atom_kind()));
    case BundleExpr::Node::Schur:
      return combinat::schur_rank(e.weight(), atom_rank(v, e.atom_kind()));
    case BundleExpr::Node::Twist:
      return expr_rank(v, e.child());
    case BundleExpr::Node::Sum: {
      Int total = 0;
      for (const auto& p : e.parts()) total += expr_rank(v, p);
      return total;
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

Int Resolution::alternating_rank_defect() const {
  Int acc = 0;
  for (const auto& term : terms) {
    Int r = expr_rank(variety, term.bundle) * term.multiplicity;
    acc += (term.j % 2 == 0) ? r : -r;
  }
  acc -= expr_rank(variety, resolved);
  return acc;
}

Resolution resolution_hypersurface(long b1, long b2) {
  if (!(b1 >= b2 && b2 >= 1))
    throw std::invalid_argument("resolution_hypersurface needs b1 >= b2 >= 1");
  VarietySpec v = VarietySpec::hypersurface(4);
  Partition mu({b1, b2});
  auto amb = [&](long c1, long c2, long twist_d) -> std::optional<BundleExpr> {
    if (c1 < c2 || c2 < 0) return std::nullopt;  // not a partition shape
    std::vector<long> w = Partition({c1, c2}).padded(4);
    BundleExpr e =
        BundleExpr::schur(SchurWeight(w), AtomKind::AmbientCotangentRestricted);
    if (twist_d != 0) e = BundleExpr::twist(e, TwistExp(0, twist_d));
    return e;
  };
  Resolution res{v, {}, *amb(0, 0, 0)};
  // j-th term: columns nu = (1^j) of O(-d), partners rho with c_{nu,rho}^mu.
  res.terms.push_back({0, *amb(b1, b2, 0), 1});
  for (auto [c1, c2] : {std::pair<long, long>{b1 - 1, b2},
                        std::pair<long, long>{b1, b2 - 1}}) {
    auto e = amb(c1, c2, -1);
    if (!e) continue;
    Int mult = combinat::lr_coefficient(Partition({1}), Partition({c1, c2}), mu);
    if (mult != 0) res.terms.push_back({1, *e, mult});
  }
  {
    auto e = amb(b1 - 1, b2 - 1, -2);
    Int mult =
        combinat::lr_coefficient(Partition({1, 1}), Partition({b1 - 1, b2 - 1}), mu);
    if (e && mult != 0) res.terms.push_back({2, *e, mult});
  }
  res.resolved =
      BundleExpr::schur(SchurWeight({b1, b2, 0}), AtomKind::CotangentX);
  return res;
}

Int s_rank(long x, long y) {
  if (x < y || y < 0) return 0;
  return combinat::schur_rank(Partition({x, y}), 5);
}

Resolution resolution_euler(long b1, long b2) {
  if (!(b1 >= b2 && b2 >= 1))
    throw std::invalid_argument("resolution_euler needs b1 >= b2 >= 1");
  VarietySpec v = VarietySpec::projective_space(4);
  Resolution res{v, {}, BundleExpr::line(TwistExp(0))};
  res.terms.push_back({0, BundleExpr::line(TwistExp(b1 + b2)), s_rank(b1, b2)});
  for (auto [c1, c2] : {std::pair<long, long>{b1 - 1, b2},
                        std::pair<long, long>{b1, b2 - 1}}) {
    Int mult = s_rank(c1, c2);
    if (mult != 0)
      res.terms.push_back({1, BundleExpr::line(TwistExp(b1 + b2 - 1)), mult});
  }
  {
    Int mult = s_rank(b1 - 1, b2 - 1);
    if (mult != 0)
      res.terms.push_back({2, BundleExpr::line(TwistExp(b1 + b2 - 2)), mult});
  }
  res.resolved = BundleExpr::schur(SchurWeight({b1, b2, 0, 0}),
                                   AtomKind::TangentX);
  return res;
}

bool vanish_ambient(int q, long b1, long b2, long l, long d) {
  if (!(b1 >= b2 && b2 >= 1))
    throw std::invalid_argument("vanish_ambient needs b1 >= b2 >= 1");
  switch (q) {
    case 0: return l - b1 - b2 < 0;
    case 1: return l - b1 - b2 + 1 < 0;
    case 2: return l - b1 - b2 + 2 < 0;
    case 3: return b1 + b2 - l + (d - 5) < 0;
    default: throw std::invalid_argument("q must be in {0,1,2,3}");
  }
}

bool vanish_h0_hypersurface(long b1, long b2, long l, long d) {
  if (!(b1 >= b2 && b2 >= 1))
    throw std::invalid_argument("vanish_h0_hypersurface needs b1 >= b2 >= 1");
  if (d < 2) throw std::invalid_argument("vanish_h0_hypersurface needs d >= 2");
  return l - b1 - b2 < 0;
}

bool vanish_sym(long m) { return m >= 1; }

bool vanish_hq_positive(const SchurWeight& a, long d, HqVariant var) {
  if (a.rank() != 3)
    throw std::invalid_argument("vanish_hq_positive expects a length-3 weight");
  long a1 = a.entries()[0], a2 = a.entries()[1], a3 = a.entries()[2];
  if (var == HqVariant::Demailly) return a3 * (d - 1) > 2 * (a1 + a2) + 3 * (d - 1);
  return a3 * (d - 1) > 2 * (a1 + a2) + 3 * d - 8;
}

bool vanish_bruckmann_rackwitz(const Partition& T, int n, int p) {
  Partition cols = combinat::conjugate(T);
  long sum = 0;
  for (int i = 0; i < n - p; ++i) sum += cols.part(i);
  return sum < p;
}

bool vanish_t10(const SchurWeight& a, long twist_k) {
  long total = a.total();
  if (twist_k >= 0 && total > 0) return true;
  if (twist_k > 0 && total >= 0) return true;
  return false;
}

std::optional<Rat> chi_equals_h0(const SchurWeight& w, long d) {
  if (!vanish_hq_positive(w, d, HqVariant::Demailly)) return std::nullopt;
  VarietySpec v = VarietySpec::hypersurface(4, d);
  Poly chi = chow::euler_characteristic(
      v, BundleExpr::schur(w, AtomKind::CotangentX));
  return chi.eval({{VD, Rat(d)}});
}

}  // namespace jetdiff::vanish
