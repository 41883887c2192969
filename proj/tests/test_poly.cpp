#include <doctest.h>

#include "jetdiff/poly.hpp"

using namespace jetdiff;

namespace {
Poly v(int var, int e = 1) { return Poly::variable(var, e); }
}  // namespace

TEST_CASE("polynomial ring basics") {
  Poly d = v(VD), h = v(VH);
  Poly p = (d + Poly(1)) * (d - Poly(1));
  CHECK(p == d * d - Poly(1));
  CHECK((p - p).is_zero());
  CHECK(p.degree_in(VD) == 2);
  CHECK(p.str() == "-1 + d^2");

  Poly q = (Poly(1) + h) * (Poly(1) + h) * (Poly(1) + h);
  CHECK(q.coeff_of(VH, 2) == Poly(3));
  CHECK(q.truncate_geom(1) == Poly(1) + h * Rat(3));
}

TEST_CASE("geometric truncation in products") {
  Poly h = v(VH);
  Poly a = Poly(1) + h + h * h;
  Poly b = a.mul_trunc(a, 2);
  CHECK(b.coeff_of(VH, 2) == Poly(3));
  CHECK(b.degree_in(VH) == 2);
}

TEST_CASE("substitution and evaluation") {
  Poly p = v(VD, 2) * v(VL1) + v(VL1, 3);
  Poly q = p.subst_rat(VL1, Rat(2));
  CHECK(q == v(VD, 2) * Rat(2) + Poly(8));
  CHECK(p.eval({{VD, Rat(3)}, {VL1, Rat(2)}}) == Rat(26));

  Poly r = p.subst(VL1, v(VM));
  CHECK(r == v(VD, 2) * v(VM) + v(VM, 3));
}

TEST_CASE("exact division by a variable difference") {
  Poly a1 = v(VA1), a2 = v(VA2);
  Poly f = a1 * a1 - a2 * a2;
  CHECK(f.divide_by_diff(VA1, VA2) == a1 + a2);
  Poly g = a1 * a1 * a1 - a2 * a2 * a2;
  CHECK(g.divide_by_diff(VA1, VA2) == a1 * a1 + a1 * a2 + a2 * a2);
  CHECK_THROWS((a1 * a1).divide_by_diff(VA1, VA2));
}

TEST_CASE("divided differences") {
  Poly a1 = v(VA1), a2 = v(VA2), a3 = v(VA3);
  // partial_i on a symmetric polynomial vanishes
  CHECK((a1 + a2).divided_difference(VA1, VA2).is_zero());
  CHECK((a1 * a2).divided_difference(VA1, VA2).is_zero());
  // the longest-element normalization: a1^2 a2 -> 1
  Poly f = a1 * a1 * a2;
  Poly pushed = f.divided_difference(VA1, VA2)
                    .divided_difference(VA2, VA3)
                    .divided_difference(VA1, VA2);
  CHECK(pushed == Poly(1));
  // braid relation: the two reduced words give the same operator
  Poly g = a1 * a1 * a1 * a2 * a2 + a1 * a2 * a3 * a3 * a3;
  Poly w1 = g.divided_difference(VA1, VA2)
                .divided_difference(VA2, VA3)
                .divided_difference(VA1, VA2);
  Poly w2 = g.divided_difference(VA2, VA3)
                .divided_difference(VA1, VA2)
                .divided_difference(VA2, VA3);
  CHECK(w1 == w2);
}

TEST_CASE("series helpers") {
  Poly h = v(VH);
  Poly e = exp_trunc(h, 3);
  CHECK(e.coeff_of(VH, 0) == Poly(1));
  CHECK(e.coeff_of(VH, 2) == Poly(rat(1, 2)));
  CHECK(e.coeff_of(VH, 3) == Poly(rat(1, 6)));

  // x/(1-e^{-x}) = 1 + x/2 + x^2/12 + 0 x^3 - x^4/720 + 0 x^5 + x^6/30240
  Poly t = todd_series(h, 6);
  CHECK(t.coeff_of(VH, 1) == Poly(rat(1, 2)));
  CHECK(t.coeff_of(VH, 2) == Poly(rat(1, 12)));
  CHECK(t.coeff_of(VH, 3).is_zero());
  CHECK(t.coeff_of(VH, 4) == Poly(rat(-1, 720)));
  CHECK(t.coeff_of(VH, 5).is_zero());
  CHECK(t.coeff_of(VH, 6) == Poly(rat(1, 30240)));

  Poly inv = invert_one_plus(h, 4);
  CHECK((inv * (Poly(1) + h)).truncate_geom(4) == Poly(1));
}

TEST_CASE("homogeneous parts") {
  Poly p = v(VL1, 2) * v(VL2) + v(VL1) * v(VD) + Poly(5);
  CHECK(p.homogeneous_part({VL1, VL2, VL3}, 3) == v(VL1, 2) * v(VL2));
  CHECK(p.homogeneous_part({VL1, VL2, VL3}, 1) == v(VL1) * v(VD));
  CHECK(p.homogeneous_part({VL1, VL2, VL3}, 0) == Poly(5));
  CHECK(p.degree_in_set({VL1, VL2}) == 3);
}
