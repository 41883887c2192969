// chow.hpp — truncated intersection rings of P^n, hypersurfaces and log
// pairs; Chern data, Todd classes, and two independent Euler-characteristic
// engines: weight-enumeration Hirzebruch-Riemann-Roch and a closed-form
// computation on the full flag bundle pushed down by divided differences.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "jetdiff/poly.hpp"
#include "jetdiff/variety.hpp"

namespace jetdiff::chow {

// Class in the truncated ring Q[d][h]/(h^{dim+1}) attached to a variety.
struct ChowClass {
  VarietySpec variety;
  Poly cls;  // variables d and h only

  // Integral over the variety: the h^dim coefficient times the degree of
  // the fundamental class (h^n integrates to 1 on P^n, h^{n-1} to d on a
  // degree-d hypersurface).
  Poly integrate() const;
};

// The degree as a ring element: the symbol d, or its numeric value.
Poly degree_poly(const VarietySpec& v);

// Total Chern class of an atom, truncated at the variety's dimension.
ChowClass chern_total(const VarietySpec& v, AtomKind atom);

// Chern classes c_1..c_r of an atom, each carrying its h-power.
std::vector<Poly> chern_classes(const VarietySpec& v, AtomKind atom);

// Chern character of a bundle expression (weight-enumeration route for
// Schur functors).
ChowClass chern_character(const VarietySpec& v, const BundleExpr& e);

// Todd class of the tangent bundle of the carrier variety.
ChowClass todd_class(const VarietySpec& v);

// chi(v, e) = integral of ch(e) . td(v); polynomial in d, exact.
Poly euler_characteristic(const VarietySpec& v, const BundleExpr& e);

// Closed-form chi(X, Gamma^(l1,l2,l3) Omega (x) O(rho . lambda)) on the full
// flag bundle of the rank-3 cotangent-type atom, symbolic in lambda (the
// variables l1,l2,l3) and in d. Agrees with euler_characteristic at every
// weakly decreasing integer lambda.
Poly flag_chi_closed_form(const VarietySpec& v, const std::array<Rat, 3>& rho);

// Sufficient positivity condition from the degree bound:
// |lambda| > 4(d-5)+18 (compact) resp. |lambda| > 3d+2 (log).
bool flag_positivity_condition(const combinat::Partition& lambda, long d,
                               bool log_case);

// The rank-3 cotangent-type atom the flag engine uses for this variety.
AtomKind flag_atom(const VarietySpec& v);

// Rewrites a polynomial symmetric in the first r Chern-root variables in
// terms of elementary symmetric functions and substitutes the given classes
// (es[i] replaces e_i, es[0] unused). Exposed for tests.
Poly substitute_symmetric(const Poly& f, int r, const std::vector<Poly>& es,
                          int geom_cap);

// Result cache (in-memory always; file-backed when a directory is set).
void set_chi_cache_dir(const std::optional<std::string>& dir);
std::optional<std::string> chi_cache_dir();
void clear_chi_memory_cache();
std::optional<Poly> chi_cache_lookup(const std::string& key);
void chi_cache_store(const std::string& key, const Poly& value);

std::string chi_cache_key(const VarietySpec& v, const BundleExpr& e);

}  // namespace jetdiff::chow
