// variety.hpp — varieties carrying the computations and formal bundle
// expressions over them, with a canonical serialization used as cache keys.
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "jetdiff/combinat.hpp"

namespace jetdiff::chow {

enum class VarietyKind { ProjectiveSpace, HypersurfaceIn, LogPair };

// ProjectiveSpace(n), a smooth hypersurface X_d in P^n, or the log pair
// (P^3, X_d). The degree may stay symbolic, in which case every Euler
// characteristic is a polynomial in d.
struct VarietySpec {
  VarietyKind kind;
  int n;
  std::optional<long> degree;

  static VarietySpec projective_space(int n);
  static VarietySpec hypersurface(int n, std::optional<long> degree = {});
  static VarietySpec log_pair(std::optional<long> degree = {});

  // Dimension of the variety the sheaves live on (P^3 for the log pair).
  int dim() const { return kind == VarietyKind::HypersurfaceIn ? n - 1 : n; }
  std::string key() const;
  bool operator==(const VarietySpec& o) const {
    return kind == o.kind && n == o.n && degree == o.degree;
  }
};

enum class AtomKind {
  CotangentX,
  TangentX,
  AmbientCotangentRestricted,
  AmbientTangentRestricted,
  LogCotangent,
  LogTangent,
};

AtomKind dual_atom(AtomKind a);
const char* atom_name(AtomKind a);

// Twist exponent t0 + t1*d, affine in the (possibly symbolic) degree.
struct TwistExp {
  long t0 = 0;
  long t1 = 0;
  TwistExp() = default;
  TwistExp(long c, long dcoef = 0) : t0(c), t1(dcoef) {}
  bool operator==(const TwistExp& o) const { return t0 == o.t0 && t1 == o.t1; }
  std::string str() const;
};

// Formal bundle expression: Schur functor applied to an atom, line bundles,
// twists and finite direct sums.
class BundleExpr {
 public:
  enum class Node { Atom, Line, Schur, Twist, Sum };

  static BundleExpr atom(AtomKind a);
  static BundleExpr line(TwistExp t);
  static BundleExpr schur(combinat::SchurWeight w, AtomKind a);
  static BundleExpr twist(BundleExpr e, TwistExp t);
  static BundleExpr sum(std::vector<BundleExpr> parts);

  Node node() const { return node_; }
  AtomKind atom_kind() const { return atom_; }
  const combinat::SchurWeight& weight() const { return *weight_; }
  const TwistExp& twist_exp() const { return twist_; }
  const std::vector<BundleExpr>& parts() const { return parts_; }
  const BundleExpr& child() const { return parts_.at(0); }

  // Deterministic serialization; sum parts are sorted, so the key does not
  // depend on summand order.
  std::string key() const;

 private:
  BundleExpr() = default;
  Node node_ = Node::Atom;
  AtomKind atom_ = AtomKind::CotangentX;
  std::shared_ptr<const combinat::SchurWeight> weight_;
  TwistExp twist_;
  std::vector<BundleExpr> parts_;
};

// Rank of an atom on the given variety; throws on a mismatch (e.g. a log
// atom on a compact hypersurface).
size_t atom_rank(const VarietySpec& v, AtomKind a);

}  // namespace jetdiff::chow
