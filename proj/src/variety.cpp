#include "jetdiff/variety.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace jetdiff::chow {

VarietySpec VarietySpec::projective_space(int n) {
  if (n != 3 && n != 4) throw std::invalid_argument("only P^3 and P^4 supported");
  return {VarietyKind::ProjectiveSpace, n, {}};
}

VarietySpec VarietySpec::hypersurface(int n, std::optional<long> degree) {
  if (n != 3 && n != 4) throw std::invalid_argument("only n in {3,4} supported");
  if (degree && *degree < 1) throw std::invalid_argument("degree must be >= 1");
  return {VarietyKind::HypersurfaceIn, n, degree};
}

VarietySpec VarietySpec::log_pair(std::optional<long> degree) {
  if (degree && *degree < 1) throw std::invalid_argument("degree must be >= 1");
  return {VarietyKind::LogPair, 3, degree};
}

std::string VarietySpec::key() const {
  std::ostringstream os;
  switch (kind) {
    case VarietyKind::ProjectiveSpace: os << "P" << n; break;
    case VarietyKind::HypersurfaceIn: os << "X" << n; break;
    case VarietyKind::LogPair: os << "Log" << n; break;
  }
  if (kind != VarietyKind::ProjectiveSpace)
    os << "[" << (degree ? std::to_string(*degree) : "d") << "]";
  return os.str();
}

AtomKind dual_atom(AtomKind a) {
  switch (a) {
    case AtomKind::CotangentX: return AtomKind::TangentX;
    case AtomKind::TangentX: return AtomKind::CotangentX;
    case AtomKind::AmbientCotangentRestricted:
      return AtomKind::AmbientTangentRestricted;
    case AtomKind::AmbientTangentRestricted:
      return AtomKind::AmbientCotangentRestricted;
    case AtomKind::LogCotangent: return AtomKind::LogTangent;
    case AtomKind::LogTangent: return AtomKind::LogCotangent;
  }
  throw std::logic_error("unreachable");
}

const char* atom_name(AtomKind a) {
  switch (a) {
    case AtomKind::CotangentX: return "cotangent";
    case AtomKind::TangentX: return "tangent";
    case AtomKind::AmbientCotangentRestricted: return "ambient-cotangent";
    case AtomKind::AmbientTangentRestricted: return "ambient-tangent";
    case AtomKind::LogCotangent: return "log-cotangent";
    case AtomKind::LogTangent: return "log-tangent";
  }
  throw std::logic_error("unreachable");
}

std::string TwistExp::str() const {
  std::ostringstream os;
  if (t1 == 0) {
    os << t0;
  } else {
    if (t1 == 1)
      os << "d";
    else if (t1 == -1)
      os << "-d";
    else
      os << t1 << "d";
    if (t0 > 0) os << "+" << t0;
    if (t0 < 0) os << t0;
  }
  return os.str();
}

BundleExpr BundleExpr::atom(AtomKind a) {
  BundleExpr e;
  e.node_ = Node::Atom;
  e.atom_ = a;
  return e;
}

BundleExpr BundleExpr::line(TwistExp t) {
  BundleExpr e;
  e.node_ = Node::Line;
  e.twist_ = t;
  return e;
}

BundleExpr BundleExpr::schur(combinat::SchurWeight w, AtomKind a) {
  BundleExpr e;
  e.node_ = Node::Schur;
  e.atom_ = a;
  e.weight_ = std::make_shared<const combinat::SchurWeight>(std::move(w));
  return e;
}

BundleExpr BundleExpr::twist(BundleExpr inner, TwistExp t) {
  BundleExpr e;
  e.node_ = Node::Twist;
  e.twist_ = t;
  e.parts_.push_back(std::move(inner));
  return e;
}

BundleExpr BundleExpr::sum(std::vector<BundleExpr> parts) {
  if (parts.empty()) throw std::invalid_argument("empty bundle sum");
  BundleExpr e;
  e.node_ = Node::Sum;
  e.parts_ = std::move(parts);
  return e;
}

std::string BundleExpr::key() const {
  switch (node_) {
    case Node::Atom:
      return atom_name(atom_);
    case Node::Line:
      return "O(" + twist_.str() + ")";
    case Node::Schur: {
      std::ostringstream os;
      os << "S" << weight_->str() << "(" << atom_name(atom_) << ")";
      return os.str();
    }
    case Node::Twist:
      return "tw(" + parts_[0].key() + ";" + twist_.str() + ")";
    case Node::Sum: {
      std::vector<std::string> keys;
      keys.reserve(parts_.size());
      for (const auto& p : parts_) keys.push_back(p.key());
      std::sort(keys.begin(), keys.end());
      std::string out = "sum(";
      for (size_t i = 0; i < keys.size(); ++i)
        out += (i ? "|" : "") + keys[i];
      return out + ")";
    }
  }
  throw std::logic_error("unreachable");
}

size_t atom_rank(const VarietySpec& v, AtomKind a) {
  switch (a) {
    case AtomKind::CotangentX:
    case AtomKind::TangentX:
      return static_cast<size_t>(v.dim());
    case AtomKind::AmbientCotangentRestricted:
    case AtomKind::AmbientTangentRestricted:
      if (v.kind != VarietyKind::HypersurfaceIn)
        throw std::invalid_argument(
            "ambient restricted atoms require a hypersurface");
      return static_cast<size_t>(v.n);
    case AtomKind::LogCotangent:
    case AtomKind::LogTangent:
      if (v.kind != VarietyKind::LogPair)
        throw std::invalid_argument("log atoms require a log pair");
      return 3;
  }
  throw std::logic_error("unreachable");
}

}  // namespace jetdiff::chow
