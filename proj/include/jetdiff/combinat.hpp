// combinat.hpp — partitions, Young/skew tableaux, Yamanouchi words,
// Littlewood-Richardson coefficients, Schur ranks and Gelfand-Tsetlin
// weight enumeration.
#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "jetdiff/numeric.hpp"

namespace jetdiff::combinat {

// Weakly decreasing sequence of non-negative integers. Trailing zeros are
// stripped in the canonical form; padded views are explicit.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<long> parts);
  explicit Partition(std::vector<long> parts);

  const std::vector<long>& parts() const { return parts_; }
  size_t length() const { return parts_.size(); }
  long part(size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  long size() const;  // |lambda|, the number of cells
  bool empty() const { return parts_.empty(); }
  std::vector<long> padded(size_t r) const;

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }

  bool contains(const Partition& inner) const;
  std::string str() const;

 private:
  std::vector<long> parts_;  // strictly positive, weakly decreasing
};

// Weakly decreasing integer tuple of fixed rank; negative entries allowed.
// normalize() factors out the determinant twist.
class SchurWeight {
 public:
  SchurWeight(std::initializer_list<long> entries);
  explicit SchurWeight(std::vector<long> entries);

  const std::vector<long>& entries() const { return entries_; }
  size_t rank() const { return entries_.size(); }
  long total() const;

  struct Normalized {
    Partition partition;
    long det_twist;
  };
  // entries = partition (padded to rank) + det_twist * (1,...,1).
  Normalized normalize() const;

  std::string str() const;

 private:
  std::vector<long> entries_;
};

struct SkewShape {
  Partition outer;
  Partition inner;
  SkewShape(Partition out, Partition in);
  long cell_count() const { return outer.size() - inner.size(); }
};

// Skew tableau with the usual semistandard constraints: rows weakly
// increase, columns strictly increase.
struct SkewTableau {
  SkewShape shape;
  std::vector<std::vector<long>> filling;  // per row, cells right of inner
  bool valid() const;
  // Row word: left to right, bottom row first.
  std::vector<long> row_word() const;
};

using WeightVector = std::vector<long>;
using WeightMultiset = std::map<WeightVector, Int>;

Partition conjugate(const Partition& p);

// Number of standard tableaux, by the closed product formula; agrees with
// the hook-length count.
Int count_standard_tableaux(const Partition& p);
Int count_standard_tableaux_hook(const Partition& p);
// Exhaustive enumeration of standard fillings; oracle for small shapes.
Int count_standard_tableaux_brute(const Partition& p);

// Every suffix read from the end contains at least as many k as (k+1).
bool is_yamanouchi(const std::vector<long>& word);

// Number of LR skew tableaux of shape nu/lambda with content mu; the
// multiplicity of Gamma^nu in Gamma^lambda (x) Gamma^mu.
Int lr_coefficient(const Partition& lambda, const Partition& mu,
                   const Partition& nu);

// Rank of Gamma^w applied to a rank-r bundle.
Int schur_rank(const SchurWeight& w, size_t r);
Int schur_rank(const Partition& p, size_t r);
// Zero instead of an error when the weight needs more than r rows.
Int schur_rank_or_zero(const Partition& p, size_t r);

// Weight multiset of Gamma^p on a rank-r space via Gelfand-Tsetlin patterns.
WeightMultiset enumerate_gt_patterns(const Partition& p, size_t r);

}  // namespace jetdiff::combinat
