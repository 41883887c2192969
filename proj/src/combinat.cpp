#include "jetdiff/combinat.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace jetdiff::combinat {

namespace {

std::vector<long> canonicalize(std::vector<long> v) {
  for (size_t i = 1; i < v.size(); ++i)
    if (v[i] > v[i - 1])
      throw std::invalid_argument("partition parts must weakly decrease");
  if (!v.empty() && v.back() < 0)
    throw std::invalid_argument("partition parts must be non-negative");
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

}  // namespace

Partition::Partition(std::initializer_list<long> parts)
    : parts_(canonicalize(std::vector<long>(parts))) {}

Partition::Partition(std::vector<long> parts)
    : parts_(canonicalize(std::move(parts))) {}

long Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0L);
}

std::vector<long> Partition::padded(size_t r) const {
  if (parts_.size() > r)
    throw std::invalid_argument("partition longer than requested padding");
  std::vector<long> v = parts_;
  v.resize(r, 0);
  return v;
}

bool Partition::contains(const Partition& inner) const {
  for (size_t i = 0; i < inner.length(); ++i)
    if (inner.part(i) > part(i)) return false;
  return true;
}

std::string Partition::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < parts_.size(); ++i)
    os << (i ? "," : "") << parts_[i];
  os << ")";
  return os.str();
}

SchurWeight::SchurWeight(std::initializer_list<long> entries)
    : SchurWeight(std::vector<long>(entries)) {}

SchurWeight::SchurWeight(std::vector<long> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("empty Schur weight");
  for (size_t i = 1; i < entries_.size(); ++i)
    if (entries_[i] > entries_[i - 1])
      throw std::invalid_argument("Schur weight must weakly decrease");
}

long SchurWeight::total() const {
  return std::accumulate(entries_.begin(), entries_.end(), 0L);
}

SchurWeight::Normalized SchurWeight::normalize() const {
  long twist = entries_.back();
  std::vector<long> parts;
  for (long e : entries_) parts.push_back(e - twist);
  return {Partition(parts), twist};
}

std::string SchurWeight::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < entries_.size(); ++i)
    os << (i ? "," : "") << entries_[i];
  os << ")";
  return os.str();
}

SkewShape::SkewShape(Partition out, Partition in)
    : outer(std::move(out)), inner(std::move(in)) {
  if (!outer.contains(inner))
    throw std::invalid_argument("inner shape not contained in outer shape");
}

bool SkewTableau::valid() const {
  size_t rows = shape.outer.length();
  if (filling.size() != rows) return false;
  for (size_t i = 0; i < rows; ++i) {
    long lo = shape.inner.part(i);
    long hi = shape.outer.part(i);
    if (static_cast<long>(filling[i].size()) != hi - lo) return false;
    for (size_t j = 0; j < filling[i].size(); ++j) {
      if (filling[i][j] < 1) return false;
      if (j > 0 && filling[i][j] < filling[i][j - 1]) return false;  // rows weak
      // column strict against the row above
      if (i > 0) {
        long col = lo + static_cast<long>(j);
        long above_lo = shape.inner.part(i - 1);
        long above_hi = shape.outer.part(i - 1);
        if (col >= above_lo && col < above_hi) {
          if (filling[i][j] <= filling[i - 1][col - above_lo]) return false;
        }
      }
    }
  }
  return true;
}

std::vector<long> SkewTableau::row_word() const {
  std::vector<long> w;
  for (auto it = filling.rbegin(); it != filling.rend(); ++it)
    w.insert(w.end(), it->begin(), it->end());
  return w;
}

Partition conjugate(const Partition& p) {
  std::vector<long> cols;
  long height = static_cast<long>(p.length());
  for (long j = 0; j < p.part(0); ++j) {
    long count = 0;
    for (long i = 0; i < height; ++i)
      if (p.part(i) >= j + 1) ++count;
    cols.push_back(count);
  }
  return Partition(cols);
}

Int count_standard_tableaux(const Partition& p) {
  if (p.empty()) throw std::invalid_argument("empty partition");
  // v_(l) = (r!/d!) prod_i i!/(l_i+d-i)! prod_{i<j} ((l_i-l_j)/(j-i)+1)
  // with r = |l| and d the number of parts.
  long r = p.size();
  long dpts = static_cast<long>(p.length());
  Rat v = rat(factorial(r), factorial(dpts));
  for (long i = 1; i <= dpts; ++i)
    v *= rat(factorial(i), factorial(p.part(i - 1) + dpts - i));
  for (long i = 1; i <= dpts; ++i)
    for (long j = i + 1; j <= dpts; ++j)
      v *= rat(p.part(i - 1) - p.part(j - 1) + (j - i), j - i);
  if (!is_integer(v))
    throw std::logic_error("standard tableau count is not an integer");
  return v.get_num();
}

Int count_standard_tableaux_hook(const Partition& p) {
  Partition conj = conjugate(p);
  Int denom = 1;
  for (size_t i = 0; i < p.length(); ++i)
    for (long j = 0; j < p.part(i); ++j) {
      long hook = (p.part(i) - j) + (conj.part(j) - static_cast<long>(i)) - 1;
      denom *= hook;
    }
  Rat v = rat(factorial(p.size()), denom);
  if (!is_integer(v)) throw std::logic_error("hook length count not integral");
  return v.get_num();
}

Int count_standard_tableaux_brute(const Partition& p) {
  // Place 1..r one at a time; each prefix must form a Young diagram.
  long r = p.size();
  std::vector<long> rows(p.length(), 0);
  std::function<Int(long)> rec = [&](long placed) -> Int {
    if (placed == r) return 1;
    Int total = 0;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i] >= p.part(i)) continue;
      if (i > 0 && rows[i] >= rows[i - 1]) continue;
      ++rows[i];
      total += rec(placed + 1);
      --rows[i];
    }
    return total;
  };
  return rec(0);
}

bool is_yamanouchi(const std::vector<long>& word) {
  std::map<long, long> counts;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    long v = *it;
    if (v < 1) return false;
    ++counts[v];
    if (v > 1 && counts[v] > counts[v - 1]) return false;
  }
  return true;
}

Int lr_coefficient(const Partition& lambda, const Partition& mu,
                   const Partition& nu) {
  if (!nu.contains(lambda)) return 0;
  if (lambda.size() + mu.size() != nu.size()) return 0;
  size_t rows = nu.length();
  size_t values = mu.length();
  // Fill cells in reverse reading order (top row right-to-left, then down);
  // prefixes of that order are exactly the suffixes-from-the-end of the row
  // word, so the Yamanouchi condition can be checked incrementally.
  std::vector<std::vector<long>> cell(rows);
  for (size_t i = 0; i < rows; ++i)
    cell[i].assign(nu.part(i) - lambda.part(i), 0);
  std::vector<long> used(values + 1, 0);
  Int total = 0;
  std::function<void(size_t, long)> rec = [&](size_t i, long j) {
    if (i == rows) {
      total += 1;
      return;
    }
    long lo = lambda.part(i);
    if (j < 0) {
      rec(i + 1, nu.part(i + 1) - lambda.part(i + 1) - 1);
      return;
    }
    long col = lo + j;
    long right_bound = (j + 1 < static_cast<long>(cell[i].size()))
                           ? cell[i][j + 1]
                           : static_cast<long>(values);
    long above = 0;
    if (i > 0) {
      long above_lo = lambda.part(i - 1);
      if (col >= above_lo && col < nu.part(i - 1))
        above = cell[i - 1][col - above_lo];
    }
    for (long v = above + 1; v <= right_bound; ++v) {
      if (used[v] >= mu.part(v - 1)) continue;
      // lattice condition on the reverse reading word
      if (v > 1 && used[v] + 1 > used[v - 1]) continue;
      cell[i][j] = v;
      ++used[v];
      rec(i, j - 1);
      --used[v];
      cell[i][j] = 0;
    }
  };
  rec(0, nu.part(0) - lambda.part(0) - 1);
  return total;
}

Int schur_rank(const Partition& p, size_t r) {
  if (p.length() > r)
    throw std::invalid_argument("Schur functor undefined: weight " + p.str() +
                                " needs more than rank " + std::to_string(r));
  std::vector<long> rho = p.padded(r);
  Rat v = 1;
  for (size_t i = 0; i < r; ++i)
    for (size_t j = i + 1; j < r; ++j)
      v *= rat(rho[i] - rho[j] + static_cast<long>(j - i), j - i);
  if (!is_integer(v)) throw std::logic_error("Schur rank not integral");
  return v.get_num();
}

Int schur_rank(const SchurWeight& w, size_t r) {
  if (w.rank() > r)
    throw std::invalid_argument("Schur weight longer than bundle rank");
  std::vector<long> entries = w.entries();
  if (entries.back() < 0 && w.rank() < r)
    throw std::invalid_argument(
        "negative Schur weight must be given at full bundle rank");
  entries.resize(r, 0);
  auto [p, twist] = SchurWeight(entries).normalize();
  (void)twist;  // det twists do not change rank
  return schur_rank(p, r);
}

Int schur_rank_or_zero(const Partition& p, size_t r) {
  if (p.length() > r) return 0;
  return schur_rank(p, r);
}

WeightMultiset enumerate_gt_patterns(const Partition& p, size_t r) {
  if (p.length() > r)
    throw std::invalid_argument("partition longer than rank in GT enumeration");
  WeightMultiset out;
  std::vector<long> top = p.padded(r);
  // rows[k] has k+1 entries; rows[r-1] = top. Build downward with the
  // interlacing constraint upper[i] >= lower[i] >= upper[i+1].
  std::vector<std::vector<long>> rows(r);
  rows[r - 1] = top;
  std::function<void(size_t)> rec = [&](size_t k) {
    if (k == 0) {
      WeightVector w(r);
      long prev = 0;
      for (size_t i = 0; i < r; ++i) {
        long sum = std::accumulate(rows[i].begin(), rows[i].end(), 0L);
        w[i] = sum - prev;
        prev = sum;
      }
      out[w] += 1;
      return;
    }
    const std::vector<long>& upper = rows[k];
    std::vector<long>& lower = rows[k - 1];
    lower.assign(k, 0);
    std::function<void(size_t)> fill = [&](size_t i) {
      if (i == k) {
        rec(k - 1);
        return;
      }
      for (long v = upper[i + 1]; v <= upper[i]; ++v) {
        lower[i] = v;
        fill(i + 1);
      }
    };
    fill(0);
  };
  rec(r - 1);
  return out;
}

}  // namespace jetdiff::combinat
