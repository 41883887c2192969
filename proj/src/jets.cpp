#include "jetdiff/jets.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "jetdiff/parallel.hpp"

namespace jetdiff::jets {

using chow::VarietySpec;
using combinat::Partition;

namespace {

bool lambda_lex_greater(const Partition& a, const Partition& b) {
  for (size_t i = 0; i < 3; ++i) {
    if (a.part(i) != b.part(i)) return a.part(i) > b.part(i);
  }
  return false;
}

}  // namespace

JetDecomposition decompose_gr3(long m) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  JetDecomposition out{m, 3, {}};
  // Substituting x = l1-l2-gamma, y = l2-l3-gamma, z = l3 turns the
  // constraint system into x + 3y + 6z = m - 5 gamma with x,y,z >= 0.
  for (long gamma = 0; 5 * gamma <= m; ++gamma) {
    long n = m - 5 * gamma;
    for (long z = 0; 6 * z <= n; ++z)
      for (long y = 0; 3 * y + 6 * z <= n; ++y) {
        long x = n - 3 * y - 6 * z;
        long l1 = x + y + z + 2 * gamma;
        long l2 = y + z + gamma;
        long l3 = z;
        out.pieces.push_back({gamma, Partition({l1, l2, l3})});
      }
  }
  std::sort(out.pieces.begin(), out.pieces.end(),
            [](const JetPiece& a, const JetPiece& b) {
              if (a.gamma != b.gamma) return a.gamma < b.gamma;
              return lambda_lex_greater(a.lambda, b.lambda);
            });
  return out;
}

JetDecomposition decompose_gr2(long m) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  JetDecomposition out{m, 2, {}};
  for (long l2 = 0; 3 * l2 <= m; ++l2) {
    long l1 = m - 2 * l2;
    if (l1 < l2) break;
    out.pieces.push_back({0, Partition({l1, l2})});
  }
  std::sort(out.pieces.begin(), out.pieces.end(),
            [](const JetPiece& a, const JetPiece& b) {
              return lambda_lex_greater(a.lambda, b.lambda);
            });
  return out;
}

namespace {

struct MonomialTable {
  std::vector<std::array<int, 3>> monos;
  int index[7][7][7];
  MonomialTable() {
    int idx = 0;
    for (int i = 0; i <= kMonomialDegreeCap; ++i)
      for (int j = 0; i + j <= kMonomialDegreeCap; ++j)
        for (int k = 0; i + j + k <= kMonomialDegreeCap; ++k) {
          monos.push_back({i, j, k});
          index[i][j][k] = idx++;
        }
  }
};

const MonomialTable& mono_table() {
  static MonomialTable t;
  return t;
}

}  // namespace

int monomial_count() { return static_cast<int>(mono_table().monos.size()); }

int monomial_index(int i, int j, int k) {
  if (i < 0 || j < 0 || k < 0 || i + j + k > kMonomialDegreeCap)
    throw std::invalid_argument("monomial exponent out of range");
  return mono_table().index[i][j][k];
}

std::vector<Int> lambda_power_sums_gr3(long m, bool skip_gamma_zero) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  // accumulators stay below ~m^9 < 2^127 for m up to ~30000
  if (m > 20000) throw std::invalid_argument("m out of the supported range");
  const auto& table = mono_table();
  const int count = static_cast<int>(table.monos.size());
  std::vector<__int128> acc(count, 0);
  __int128 p1[7], p2[7], p3[7];
  for (long gamma = skip_gamma_zero ? 1 : 0; 5 * gamma <= m; ++gamma) {
    long n = m - 5 * gamma;
    for (long z = 0; 6 * z <= n; ++z)
      for (long y = 0; 3 * y + 6 * z <= n; ++y) {
        long x = n - 3 * y - 6 * z;
        int64_t l1 = x + y + z + 2 * gamma;
        int64_t l2 = y + z + gamma;
        int64_t l3 = z;
        p1[0] = p2[0] = p3[0] = 1;
        for (int e = 1; e <= kMonomialDegreeCap; ++e) {
          p1[e] = p1[e - 1] * l1;
          p2[e] = p2[e - 1] * l2;
          p3[e] = p3[e - 1] * l3;
        }
        for (int t = 0; t < count; ++t) {
          const auto& mo = table.monos[t];
          acc[t] += p1[mo[0]] * p2[mo[1]] * p3[mo[2]];
        }
      }
  }
  std::vector<Int> out(count);
  for (int t = 0; t < count; ++t) out[t] = int_from_i128(acc[t]);
  return out;
}

std::vector<Poly> lambda_coefficient_table(const Poly& p) {
  std::vector<Poly> out(monomial_count());
  for (const auto& [mo, c] : p.terms()) {
    int i = mo[VL1], j = mo[VL2], k = mo[VL3];
    if (i + j + k > kMonomialDegreeCap)
      throw std::invalid_argument("lambda degree exceeds table cap");
    Mono rest = mo;
    rest[VL1] = rest[VL2] = rest[VL3] = 0;
    Poly t;
    t.add_term(rest, c);
    out[monomial_index(i, j, k)] += t;
  }
  return out;
}

namespace {

std::mutex g_psums_mutex;
std::map<std::pair<long, bool>, std::shared_ptr<const std::vector<Int>>>
    g_psums_cache;

std::shared_ptr<const std::vector<Int>> power_sums_cached(long m, bool skip0) {
  {
    std::lock_guard<std::mutex> lock(g_psums_mutex);
    auto it = g_psums_cache.find({m, skip0});
    if (it != g_psums_cache.end()) return it->second;
  }
  auto val = std::make_shared<const std::vector<Int>>(
      lambda_power_sums_gr3(m, skip0));
  std::lock_guard<std::mutex> lock(g_psums_mutex);
  return g_psums_cache.emplace(std::make_pair(m, skip0), val).first->second;
}

Poly chi_piece_table_dot(const std::vector<Poly>& table,
                         const std::vector<Int>& sums) {
  Poly acc;
  for (size_t t = 0; t < table.size(); ++t) {
    if (table[t].is_zero() || sums[t] == 0) continue;
    acc += table[t] * Rat(sums[t]);
  }
  return acc;
}

}  // namespace

Poly chi_jets(const VarietySpec& v, int order, long m) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  if (order != 2 && order != 3)
    throw std::invalid_argument("order must be 2 or 3");
  Poly chi_poly = chow::flag_chi_closed_form(v, {Rat(0), Rat(0), Rat(0)});
  if (order == 3) {
    static std::mutex table_mutex;
    static std::map<std::string, std::vector<Poly>> tables;
    const std::vector<Poly>* table;
    {
      std::lock_guard<std::mutex> lock(table_mutex);
      auto [it, inserted] = tables.try_emplace(v.key());
      if (inserted) it->second = lambda_coefficient_table(chi_poly);
      table = &it->second;
    }
    return chi_piece_table_dot(*table, *power_sums_cached(m, false));
  }
  Poly acc;
  for (const auto& piece : decompose_gr2(m).pieces) {
    Poly val = chi_poly.subst_rat(VL1, Rat(piece.lambda.part(0)))
                   .subst_rat(VL2, Rat(piece.lambda.part(1)))
                   .subst_rat(VL3, Rat(piece.lambda.part(2)));
    acc += val;
  }
  return acc;
}

Poly QuasiPolynomial::eval(long m) const {
  if (m < 0) throw std::invalid_argument("m must be non-negative");
  const Poly& p = residue[m % period];
  return p.subst_rat(VM, Rat(m));
}

Poly QuasiPolynomial::leading(int degree) const {
  Poly lead = residue.at(0).coeff_of(VM, degree);
  for (const auto& p : residue)
    if (p.coeff_of(VM, degree) != lead)
      throw std::logic_error("leading coefficient depends on the residue");
  return lead;
}

namespace {

// Newton interpolation through (nodes[i], values[i]); result in VM.
Poly newton_interpolate(const std::vector<long>& nodes,
                        const std::vector<Poly>& values) {
  size_t n = nodes.size();
  std::vector<std::vector<Poly>> levels{values};
  for (size_t k = 1; k < n; ++k) {
    std::vector<Poly> next(n - k);
    for (size_t i = 0; i + k < n; ++i) {
      Poly diff = levels[k - 1][i + 1] - levels[k - 1][i];
      next[i] = diff * rat(1, nodes[i + k] - nodes[i]);
    }
    levels.push_back(std::move(next));
  }
  Poly result = levels[n - 1][0];
  for (size_t k = n - 1; k-- > 0;) {
    Poly factor = Poly::variable(VM) - Poly(nodes[k]);
    result = result * factor + levels[k][0];
  }
  return result;
}

}  // namespace

FitResult fit_quasi_polynomial(const std::function<Poly(long)>& values,
                               int degree, unsigned jobs) {
  const int fit_points = degree + 1;
  const int holdout = 3;
  const int per_residue = fit_points + holdout;
  const long max_period = 60;

  std::map<long, Poly> cache;
  std::mutex cache_mutex;
  auto ensure = [&](const std::vector<long>& ms) {
    std::vector<long> missing;
    {
      std::lock_guard<std::mutex> lock(cache_mutex);
      for (long m : ms)
        if (!cache.count(m)) missing.push_back(m);
    }
    parallel_for(missing.size(), jobs, [&](size_t i) {
      Poly v = values(missing[i]);
      std::lock_guard<std::mutex> lock(cache_mutex);
      cache.emplace(missing[i], v);
    });
  };

  for (long period = 1; period <= max_period; ++period) {
    bool ok = true;
    std::vector<Poly> residue(period);
    for (long r = 0; r < period && ok; ++r) {
      std::vector<long> ms;
      long first = (r == 0) ? period : r;
      for (int t = 0; t < per_residue; ++t) ms.push_back(first + t * period);
      ensure(ms);
      std::vector<Poly> vals;
      for (long mval : ms) {
        std::lock_guard<std::mutex> lock(cache_mutex);
        vals.push_back(cache.at(mval));
      }
      std::vector<long> fit_nodes(ms.begin(), ms.begin() + fit_points);
      std::vector<Poly> fit_vals(vals.begin(), vals.begin() + fit_points);
      Poly p = newton_interpolate(fit_nodes, fit_vals);
      if (p.degree_in(VM) > degree) {
        ok = false;
        break;
      }
      for (int t = fit_points; t < per_residue; ++t) {
        if (p.subst_rat(VM, Rat(ms[t])) != vals[t]) {
          ok = false;
          break;
        }
      }
      if (ok) residue[r] = p;
    }
    if (!ok) continue;
    QuasiPolynomial qp{period, std::move(residue)};
    Poly lead = qp.leading(degree);
    return {std::move(qp), std::move(lead)};
  }
  throw std::runtime_error(
      "quasi-polynomial fit failed: no period <= 60 validates");
}

FitResult fit_leading(const VarietySpec& v, int order, int degree,
                      unsigned jobs) {
  return fit_quasi_polynomial(
      [&v, order](long m) { return chi_jets(v, order, m); }, degree, jobs);
}

}  // namespace jetdiff::jets
