#include "qhorn/polytope.hpp"

#include "parallel.hpp"

#include <algorithm>
#include <random>

namespace qhorn {

IneqSystem enumerate_inequalities(int n, int s, CoefficientCache& cache, int jobs) {
  if (n < 2) throw std::invalid_argument("enumerate_inequalities: need n >= 2");
  if (s < 3) throw std::invalid_argument("enumerate_inequalities: need s >= 3");
  IneqSystem sys;
  sys.n = n;
  sys.s = s;
  for (int r = 1; r < n; ++r) {
    auto idx = all_indices(r, n);
    std::vector<int> codims(idx.size());
    for (size_t i = 0; i < idx.size(); ++i) codims[i] = codim(idx[i]);
    std::vector<std::vector<size_t>> picks;
    std::vector<size_t> pick(s, 0);
    while (true) {
      long long total = 0;
      for (int j = 0; j < s; ++j) total += codims[pick[j]];
      long long num = total - static_cast<long long>(r) * (n - r);
      if (num >= 0 && num % n == 0) picks.push_back(pick);
      int j = s - 1;
      while (j >= 0 && pick[j] + 1 == idx.size()) pick[j--] = 0;
      if (j < 0) break;
      ++pick[j];
    }
    std::vector<Int> values(picks.size());
    parallel_for(picks.size(), jobs, [&](size_t i) {
      std::vector<SchubertIndex> tuple;
      long long total = 0;
      for (int j = 0; j < s; ++j) {
        tuple.push_back(idx[picks[i][j]]);
        total += codims[picks[i][j]];
      }
      int d = static_cast<int>((total - static_cast<long long>(r) * (n - r)) / n);
      values[i] = gw_invariant(GwProblem(n, r, d, 0, std::move(tuple)), cache);
    });
    for (size_t i = 0; i < picks.size(); ++i) {
      if (values[i] != 1) continue;
      IneqRecord rec;
      rec.r = r;
      long long total = 0;
      for (int j = 0; j < s; ++j) {
        rec.indices.push_back(idx[picks[i][j]]);
        total += codims[picks[i][j]];
      }
      rec.d = static_cast<int>((total - static_cast<long long>(r) * (n - r)) / n);
      rec.gw = 1;
      sys.records.push_back(std::move(rec));
    }
  }
  return sys;
}

void classify_records(IneqSystem& sys, int M, CoefficientCache& cache, int jobs) {
  parallel_for(sys.records.size(), jobs, [&](size_t i) {
    auto& rec = sys.records[i];
    rec.polyrigid = is_polyrigid(rec.problem(sys.n), M, cache);
  });
}

IneqSystem collapse_orbits(const IneqSystem& sys) {
  IneqSystem out;
  out.n = sys.n;
  out.s = sys.s;
  std::vector<std::string> seen;
  for (const auto& rec : sys.records) {
    std::string key = rec.problem(sys.n).sorted_key();
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
    seen.push_back(key);
    out.records.push_back(rec);
  }
  return out;
}

namespace {

// LP variables: a^l_t for l = 0..s-1, t = 0..n-2 only; the sum-zero relation
// eliminates the last coordinate, a^l_n = -(a^l_1 + ... + a^l_{n-1}). With
// the equalities gone every domain row is "<= nonnegative", so the all-zero
// point is a ready-made feasible basis.
void add_simplex_domain(LpProblem& lp, int n, int s) {
  const int w = n - 1;
  for (int l = 0; l < s; ++l) {
    for (int t = 0; t + 1 < n; ++t) {  // a_{t+2} - a_{t+1} <= 0 (1-based)
      LpRow row;
      row.coeffs.assign(lp.nvars, Rat(0));
      if (t + 1 < w) {
        row.coeffs[l * w + t + 1] = 1;
        row.coeffs[l * w + t] = -1;
      } else {
        // a_n - a_{n-1} <= 0 with a_n substituted.
        for (int u = 0; u < w; ++u) row.coeffs[l * w + u] = -1;
        row.coeffs[l * w + w - 1] -= 1;
      }
      row.rhs = 0;
      lp.rows.push_back(std::move(row));
    }
    {
      LpRow row;  // a_1 - a_n <= 1 with a_n substituted
      row.coeffs.assign(lp.nvars, Rat(0));
      for (int u = 0; u < w; ++u) row.coeffs[l * w + u] = 1;
      row.coeffs[l * w] += 1;
      row.rhs = 1;
      lp.rows.push_back(std::move(row));
    }
  }
}

LpRow record_row(const IneqRecord& rec, int n, int s) {
  const int w = n - 1;
  LpRow row;
  row.coeffs.assign(w * s, Rat(0));
  for (int l = 0; l < s; ++l) {
    bool has_n = false;
    for (int t : rec.indices[l].elements) {
      if (t == n)
        has_n = true;
      else
        row.coeffs[l * w + t - 1] += 1;
    }
    if (has_n)
      for (int u = 0; u < w; ++u) row.coeffs[l * w + u] -= 1;
  }
  row.rhs = rec.d;
  return row;
}

std::vector<ConjugacyClass> unflatten(const std::vector<Rat>& x, int n, int s) {
  const int w = n - 1;
  std::vector<ConjugacyClass> A;
  for (int l = 0; l < s; ++l) {
    std::vector<Rat> c(x.begin() + l * w, x.begin() + (l + 1) * w);
    Rat last = 0;
    for (const auto& v : c) last -= v;
    c.push_back(last);
    A.emplace_back(std::move(c));
  }
  return A;
}

}  // namespace

bool lp_irredundant(size_t k, const IneqSystem& sys, std::vector<ConjugacyClass>* witness) {
  if (k >= sys.records.size()) throw std::invalid_argument("lp_irredundant: bad index");
  const int n = sys.n, s = sys.s;
  LpProblem lp;
  lp.nvars = (n - 1) * s;
  add_simplex_domain(lp, n, s);
  for (size_t j = 0; j < sys.records.size(); ++j) {
    if (j == k) continue;
    lp.rows.push_back(record_row(sys.records[j], n, s));
  }
  LpRow target = record_row(sys.records[k], n, s);
  lp.objective = target.coeffs;
  LpResult res = lp_max(lp);
  if (res.status == LpStatus::Infeasible)
    throw std::logic_error("lp_irredundant: domain infeasible");
  if (res.status == LpStatus::Unbounded)
    throw std::logic_error("lp_irredundant: bounded domain reported unbounded");
  bool irredundant = res.optimum - Rat(sys.records[k].d) > 0;
  if (witness && irredundant) *witness = unflatten(res.witness, n, s);
  return irredundant;
}

void classify_lp(IneqSystem& sys, int jobs) {
  parallel_for(sys.records.size(), jobs,
               [&](size_t k) { sys.records[k].lp_irredundant = lp_irredundant(k, sys); });
}

namespace {

MembershipReport membership_impl(const std::vector<ConjugacyClass>& A,
                                 const IneqSystem& sys, bool polyrigid_only) {
  if (static_cast<int>(A.size()) != sys.s)
    throw std::invalid_argument("membership: need s classes");
  for (const auto& cls : A) {
    if (cls.r() != sys.n) throw std::invalid_argument("membership: class rank != n");
    if (!valid_simplex_point(cls))
      throw std::invalid_argument("membership: class outside the simplex");
  }
  MembershipReport rep;
  rep.member = true;
  for (size_t j = 0; j < sys.records.size(); ++j) {
    const auto& rec = sys.records[j];
    if (polyrigid_only && !rec.polyrigid) continue;
    Rat lhs = 0;
    for (int l = 0; l < sys.s; ++l) lhs += lambda_sum(rec.indices[l], A[l]);
    lhs -= rec.d;
    if (lhs > 0) {
      rep.member = false;
      rep.violated.push_back(j);
    } else if (lhs == 0) {
      rep.tight.push_back(j);
    }
  }
  return rep;
}

}  // namespace

MembershipReport membership(const std::vector<ConjugacyClass>& A, const IneqSystem& sys) {
  return membership_impl(A, sys, false);
}

MembershipReport membership_polyrigid(const std::vector<ConjugacyClass>& A,
                                      const IneqSystem& sys) {
  return membership_impl(A, sys, true);
}

IneqRecord nori_instance(const std::vector<int>& dims, int W_dim, CoefficientCache& cache) {
  const int s = static_cast<int>(dims.size());
  if (s < 3) throw std::invalid_argument("nori_instance: need at least 3 subspaces");
  if (s - 1 >= W_dim)
    throw std::invalid_argument("nori_instance: need s-1 < dim W");
  long long total = 0;
  for (int dv : dims) {
    if (dv < 1 || dv >= W_dim)
      throw std::invalid_argument("nori_instance: each dim must lie in [1, W)");
    total += dv;
  }
  if (total != W_dim + 1)
    throw std::invalid_argument("nori_instance: dims must sum to dim W + 1");
  IneqRecord rec;
  rec.r = s - 1;
  rec.d = 0;
  for (int a = 0; a < s; ++a) {
    if (dims[a] >= W_dim - s + 3)
      throw std::invalid_argument("nori_instance: dim V_" + std::to_string(a + 1) +
                                  " collides with the free tail of I(a)");
    std::vector<int> elems{dims[a]};
    for (int v = W_dim - s + 3; v <= W_dim; ++v) elems.push_back(v);
    rec.indices.emplace_back(elems, W_dim);
  }
  // Codimension identity sum codim = (s-1)(W-s+1) holds by construction.
  long long cod = 0;
  for (const auto& I : rec.indices) cod += codim(I);
  if (cod != static_cast<long long>(s - 1) * (W_dim - s + 1))
    throw std::logic_error("nori_instance: codimension identity failed");
  rec.gw = classical_intersection(rec.problem(W_dim), cache);
  if (rec.gw != 1)
    throw std::runtime_error("nori_instance: intersection number is " + rec.gw.str() +
                             ", not 1, for " + rec.problem(W_dim).str() +
                             " (finding: report upstream)");
  return rec;
}

std::vector<ConjugacyClass> random_classes(int n, int s, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int denom = 64;
  std::uniform_int_distribution<int> pick(0, denom);
  std::vector<ConjugacyClass> out;
  for (int l = 0; l < s; ++l) {
    std::vector<Rat> t(n);
    for (int i = 0; i < n; ++i) t[i] = Rat(pick(rng), denom);
    std::sort(t.begin(), t.end(), std::greater<Rat>());
    out.push_back(normalize_weights(t));
  }
  return out;
}

std::optional<std::vector<ConjugacyClass>> lp_witness(size_t k, const IneqSystem& sys) {
  std::vector<ConjugacyClass> point;
  if (!lp_irredundant(k, sys, &point)) return std::nullopt;
  return point;
}

}  // namespace qhorn
