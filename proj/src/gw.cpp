#include "qhorn/gw.hpp"

#include "lr.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qhorn {

namespace {

using ClassMap = lr::ClassMap;

struct Reduced {
  Partition nu;
  int sign = 0;  // 0 means the term dies
  int hooks = 0;
};

// Removes n-border-strips from p (at most r rows) until it fits the
// r x (n-r) box, walking the rim from the end of a row. Sign is
// (-1)^(height-1) per strip; the caller applies the global (-1)^(d(r-1)).
Reduced reduce_border_strips(Partition p, int r, int n) {
  Reduced out;
  out.sign = 1;
  while (!p.empty() && p[0] > n - r) {
    bool removed = false;
    int rows = static_cast<int>(p.size());
    for (int a = 1; a <= rows && !removed; ++a) {
      // Walk the rim southwest from the last cell of row a.
      int i = a, j = p[a - 1];
      if (j == 0) break;
      for (int consumed = 1; consumed < n; ++consumed) {
        if (i < rows && p[i] >= j) {
          ++i;
        } else {
          --j;
        }
        if (j == 0) break;
      }
      if (j == 0) continue;  // strip ran off the diagram
      int b = i;
      // Candidate removal: rows a..b-1 take the next row's length minus one,
      // row b takes what is left of row a.
      Partition q = p;
      for (int u = a; u < b; ++u) q[u - 1] = p[u] - 1;
      q[b - 1] = p[a - 1] - n + (b - a);
      if (q[b - 1] < 0) continue;
      if (b < rows && q[b - 1] < p[b]) continue;
      bool ok = true;
      for (int u = 1; u < static_cast<int>(q.size()); ++u)
        if (q[u] > q[u - 1]) ok = false;
      if (!ok) continue;
      trim_partition(q);
      p = std::move(q);
      out.sign *= ((b - a) % 2 == 0) ? 1 : -1;  // (-1)^(height-1)
      ++out.hooks;
      removed = true;
    }
    if (!removed) return {Partition{}, 0, 0};
  }
  out.nu = std::move(p);
  return out;
}

// Folds p into the box through beta-numbers: beta_a = p_a + r - a reduced
// mod n (distinct residues or the term dies), re-sorted with the sign of the
// permutation; each subtracted n is one unit of winding (q-degree).
Reduced reduce_affine_fold(const Partition& p, int r, int n) {
  std::vector<int> beta(r);
  for (int a = 1; a <= r; ++a)
    beta[a - 1] = (a - 1 < static_cast<int>(p.size()) ? p[a - 1] : 0) + r - a;
  int winding = 0;
  std::vector<int> res(r);
  for (int a = 0; a < r; ++a) {
    res[a] = beta[a] % n;
    winding += (beta[a] - res[a]) / n;
  }
  for (int a = 0; a < r; ++a)
    for (int b = a + 1; b < r; ++b)
      if (res[a] == res[b]) return {Partition{}, 0, 0};
  // Count inversions relative to descending order.
  int inv = 0;
  for (int a = 0; a < r; ++a)
    for (int b = a + 1; b < r; ++b)
      if (res[a] < res[b]) ++inv;
  std::sort(res.begin(), res.end(), std::greater<int>());
  Partition nu(r);
  for (int a = 1; a <= r; ++a) nu[a - 1] = res[a - 1] - (r - a);
  trim_partition(nu);
  return {std::move(nu), (inv % 2 == 0) ? 1 : -1, winding};
}

enum class Mode { Classical, BorderStrip, AffineFold };

const char* mode_tag(Mode m) {
  switch (m) {
    case Mode::Classical: return "cl";
    case Mode::BorderStrip: return "bs";
    case Mode::AffineFold: return "af";
  }
  return "?";
}

// One reduced two-factor product, memoized per (mode, r, n).
std::shared_ptr<const ClassMap> reduced_product(Mode mode, int r, int n,
                                                const Partition& a, const Partition& b,
                                                CoefficientCache& cache) {
  std::ostringstream key;
  key << mode_tag(mode) << '(' << r << ',' << n << "):" << partition_str(a) << '*'
      << partition_str(b);
  return cache.product(key.str(), [&]() {
    ClassMap out;
    if (mode == Mode::Classical) {
      return lr::expand(a, b, r, n - r);
    }
    ClassMap raw = lr::expand(a, b, r, -1);
    for (const auto& [nu, c] : raw) {
      Reduced red = mode == Mode::BorderStrip ? reduce_border_strips(nu, r, n)
                                              : reduce_affine_fold(nu, r, n);
      if (red.sign == 0) continue;
      int sign = red.sign;
      if (red.hooks % 2 == 1 && (r - 1) % 2 == 1) sign = -sign;
      Int term = c * sign;
      auto it = out.find(red.nu);
      if (it == out.end()) {
        if (term != 0) out.emplace(red.nu, term);
      } else {
        it->second += term;
        if (it->second == 0) out.erase(it);
      }
    }
    return out;
  });
}

Int product_value(const GwProblem& P, Mode mode, CoefficientCache& cache) {
  const int r = P.r, n = P.n;
  std::vector<Partition> lambdas;
  lambdas.reserve(P.indices.size());
  for (const auto& I : P.indices) lambdas.push_back(index_to_partition(I));

  ClassMap state;
  state[Partition{}] = 1;
  for (int l = 0; l + 1 < static_cast<int>(lambdas.size()); ++l) {
    ClassMap next;
    for (const auto& [nu, c] : state) {
      auto prod = reduced_product(mode, r, n, nu, lambdas[l], cache);
      for (const auto& [tau, k] : *prod) {
        auto it = next.find(tau);
        if (it == next.end()) {
          Int v = c * k;
          if (v != 0) next.emplace(tau, std::move(v));
        } else {
          it->second += c * k;
          if (it->second == 0) next.erase(it);
        }
      }
    }
    state = std::move(next);
  }
  Partition target = dual_partition(lambdas.back(), r, n - r);
  auto it = state.find(target);
  return it == state.end() ? Int(0) : it->second;
}

void require_quantum_preconditions(const GwProblem& P) {
  if (P.D != 0) throw dimension_error("engine requires D = 0: " + P.str());
  if (P.d < 0) throw dimension_error("engine requires d >= 0: " + P.str());
  long long want = static_cast<long long>(P.r) * (P.n - P.r) +
                   static_cast<long long>(P.d) * P.n;
  if (P.codim_sum() != want)
    throw dimension_error("codimension sum " + std::to_string(P.codim_sum()) +
                          " != r(n-r)+dn = " + std::to_string(want) + " for " + P.str());
}

std::vector<std::vector<int>> subsets(int r, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(r);
  std::iota(cur.begin(), cur.end(), 1);
  while (true) {
    out.push_back(cur);
    int i = r - 1;
    while (i >= 0 && cur[i] == n - (r - 1 - i)) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < r; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

}  // namespace

GwProblem::GwProblem(int n_, int r_, int d_, int D_, std::vector<SchubertIndex> idx)
    : n(n_), r(r_), d(d_), D(D_), indices(std::move(idx)) {
  if (r < 1 || r >= n) throw std::invalid_argument("GwProblem: need 1 <= r < n");
  if (indices.empty()) throw std::invalid_argument("GwProblem: need s >= 1");
  for (const auto& I : indices)
    if (I.n != n || I.r() != r)
      throw std::invalid_argument("GwProblem: index " + I.str() + " not in Gr(" +
                                  std::to_string(r) + "," + std::to_string(n) + ")");
}

long long GwProblem::codim_sum() const {
  long long total = 0;
  for (const auto& I : indices) total += codim(I);
  return total;
}

long long GwProblem::expected_dim() const {
  return static_cast<long long>(r) * (n - r) + static_cast<long long>(d) * n -
         static_cast<long long>(D) * r - codim_sum();
}

std::string GwProblem::str() const {
  std::ostringstream os;
  os << "gw(n=" << n << ",r=" << r << ",d=" << d << ",D=" << D << ";";
  for (size_t i = 0; i < indices.size(); ++i) {
    if (i) os << ',';
    os << indices[i].str();
  }
  os << ')';
  return os.str();
}

std::string GwProblem::sorted_key() const {
  GwProblem copy = *this;
  std::sort(copy.indices.begin(), copy.indices.end());
  return copy.str();
}

Int lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  return lr::coefficient(lambda, mu, nu);
}

Partition dual_partition(const Partition& p, int r, int cols) {
  Partition out(r);
  for (int a = 0; a < r; ++a) {
    int part = (r - 1 - a) < static_cast<int>(p.size()) ? p[r - 1 - a] : 0;
    out[a] = cols - part;
  }
  trim_partition(out);
  return out;
}

std::vector<SchubertIndex> all_indices(int r, int n) {
  std::vector<SchubertIndex> out;
  for (auto& s : subsets(r, n)) out.emplace_back(s, n);
  return out;
}

Int classical_intersection(const GwProblem& P, CoefficientCache& cache) {
  if (P.d != 0 || P.D != 0)
    throw dimension_error("classical_intersection needs d = D = 0: " + P.str());
  long long want = static_cast<long long>(P.r) * (P.n - P.r);
  if (P.codim_sum() != want)
    throw dimension_error("codimension sum " + std::to_string(P.codim_sum()) +
                          " != r(n-r) = " + std::to_string(want) + " for " + P.str());
  return cache.value_or_compute("cl:" + P.sorted_key(),
                                [&] { return product_value(P, Mode::Classical, cache); });
}

Int gw_invariant(const GwProblem& P, CoefficientCache& cache) {
  require_quantum_preconditions(P);
  return cache.value_or_compute(
      "bs:" + P.sorted_key(), [&] { return product_value(P, Mode::BorderStrip, cache); });
}

Int fusion_oracle(const GwProblem& P, CoefficientCache& cache) {
  require_quantum_preconditions(P);
  return cache.value_or_compute(
      "af:" + P.sorted_key(), [&] { return product_value(P, Mode::AffineFold, cache); });
}

GwProblem transform_shift(const GwProblem& P, int direction) {
  if (direction != 1 && direction != -1)
    throw std::invalid_argument("transform_shift: direction must be +-1");
  GwProblem Q = P;
  Q.d += direction * P.r;
  Q.D += direction * P.n;
  return Q;
}

GwProblem transform_twist(const GwProblem& P, const std::vector<int>& n_l) {
  if (static_cast<int>(n_l.size()) != P.s())
    throw std::invalid_argument("transform_twist: one n_l per point");
  GwProblem Q = P;
  int dropped = 0, total = 0;
  for (int l = 0; l < P.s(); ++l) {
    if (n_l[l] < 0 || n_l[l] >= P.n)
      throw std::invalid_argument("transform_twist: n_l out of {0..n-1}");
    total += n_l[l];
    std::vector<int> shifted;
    for (int u : P.indices[l].elements) {
      if (u <= n_l[l]) ++dropped;
      int v = u - n_l[l];
      if (v <= 0) v += P.n;
      shifted.push_back(v);
    }
    std::sort(shifted.begin(), shifted.end());
    Q.indices[l] = SchubertIndex(shifted, P.n);
  }
  Q.d = P.d - dropped;
  Q.D = P.D - total;
  return Q;
}

Int generalized_gw(const GwProblem& P, CoefficientCache& cache, std::string* diagnostic) {
  if (P.expected_dim() != 0)
    throw dimension_error("expected dimension " + std::to_string(P.expected_dim()) +
                          " != 0 for " + P.str());
  GwProblem Q = P;
  while (Q.D < 0) Q = transform_shift(Q, +1);
  while (Q.D >= Q.n) Q = transform_shift(Q, -1);
  if (Q.D != 0) {
    std::vector<int> tw(Q.s(), 0);
    tw[0] = Q.D;
    Q = transform_twist(Q, tw);
  }
  if (Q.d < 0) {
    if (diagnostic)
      *diagnostic = "reduction of " + P.str() + " reaches d = " + std::to_string(Q.d) +
                    " < 0 at D = 0; no subbundle of positive degree exists in the "
                    "trivial-type bundle, value 0";
    return 0;
  }
  return gw_invariant(Q, cache);
}

GwProblem gw_dual(const GwProblem& P) {
  std::vector<SchubertIndex> duals;
  duals.reserve(P.indices.size());
  for (const auto& I : P.indices) duals.push_back(grassmann_dual(I));
  return GwProblem(P.n, P.n - P.r, P.d - P.D, -P.D, std::move(duals));
}

GwProblem scale_situation(const GwProblem& P, int N) {
  if (N < 1) throw std::invalid_argument("scale_situation: N must be positive");
  if (N == 1) return P;
  std::vector<SchubertIndex> scaled;
  for (const auto& I : P.indices) {
    std::vector<int> elems(static_cast<size_t>(N) * P.r);
    for (int a = 1; a <= P.r; ++a) {
      elems[static_cast<size_t>(N) * a - 1] = N * I.elements[a - 1];
      for (int b = 1; b < N; ++b)
        elems[static_cast<size_t>(N) * a - b - 1] = N * I.elements[a - 1] - b;
    }
    scaled.emplace_back(elems, N * P.n);
  }
  return GwProblem(N * P.n, N * P.r, N * P.d, N * P.D, std::move(scaled));
}

GwProblem f_of_n_problem(const GwProblem& P, int N) {
  if (N < 1) throw std::invalid_argument("f_of_n: N must be positive");
  std::vector<SchubertIndex> scaled;
  for (const auto& I : P.indices) scaled.push_back(scale_index(I, N));
  return GwProblem(P.r + N * (P.n - P.r), P.r, P.d, P.d + N * (P.D - P.d),
                   std::move(scaled));
}

Int f_of_n(const GwProblem& P, int N, CoefficientCache& cache) {
  if (P.expected_dim() != 0)
    throw dimension_error("f_of_n needs zero expected dimension: " + P.str());
  return generalized_gw(f_of_n_problem(P, N), cache);
}

bool horn_nonvanishing(const GwProblem& P, CoefficientCache& cache) {
  require_quantum_preconditions(P);
  if (P.r == 1) return true;
  const int r = P.r, s = P.s();

  std::vector<SimplexPoint> deltas;
  deltas.reserve(s);
  for (const auto& I : P.indices) deltas.push_back(delta(I));
  SimplexPoint first_shifted = shift_s_pow(deltas[0], P.d);

  for (int p = 1; p < r; ++p) {
    auto ks = subsets(p, r);
    std::vector<int> codims(ks.size());
    std::vector<Rat> sums0(ks.size()), sumsj(ks.size() * s);
    for (size_t i = 0; i < ks.size(); ++i) {
      SchubertIndex K(ks[i], r);
      codims[i] = codim(K);
      Rat s0 = 0;
      for (int t : ks[i]) s0 += first_shifted.coords[t - 1];
      sums0[i] = s0;
      for (int j = 1; j < s; ++j) {
        Rat sj = 0;
        for (int t : ks[i]) sj += deltas[j].coords[t - 1];
        sumsj[i * s + j] = sj;
      }
    }
    // Iterate all s-tuples of p-subsets.
    std::vector<size_t> pick(s, 0);
    while (true) {
      long long total = 0;
      for (int j = 0; j < s; ++j) total += codims[pick[j]];
      long long num = total - static_cast<long long>(p) * (r - p);
      if (num >= 0 && num % r == 0) {
        int q = static_cast<int>(num / r);
        std::vector<SchubertIndex> Ks;
        Ks.reserve(s);
        for (int j = 0; j < s; ++j) Ks.emplace_back(ks[pick[j]], r);
        GwProblem sub(r, p, q, 0, std::move(Ks));
        if (gw_invariant(sub, cache) != 0) {
          Rat lhs = sums0[pick[0]];
          for (int j = 1; j < s; ++j) lhs += sumsj[pick[j] * s + j];
          if (lhs > q) return false;
        }
      }
      int j = s - 1;
      while (j >= 0 && pick[j] + 1 == ks.size()) pick[j--] = 0;
      if (j < 0) break;
      ++pick[j];
    }
  }
  return true;
}

}  // namespace qhorn
