#include "qhorn/moduli.hpp"

#include "parallel.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qhorn {

WeightSystem::WeightSystem(int n_, int D_, std::vector<std::vector<Rat>> theta_)
    : n(n_), D(D_), theta(std::move(theta_)) {
  if (theta.empty()) throw std::invalid_argument("WeightSystem: no points");
  for (const auto& t : theta) {
    if (static_cast<int>(t.size()) != n)
      throw std::invalid_argument("WeightSystem: point with rank != n");
    for (size_t i = 1; i < t.size(); ++i)
      if (t[i] > t[i - 1]) throw std::invalid_argument("WeightSystem: not decreasing");
    if (t.back() < t.front() - 1)
      throw std::invalid_argument("WeightSystem: spread > 1");
  }
}

Rat WeightSystem::total_weight() const {
  Rat s = 0;
  for (const auto& t : theta)
    for (const auto& x : t) s += x;
  return s;
}

std::string WeightSystem::str() const {
  std::ostringstream os;
  for (size_t l = 0; l < theta.size(); ++l) {
    if (l) os << ';';
    os << '(';
    for (size_t i = 0; i < theta[l].size(); ++i) {
      if (i) os << ',';
      os << theta[l][i];
    }
    os << ')';
  }
  return os.str();
}

std::string FlagSignature::str() const {
  std::ostringstream os;
  os << '{';
  for (size_t i = 0; i < jumps.size(); ++i) {
    if (i) os << ',';
    os << jumps[i];
  }
  os << '}';
  return os.str();
}

const char* verdict_name(StabilityVerdict v) {
  switch (v) {
    case StabilityVerdict::StableGeneric: return "stable-generic";
    case StabilityVerdict::StrictlySemistable: return "strictly-semistable";
    case StabilityVerdict::Undetermined: return "undetermined";
  }
  return "?";
}

std::vector<std::vector<Rat>> witten_weights(const std::vector<SchubertIndex>& indices) {
  if (indices.empty()) throw std::invalid_argument("witten_weights: no cycles");
  int r = indices[0].r(), n = indices[0].n;
  std::vector<std::vector<Rat>> out;
  out.reserve(indices.size());
  for (const auto& I : indices) {
    if (I.r() != r || I.n != n)
      throw std::invalid_argument("witten_weights: mixed (r,n)");
    std::vector<Rat> w(r);
    for (int k = 1; k <= r; ++k) w[k - 1] = Rat(n - r + k - I.elements[k - 1], n - r);
    out.push_back(std::move(w));
  }
  return out;
}

FlagSignature jump_set(const std::vector<Rat>& theta) {
  FlagSignature sig;
  int n = static_cast<int>(theta.size());
  for (int a = 1; a < n; ++a)
    if (theta[a] < theta[a - 1]) sig.jumps.push_back(a);
  sig.jumps.push_back(n);
  return sig;
}

int flag_dim(const FlagSignature& sig, int n) {
  int dim = 0, prev = 0;
  for (int L : sig.jumps) {
    dim += (L - prev) * (n - L);
    prev = L;
  }
  return dim;
}

int moduli_dim(const std::vector<SchubertIndex>& indices) {
  for (const auto& I : indices)
    if (!is_normalised(I))
      throw std::invalid_argument("moduli_dim: cycle " + I.str() +
                                  " has weight spread 1; normalise (twist) first");
  auto alpha = witten_weights(indices);
  int r = indices[0].r();
  int total = 0;
  for (const auto& w : alpha) total += flag_dim(jump_set(w), r);
  return total - r * r + 1;
}

std::vector<Rat> rigidity_weights(const FlagSignature& sig, int n) {
  if (sig.jumps.empty() || sig.jumps.back() != n)
    throw std::invalid_argument("rigidity_weights: signature must end at n");
  std::vector<Rat> w(n);
  int prev = 0;
  for (int L : sig.jumps) {
    for (int j = prev; j < L; ++j) w[j] = Rat(n - L, n);
    prev = L;
  }
  return w;
}

GwProblem normalize_problem(const GwProblem& P) {
  GwProblem Q = P;
  for (int guard = 0; guard <= P.n * P.s(); ++guard) {
    int offending = -1;
    for (int l = 0; l < Q.s(); ++l)
      if (!is_normalised(Q.indices[l])) {
        offending = l;
        break;
      }
    if (offending < 0) return Q;
    std::vector<int> tw(Q.s(), 0);
    tw[offending] = 1;
    Q = transform_twist(Q, tw);
  }
  throw std::logic_error("normalize_problem: did not terminate for " + P.str());
}

WeightSystem minimal_extension(const std::vector<std::vector<Rat>>& sub_weights,
                               const std::vector<SchubertIndex>& positions, int D) {
  if (sub_weights.size() != positions.size())
    throw std::invalid_argument("minimal_extension: one weight vector per point");
  int n = positions.at(0).n;
  std::vector<std::vector<Rat>> theta;
  for (size_t l = 0; l < positions.size(); ++l) {
    const auto& I = positions[l];
    const auto& th = sub_weights[l];
    int r = I.r();
    if (static_cast<int>(th.size()) != r)
      throw std::invalid_argument("minimal_extension: weight/position rank mismatch");
    std::vector<Rat> full(n);
    int u = 0;  // next sub slot to reach
    for (int j = 1; j <= n; ++j) {
      if (u < r && j == I.elements[u]) {
        full[j - 1] = th[u];
        ++u;
      } else if (u < r) {
        // j below i_{u+1}: gaps before i_1 take theta_1, interior gaps take
        // the next slot's weight.
        full[j - 1] = th[u];
      } else {
        full[j - 1] = th[0] - 1;
      }
    }
    theta.push_back(std::move(full));
  }
  return WeightSystem(n, D, std::move(theta));
}

namespace {

// Destabilizer data for a weight system: all (r, d, I^1..I^s) with
// generalized GW = 1 given the ambient degree D. d is pinned by the zero
// expected-dimension condition and may be any integer.
std::vector<GwProblem> destabilizer_data(int n, int s, int D, CoefficientCache& cache,
                                         int jobs) {
  std::vector<GwProblem> out;
  for (int r = 1; r < n; ++r) {
    auto idx = all_indices(r, n);
    std::vector<int> codims(idx.size());
    for (size_t i = 0; i < idx.size(); ++i) codims[i] = codim(idx[i]);
    std::vector<std::vector<size_t>> picks;
    std::vector<size_t> pick(s, 0);
    while (true) {
      long long total = 0;
      for (int j = 0; j < s; ++j) total += codims[pick[j]];
      long long num = total + static_cast<long long>(D) * r -
                      static_cast<long long>(r) * (n - r);
      if (num % n == 0) {
        long long d = num / n;
        if (D != 0 || d >= 0) picks.push_back(pick);
      }
      int j = s - 1;
      while (j >= 0 && pick[j] + 1 == idx.size()) pick[j--] = 0;
      if (j < 0) break;
      ++pick[j];
    }
    std::vector<char> keep(picks.size(), 0);
    parallel_for(picks.size(), jobs, [&](size_t i) {
      std::vector<SchubertIndex> tuple;
      tuple.reserve(s);
      long long total = 0;
      for (int j = 0; j < s; ++j) {
        tuple.push_back(idx[picks[i][j]]);
        total += codims[picks[i][j]];
      }
      int d = static_cast<int>((total + static_cast<long long>(D) * r -
                                static_cast<long long>(r) * (n - r)) /
                               n);
      GwProblem cand(n, r, d, D, std::move(tuple));
      if (generalized_gw(cand, cache) == 1) keep[i] = 1;
    });
    for (size_t i = 0; i < picks.size(); ++i) {
      if (!keep[i]) continue;
      std::vector<SchubertIndex> tuple;
      long long total = 0;
      for (int j = 0; j < s; ++j) {
        tuple.push_back(idx[picks[i][j]]);
        total += codims[picks[i][j]];
      }
      int d = static_cast<int>((total + static_cast<long long>(D) * r -
                                static_cast<long long>(r) * (n - r)) /
                               n);
      out.emplace_back(n, r, d, D, std::move(tuple));
    }
  }
  return out;
}

}  // namespace

SemistabilityReport check_semistable(const WeightSystem& W, CoefficientCache& cache,
                                     int jobs) {
  SemistabilityReport rep;
  Rat rhs = (Rat(-W.D) + W.total_weight()) / W.n;
  auto data = destabilizer_data(W.n, W.s(), W.D, cache, jobs);
  for (auto& P : data) {
    Rat lhs = Rat(-P.d);
    for (int l = 0; l < P.s(); ++l)
      for (int t : P.indices[l].elements) lhs += W.theta[l][t - 1];
    lhs /= P.r;
    if (lhs > rhs)
      rep.violated.push_back(P);
    else if (lhs == rhs)
      rep.tight.push_back(P);
  }
  rep.semistable = rep.violated.empty();
  return rep;
}

std::vector<TightDatum> find_tight_level(const GwProblem& Pn, CoefficientCache& cache,
                                         bool* violation) {
  if (violation) *violation = false;
  std::vector<TightDatum> found;
  const int r = Pn.r;
  auto alpha = witten_weights(Pn.indices);
  Rat mu_v = Rat(-Pn.d);
  for (const auto& w : alpha)
    for (const auto& x : w) mu_v += x;
  mu_v /= r;

  for (int p = 1; p < r && found.empty(); ++p) {
    auto ks = all_indices(p, r);
    std::vector<int> codims(ks.size());
    std::vector<std::vector<Rat>> sums(ks.size(), std::vector<Rat>(Pn.s()));
    for (size_t i = 0; i < ks.size(); ++i) {
      codims[i] = codim(ks[i]);
      for (int l = 0; l < Pn.s(); ++l) {
        Rat s = 0;
        for (int t : ks[i].elements) s += alpha[l][t - 1];
        sums[i][l] = s;
      }
    }
    std::vector<size_t> pick(Pn.s(), 0);
    while (true) {
      long long total = 0;
      for (int l = 0; l < Pn.s(); ++l) total += codims[pick[l]];
      // dim(S, V) = p(r-p) + qr - dp - sum codim = 0 pins q.
      long long num = total + static_cast<long long>(Pn.d) * p -
                      static_cast<long long>(p) * (r - p);
      if (num % r == 0) {
        int q = static_cast<int>(num / r);
        Rat mu_s = Rat(-q);
        for (int l = 0; l < Pn.s(); ++l) mu_s += sums[pick[l]][l];
        mu_s /= p;
        if (mu_s >= mu_v) {
          std::vector<SchubertIndex> Ks;
          Ks.reserve(Pn.s());
          for (int l = 0; l < Pn.s(); ++l) Ks.push_back(ks[pick[l]]);
          GwProblem sub(r, p, q, Pn.d, Ks);
          if (generalized_gw(sub, cache) != 0) {
            if (mu_s > mu_v) {
              if (violation) *violation = true;
              found.push_back({p, q, std::move(Ks)});
              return found;
            }
            found.push_back({p, q, std::move(Ks)});
          }
        }
      }
      int l = Pn.s() - 1;
      while (l >= 0 && pick[l] + 1 == ks.size()) pick[l--] = 0;
      if (l < 0) break;
      ++pick[l];
    }
  }
  return found;
}

bool is_polyrigid(const GwProblem& P, int M, CoefficientCache& cache) {
  if (P.expected_dim() != 0)
    throw dimension_error("is_polyrigid needs zero expected dimension: " + P.str());
  if (M <= 0) M = (P.d == 0 && P.D == 0) ? 1 : P.r + 1;
  for (int N = 1; N <= M; ++N)
    if (f_of_n(P, N, cache) != 1) return false;
  return true;
}

namespace {

ModuliReport polyrigid_report_impl(const GwProblem& P, CoefficientCache& cache,
                                   std::map<std::string, bool>& memo);

bool branch_polyrigid(const GwProblem& B, CoefficientCache& cache,
                      std::map<std::string, bool>& memo) {
  auto key = B.sorted_key();
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  Int v = generalized_gw(B, cache);
  bool result;
  if (v != 1) {
    // More than one subbundle in the position (or none): the moduli is not a
    // single reduced point.
    result = false;
  } else {
    result = polyrigid_report_impl(B, cache, memo).polyrigid;
  }
  memo.emplace(key, result);
  return result;
}

ModuliReport polyrigid_report_impl(const GwProblem& P, CoefficientCache& cache,
                                   std::map<std::string, bool>& memo) {
  ModuliReport rep;
  rep.normalized = normalize_problem(P);
  const GwProblem& Pn = rep.normalized;
  rep.expected_dim = moduli_dim(Pn.indices);
  bool violation = false;
  rep.evidence = find_tight_level(Pn, cache, &violation);
  if (violation) {
    rep.verdict = StabilityVerdict::Undetermined;
    rep.polyrigid = false;
    return rep;
  }
  if (rep.evidence.empty()) {
    rep.verdict = StabilityVerdict::StableGeneric;
    rep.polyrigid = (rep.expected_dim == 0);
    return rep;
  }
  rep.verdict = StabilityVerdict::StrictlySemistable;
  const TightDatum& t = rep.evidence.front();
  GwProblem sub(Pn.r, t.p, t.q, Pn.d, t.K);
  GwProblem quot = gw_dual(sub);
  rep.polyrigid = branch_polyrigid(sub, cache, memo) && branch_polyrigid(quot, cache, memo);
  return rep;
}

}  // namespace

ModuliReport polyrigid_report(const GwProblem& P, CoefficientCache& cache) {
  if (P.expected_dim() != 0)
    throw dimension_error("polyrigid_report needs zero expected dimension: " + P.str());
  if (generalized_gw(P, cache) != 1)
    throw std::invalid_argument("polyrigid_report requires generalized_gw = 1 for " +
                                P.str());
  std::map<std::string, bool> memo;
  return polyrigid_report_impl(P, cache, memo);
}

ModuliReport moduli_report(const GwProblem& P, CoefficientCache& cache) {
  if (generalized_gw(P, cache) == 1) return polyrigid_report(P, cache);
  // Value != 1: the moduli is not a single reduced point; still report the
  // stability analysis and the dimension.
  ModuliReport rep;
  rep.normalized = normalize_problem(P);
  rep.expected_dim = moduli_dim(rep.normalized.indices);
  bool violation = false;
  rep.evidence = find_tight_level(rep.normalized, cache, &violation);
  rep.verdict = violation ? StabilityVerdict::Undetermined
                : rep.evidence.empty() ? StabilityVerdict::StableGeneric
                                       : StabilityVerdict::StrictlySemistable;
  rep.polyrigid = false;
  return rep;
}

std::optional<WitnessResult> witness_constructive(const GwProblem& record,
                                                  CoefficientCache& cache) {
  WitnessResult res;
  if (record.D != 0) {
    return std::nullopt;
  }
  const int n = record.n, s = record.s();
  GwProblem cur = record;
  bool settled = false;
  for (int guard = 0; guard <= n && !settled; ++guard) {
    GwProblem dual = gw_dual(cur);
    bool normalised = true;
    for (const auto& J : dual.indices) normalised &= is_normalised(J);
    if (!normalised) return std::nullopt;
    // The quotient weights induced by the minimal extension are the rigidity
    // weights of the dual structure; the slope gap they leave is 1/l^2
    // exactly when the dual flag dimensions sum to l^2 - 1, i.e. when the
    // dual data is rigid. That is the stage acceptance test.
    if (moduli_dim(dual.indices) == 0) {
      res.dual_factor_rank = dual.r;
      settled = true;
      break;
    }
    bool violation = false;
    auto tight = find_tight_level(dual, cache, &violation);
    if (violation) return std::nullopt;
    if (tight.empty()) return std::nullopt;  // non-rigid stable dual: no room
    // Enlarge: replace cur by the preimage in the ambient bundle of the
    // orthogonal of the tight subbundle of the dual.
    const TightDatum& t = tight.front();
    std::vector<SchubertIndex> enlarged;
    for (int l = 0; l < s; ++l) {
      std::vector<bool> in(n + 1, false);
      for (int e : cur.indices[l].elements) in[e] = true;
      std::vector<int> comp;
      for (int a = 1; a <= n; ++a)
        if (!in[a]) comp.push_back(a);
      SchubertIndex added = grassmann_dual(t.K[l]);
      std::vector<int> elems = cur.indices[l].elements;
      for (int m : added.elements) elems.push_back(comp[m - 1]);
      std::sort(elems.begin(), elems.end());
      enlarged.emplace_back(elems, n);
    }
    GwProblem next(n, n - t.p, record.D + t.q, record.D, std::move(enlarged));
    if (next.expected_dim() != 0 || generalized_gw(next, cache) != 1) return std::nullopt;
    cur = std::move(next);
  }
  if (!settled) return std::nullopt;
  res.built_on = cur;
  int l = res.dual_factor_rank;
  res.c = Rat(1, static_cast<long long>(s) * l * l);
  auto alpha = witten_weights(cur.indices);
  WeightSystem W = minimal_extension(alpha, cur.indices, record.D);
  for (int pt = 0; pt < s; ++pt) {
    std::vector<bool> in(n + 1, false);
    for (int e : cur.indices[pt].elements) in[e] = true;
    for (int a = 1; a <= n; ++a)
      if (!in[a]) W.theta[pt][a - 1] += res.c;
    for (int a = 1; a < n; ++a)
      if (W.theta[pt][a] > W.theta[pt][a - 1]) return std::nullopt;  // no room
    if (W.theta[pt][n - 1] < W.theta[pt][0] - 1) return std::nullopt;
  }
  // The target inequality must be tight at the witness.
  Rat rhs = (Rat(-W.D) + W.total_weight()) / n;
  Rat lhs = Rat(-record.d);
  for (int pt = 0; pt < s; ++pt)
    for (int t : record.indices[pt].elements) lhs += W.theta[pt][t - 1];
  lhs /= record.r;
  if (lhs != rhs) return std::nullopt;
  res.constructive = true;
  res.weights = std::move(W);
  res.note = "minimal extension on " + res.built_on.str() + " plus c = " +
             to_string(res.c) + " on quotient slots";
  return res;
}

}  // namespace qhorn
