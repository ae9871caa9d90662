// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include "qhorn/gw.hpp"
#include "qhorn/moduli.hpp"
#include "qhorn/polytope.hpp"
#include "../src/parallel.hpp"

#include <algorithm>
#include <chrono>
#include <atomic>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

using namespace qhorn;

namespace {

CoefficientCache cache;
const int kJobs = std::max(1u, std::thread::hardware_concurrency());

int failures = 0;

void criterion(int k, const std::string& name, const std::function<bool(std::string&)>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = fn(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s  %2d  %-28s %8.2fs  %s\n", ok ? "PASS" : "FAIL", k, name.c_str(), secs,
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

SchubertIndex idx(std::vector<int> e, int n) { return SchubertIndex(std::move(e), n); }

GwProblem prob(int n, int r, int d, int D, std::vector<std::vector<int>> tuples) {
  std::vector<SchubertIndex> v;
  for (auto& t : tuples) v.emplace_back(t, n);
  return GwProblem(n, r, d, D, std::move(v));
}

const GwProblem kEgg = prob(12, 8, 0, 0,
                            {{3, 4, 5, 7, 8, 10, 11, 12},
                             {2, 3, 5, 6, 8, 9, 11, 12},
                             {2, 3, 5, 6, 8, 9, 11, 12}});
const GwProblem kExt = prob(9, 5, 0, 0, {{3, 5, 6, 8, 9}, {2, 4, 5, 7, 9}, {2, 3, 5, 8, 9}});

// One representative per multiset of cycles with the sum needed for degree d.
template <typename Fn>
void for_each_problem(int n, int r, int s, int d, Fn&& fn) {
  auto idxs = all_indices(r, n);
  std::vector<int> codims(idxs.size());
  for (size_t i = 0; i < idxs.size(); ++i) codims[i] = codim(idxs[i]);
  long long want = static_cast<long long>(r) * (n - r) + static_cast<long long>(d) * n;
  std::vector<size_t> pick(s, 0);
  std::function<void(int, size_t, long long)> rec = [&](int pos, size_t from, long long sum) {
    if (sum > want) return;
    if (pos == s) {
      if (sum != want) return;
      std::vector<SchubertIndex> tuple;
      tuple.reserve(s);
      for (int j = 0; j < s; ++j) tuple.push_back(idxs[pick[j]]);
      fn(GwProblem(n, r, d, 0, std::move(tuple)));
      return;
    }
    for (size_t i = from; i < idxs.size(); ++i) {
      pick[pos] = i;
      rec(pos + 1, i, sum + codims[i]);
    }
  };
  rec(0, 0, 0);
}

template <typename Fn>
void for_each_problem_all(int n, int s_max, int d_max, Fn&& fn) {
  for (int r = 1; r < n; ++r)
    for (int s = 1; s <= s_max; ++s)
      for (int d = 0; d <= d_max; ++d) for_each_problem(n, r, s, d, fn);
}

bool c1(std::string& detail) {
  Int v = classical_intersection(kEgg, cache);
  Int f1 = f_of_n(kEgg, 1, cache);
  int dim = moduli_dim(kEgg.indices);
  detail = "classical = " + v.str() + " = f(1), moduli dim = " + std::to_string(dim);
  return v == 6 && f1 == 6 && dim == 6;
}

bool c2(std::string& detail) {
  auto alpha = witten_weights(kExt.indices);
  std::vector<int> dims;
  for (const auto& a : alpha) dims.push_back(flag_dim(jump_set(a), 5));
  bool flags_ok = dims == std::vector<int>{8, 9, 8};
  bool poly = is_polyrigid(kExt, kExt.r + 1, cache);  // f(N) = 1 up to N = 6
  auto rep = polyrigid_report(kExt, cache);
  bool datum = false;
  for (const auto& t : rep.evidence)
    if (t.p == 1 && t.K[0] == idx({5}, 5) && t.K[1] == idx({4}, 5) && t.K[2] == idx({2}, 5))
      datum = true;
  std::ostringstream os;
  os << "flag dims (" << dims[0] << "," << dims[1] << "," << dims[2]
     << "), polyrigid = " << (poly ? "true" : "false")
     << ", rank-1 datum {5}{4}{2} " << (datum ? "present" : "MISSING");
  detail = os.str();
  return flags_ok && poly && rep.polyrigid && datum;
}

bool c3(std::string& detail) {
  bool ok = delta(idx({1, 4}, 4)).coords == std::vector<Rat>{Rat(1, 2), Rat(-1, 2)} &&
            delta(idx({2, 3}, 4)).coords == std::vector<Rat>{Rat(0), Rat(0)} &&
            shift_s(delta(idx({1, 4}, 4))).coords == std::vector<Rat>{Rat(0), Rat(0)};
  detail = "delta({1,4}), delta({2,3}), S(delta({1,4})) exact";
  return ok;
}

bool c4(std::string& detail) {
  if (grassmann_dual(idx({3, 4, 5, 7, 8}, 8)) != idx({3, 7, 8}, 8)) return false;
  if (grassmann_dual(idx({2, 5}, 5)) != idx({2, 3, 5}, 5)) return false;
  long long count = 0;
  for (int n = 2; n <= 12; ++n)
    for (int r = 1; r < n; ++r)
      for (const auto& I : all_indices(r, n)) {
        SchubertIndex J = grassmann_dual(I);
        if (grassmann_dual(J) != I || codim(J) != codim(I)) return false;
        ++count;
      }
  detail = std::to_string(count) + " index sets, involution and codim preserved";
  return true;
}

bool c5(std::string& detail) {
  std::vector<GwProblem> problems;
  for (int n = 2; n <= 6; ++n)
    for_each_problem_all(n, 4, 3, [&](GwProblem P) { problems.push_back(std::move(P)); });
  std::atomic<long long> bad{0};
  std::vector<char> ok(problems.size(), 0);
  parallel_for(problems.size(), kJobs, [&](size_t i) {
    Int a = gw_invariant(problems[i], cache);
    Int b = fusion_oracle(problems[i], cache);
    ok[i] = (a == b && a >= 0);
    if (!ok[i]) ++bad;
  });
  detail = std::to_string(problems.size()) + " problems, " + std::to_string(bad.load()) +
           " disagreements";
  return bad == 0 && problems.size() > 1000;
}

bool c6(std::string& detail) {
  std::vector<GwProblem> problems;
  auto collect = [&](int n, int r) {
    for (int s = 3; s <= 4; ++s)
      for (int d = 0; d <= 2; ++d)
        for_each_problem(n, r, s, d, [&](GwProblem P) { problems.push_back(std::move(P)); });
  };
  collect(4, 2);
  collect(5, 2);
  collect(6, 3);
  std::atomic<long long> bad{0};
  parallel_for(problems.size(), kJobs, [&](size_t i) {
    bool horn = horn_nonvanishing(problems[i], cache);
    bool nonzero = gw_invariant(problems[i], cache) != 0;
    if (horn != nonzero) ++bad;
  });
  detail = std::to_string(problems.size()) + " instances (s<=4), " +
           std::to_string(bad.load()) + " disagreements";
  return bad == 0 && !problems.empty();
}

bool c7(std::string& detail) {
  std::vector<GwProblem> problems;
  for (int n = 2; n <= 5; ++n)
    for (int r = 1; r < n; ++r)
      for (int s = 3; s <= 4; ++s)
        for (int d = 0; d <= 2; ++d)
          for_each_problem(n, r, s, d, [&](GwProblem P) { problems.push_back(std::move(P)); });
  std::atomic<long long> bad{0};
  std::atomic<long long> twists{0};
  parallel_for(problems.size(), kJobs, [&](size_t i) {
    const GwProblem& P = problems[i];
    Int v = generalized_gw(P, cache);
    if (generalized_gw(transform_shift(P, +1), cache) != v) ++bad;
    if (generalized_gw(transform_shift(P, -1), cache) != v) ++bad;
    if (generalized_gw(gw_dual(P), cache) != v) ++bad;
    // All twist vectors.
    std::vector<int> tw(P.s(), 0);
    while (true) {
      if (generalized_gw(transform_twist(P, tw), cache) != v) ++bad;
      ++twists;
      int j = P.s() - 1;
      while (j >= 0 && tw[j] + 1 == P.n) tw[j--] = 0;
      if (j < 0) break;
      ++tw[j];
    }
  });
  detail = std::to_string(problems.size()) + " problems, " + std::to_string(twists.load()) +
           " twists, " + std::to_string(bad.load()) + " mismatches";
  return bad == 0 && !problems.empty();
}

bool c8(std::string& detail) {
  std::vector<GwProblem> problems;
  for (int n = 2; n <= 5; ++n)
    for (int r = 1; r < n; ++r)
      for (int s = 3; s <= 4; ++s)
        for (int d = 0; d <= 2; ++d)
          for_each_problem(n, r, s, d, [&](GwProblem P) { problems.push_back(std::move(P)); });
  std::atomic<long long> bad{0}, nonzero{0};
  parallel_for(problems.size(), kJobs, [&](size_t i) {
    Int f1 = f_of_n(problems[i], 1, cache);
    if (f1 > 0) ++nonzero;
    for (int N = 2; N <= 3; ++N) {
      Int fN = f_of_n(problems[i], N, cache);
      if (f1 > fN) ++bad;
      if (f1 > 0 && fN <= 0) ++bad;
    }
  });
  detail = std::to_string(problems.size()) + " problems (" + std::to_string(nonzero.load()) +
           " nonvanishing), " + std::to_string(bad.load()) + " violations";
  return bad == 0 && nonzero > 0;
}

bool c9(std::string& detail) {
  const std::vector<std::pair<int, int>> cases = {{2, 3}, {2, 4}, {2, 5},
                                                  {3, 3}, {3, 4}, {4, 3}};
  std::ostringstream os;
  for (auto [n, s] : cases) {
    auto sys = enumerate_inequalities(n, s, cache, kJobs);
    classify_records(sys, 0, cache, kJobs);
    classify_lp(sys, kJobs);
    long long mism = 0;
    for (const auto& rec : sys.records)
      if (rec.polyrigid != *rec.lp_irredundant) ++mism;
    long long member_mism = 0;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
      auto A = random_classes(n, s, seed * 1000003ull + n * 97 + s);
      if (membership(A, sys).member != membership_polyrigid(A, sys).member) ++member_mism;
    }
    os << "(" << n << "," << s << "):" << sys.records.size() << "r/" << mism << "m/"
       << member_mism << "p ";
    if (mism != 0 || member_mism != 0) {
      detail = os.str();
      return false;
    }
  }
  detail = os.str() + "- lp set == polyrigid set, membership equal on 200 pts each";
  return true;
}

bool c10(std::string& detail) {
  long long records = 0, bad = 0;
  std::vector<GwProblem> classical;
  for (int n = 2; n <= 6; ++n)
    for (int r = 1; r < n; ++r)
      for_each_problem(n, r, 3, 0, [&](GwProblem P) { classical.push_back(std::move(P)); });
  for (int n = 2; n <= 4; ++n)
    for (int r = 1; r < n; ++r)
      for_each_problem(n, r, 4, 0, [&](GwProblem P) { classical.push_back(std::move(P)); });
  std::vector<char> ok(classical.size(), 2);
  parallel_for(classical.size(), kJobs, [&](size_t i) {
    if (classical_intersection(classical[i], cache) != 1) {
      ok[i] = 2;  // not a record
      return;
    }
    bool m1 = is_polyrigid(classical[i], 1, cache);
    bool mr = is_polyrigid(classical[i], classical[i].r + 1, cache);
    ok[i] = (m1 && mr && m1 == mr) ? 1 : 0;
  });
  for (char c : ok) {
    if (c == 2) continue;
    ++records;
    if (c == 0) ++bad;
  }
  detail = std::to_string(records) + " classical intersection-1 records (s<=3, plus s=4 for n<=4), " +
           std::to_string(bad) + " not polyrigid or M-inconsistent";
  return bad == 0 && records > 0;
}

bool c11(std::string& detail) {
  std::ostringstream os;
  // LP witnesses: every polyrigid record of the n=2 system, the Gr(2,5)
  // record's system, and the Gr(2,4)-family (n=4, s=3).
  // Target families: n=2 (all records), Gr(2,5) and Gr(2,4) (the r=2 records
  // of their systems), one representative per point-permutation orbit; the
  // permutation symmetry of records is asserted separately, and the LP runs
  // against the full record list each time.
  const std::vector<std::tuple<int, int, int>> cases = {{2, 3, 1}, {5, 3, 2}, {4, 3, 2}};
  for (auto [n, s, rsel] : cases) {
    auto sys = enumerate_inequalities(n, s, cache, kJobs);
    classify_records(sys, 0, cache, kJobs);
    std::vector<size_t> targets;
    for (size_t k = 0; k < sys.records.size(); ++k) {
      if (sys.records[k].r != rsel || !sys.records[k].polyrigid) continue;
      if (!std::is_sorted(sys.records[k].indices.begin(), sys.records[k].indices.end()))
        continue;  // orbit representative only
      targets.push_back(k);
    }
    std::vector<std::string> errors(targets.size());
    parallel_for(targets.size(), kJobs, [&](size_t i) {
      size_t k = targets[i];
      auto w = lp_witness(k, sys);
      if (!w) {
        errors[i] = "no LP witness for " + sys.records[k].str(sys.n);
        return;
      }
      auto rep = membership(*w, sys);
      if (rep.member || rep.violated != std::vector<size_t>{k})
        errors[i] = "LP witness does not isolate " + sys.records[k].str(sys.n);
    });
    for (const auto& e : errors)
      if (!e.empty()) {
        detail = e;
        return false;
      }
    os << "(" << n << "," << s << "):" << targets.size() << "w ";
  }

  // Constructive witnesses on the three worked examples, exact constants.
  auto w1 = witness_constructive(prob(2, 1, 0, 0, {{1}, {2}, {2}}), cache);
  if (!w1 || w1->c != Rat(1, 3)) {
    detail = "n=2 witness constant mismatch";
    return false;
  }
  auto w3 = witness_constructive(prob(5, 2, 0, 0, {{2, 5}, {2, 5}, {2, 5}}), cache);
  if (!w3 || w3->c != Rat(1, 3)) {  // 3 eps = 1
    detail = "Gr(2,5) witness constant mismatch";
    return false;
  }
  auto w2 = witness_constructive(
      prob(8, 5, 0, 0, {{3, 4, 5, 7, 8}, {2, 3, 5, 6, 8}, {2, 3, 5, 6, 8}}), cache);
  if (!w2 || w2->c != Rat(1, 27)) {  // 9 eps = 1/3
    detail = "Gr(5,8) witness constant mismatch";
    return false;
  }
  for (const auto* w : {&*w1, &*w3, &*w2}) {
    auto rep = check_semistable(w->weights, cache, kJobs);
    if (!rep.semistable) {
      detail = "constructive witness not semistable";
      return false;
    }
  }
  // Targets tight at their constructive witnesses.
  auto tight_at = [&](const WitnessResult& w, const GwProblem& rec) {
    Rat rhs = (Rat(-w.weights.D) + w.weights.total_weight()) / rec.n;
    Rat lhs = Rat(-rec.d);
    for (int l = 0; l < rec.s(); ++l)
      for (int t : rec.indices[l].elements) lhs += w.weights.theta[l][t - 1];
    lhs /= rec.r;
    return lhs == rhs;
  };
  if (!tight_at(*w1, prob(2, 1, 0, 0, {{1}, {2}, {2}})) ||
      !tight_at(*w3, prob(5, 2, 0, 0, {{2, 5}, {2, 5}, {2, 5}})) ||
      !tight_at(*w2, prob(8, 5, 0, 0, {{3, 4, 5, 7, 8}, {2, 3, 5, 6, 8}, {2, 3, 5, 6, 8}}))) {
    detail = "target not tight at a constructive witness";
    return false;
  }
  detail = os.str() + "- LP witnesses isolate targets; 3c=1 and 9eps=1/3 verified";
  return true;
}

}  // namespace

int main() {
  std::printf("qhorn acceptance suite (jobs = %d)\n", kJobs);
  criterion(1, "Gr(8,12) golden pair", c1);
  criterion(2, "Gr(5,9) golden triple", c2);
  criterion(3, "delta/S goldens", c3);
  criterion(4, "duality goldens n<=12", c4);
  criterion(5, "engine cross-validation", c5);
  criterion(6, "horn equivalence", c6);
  criterion(7, "transform invariance", c7);
  criterion(8, "saturation/monotonicity", c8);
  criterion(9, "main theorem desk scale", c9);
  criterion(10, "classical Fulton property", c10);
  criterion(11, "witness verification", c11);
  if (failures) std::printf("%d criterion(s) FAILED\n", failures);
  else std::printf("all criteria passed\n");
  return failures;
}
