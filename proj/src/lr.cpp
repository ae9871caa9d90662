#include "lr.hpp"

#include <functional>
#include <limits>

namespace qhorn::lr {

namespace {

constexpr int kNoBallotBound = std::numeric_limits<int>::max() / 2;

// Iterates over letter placements: letter li of mu is added as a horizontal
// strip; the ballot condition is enforced row-prefix-wise against the
// previous letter's placement (#li in rows <= j  <=  #(li-1) in rows <= j-1).
// rowCap(u, shape) gives an extra per-row width bound (box or target nu).
struct StripWalker {
  const Partition& mu;
  int max_rows;
  std::function<int(int, const std::vector<int>&)> row_cap;  // 1-based row
  std::function<void(const std::vector<int>&)> emit;

  std::vector<int> shape;

  void run(const Partition& lambda) {
    if (static_cast<int>(lambda.size()) > max_rows) return;
    shape.assign(lambda.begin(), lambda.end());
    shape.resize(max_rows, 0);
    std::vector<int> pref(max_rows + 1, kNoBallotBound);
    place_letter(0, pref);
  }

  void place_letter(int li, const std::vector<int>& prev_pref) {
    if (li == static_cast<int>(mu.size())) {
      emit(shape);
      return;
    }
    std::vector<int> old_shape = shape;
    std::vector<int> cur_pref(max_rows + 1, 0);
    place_row(li, 1, 0, old_shape, prev_pref, cur_pref);
  }

  void place_row(int li, int u, int placed, const std::vector<int>& old_shape,
                 const std::vector<int>& prev_pref, std::vector<int>& cur_pref) {
    int need = mu[li];
    if (u > max_rows) {
      if (placed == need) place_letter(li + 1, cur_pref);
      return;
    }
    int cap = need - placed;
    if (u >= 2) cap = std::min(cap, old_shape[u - 2] - old_shape[u - 1]);
    int extra = row_cap(u, shape);
    cap = std::min(cap, extra - shape[u - 1]);
    // ballot: placed + t <= prev_pref[u-1]
    if (prev_pref[u - 1] < kNoBallotBound) cap = std::min(cap, prev_pref[u - 1] - placed);
    for (int t = 0; t <= cap; ++t) {
      shape[u - 1] += t;
      cur_pref[u] = placed + t;
      place_row(li, u + 1, placed + t, old_shape, prev_pref, cur_pref);
      shape[u - 1] -= t;
    }
  }
};

}  // namespace

ClassMap expand(const Partition& lambda, const Partition& mu, int max_rows, int max_cols) {
  ClassMap out;
  if (static_cast<int>(lambda.size()) > max_rows) return out;
  if (max_cols >= 0 && !lambda.empty() && lambda[0] > max_cols) return out;
  if (mu.empty()) {
    out[lambda] = 1;
    return out;
  }
  StripWalker w{mu, max_rows,
                [&](int, const std::vector<int>&) {
                  return max_cols >= 0 ? max_cols : kNoBallotBound;
                },
                [&](const std::vector<int>& shape) {
                  Partition nu(shape);
                  trim_partition(nu);
                  out[nu] += 1;
                },
                {}};
  w.run(lambda);
  return out;
}

Int coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (partition_weight(nu) != partition_weight(lambda) + partition_weight(mu)) return 0;
  int rows = static_cast<int>(nu.size());
  if (static_cast<int>(lambda.size()) > rows || static_cast<int>(mu.size()) > rows)
    return 0;
  for (size_t i = 0; i < lambda.size(); ++i)
    if (lambda[i] > nu[i]) return 0;
  Int count = 0;
  StripWalker w{mu, rows,
                [&](int u, const std::vector<int>&) { return nu[u - 1]; },
                [&](const std::vector<int>& shape) {
                  // Shapes reaching here are contained in nu with equal weight.
                  for (int i = 0; i < static_cast<int>(shape.size()); ++i)
                    if (shape[i] != nu[i]) return;
                  count += 1;
                },
                {}};
  w.run(lambda);
  return count;
}

}  // namespace qhorn::lr
