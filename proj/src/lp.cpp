#include "qhorn/lp.hpp"

#include <stdexcept>

namespace qhorn {

namespace {

// Dense tableau simplex over Rat with a maintained objective row. Entering
// column by Dantzig's rule until progress stalls, then permanently Bland's
// rule, which guarantees termination on degenerate vertices.
struct Tableau {
  int m = 0;
  int ncols = 0;
  std::vector<std::vector<Rat>> a;  // m x ncols
  std::vector<Rat> b;               // m
  std::vector<Rat> z;               // reduced costs, ncols
  Rat zval;                         // current objective value
  std::vector<int> basis;
  std::vector<char> is_basic;
  std::vector<char> frozen;  // columns barred from entering

  void init(int rows, int cols) {
    m = rows;
    ncols = cols;
    a.assign(m, std::vector<Rat>(ncols, Rat(0)));
    b.assign(m, Rat(0));
    basis.assign(m, -1);
    is_basic.assign(ncols, 0);
    frozen.assign(ncols, 0);
  }

  void set_objective(const std::vector<Rat>& obj) {
    z = obj;
    z.resize(ncols, Rat(0));
    zval = 0;
    // Price out the current basis.
    for (int i = 0; i < m; ++i) {
      if (z[basis[i]] == 0) continue;
      Rat f = z[basis[i]];
      for (int j = 0; j < ncols; ++j) z[j] -= f * a[i][j];
      zval += f * b[i];
    }
  }

  void pivot(int row, int col) {
    Rat p = a[row][col];
    if (p != 1) {
      for (int j = 0; j < ncols; ++j)
        if (a[row][j] != 0) a[row][j] /= p;
      b[row] /= p;
    }
    for (int i = 0; i < m; ++i) {
      if (i == row) continue;
      Rat f = a[i][col];
      if (f == 0) continue;
      for (int j = 0; j < ncols; ++j)
        if (a[row][j] != 0) a[i][j] -= f * a[row][j];
      b[i] -= f * b[row];
    }
    {
      Rat f = z[col];
      if (f != 0) {
        for (int j = 0; j < ncols; ++j)
          if (a[row][j] != 0) z[j] -= f * a[row][j];
        zval += f * b[row];
      }
    }
    is_basic[basis[row]] = 0;
    is_basic[col] = 1;
    basis[row] = col;
  }

  // Returns false when unbounded.
  bool optimize() {
    long long stalled = 0;
    const long long bland_after = 4ll * (m + ncols);
    bool bland = false;
    while (true) {
      int enter = -1;
      if (!bland) {
        Rat best;
        for (int j = 0; j < ncols; ++j)
          if (!is_basic[j] && !frozen[j] && z[j] > 0 && (enter < 0 || z[j] > best)) {
            enter = j;
            best = z[j];
          }
      } else {
        for (int j = 0; j < ncols && enter < 0; ++j)
          if (!is_basic[j] && !frozen[j] && z[j] > 0) enter = j;
      }
      if (enter < 0) return true;
      int leave = -1;
      Rat ratio;
      for (int i = 0; i < m; ++i) {
        if (a[i][enter] <= 0) continue;
        Rat r = b[i] / a[i][enter];
        if (leave < 0 || r < ratio || (r == ratio && basis[i] < basis[leave])) {
          leave = i;
          ratio = r;
        }
      }
      if (leave < 0) return false;
      bool degenerate = (b[leave] == 0);
      pivot(leave, enter);
      if (degenerate) {
        if (++stalled > bland_after) bland = true;
      } else {
        stalled = 0;
      }
    }
  }
};

}  // namespace

LpResult lp_max(const LpProblem& prob) {
  const int nv = prob.nvars;
  const int m = static_cast<int>(prob.rows.size());
  for (const auto& row : prob.rows)
    if (static_cast<int>(row.coeffs.size()) != nv)
      throw std::invalid_argument("lp_max: row width != nvars");
  if (static_cast<int>(prob.objective.size()) != nv)
    throw std::invalid_argument("lp_max: objective width != nvars");

  int nslack = 0;
  bool need_phase1 = false;
  for (const auto& row : prob.rows) {
    if (!row.is_eq) ++nslack;
    if (row.is_eq || row.rhs < 0) need_phase1 = true;
  }

  // Columns: split free vars (2nv), slacks, artificials (only when needed).
  int nart = need_phase1 ? m : 0;
  Tableau t;
  t.init(m, 2 * nv + nslack + nart);

  int slack = 0;
  for (int i = 0; i < m; ++i) {
    const auto& row = prob.rows[i];
    int sgn = row.rhs < 0 ? -1 : 1;
    for (int j = 0; j < nv; ++j) {
      if (row.coeffs[j] == 0) continue;
      t.a[i][2 * j] = sgn * row.coeffs[j];
      t.a[i][2 * j + 1] = -sgn * row.coeffs[j];
    }
    t.b[i] = sgn * row.rhs;
    if (!row.is_eq) {
      t.a[i][2 * nv + slack] = sgn;
      ++slack;
    }
  }

  if (need_phase1) {
    for (int i = 0; i < m; ++i) {
      t.a[i][2 * nv + nslack + i] = 1;
      t.basis[i] = 2 * nv + nslack + i;
      t.is_basic[t.basis[i]] = 1;
    }
    std::vector<Rat> phase1(t.ncols, Rat(0));
    for (int i = 0; i < m; ++i) phase1[2 * nv + nslack + i] = -1;
    t.set_objective(phase1);
    if (!t.optimize()) throw std::logic_error("lp_max: phase 1 unbounded");
    if (t.zval != 0) return {LpStatus::Infeasible, Rat(0), {}};
    // Drive basic artificials out where a real pivot exists; freeze them all.
    for (int i = 0; i < m; ++i) {
      if (t.basis[i] < 2 * nv + nslack) continue;
      for (int j = 0; j < 2 * nv + nslack; ++j)
        if (t.a[i][j] != 0) {
          t.pivot(i, j);
          break;
        }
    }
    for (int j = 2 * nv + nslack; j < t.ncols; ++j) t.frozen[j] = 1;
  } else {
    // All rows are <= with rhs >= 0: the slack basis is feasible.
    slack = 0;
    for (int i = 0; i < m; ++i) {
      t.basis[i] = 2 * nv + slack;
      t.is_basic[t.basis[i]] = 1;
      ++slack;
    }
  }

  std::vector<Rat> phase2(t.ncols, Rat(0));
  for (int j = 0; j < nv; ++j) {
    phase2[2 * j] = prob.objective[j];
    phase2[2 * j + 1] = -prob.objective[j];
  }
  t.set_objective(phase2);
  if (!t.optimize()) return {LpStatus::Unbounded, Rat(0), {}};

  LpResult res;
  res.status = LpStatus::Optimal;
  res.optimum = t.zval;
  std::vector<Rat> x(t.ncols, Rat(0));
  for (int i = 0; i < m; ++i) x[t.basis[i]] = t.b[i];
  res.witness.resize(nv);
  for (int j = 0; j < nv; ++j) res.witness[j] = x[2 * j] - x[2 * j + 1];
  return res;
}

}  // namespace qhorn
