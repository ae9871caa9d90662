#pragma once

#include "qhorn/rational.hpp"

#include <vector>

namespace qhorn {

/// A linear program over exact rationals: free variables, rows of the form
/// coeffs . x <= rhs or coeffs . x == rhs, objective to maximize.
struct LpRow {
  std::vector<Rat> coeffs;
  bool is_eq = false;
  Rat rhs;
};

struct LpProblem {
  int nvars = 0;
  std::vector<LpRow> rows;
  std::vector<Rat> objective;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rat optimum;
  std::vector<Rat> witness;  // an optimal vertex, in the original variables
};

/// Two-phase dense simplex with Bland's anti-cycling rule. Exact; never
/// returns an approximate optimum.
LpResult lp_max(const LpProblem& prob);

}  // namespace qhorn
