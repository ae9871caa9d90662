#pragma once

#include "qhorn/cache.hpp"
#include "qhorn/schubert.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace qhorn {

/// Raised when a problem's codimension data contradicts its degree data.
struct dimension_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The tuple naming a generalized Gromov-Witten number
/// <sigma_{I^1},...,sigma_{I^s}>_{d,D,n}: degree-(-d) rank-r subbundles of the
/// generic degree-(-D) rank-n bundle on the line, with Schubert conditions at
/// s points.
struct GwProblem {
  int n = 0;
  int r = 0;
  int d = 0;
  int D = 0;
  std::vector<SchubertIndex> indices;

  GwProblem() = default;
  GwProblem(int n_, int r_, int d_, int D_, std::vector<SchubertIndex> idx);

  int s() const { return static_cast<int>(indices.size()); }
  long long codim_sum() const;
  /// r(n-r) + dn - Dr - sum of codims.
  long long expected_dim() const;

  bool operator==(const GwProblem& o) const = default;

  /// Canonical form, e.g. "gw(n=4,r=2,d=1,D=0;{1,4},{2,3},{1,2})".
  std::string str() const;
  /// Same with the index multiset sorted; used as an order-insensitive cache
  /// key (the engines are symmetric in the s points).
  std::string sorted_key() const;
};

Int lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Classical s-fold intersection number in Gr(r,n); requires d = D = 0 and
/// codim sum r(n-r).
Int classical_intersection(const GwProblem& P, CoefficientCache& cache = global_cache());

/// Degree-d Gromov-Witten number at D = 0, computed by iterated LR products
/// followed by n-border-strip reduction of the overflowing partitions.
Int gw_invariant(const GwProblem& P, CoefficientCache& cache = global_cache());

/// Same contract, independent code path: affine-Weyl (Kac-Walton) folding of
/// the LR expansions at level n-r, with the winding number carrying the
/// q-degree.
Int fusion_oracle(const GwProblem& P, CoefficientCache& cache = global_cache());

/// (d,D) -> (d+r, D+n) for direction=+1, the inverse for direction=-1.
GwProblem transform_shift(const GwProblem& P, int direction);

/// Cyclic twist: I^l -> I^l - n_l (mod n), d -> d - sum k_l, D -> sum n_l
/// removed, where k_l counts the wrapped elements.
GwProblem transform_twist(const GwProblem& P, const std::vector<int>& n_l);

/// Reduces D to 0 along the canonical path (shift into [0,n), one twist at
/// the first point), then evaluates. A reduction landing on d < 0 counts an
/// empty set of subbundles: value 0, with a note in *diagnostic if given.
Int generalized_gw(const GwProblem& P, CoefficientCache& cache = global_cache(),
                   std::string* diagnostic = nullptr);

/// The problem for the dual cycles in Gr(n-r,n), parameters (d-D, -D).
GwProblem gw_dual(const GwProblem& P);

/// Scales the whole situation by N: Gr(Nr,Nn), degrees Nd, ND.
GwProblem scale_situation(const GwProblem& P, int N);

/// The problem behind f(N): indices NI^l in Gr(r, r+N(n-r)), parameters
/// (d, d+N(D-d)).
GwProblem f_of_n_problem(const GwProblem& P, int N);
Int f_of_n(const GwProblem& P, int N, CoefficientCache& cache = global_cache());

/// The eigenvalue-inequality recursion of the quantum Horn theorem: true iff
/// every lower-rank datum (p, K^1..K^s, q) with nonvanishing invariant
/// satisfies  sum_{K^1} S^d(delta(I^1)) + sum_{j>=2} sum_{K^j} delta(I^j) <= q.
/// Rank 1 is unconditionally nonvanishing under the degree condition.
bool horn_nonvanishing(const GwProblem& P, CoefficientCache& cache = global_cache());

/// All r-subsets of {1..n} in lexicographic order.
std::vector<SchubertIndex> all_indices(int r, int n);

Partition dual_partition(const Partition& p, int r, int cols);

}  // namespace qhorn
