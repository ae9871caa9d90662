#pragma once

#include "qhorn/lp.hpp"
#include "qhorn/moduli.hpp"

#include <cstdint>
#include <optional>

namespace qhorn {

/// One inequality Ineq(d,r,I^1..I^s): sum_l lambda_{I^l}(A_l) - d <= 0,
/// admitted when its Gromov-Witten number is 1.
struct IneqRecord {
  int r = 0;
  int d = 0;
  std::vector<SchubertIndex> indices;
  Int gw = 0;
  bool polyrigid = false;
  std::optional<bool> lp_irredundant;

  GwProblem problem(int n) const { return GwProblem(n, r, d, 0, indices); }
  std::string str(int n) const { return problem(n).str(); }
};

struct IneqSystem {
  int n = 0;
  int s = 0;
  std::vector<IneqRecord> records;
};

/// Every (r, d, I^1..I^s) with 1 <= r < n, d = degree_from_cycles >= 0 and
/// gw_invariant = 1, in lexicographic order over ordered tuples.
IneqSystem enumerate_inequalities(int n, int s, CoefficientCache& cache = global_cache(),
                                  int jobs = 1);

/// Sets the polyrigid flag on each record via is_polyrigid. M = 0 uses the
/// per-record default (1 for classical records, r+1 otherwise).
void classify_records(IneqSystem& sys, int M = 0, CoefficientCache& cache = global_cache(),
                      int jobs = 1);

/// Collapses records equal up to permutation of the s points, keeping the
/// lexicographically first representative. Off by default everywhere.
IneqSystem collapse_orbits(const IneqSystem& sys);

/// The LP facet test: record k is irredundant iff the maximum of its
/// left-hand side over the region cut out by all the other records (inside
/// Delta_{n-1}^s) is strictly positive. Optionally returns the maximizer.
bool lp_irredundant(size_t k, const IneqSystem& sys,
                    std::vector<ConjugacyClass>* witness = nullptr);

/// Runs lp_irredundant for every record and stores the flags.
void classify_lp(IneqSystem& sys, int jobs = 1);

struct MembershipReport {
  bool member = false;
  std::vector<size_t> violated;
  std::vector<size_t> tight;
};

/// Exact evaluation of every record's inequality at the class tuple.
MembershipReport membership(const std::vector<ConjugacyClass>& A, const IneqSystem& sys);
/// Same, but only against the polyrigid subset of the records.
MembershipReport membership_polyrigid(const std::vector<ConjugacyClass>& A,
                                      const IneqSystem& sys);

/// Nori's construction: subspaces V_a of dimensions dims with
/// sum dims = W_dim + 1 give the classical record in Gr(s-1, W_dim) with
/// I(a) = {dims[a]} u {W_dim-s+3..W_dim}. Verified to have gw = 1.
IneqRecord nori_instance(const std::vector<int>& dims, int W_dim,
                         CoefficientCache& cache = global_cache());

/// Seeded random point of Delta_{n-1}^s: per point, n i.i.d. numerators over
/// a fixed denominator, sorted decreasingly, then normalize_weights.
std::vector<ConjugacyClass> random_classes(int n, int s, std::uint64_t seed);

/// LP witness for a record: a class tuple violating exactly inequality k
/// while satisfying all others; empty when the record is redundant.
std::optional<std::vector<ConjugacyClass>> lp_witness(size_t k, const IneqSystem& sys);

}  // namespace qhorn
