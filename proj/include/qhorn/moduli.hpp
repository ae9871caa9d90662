#pragma once

#include "qhorn/gw.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qhorn {

/// Per-point weight data of a pre-parabolic bundle: s weakly decreasing
/// n-vectors of spread at most 1, on a bundle of degree -D.
struct WeightSystem {
  int n = 0;
  int D = 0;
  std::vector<std::vector<Rat>> theta;  // s points, n weights each

  WeightSystem() = default;
  WeightSystem(int n_, int D_, std::vector<std::vector<Rat>> theta_);

  int s() const { return static_cast<int>(theta.size()); }
  Rat total_weight() const;
  std::string str() const;
};

/// Jump positions of a weight vector: Lambda_1 < ... < Lambda_k = n.
struct FlagSignature {
  std::vector<int> jumps;
  std::string str() const;
};

/// One tight (slope-equality) subbundle datum found inside a Witten bundle.
struct TightDatum {
  int p = 0;
  int q = 0;
  std::vector<SchubertIndex> K;
};

enum class StabilityVerdict { StableGeneric, StrictlySemistable, Undetermined };
const char* verdict_name(StabilityVerdict v);

struct ModuliReport {
  int expected_dim = 0;
  StabilityVerdict verdict = StabilityVerdict::Undetermined;
  bool polyrigid = false;
  std::vector<TightDatum> evidence;
  /// The normalised problem the analysis ran on (equal to the input when all
  /// cycles were already normalised).
  GwProblem normalized;
};

/// alpha^l_k = (n-r+k-i^l_k)/(n-r) on the rank-r Witten bundle; values in [0,1].
std::vector<std::vector<Rat>> witten_weights(const std::vector<SchubertIndex>& indices);

FlagSignature jump_set(const std::vector<Rat>& theta);

/// dim X_Lambda = sum (Lambda_k - Lambda_{k-1})(n - Lambda_k).
int flag_dim(const FlagSignature& sig, int n);

/// Sum of flag dims of the Witten weights minus r^2 plus 1. Valid as a moduli
/// dimension only when a stable point exists; throws if some cycle is not
/// normalised (weight spread exactly 1).
int moduli_dim(const std::vector<SchubertIndex>& indices);

/// Weight (n - Lambda_k)/n on flag step Lambda_k, expanded to an n-vector
/// constant on each block.
std::vector<Rat> rigidity_weights(const FlagSignature& sig, int n);

/// Twists points whose cycle is not normalised (by 1, repeatedly) until every
/// cycle is; the generalized GW value is unchanged.
GwProblem normalize_problem(const GwProblem& P);

struct SemistabilityReport {
  bool semistable = false;
  std::vector<GwProblem> violated;
  std::vector<GwProblem> tight;
};

/// Evaluates every inequality (1/r)(-d + sum_{I^l} theta) <= (1/n)(-D + sum theta)
/// indexed by generalized GW = 1 data against the weight system.
SemistabilityReport check_semistable(const WeightSystem& W,
                                     CoefficientCache& cache = global_cache(),
                                     int jobs = 1);

/// Minimal (conservative) extension of rank-r weights at the given Schubert
/// positions to ambient rank-n weights.
WeightSystem minimal_extension(const std::vector<std::vector<Rat>>& sub_weights,
                               const std::vector<SchubertIndex>& positions, int D);

/// f(N) = 1 for N = 1..M. M = 0 picks the default bound: 1 in the classical
/// case d = D = 0, else r+1.
bool is_polyrigid(const GwProblem& P, int M = 0, CoefficientCache& cache = global_cache());

/// The recursive decider: normalises, searches for tight subbundle data at
/// the lowest rank level, and recurses on the subbundle and quotient data.
/// Requires generalized_gw(P) = 1.
ModuliReport polyrigid_report(const GwProblem& P, CoefficientCache& cache = global_cache());

/// Like polyrigid_report but tolerates generalized_gw != 1; such problems
/// report polyrigid = false with the stability analysis attached.
ModuliReport moduli_report(const GwProblem& P, CoefficientCache& cache = global_cache());

/// All tight data at the first rank level p that has any, for the (already
/// normalised) problem. Sets *violation if a slope-violating datum shows up.
std::vector<TightDatum> find_tight_level(const GwProblem& Pn,
                                         CoefficientCache& cache,
                                         bool* violation = nullptr);

struct WitnessResult {
  bool constructive = false;
  WeightSystem weights;
  /// The polyrigid zero-dimensional intersection the construction extended
  /// (equals the record's own problem when its dual data is already stable).
  GwProblem built_on;
  int dual_factor_rank = 0;
  Rat c;  // the quotient-slot constant, 1/(s * l^2)
  std::string note;
};

/// Constructive witness weights for a polyrigid record with D = 0: minimal
/// extension of the Witten weights of the enclosing intersection whose dual
/// data is a single simple factor, plus c = 1/(s l^2) on every quotient slot.
/// Returns nullopt (with note) when the construction does not apply; callers
/// fall back to the LP witness.
std::optional<WitnessResult> witness_constructive(const GwProblem& record,
                                                  CoefficientCache& cache = global_cache());

}  // namespace qhorn
