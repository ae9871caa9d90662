#pragma once

#include "qhorn/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qhorn {

/// A Schubert cycle in Gr(r,n): a strictly increasing subset
/// I = {i_1 < ... < i_r} of {1..n}. This is the canonical external
/// representation of cycles throughout the library.
struct SchubertIndex {
  std::vector<int> elements;  // strictly increasing, values in 1..n
  int n = 0;                  // ambient dimension

  SchubertIndex() = default;
  SchubertIndex(std::vector<int> elems, int ambient);

  int r() const { return static_cast<int>(elements.size()); }
  bool operator==(const SchubertIndex& o) const = default;
  bool operator<(const SchubertIndex& o) const;

  /// "{1,4}"
  std::string str() const;
  /// Parses "{1,4}" against ambient n.
  static SchubertIndex parse(const std::string& s, int n);
};

/// Weakly decreasing nonnegative parts, trailing zeros trimmed. Internal to
/// the LR engine; the index set is the public face.
using Partition = std::vector<int>;

int partition_weight(const Partition& p);
std::string partition_str(const Partition& p);
void trim_partition(Partition& p);

/// A point of the simplex Delta_r: coords c_1 >= ... >= c_r >= c_1 - 1,
/// sum = 0. Conjugacy classes of SU(n) are the r = n case.
struct SimplexPoint {
  std::vector<Rat> coords;

  SimplexPoint() = default;
  explicit SimplexPoint(std::vector<Rat> c);

  int r() const { return static_cast<int>(coords.size()); }
  bool operator==(const SimplexPoint& o) const = default;
  std::string str() const;  // "[1/2, -1/2]"
};

using ConjugacyClass = SimplexPoint;

// Conversions and elementary invariants.

/// lambda_a = n - r + a - i_a, weakly decreasing by construction.
Partition index_to_partition(const SchubertIndex& I);
/// Inverse of index_to_partition for partitions in the r x (n-r) box.
SchubertIndex partition_to_index(const Partition& p, int r, int n);

/// Codimension of the cycle: sum of the partition parts.
int codim(const SchubertIndex& I);

/// J = {a in {1..n} | n+1-a not in I}, the Schubert datum of the dual cycle
/// in Gr(n-r, n). An involution.
SchubertIndex grassmann_dual(const SchubertIndex& I);

/// NI subset of {1..r+N(n-r)} with k_a = a + N(i_a - a).
SchubertIndex scale_index(const SchubertIndex& I, int N);

/// delta(I) in Delta_r: delta_j = (j - i_j)/(n-r) - c with the sum-zero
/// normalisation constant c.
SimplexPoint delta(const SchubertIndex& I);

/// S(a) = (a_2 + 1/r, ..., a_r + 1/r, a_1 - (1 - 1/r)); r-fold iteration is
/// the identity on Delta_r.
SimplexPoint shift_s(const SimplexPoint& a);
SimplexPoint shift_s_pow(const SimplexPoint& a, int times);

/// sum over t in I of a_t. The subset form accepts any subset of {1..n},
/// including the full set (which sums to zero on the simplex).
Rat lambda_sum(const SchubertIndex& I, const ConjugacyClass& A);
Rat lambda_sum(const std::vector<int>& subset, const ConjugacyClass& A);

/// True iff i_1 > 1 or i_r < n, i.e. the Witten weights of the cycle have
/// spread strictly below 1.
bool is_normalised(const SchubertIndex& I);

/// Maps 1 >= t_1 >= ... >= t_n >= 0 to the sum-zero vector (t_i - mean).
ConjugacyClass normalize_weights(const std::vector<Rat>& t);

/// The unique d with r(n-r) + dn - Dr = sum of codims, if it is a
/// nonnegative integer; empty otherwise.
std::optional<int> degree_from_cycles(const std::vector<SchubertIndex>& indices, int D);

bool valid_simplex_point(const SimplexPoint& a);

}  // namespace qhorn
