#pragma once

#include "qhorn/rational.hpp"
#include "qhorn/schubert.hpp"

#include <map>

namespace qhorn::lr {

using ClassMap = std::map<Partition, Int>;

/// Littlewood-Richardson expansion of s_lambda * s_mu restricted to
/// partitions with at most max_rows rows. When max_cols >= 0 the result is
/// truncated to the max_rows x max_cols box (terms outside are dropped).
ClassMap expand(const Partition& lambda, const Partition& mu, int max_rows,
                int max_cols = -1);

/// Single LR coefficient c_{lambda,mu}^{nu}.
Int coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

}  // namespace qhorn::lr
