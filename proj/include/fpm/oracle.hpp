#pragma once

#include <optional>
#include <vector>

#include "fpm/core.hpp"

namespace fpm {

/// Brute-force ground truth: every itemset with support >= min_sup and
/// size <= max_k, with exact supports, in canonical order. Enumerates the
/// subset lattice directly with a support cutoff; shares nothing with the
/// miners beyond the core types. Refuses universes above 20 items.
std::vector<CountedItemset> enumerate_frequent(const TransactionDatabase& db,
                                               SupportThreshold threshold,
                                               std::optional<int> max_k = std::nullopt);

}  // namespace fpm
