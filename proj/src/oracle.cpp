#include "fpm/oracle.hpp"

namespace fpm {

namespace {

constexpr std::size_t kMaxOracleUniverse = 20;

void enumerate(const TransactionDatabase& db, int min_sup, std::optional<int> max_k,
               const std::vector<Item>& universe, std::size_t start,
               std::vector<Item>& prefix, std::vector<CountedItemset>& out) {
    for (std::size_t i = start; i < universe.size(); ++i) {
        prefix.push_back(universe[i]);
        Itemset itemset(prefix);
        const int support = itemset_support(db, itemset);
        // Infrequent prefixes cannot have frequent extensions, so the
        // recursion stops here without visiting them.
        if (support >= min_sup) {
            out.push_back(CountedItemset{itemset, support});
            if (!max_k || static_cast<int>(prefix.size()) < *max_k) {
                enumerate(db, min_sup, max_k, universe, i + 1, prefix, out);
            }
        }
        prefix.pop_back();
    }
}

}  // namespace

std::vector<CountedItemset> enumerate_frequent(const TransactionDatabase& db,
                                               SupportThreshold threshold,
                                               std::optional<int> max_k) {
    if (db.order_map().size() > kMaxOracleUniverse) {
        throw OracleScaleError("oracle enumeration is limited to " +
                               std::to_string(kMaxOracleUniverse) + " items, got " +
                               std::to_string(db.order_map().size()));
    }
    if (max_k && *max_k < 1) {
        throw InvalidArityError("max itemset size must be at least 1");
    }
    std::vector<Item> universe;
    universe.reserve(db.order_map().size());
    for (const auto& [item, rank] : db.order_map().ranks()) {
        universe.push_back(item);
    }
    std::vector<CountedItemset> out;
    std::vector<Item> prefix;
    enumerate(db, threshold.min_sup(), max_k, universe, 0, prefix, out);
    return out;
}

}  // namespace fpm
