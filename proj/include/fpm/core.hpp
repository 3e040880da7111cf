#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "fpm/errors.hpp"

namespace fpm {

/// A single item label. Tokens are non-empty and contain no comma,
/// whitespace, or '#'.
class Item {
public:
    explicit Item(std::string token);

    const std::string& token() const noexcept { return token_; }

    auto operator<=>(const Item&) const = default;

private:
    std::string token_;
};

/// Assigns ranks 1..n to the items of a database universe, ascending
/// lexicographically by token. Rank order therefore coincides with token
/// order, so canonical itemsets never need the map to sort themselves.
class ItemOrderMap {
public:
    ItemOrderMap() = default;

    static ItemOrderMap from_universe(const std::set<Item>& universe);

    int rank(const Item& item) const;
    bool contains(const Item& item) const noexcept { return rank_.count(item) > 0; }

    std::size_t size() const noexcept { return rank_.size(); }
    bool empty() const noexcept { return rank_.empty(); }

    /// Items with their ranks, in rank order.
    const std::map<Item, int>& ranks() const noexcept { return rank_; }

    bool operator==(const ItemOrderMap&) const = default;

private:
    std::map<Item, int> rank_;
};

/// An itemset in canonical form: items strictly ascending, no duplicates.
class Itemset {
public:
    Itemset() = default;

    /// Canonicalizes: sorts and silently merges duplicate items.
    explicit Itemset(std::vector<Item> items);

    const std::vector<Item>& items() const noexcept { return items_; }
    std::size_t size() const noexcept { return items_.size(); }
    bool empty() const noexcept { return items_.empty(); }

    auto operator<=>(const Itemset&) const = default;

private:
    std::vector<Item> items_;
};

struct Transaction {
    int id = 0;
    Itemset items;

    bool operator==(const Transaction&) const = default;
};

/// An immutable transaction database with its canonical item ordering.
class TransactionDatabase {
public:
    TransactionDatabase() = default;

    /// Ids are assigned 1..m in input order; duplicate items within a
    /// transaction merge silently. The universe is the set of items that
    /// appear.
    static TransactionDatabase from_item_lists(const std::vector<std::vector<Item>>& lists);

    /// Same, with an explicitly declared universe (must cover every item
    /// that appears). Used by the synthetic generator, whose universe may
    /// include items no transaction drew.
    static TransactionDatabase from_item_lists(const std::vector<std::vector<Item>>& lists,
                                               const std::set<Item>& universe);

    const std::vector<Transaction>& transactions() const noexcept { return transactions_; }
    std::size_t row_count() const noexcept { return transactions_.size(); }
    const ItemOrderMap& order_map() const noexcept { return order_; }
    std::set<Item> universe() const;

    bool operator==(const TransactionDatabase&) const = default;

private:
    std::vector<Transaction> transactions_;
    ItemOrderMap order_;
};

/// Minimum support as an absolute transaction count, always >= 1.
class SupportThreshold {
public:
    explicit SupportThreshold(int min_sup);

    /// ceiling(ratio * transactions), clamped to >= 1. Ratio must be > 0.
    static SupportThreshold from_ratio(double ratio, std::size_t transactions);

    int min_sup() const noexcept { return min_sup_; }

    bool operator==(const SupportThreshold&) const = default;

private:
    int min_sup_;
};

struct CountedItemset {
    Itemset items;
    int support = 0;

    auto operator<=>(const CountedItemset&) const = default;
};

ItemOrderMap build_order_map(const std::set<Item>& universe);

/// Subset test by ordered merge walk; both sides must be canonical.
bool contains(const Itemset& haystack, const Itemset& needle) noexcept;
bool contains(const Transaction& txn, const Itemset& candidate) noexcept;

/// Number of transactions containing the itemset. The itemset must be
/// non-empty.
int itemset_support(const TransactionDatabase& db, const Itemset& itemset);

/// All size-k subsets in lexicographic order; requires 1 <= k <= size.
std::vector<Itemset> k_subsets(const Itemset& itemset, int k);

/// Resets each member's support, then counts containing transactions.
void count_supports(const std::vector<Transaction>& transactions,
                    std::vector<CountedItemset>& members);

std::string to_string(const Itemset& itemset);
std::string to_string(const CountedItemset& counted);

}  // namespace fpm
