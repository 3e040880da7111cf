#include "fpm/core.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace fpm {

Item::Item(std::string token) : token_(std::move(token)) {
    if (token_.empty()) {
        throw InvalidItemError("item token must not be empty");
    }
    for (unsigned char c : token_) {
        if (c == ',' || c == '#' || std::isspace(c)) {
            throw InvalidItemError("item token '" + token_ +
                                   "' contains a separator character or '#'");
        }
    }
}

ItemOrderMap ItemOrderMap::from_universe(const std::set<Item>& universe) {
    if (universe.empty()) {
        throw EmptyUniverseError("cannot build an item order over an empty universe");
    }
    ItemOrderMap map;
    int rank = 1;
    for (const Item& item : universe) {
        map.rank_.emplace(item, rank++);
    }
    return map;
}

int ItemOrderMap::rank(const Item& item) const {
    auto it = rank_.find(item);
    if (it == rank_.end()) {
        throw DataError("item '" + item.token() + "' is not in the database universe");
    }
    return it->second;
}

Itemset::Itemset(std::vector<Item> items) : items_(std::move(items)) {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

TransactionDatabase TransactionDatabase::from_item_lists(
    const std::vector<std::vector<Item>>& lists) {
    std::set<Item> universe;
    for (const auto& list : lists) {
        universe.insert(list.begin(), list.end());
    }
    return from_item_lists(lists, universe);
}

TransactionDatabase TransactionDatabase::from_item_lists(
    const std::vector<std::vector<Item>>& lists, const std::set<Item>& universe) {
    TransactionDatabase db;
    if (!universe.empty()) {
        db.order_ = ItemOrderMap::from_universe(universe);
    }
    db.transactions_.reserve(lists.size());
    int id = 1;
    for (const auto& list : lists) {
        for (const Item& item : list) {
            if (!db.order_.contains(item)) {
                throw DataError("item '" + item.token() +
                                "' is outside the declared universe");
            }
        }
        db.transactions_.push_back(Transaction{id++, Itemset(list)});
    }
    return db;
}

std::set<Item> TransactionDatabase::universe() const {
    std::set<Item> items;
    for (const auto& [item, rank] : order_.ranks()) {
        items.insert(item);
    }
    return items;
}

SupportThreshold::SupportThreshold(int min_sup) : min_sup_(min_sup) {
    if (min_sup < 1) {
        throw DataError("minimum support must be at least 1");
    }
}

SupportThreshold SupportThreshold::from_ratio(double ratio, std::size_t transactions) {
    if (!(ratio > 0.0)) {
        throw DataError("support ratio must be positive");
    }
    // The epsilon keeps exact products like 0.5 * 4 from rounding up.
    int min_sup = static_cast<int>(
        std::ceil(ratio * static_cast<double>(transactions) - 1e-9));
    return SupportThreshold(std::max(1, min_sup));
}

ItemOrderMap build_order_map(const std::set<Item>& universe) {
    return ItemOrderMap::from_universe(universe);
}

bool contains(const Itemset& haystack, const Itemset& needle) noexcept {
    const auto& hay = haystack.items();
    std::size_t i = 0;
    for (const Item& want : needle.items()) {
        while (i < hay.size() && hay[i] < want) {
            ++i;
        }
        if (i == hay.size() || want < hay[i]) {
            return false;
        }
        ++i;
    }
    return true;
}

bool contains(const Transaction& txn, const Itemset& candidate) noexcept {
    return contains(txn.items, candidate);
}

int itemset_support(const TransactionDatabase& db, const Itemset& itemset) {
    if (itemset.empty()) {
        throw InvalidItemsetError("support of the empty itemset is undefined");
    }
    int support = 0;
    for (const Transaction& txn : db.transactions()) {
        if (contains(txn, itemset)) {
            ++support;
        }
    }
    return support;
}

std::vector<Itemset> k_subsets(const Itemset& itemset, int k) {
    const int n = static_cast<int>(itemset.size());
    if (k < 1 || k > n) {
        throw InvalidArityError("subset size " + std::to_string(k) +
                                " out of range for an itemset of size " + std::to_string(n));
    }
    const auto& items = itemset.items();
    std::vector<Itemset> out;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        idx[static_cast<std::size_t>(i)] = i;
    }
    while (true) {
        std::vector<Item> subset;
        subset.reserve(static_cast<std::size_t>(k));
        for (int i : idx) {
            subset.push_back(items[static_cast<std::size_t>(i)]);
        }
        out.push_back(Itemset(std::move(subset)));

        // Advance the rightmost index that can still move.
        int pos = k - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - k + pos) {
            --pos;
        }
        if (pos < 0) {
            break;
        }
        ++idx[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < k; ++i) {
            idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
        }
    }
    return out;
}

void count_supports(const std::vector<Transaction>& transactions,
                    std::vector<CountedItemset>& members) {
    for (CountedItemset& member : members) {
        member.support = 0;
    }
    for (const Transaction& txn : transactions) {
        for (CountedItemset& member : members) {
            if (contains(txn, member.items)) {
                ++member.support;
            }
        }
    }
}

std::string to_string(const Itemset& itemset) {
    std::string out;
    for (const Item& item : itemset.items()) {
        if (!out.empty()) {
            out += ',';
        }
        out += item.token();
    }
    return out;
}

std::string to_string(const CountedItemset& counted) {
    return to_string(counted.items) + "/ " + std::to_string(counted.support);
}

}  // namespace fpm
