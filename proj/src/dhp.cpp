#include "fpm/dhp.hpp"

#include <algorithm>
#include <cassert>

namespace fpm {

void HashConfig::validate() const {
    if (bucket_count < 1) {
        throw DataError("bucket count must be at least 1");
    }
    if (base < 2) {
        throw DataError("hash base must be at least 2");
    }
    if (hash_until_level < 0) {
        throw DataError("hash-until-level must be non-negative");
    }
}

HashTable::HashTable(int itemset_size, int bucket_count)
    : itemset_size_(itemset_size), buckets_(static_cast<std::size_t>(bucket_count), 0) {
    if (itemset_size < 1) {
        throw DataError("hashed itemset size must be at least 1");
    }
    if (bucket_count < 1) {
        throw DataError("bucket count must be at least 1");
    }
}

std::size_t hash_bucket(const Itemset& itemset, const ItemOrderMap& order,
                        const HashConfig& config) {
    config.validate();
    std::int64_t h = 0;
    for (const Item& item : itemset.items()) {
        h = (h * config.base + order.rank(item)) % config.bucket_count;
    }
    return static_cast<std::size_t>(h);
}

WorkingDatabase::WorkingDatabase(const TransactionDatabase& db)
    : live_(db.transactions()), order_(db.order_map()) {}

WorkingDatabase::WorkingDatabase(std::vector<Transaction> live, ItemOrderMap order)
    : live_(std::move(live)), order_(std::move(order)) {}

std::vector<int> trim_counters(const Transaction& txn, const CandidateSet& candidates) {
    const auto& items = txn.items.items();
    std::vector<int> counters(items.size(), 0);
    for (const CountedItemset& candidate : candidates.members) {
        if (!contains(txn, candidate.items)) {
            continue;
        }
        for (const Item& item : candidate.items.items()) {
            auto it = std::lower_bound(items.begin(), items.end(), item);
            ++counters[static_cast<std::size_t>(it - items.begin())];
        }
    }
    return counters;
}

std::optional<Transaction> trim_transaction(const Transaction& txn,
                                            const CandidateSet& candidates, int k) {
    const std::vector<int> counters = trim_counters(txn, candidates);
    const auto& items = txn.items.items();
    std::vector<Item> kept;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (counters[i] >= k) {
            kept.push_back(items[i]);
        }
    }
    if (static_cast<int>(kept.size()) < k + 1) {
        return std::nullopt;
    }
    return Transaction{txn.id, Itemset(std::move(kept))};
}

std::pair<WorkingDatabase, std::size_t> prune_database(const WorkingDatabase& work,
                                                       const CandidateSet& candidates,
                                                       int k) {
    std::vector<Transaction> survivors;
    for (const Transaction& txn : work.live()) {
        if (auto trimmed = trim_transaction(txn, candidates, k)) {
            survivors.push_back(std::move(*trimmed));
        }
    }
    const std::size_t rows = survivors.size();
    return {WorkingDatabase(std::move(survivors), work.order_map()), rows};
}

std::pair<CandidateSet, HashTable> scan_count_and_hash(const WorkingDatabase& work,
                                                       CandidateSet candidates, int next_k,
                                                       const HashConfig& config) {
    config.validate();
    if (next_k < 1) {
        throw DataError("hashed itemset size must be at least 1");
    }
    for (CountedItemset& member : candidates.members) {
        member.support = 0;
    }
    HashTable table(next_k, config.bucket_count);
    for (const Transaction& txn : work.live()) {
        for (CountedItemset& member : candidates.members) {
            if (contains(txn, member.items)) {
                ++member.support;
            }
        }
        if (static_cast<int>(txn.items.size()) >= next_k) {
            for (const Itemset& subset : k_subsets(txn.items, next_k)) {
                table.add(hash_bucket(subset, work.order_map(), config));
            }
        }
    }
    return {std::move(candidates), std::move(table)};
}

CandidateSet filter_by_buckets(const CandidateSet& candidates, const HashTable& table,
                               SupportThreshold threshold, const ItemOrderMap& order,
                               const HashConfig& config) {
    if (table.itemset_size() != candidates.k) {
        throw Error("bucket table holds " + std::to_string(table.itemset_size()) +
                    "-itemsets but candidates have size " + std::to_string(candidates.k));
    }
    CandidateSet out{candidates.k, {}};
    for (const CountedItemset& candidate : candidates.members) {
        if (table.count(hash_bucket(candidate.items, order, config)) >= threshold.min_sup()) {
            out.members.push_back(candidate);
        }
    }
    return out;
}

CandidateSet count_support(const WorkingDatabase& work, CandidateSet candidates) {
    count_supports(work.live(), candidates.members);
    return candidates;
}

namespace {

std::vector<Itemset> live_itemsets(const WorkingDatabase& work) {
    std::vector<Itemset> rows;
    rows.reserve(work.row_count());
    for (const Transaction& txn : work.live()) {
        rows.push_back(txn.items);
    }
    return rows;
}

std::vector<Itemset> member_itemsets(const CandidateSet& candidates) {
    std::vector<Itemset> out;
    out.reserve(candidates.members.size());
    for (const CountedItemset& member : candidates.members) {
        out.push_back(member.items);
    }
    return out;
}

CandidateSet universe_candidates(const TransactionDatabase& db) {
    CandidateSet c1{1, {}};
    c1.members.reserve(db.order_map().size());
    for (const auto& [item, rank] : db.order_map().ranks()) {
        c1.members.push_back(CountedItemset{Itemset({item}), 0});
    }
    return c1;
}

}  // namespace

MiningResult mine_dhp(const TransactionDatabase& db, SupportThreshold threshold,
                      const HashConfig& config, DhpTrace* trace) {
    config.validate();
    MiningResult result{Algorithm::dhp, threshold, {}};
    WorkingDatabase work(db);

    // Level 1: count 1-itemsets over the full database; the same pass
    // hashes all 2-itemsets for the level-2 filter. No trimming yet.
    CandidateSet c1 = universe_candidates(db);
    std::optional<HashTable> table;
    CandidateSet counted;
    if (config.hash_until_level >= 1) {
        auto [level1, next_table] = scan_count_and_hash(work, std::move(c1), 2, config);
        counted = std::move(level1);
        table = std::move(next_table);
    } else {
        counted = count_support(work, std::move(c1));
    }
    if (counted.members.empty()) {
        return result;
    }
    if (trace) {
        trace->levels.push_back(DhpLevelTrace{1, live_itemsets(work), member_itemsets(counted)});
    }
    FrequentSet frequent = filter_frequent(counted, threshold);
    result.levels.push_back(LevelRecord{1, counted, frequent, work.row_count()});
    if (frequent.members.empty()) {
        return result;
    }

    for (int k = 2;; ++k) {
        CandidateSet generated = apriori_gen(frequent);
        assert(!table || table->itemset_size() == k);
        CandidateSet candidates =
            table ? filter_by_buckets(generated, *table, threshold, work.order_map(), config)
                  : generated;
        if (candidates.members.empty()) {
            break;
        }
        if (trace) {
            trace->levels.push_back(
                DhpLevelTrace{k, live_itemsets(work), member_itemsets(generated)});
        }

        // Counts come from the database this level inherited; trimming
        // against the filtered candidates yields the next level's rows.
        counted = count_support(work, std::move(candidates));
        auto [pruned, rows] = prune_database(work, counted, k);
        frequent = filter_frequent(counted, threshold);
        result.levels.push_back(LevelRecord{k, counted, frequent, rows});
        work = std::move(pruned);

        if (frequent.members.empty() || work.row_count() == 0) {
            break;
        }
        if (config.hash_until_level >= k) {
            table = scan_count_and_hash(work, CandidateSet{k, {}}, k + 1, config).second;
        } else {
            table.reset();
        }
    }
    return result;
}

}  // namespace fpm
