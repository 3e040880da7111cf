#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "fpm/apriori.hpp"
#include "fpm/core.hpp"

namespace fpm {

/// Parameters of the bucket-count hash filter.
struct HashConfig {
    /// Number of hash buckets (B).
    int bucket_count = 7;
    /// Radix for the rank polynomial.
    int base = 10;
    /// Highest level whose scan still builds a bucket table for the next
    /// level. Later levels generate candidates without bucket filtering;
    /// database trimming continues regardless.
    int hash_until_level = std::numeric_limits<int>::max();

    void validate() const;

    bool operator==(const HashConfig&) const = default;
};

/// Occurrence counters for all itemsets of one size, keyed by hash bucket.
class HashTable {
public:
    HashTable(int itemset_size, int bucket_count);

    int itemset_size() const noexcept { return itemset_size_; }
    std::size_t bucket_count() const noexcept { return buckets_.size(); }

    void add(std::size_t bucket) { buckets_.at(bucket) += 1; }
    std::int64_t count(std::size_t bucket) const { return buckets_.at(bucket); }

    const std::vector<std::int64_t>& buckets() const noexcept { return buckets_; }

private:
    int itemset_size_;
    std::vector<std::int64_t> buckets_;
};

/// Horner fold of the item ranks:
/// (..((rank(x1) * base + rank(x2)) * base + ..) + rank(xk)) mod B,
/// with the modulus applied per step. For a pair {x, y} this is
/// (rank(x) * base + rank(y)) mod B.
std::size_t hash_bucket(const Itemset& itemset, const ItemOrderMap& order,
                        const HashConfig& config);

/// The progressively trimmed copy of a database that DHP scans. Live
/// transactions hold (possibly item-trimmed) subsets of their originals.
class WorkingDatabase {
public:
    explicit WorkingDatabase(const TransactionDatabase& db);
    WorkingDatabase(std::vector<Transaction> live, ItemOrderMap order);

    const std::vector<Transaction>& live() const noexcept { return live_; }
    std::size_t row_count() const noexcept { return live_.size(); }
    const ItemOrderMap& order_map() const noexcept { return order_; }

private:
    std::vector<Transaction> live_;
    ItemOrderMap order_;
};

/// Per-item occurrence counters a[i] within one transaction: how many
/// size-k candidates found in the transaction contain item i. Aligned
/// with the transaction's canonical item sequence.
std::vector<int> trim_counters(const Transaction& txn, const CandidateSet& candidates);

/// Drops every item whose counter is below k; discards the transaction
/// (nullopt) unless at least k+1 items survive, the minimum for it to
/// ever contain a (k+1)-itemset.
std::optional<Transaction> trim_transaction(const Transaction& txn,
                                            const CandidateSet& candidates, int k);

/// Applies trim_transaction to every live transaction.
std::pair<WorkingDatabase, std::size_t> prune_database(const WorkingDatabase& work,
                                                       const CandidateSet& candidates,
                                                       int k);

/// One pass over the live transactions that counts each candidate's
/// support and hashes every next_k-subset of each transaction into a
/// fresh bucket table.
std::pair<CandidateSet, HashTable> scan_count_and_hash(const WorkingDatabase& work,
                                                       CandidateSet candidates, int next_k,
                                                       const HashConfig& config);

/// Keeps exactly the candidates whose bucket counter reaches min_sup. A
/// bucket counter bounds the support of every itemset hashed into it, so
/// this never drops a frequent candidate.
CandidateSet filter_by_buckets(const CandidateSet& candidates, const HashTable& table,
                               SupportThreshold threshold, const ItemOrderMap& order,
                               const HashConfig& config);

/// Counts candidates over the live transactions; order preserved.
CandidateSet count_support(const WorkingDatabase& work, CandidateSet candidates);

/// Optional per-level instrumentation captured by mine_dhp, used by the
/// verification suites: the rows scanned at each level and the candidate
/// set before bucket filtering.
struct DhpLevelTrace {
    int k = 0;
    std::vector<Itemset> scanned_rows;
    std::vector<Itemset> candidates_before_filter;
};

struct DhpTrace {
    std::vector<DhpLevelTrace> levels;
};

/// DHP mining. Level 1 scans the full database, counting 1-itemsets while
/// hashing all 2-itemsets. Each later level k bucket-filters
/// apriori_gen(L(k-1)) with the table from the previous scan, counts the
/// survivors over the current working database, and in the same step trims
/// that database against them and hashes (k+1)-subsets of the trimmed
/// rows for the next level. Stops when candidates, frequent sets, or the
/// working database run out. db_rows_after records the working database
/// size after each level's trim.
MiningResult mine_dhp(const TransactionDatabase& db, SupportThreshold threshold,
                      const HashConfig& config = {}, DhpTrace* trace = nullptr);

}  // namespace fpm
