#pragma once

#include <string>
#include <vector>

#include "fpm/core.hpp"

namespace fpm {

/// Candidate itemsets of one size with support counters (the Ck of
/// level-wise mining). Members stay distinct, all of size k, in canonical
/// order.
struct CandidateSet {
    int k = 0;
    std::vector<CountedItemset> members;

    bool operator==(const CandidateSet&) const = default;
};

/// Candidates that met the support threshold (the Lk).
struct FrequentSet {
    int k = 0;
    std::vector<CountedItemset> members;

    bool operator==(const FrequentSet&) const = default;
};

enum class Algorithm { apriori, dhp };

std::string to_string(Algorithm algorithm);

/// One level of a mining trace: Ck with counts, Lk, and the number of
/// database rows still live once the level finished.
struct LevelRecord {
    int k = 0;
    CandidateSet candidates;
    FrequentSet frequent;
    std::size_t db_rows_after = 0;

    bool operator==(const LevelRecord&) const = default;
};

struct MiningResult {
    Algorithm algorithm = Algorithm::apriori;
    SupportThreshold threshold{1};
    std::vector<LevelRecord> levels;

    bool operator==(const MiningResult&) const = default;
};

/// C1: every universe item with its support, including infrequent ones.
CandidateSet count_1_itemsets(const TransactionDatabase& db);

FrequentSet frequent_1_itemsets(const TransactionDatabase& db, SupportThreshold threshold);

/// Joins Lk with itself: pairs sharing their first k-1 items, the left
/// member's last item below the right's. Output is canonical and
/// duplicate-free.
std::vector<Itemset> join(const FrequentSet& frequent);

/// True iff some (size-1)-smaller subset of the candidate is missing from
/// the frequent set.
bool has_infrequent_subset(const Itemset& candidate, const FrequentSet& frequent);

/// Join step followed by the subset prune; supports start at zero.
CandidateSet apriori_gen(const FrequentSet& frequent);

/// Counts each candidate's containing transactions; order preserved.
CandidateSet count_support(const TransactionDatabase& db, CandidateSet candidates);

FrequentSet filter_frequent(const CandidateSet& candidates, SupportThreshold threshold);

/// Level-wise mining over the full database. Records every level with a
/// non-empty candidate set and stops after the first level whose frequent
/// set is empty. The database is never pruned, so db_rows_after is |D|
/// throughout.
MiningResult mine_apriori(const TransactionDatabase& db, SupportThreshold threshold);

}  // namespace fpm
