#include "fpm/apriori.hpp"

#include <algorithm>
#include <set>

namespace fpm {

std::string to_string(Algorithm algorithm) {
    return algorithm == Algorithm::apriori ? "apriori" : "dhp";
}

CandidateSet count_1_itemsets(const TransactionDatabase& db) {
    CandidateSet c1{1, {}};
    c1.members.reserve(db.order_map().size());
    for (const auto& [item, rank] : db.order_map().ranks()) {
        c1.members.push_back(CountedItemset{Itemset({item}), 0});
    }
    count_supports(db.transactions(), c1.members);
    return c1;
}

FrequentSet frequent_1_itemsets(const TransactionDatabase& db, SupportThreshold threshold) {
    return filter_frequent(count_1_itemsets(db), threshold);
}

std::vector<Itemset> join(const FrequentSet& frequent) {
    const auto& members = frequent.members;
    std::vector<Itemset> out;
    for (std::size_t i = 0; i < members.size(); ++i) {
        const auto& left = members[i].items.items();
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            const auto& right = members[j].items.items();
            // Members are sorted, so once the (k-1)-prefix stops matching
            // no later j can match either.
            if (!std::equal(left.begin(), left.end() - 1, right.begin(), right.end() - 1)) {
                break;
            }
            std::vector<Item> joined(left);
            joined.push_back(right.back());
            out.push_back(Itemset(std::move(joined)));
        }
    }
    return out;
}

namespace {

bool missing_subset(const Itemset& candidate, const std::set<Itemset>& frequent) {
    for (const Itemset& sub : k_subsets(candidate, static_cast<int>(candidate.size()) - 1)) {
        if (frequent.count(sub) == 0) {
            return true;
        }
    }
    return false;
}

std::set<Itemset> member_index(const FrequentSet& frequent) {
    std::set<Itemset> index;
    for (const CountedItemset& member : frequent.members) {
        index.insert(member.items);
    }
    return index;
}

}  // namespace

bool has_infrequent_subset(const Itemset& candidate, const FrequentSet& frequent) {
    return missing_subset(candidate, member_index(frequent));
}

CandidateSet apriori_gen(const FrequentSet& frequent) {
    CandidateSet out{frequent.k + 1, {}};
    const std::set<Itemset> index = member_index(frequent);
    for (Itemset& candidate : join(frequent)) {
        if (!missing_subset(candidate, index)) {
            out.members.push_back(CountedItemset{std::move(candidate), 0});
        }
    }
    return out;
}

CandidateSet count_support(const TransactionDatabase& db, CandidateSet candidates) {
    count_supports(db.transactions(), candidates.members);
    return candidates;
}

FrequentSet filter_frequent(const CandidateSet& candidates, SupportThreshold threshold) {
    FrequentSet out{candidates.k, {}};
    for (const CountedItemset& member : candidates.members) {
        if (member.support >= threshold.min_sup()) {
            out.members.push_back(member);
        }
    }
    return out;
}

MiningResult mine_apriori(const TransactionDatabase& db, SupportThreshold threshold) {
    MiningResult result{Algorithm::apriori, threshold, {}};
    const std::size_t rows = db.row_count();

    CandidateSet candidates = count_1_itemsets(db);
    for (int k = 1; !candidates.members.empty(); ++k) {
        FrequentSet frequent = filter_frequent(candidates, threshold);
        result.levels.push_back(LevelRecord{k, candidates, frequent, rows});
        if (frequent.members.empty()) {
            break;
        }
        candidates = count_support(db, apriori_gen(frequent));
    }
    return result;
}

}  // namespace fpm
