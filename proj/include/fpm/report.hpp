#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fpm/apriori.hpp"
#include "fpm/dhp.hpp"

namespace fpm {

/// The two miners reported different frequent sets — an implementation
/// bug, never a valid outcome. Carries the first differing level and the
/// symmetric difference of the frequent sets there.
class MinerDisagreementError : public Error {
public:
    MinerDisagreementError(int level, std::vector<CountedItemset> only_in_apriori,
                           std::vector<CountedItemset> only_in_dhp);

    int level() const noexcept { return level_; }
    const std::vector<CountedItemset>& only_in_apriori() const noexcept {
        return only_in_apriori_;
    }
    const std::vector<CountedItemset>& only_in_dhp() const noexcept { return only_in_dhp_; }

private:
    int level_;
    std::vector<CountedItemset> only_in_apriori_;
    std::vector<CountedItemset> only_in_dhp_;
};

/// Entries of `left` not in `right` and vice versa, comparing itemset and
/// support together. Both inputs must be in canonical order.
std::pair<std::vector<CountedItemset>, std::vector<CountedItemset>> counted_difference(
    const std::vector<CountedItemset>& left, const std::vector<CountedItemset>& right);

/// One algorithm's statistics at one level. Counts are kept explicitly so
/// a report parsed from a listing-free rendering still carries them.
struct AlgorithmLevel {
    std::size_t candidate_count = 0;
    std::size_t frequent_count = 0;
    std::size_t db_rows_after = 0;
    std::vector<CountedItemset> candidates;
    std::vector<CountedItemset> frequent;

    bool operator==(const AlgorithmLevel&) const = default;
};

struct ComparisonLevel {
    int k = 0;
    AlgorithmLevel apriori;
    AlgorithmLevel dhp;

    bool operator==(const ComparisonLevel&) const = default;
};

struct InputSummary {
    std::size_t transactions = 0;
    std::size_t items = 0;
    int min_sup = 1;
    std::optional<int> buckets;

    bool operator==(const InputSummary&) const = default;
};

struct ComparisonReport {
    InputSummary input;
    std::vector<ComparisonLevel> levels;

    bool operator==(const ComparisonReport&) const = default;
};

/// Runs both miners, aligns their level traces, and validates that the
/// frequent sets agree (MinerDisagreementError otherwise) and that DHP
/// never carries more candidates than Apriori from level 2 on.
ComparisonReport compare(const TransactionDatabase& db, SupportThreshold threshold,
                         const HashConfig& config = {});

enum class ReportFormat { text, csv, json };

ReportFormat parse_report_format(const std::string& name);

/// Deterministic rendering. Text mirrors the side-by-side per-level
/// table; csv emits one row per (level, algorithm) under a header; json
/// follows the versioned schema (schema: 1). Itemset listings appear only
/// when list_itemsets is set.
std::string render(const ComparisonReport& report, ReportFormat format,
                   bool list_itemsets = false);

/// Rebuilds a report from its json rendering. Listings are restored when
/// present; a listing-free rendering yields empty listing vectors.
ComparisonReport report_from_json(const std::string& text);

/// Rendering of a single miner's trace, same formats and conventions.
std::string render(const MiningResult& result, const InputSummary& input,
                   ReportFormat format, bool list_itemsets = false);

}  // namespace fpm
