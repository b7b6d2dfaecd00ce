#pragma once

#include "netwalk/graph.hpp"
#include "netwalk/walks.hpp"

#include <array>
#include <span>
#include <string>
#include <vector>

namespace netwalk {

inline constexpr std::size_t kEntropyBins = 20;

// Eight-number summary of a value distribution.
//   std: sample (n-1); skewness/kurtosis: population central moments, excess
//   kurtosis; quartiles: linear interpolation between order statistics;
//   entropy: natural-log Shannon entropy of a 20-bin equal-width histogram over
//   [min, max]. Degenerate (zero-spread) inputs give zero for everything but
//   the location statistics.
struct DistributionStats {
    double mean = 0, std = 0, q25 = 0, q50 = 0, q75 = 0, skewness = 0, kurtosis = 0, entropy = 0;

    std::array<double, 8> as_array() const { return {mean, std, q25, q50, q75, skewness, kurtosis, entropy}; }
    friend bool operator==(const DistributionStats&, const DistributionStats&) = default;
};

inline constexpr std::array<const char*, 8> kStatNames{"mean", "std", "q25", "q50",
                                                       "q75", "skew", "kurt", "entropy"};

DistributionStats stats_of(std::span<const double> values);

// Element-wise profile - baseline.
std::vector<double> visit_diff(const VisitProfile& profile, const VisitProfile& baseline);

struct FeatureSetSpec {
    bool include_saw_lengths = true;
    bool include_saw_visits = true;
    std::vector<std::size_t> lmw_memories;  // emitted ascending
    bool normalize_lengths_by_n = false;

    std::size_t block_count() const;
    std::size_t width() const { return 8 * block_count(); }
    // Column names: saw_len_<stat>, saw_visit_<stat>, lmw<m>_<stat>.
    std::vector<std::string> column_names() const;
    // Canonical textual form, e.g. "len+vis+lmw:1..3".
    std::string name() const;
    void validate() const;
};

// Parses '+'-joined parts: len | vis | saw (= len+vis) | lmw:<list> | full.
// <list> is comma-separated values or a..b ranges, e.g. lmw:1..3,7.
FeatureSetSpec parse_feature_set(const std::string& text);

// All 8-stat blocks one graph can produce, computed from a single set of
// walks (one shared RW baseline). Feature sets are column selections of it.
struct WalkStatistics {
    DistributionStats saw_lengths;
    DistributionStats saw_lengths_normalized;
    DistributionStats saw_visit_diff;
    std::vector<std::size_t> memories;
    std::vector<DistributionStats> lmw_diff;  // parallel to memories

    std::vector<double> select(const FeatureSetSpec& spec) const;
};

WalkStatistics compute_walk_statistics(const Graph& g, const WalkConfig& cfg,
                                       const std::vector<std::size_t>& memories, bool need_saw = true);

std::vector<double> extract_features(const Graph& g, const WalkConfig& cfg, const FeatureSetSpec& spec);

}  // namespace netwalk
