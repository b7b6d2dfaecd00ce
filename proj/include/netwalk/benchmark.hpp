#pragma once

#include "netwalk/baselines.hpp"
#include "netwalk/classify.hpp"
#include "netwalk/csv.hpp"
#include "netwalk/dataset.hpp"
#include "netwalk/features.hpp"
#include "netwalk/walks.hpp"

#include <string>
#include <vector>

namespace netwalk {

enum class Method { RandomWalk, Structural, Dtw };
Method parse_method(const std::string& s);
std::string method_name(Method m);

struct ExtractOptions {
    Method method = Method::RandomWalk;
    FeatureSetSpec features = parse_feature_set("saw");
    WalkConfig walk;  // master_seed here is the run seed; per-graph seeds are derived from it
    DtwSpec dtw;
    unsigned threads = 1;
};

// Walk seed for the i-th graph of a dataset.
std::uint64_t graph_walk_seed(std::uint64_t master, std::size_t index);

// Per-graph walk statistics for every memory in cfg.memory_sizes, in dataset order.
std::vector<WalkStatistics> dataset_walk_statistics(const LabeledDataset& ds, const WalkConfig& cfg,
                                                    const std::vector<std::size_t>& memories, bool need_saw,
                                                    unsigned threads);

FeatureMatrix extract_feature_matrix(const LabeledDataset& ds, const ExtractOptions& opts);

FeatureMatrix select_features(const std::vector<WalkStatistics>& stats, const std::vector<std::string>& labels,
                              const FeatureSetSpec& spec);

// Feature-set rows as in the per-dataset result tables: each single block,
// then SAW length + visits, then that plus LMW 1..k for growing k.
std::vector<FeatureSetSpec> table_feature_sets(const std::vector<std::size_t>& memories);

struct BenchmarkOptions {
    WalkConfig walk;
    CvOptions cv;
    DtwSpec dtw;
    unsigned threads = 1;
};

// Each returns the CSV text.
std::string benchmark_feature_sets(const LabeledDataset& ds, const BenchmarkOptions& opts);
// mode,m,feature_set,mean_acc,std_acc,fold_1..: LMW blocks alone, individually and cumulatively.
std::string benchmark_memory_sweep(const LabeledDataset& ds, const BenchmarkOptions& opts);
// method,p,mean_acc,std_acc,fold_1..: accuracy per Link Change level per method.
std::string benchmark_noise(const LabeledDataset& base, const std::vector<unsigned>& levels,
                            const std::vector<Method>& methods, std::uint64_t noise_seed,
                            const BenchmarkOptions& opts);

// Literature reference accuracies for methods not recomputed here
// (mean, std in percent), keyed by dataset then method.
struct ReferenceAccuracy {
    const char* dataset;
    const char* method;
    double mean;
    double std;
};
const std::vector<ReferenceAccuracy>& reference_accuracies();

}  // namespace netwalk
