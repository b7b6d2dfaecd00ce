#include "netwalk/benchmark.hpp"

#include "netwalk/error.hpp"
#include "netwalk/generators.hpp"
#include "netwalk/parallel.hpp"
#include "netwalk/rng.hpp"

#include <sstream>

namespace netwalk {

Method parse_method(const std::string& s) {
    if (s == "randomwalk" || s == "rw") return Method::RandomWalk;
    if (s == "structural") return Method::Structural;
    if (s == "dtw") return Method::Dtw;
    throw ArgumentError("unknown method '" + s + "' (expected randomwalk, structural or dtw)");
}

std::string method_name(Method m) {
    switch (m) {
    case Method::RandomWalk: return "randomwalk";
    case Method::Structural: return "structural";
    case Method::Dtw: return "dtw";
    }
    return "?";
}

std::uint64_t graph_walk_seed(std::uint64_t master, std::size_t index) {
    return derive_seed(master, {hash_label("graph-walks"), index});
}

std::vector<WalkStatistics> dataset_walk_statistics(const LabeledDataset& ds, const WalkConfig& cfg,
                                                    const std::vector<std::size_t>& memories, bool need_saw,
                                                    unsigned threads) {
    std::vector<WalkStatistics> out(ds.size());
    parallel_for(ds.size(), threads, [&](unsigned, std::size_t i) {
        WalkConfig local = cfg;
        local.master_seed = graph_walk_seed(cfg.master_seed, i);
        local.threads = 1;
        out[i] = compute_walk_statistics(ds.entries[i].graph, local, memories, need_saw);
    });
    return out;
}

FeatureMatrix select_features(const std::vector<WalkStatistics>& stats, const std::vector<std::string>& labels,
                              const FeatureSetSpec& spec) {
    FeatureMatrix fm;
    fm.columns = spec.column_names();
    fm.labels = labels;
    fm.values.resize(static_cast<Eigen::Index>(stats.size()), static_cast<Eigen::Index>(spec.width()));
    for (std::size_t i = 0; i < stats.size(); ++i) {
        auto row = stats[i].select(spec);
        for (std::size_t j = 0; j < row.size(); ++j) {
            fm.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = row[j];
        }
    }
    return fm;
}

FeatureMatrix extract_feature_matrix(const LabeledDataset& ds, const ExtractOptions& opts) {
    if (ds.entries.empty()) throw DataError("dataset is empty");
    const auto labels = ds.labels();
    switch (opts.method) {
    case Method::RandomWalk: {
        opts.features.validate();
        const bool need_saw = opts.features.include_saw_lengths || opts.features.include_saw_visits;
        auto stats = dataset_walk_statistics(ds, opts.walk, opts.features.lmw_memories, need_saw, opts.threads);
        return select_features(stats, labels, opts.features);
    }
    case Method::Structural: {
        FeatureMatrix fm;
        fm.columns = StructuralFeatures::column_names();
        fm.labels = labels;
        fm.values.resize(static_cast<Eigen::Index>(ds.size()), static_cast<Eigen::Index>(fm.columns.size()));
        parallel_for(ds.size(), opts.threads, [&](unsigned, std::size_t i) {
            auto v = structural_features(ds.entries[i].graph).values();
            for (std::size_t j = 0; j < v.size(); ++j) {
                fm.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v[j];
            }
        });
        return fm;
    }
    case Method::Dtw: {
        opts.dtw.validate();
        FeatureMatrix fm;
        fm.columns = opts.dtw.column_names();
        fm.labels = labels;
        fm.values.resize(static_cast<Eigen::Index>(ds.size()), static_cast<Eigen::Index>(fm.columns.size()));
        parallel_for(ds.size(), opts.threads, [&](unsigned, std::size_t i) {
            auto sig = dtw_signature(ds.entries[i].graph, opts.dtw);
            for (std::size_t j = 0; j < sig.values.size(); ++j) {
                fm.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = sig.values[j];
            }
        });
        return fm;
    }
    }
    throw ArgumentError("unknown method");
}

std::vector<FeatureSetSpec> table_feature_sets(const std::vector<std::size_t>& memories) {
    std::vector<FeatureSetSpec> rows;
    FeatureSetSpec len;
    len.include_saw_visits = false;
    rows.push_back(len);
    FeatureSetSpec vis;
    vis.include_saw_lengths = false;
    rows.push_back(vis);
    for (auto m : memories) {
        FeatureSetSpec s;
        s.include_saw_lengths = s.include_saw_visits = false;
        s.lmw_memories = {m};
        rows.push_back(s);
    }
    rows.push_back(FeatureSetSpec{});
    for (std::size_t k = 2; k <= memories.size(); ++k) {
        FeatureSetSpec s;
        s.lmw_memories.assign(memories.begin(), memories.begin() + static_cast<std::ptrdiff_t>(k));
        rows.push_back(s);
    }
    return rows;
}

namespace {

std::vector<std::size_t> sorted_memories(const WalkConfig& cfg) {
    std::vector<std::size_t> m = cfg.memory_sizes;
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
    return m;
}

CvReport run_cv(const FeatureMatrix& fm, const BenchmarkOptions& opts) {
    CvOptions cv = opts.cv;
    cv.threads = opts.threads;
    return cross_validate(fm.values, fm.labels, cv);
}

void write_folds(std::ostream& out, const CvReport& rep) {
    out << format_fixed(rep.mean_accuracy, 4) << ',' << format_fixed(rep.std_accuracy, 4);
    for (double a : rep.fold_accuracy) out << ',' << format_fixed(a, 4);
    out << '\n';
}

void write_fold_header(std::ostream& out, std::size_t folds) {
    out << "mean_acc,std_acc";
    for (std::size_t f = 1; f <= folds; ++f) out << ",fold_" << f;
    out << '\n';
}

}  // namespace

std::string benchmark_feature_sets(const LabeledDataset& ds, const BenchmarkOptions& opts) {
    const auto memories = sorted_memories(opts.walk);
    const auto stats = dataset_walk_statistics(ds, opts.walk, memories, true, opts.threads);
    const auto labels = ds.labels();
    std::ostringstream out;
    write_report_header(out, opts.cv.folds);
    for (const auto& spec : table_feature_sets(memories)) {
        auto fm = select_features(stats, labels, spec);
        write_report_row(out, spec.name(), ds.name, run_cv(fm, opts));
    }
    return out.str();
}

std::string benchmark_memory_sweep(const LabeledDataset& ds, const BenchmarkOptions& opts) {
    const auto memories = sorted_memories(opts.walk);
    if (memories.empty()) throw ArgumentError("memory sweep needs at least one memory size");
    const auto stats = dataset_walk_statistics(ds, opts.walk, memories, false, opts.threads);
    const auto labels = ds.labels();
    std::ostringstream out;
    out << "mode,m,feature_set,";
    write_fold_header(out, opts.cv.folds);
    for (const char* mode : {"individual", "cumulative"}) {
        const bool cumulative = mode[0] == 'c';
        for (std::size_t k = 0; k < memories.size(); ++k) {
            FeatureSetSpec spec;
            spec.include_saw_lengths = spec.include_saw_visits = false;
            if (cumulative) {
                spec.lmw_memories.assign(memories.begin(), memories.begin() + static_cast<std::ptrdiff_t>(k + 1));
            } else {
                spec.lmw_memories = {memories[k]};
            }
            auto rep = run_cv(select_features(stats, labels, spec), opts);
            out << mode << ',' << memories[k] << ',' << csv_quote(spec.name()) << ',';
            write_folds(out, rep);
        }
    }
    return out.str();
}

std::string benchmark_noise(const LabeledDataset& base, const std::vector<unsigned>& levels,
                            const std::vector<Method>& methods, std::uint64_t noise_seed,
                            const BenchmarkOptions& opts) {
    if (methods.empty()) throw ArgumentError("noise benchmark needs at least one method");
    auto noisy = build_noisy_dataset(base, levels, noise_seed, opts.threads);
    std::ostringstream out;
    out << "method,p,";
    write_fold_header(out, opts.cv.folds);
    for (Method method : methods) {
        for (unsigned p : levels) {
            ExtractOptions ex;
            ex.method = method;
            ex.walk = opts.walk;
            ex.dtw = opts.dtw;
            ex.threads = opts.threads;
            auto fm = extract_feature_matrix(noisy.at(p), ex);
            out << method_name(method) << ',' << p << ',';
            write_folds(out, run_cv(fm, opts));
        }
    }
    return out.str();
}

const std::vector<ReferenceAccuracy>& reference_accuracies() {
    static const std::vector<ReferenceAccuracy> table = [] {
        struct Row {
            const char* dataset;
            double v[10];
        };
        // structural, LLNA, DTW, graph2vec, random walks; (mean, std) each.
        static const Row rows[] = {
            {"Synthetic 4-models", {100.0, 0.0, 100.0, 0.0, 100.0, 0.0, 100.0, 0.0, 100.0, 0.0}},
            {"Actinobacteria", {93.2, 0.7, 95.1, 1.2, 94.9, 1.4, 96.3, 15.9, 96.4, 5.4}},
            {"Animal", {83.7, 15.2, 84.9, 15.2, 80.0, 17.2, 92.1, 26.8, 96.4, 5.4}},
            {"Firmicutes-Bacillus", {95.7, 0.6, 98.3, 1.2, 93.3, 2.3, 98.2, 13.1, 90.2, 5.4}},
            {"Fungi", {54.9, 15.4, 74.2, 17.4, 68.6, 14.8, 74.4, 22.4, 75.1, 5.4}},
            {"Kingdom", {96.6, 4.3, 97.4, 4.0, 89.6, 4.0, 98.4, 12.2, 98.7, 5.6}},
            {"Plant", {54.2, 9.2, 74.8, 5.6, 59.9, 6.6, 75.7, 12.8, 88.3, 5.4}},
            {"Protist", {45.1, 10.9, 80.0, 5.3, 61.4, 13.7, 64.2, 17.9, 80.2, 5.4}},
            {"Enzymes", {0.0, 0.0, 3.0, 1.7, 0.0, 0.0, 3.1, 17.5, 27.9, 5.4}},
            {"Proteins", {41.1, 13.1, 59.1, 17.0, 49.0, 21.1, 64.1, 27.9, 78.1, 5.4}},
            {"Collab", {47.2, 3.7, 49.2, 4.9, 52.3, 12.1, 75.5, 13.0, 65.1, 5.4}},
            {"IMDB-Multi", {14.8, 17.4, 39.7, 14.1, 33.6, 20.7, 36.9, 18.5, 49.3, 5.4}},
        };
        static const char* methods[] = {"structural", "llna", "dtw", "graph2vec", "randomwalk"};
        std::vector<ReferenceAccuracy> t;
        for (const auto& r : rows) {
            for (int m = 0; m < 5; ++m) t.push_back({r.dataset, methods[m], r.v[2 * m], r.v[2 * m + 1]});
        }
        return t;
    }();
    return table;
}

}  // namespace netwalk
