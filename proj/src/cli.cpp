#include "netwalk/cli.hpp"

#include "netwalk/benchmark.hpp"
#include "netwalk/error.hpp"
#include "netwalk/generators.hpp"
#include "netwalk/parallel.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

namespace fs = std::filesystem;

namespace netwalk {

std::vector<std::size_t> parse_int_list(const std::string& text) {
    auto number = [&](const std::string& s) {
        std::size_t pos = 0;
        unsigned long long v = 0;
        try {
            if (s.empty() || s[0] == '-') throw std::invalid_argument("negative");
            v = std::stoull(s, &pos);
        } catch (const std::exception&) {
            pos = std::string::npos;
        }
        if (pos != s.size()) throw ArgumentError("bad number '" + s + "' in list '" + text + "'");
        return static_cast<std::size_t>(v);
    };
    std::set<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto dots = item.find("..");
        if (dots == std::string::npos) {
            out.insert(number(item));
            continue;
        }
        std::size_t step = 1;
        std::string hi_text = item.substr(dots + 2);
        if (auto colon = hi_text.find(':'); colon != std::string::npos) {
            step = number(hi_text.substr(colon + 1));
            hi_text = hi_text.substr(0, colon);
        }
        const auto lo = number(item.substr(0, dots)), hi = number(hi_text);
        if (step == 0 || lo > hi) throw ArgumentError("bad range '" + item + "'");
        for (auto v = lo; v <= hi; v += step) out.insert(v);
    }
    if (out.empty()) throw ArgumentError("empty list '" + text + "'");
    return {out.begin(), out.end()};
}

namespace {

std::vector<unsigned> parse_levels(const std::string& text) {
    std::vector<unsigned> levels;
    for (auto v : parse_int_list(text)) {
        if (v > 100) throw ArgumentError("noise level " + std::to_string(v) + " outside [0, 100]");
        levels.push_back(static_cast<unsigned>(v));
    }
    return levels;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

void emit(const std::string& path, const std::string& content, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << content;
    } else {
        write_text_file(path, content);
    }
}

// Options shared by commands that run walks.
struct WalkFlags {
    std::size_t walkers = 10;
    std::size_t max_steps = 0;
    std::string memories = "1..10";
    std::string window = "include";
    std::uint64_t seed = 0;

    void add_to(CLI::App* app, bool with_memories) {
        app->add_option("--walkers", walkers, "Walkers started per node (W)")->check(CLI::PositiveNumber);
        app->add_option("--max-steps", max_steps, "Step cap for RW/LMW walks (0 = N per graph)");
        if (with_memories) app->add_option("--memories", memories, "LMW memory sizes, e.g. 1..10");
        app->add_option("--window", window, "LMW memory window: include or exclude the current node")
            ->check(CLI::IsMember({"include", "exclude"}));
        app->add_option("--seed", seed, "Master seed");
    }

    WalkConfig config() const {
        WalkConfig cfg;
        cfg.walkers_per_node = walkers;
        cfg.max_steps = max_steps;
        cfg.master_seed = seed;
        cfg.window = window == "exclude" ? MemoryWindow::ExcludesCurrent : MemoryWindow::IncludesCurrent;
        cfg.memory_sizes = parse_int_list(memories);
        cfg.validate();
        return cfg;
    }
};

DtwSpec parse_dtw(const std::string& memories, std::size_t width) {
    DtwSpec d;
    d.memories = parse_int_list(memories);
    d.histogram_width = width;
    d.validate();
    return d;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"netwalk: network classification from random-walk statistics"};
    app.name("netwalk");
    app.require_subcommand(1);
    unsigned threads_flag = 0;
    app.add_option("--threads", threads_flag, "Worker threads (0: NETWALK_THREADS or all cores)");

    // generate
    auto* gen = app.add_subcommand("generate", "Generate the synthetic model dataset");
    std::string gen_models = "all", gen_sizes = "500,1000,1500,2000", gen_degrees = "4..16:2", gen_out;
    std::size_t gen_per_cell = 10;
    std::uint64_t gen_seed = 0;
    double ws_rewire = kDefaultWsRewire;
    bool gen_force = false;
    gen->add_option("--models", gen_models, "Comma-separated models or 'all'");
    gen->add_option("--sizes", gen_sizes, "Node counts");
    gen->add_option("--degrees", gen_degrees, "Average degrees");
    gen->add_option("--per-cell", gen_per_cell, "Graphs per model/size/degree");
    gen->add_option("--seed", gen_seed, "Master seed");
    gen->add_option("--ws-rewire", ws_rewire, "Watts-Strogatz rewiring probability");
    gen->add_option("--out", gen_out, "Output directory")->required();
    gen->add_flag("--force", gen_force, "Overwrite an existing dataset");

    // perturb
    auto* per = app.add_subcommand("perturb", "Apply Link Change noise to a dataset");
    std::string per_in, per_levels = "10..100:10", per_out;
    std::uint64_t per_seed = 0;
    bool per_force = false;
    per->add_option("--input", per_in, "Dataset manifest, directory, or tu:<dir>:<name>")->required();
    per->add_option("--levels", per_levels, "Noise rates in percent");
    per->add_option("--seed", per_seed, "Noise seed");
    per->add_option("--out", per_out, "Output directory (one p<level> subdirectory per level)")->required();
    per->add_flag("--force", per_force, "Overwrite existing datasets");

    // extract
    auto* ext = app.add_subcommand("extract", "Compute a feature matrix");
    std::string ext_in, ext_method = "randomwalk", ext_features = "saw", ext_out = "-", ext_dump;
    std::string dtw_mem = "1,2";
    std::size_t dtw_width = 5;
    bool ext_norm = false;
    WalkFlags ext_walk;
    ext->add_option("--input", ext_in, "Dataset manifest, directory, or tu:<dir>:<name>")->required();
    ext->add_option("--method", ext_method, "randomwalk, structural or dtw");
    ext->add_option("--features", ext_features, "Random-walk feature set, e.g. saw, full, len+vis+lmw:1..3");
    ext->add_flag("--normalize-lengths", ext_norm, "Divide SAW lengths by N");
    ext->add_option("--dtw-memories", dtw_mem, "Tourist memories");
    ext->add_option("--dtw-width", dtw_width, "Tourist histogram width");
    ext->add_option("--out", ext_out, "Feature CSV path ('-' for stdout)");
    ext->add_option("--dump-profiles", ext_dump, "Directory for per-graph raw visit profiles");
    ext_walk.add_to(ext, false);

    // classify
    auto* cls = app.add_subcommand("classify", "LDA k-fold cross-validation on a feature CSV");
    std::string cls_in, cls_out = "-", cls_confusion, cls_fs, cls_ds;
    CvOptions cls_cv;
    bool cls_nostrat = false;
    cls->add_option("--features", cls_in, "Feature CSV")->required();
    cls->add_option("--folds", cls_cv.folds, "Number of folds");
    cls->add_option("--seed", cls_cv.seed, "Fold seed");
    cls->add_option("--shrinkage", cls_cv.shrinkage, "Covariance shrinkage toward the diagonal");
    cls->add_flag("--no-stratify", cls_nostrat, "Plain random folds");
    cls->add_option("--feature-set", cls_fs, "Name for the feature_set column");
    cls->add_option("--dataset", cls_ds, "Name for the dataset column");
    cls->add_option("--out", cls_out, "Report CSV path ('-' for stdout)");
    cls->add_option("--confusion", cls_confusion, "Optional confusion matrix CSV");

    // benchmark
    auto* bench = app.add_subcommand("benchmark", "Regenerate accuracy tables and curves");
    bench->require_subcommand(1);
    std::string b_in, b_out = "-", b_levels = "0,10..100:10", b_methods = "randomwalk,structural,dtw";
    std::uint64_t b_noise_seed = 0;
    CvOptions b_cv;
    bool b_nostrat = false;
    WalkFlags b_walk;
    auto add_bench_common = [&](CLI::App* sub, bool memories) {
        sub->add_option("--input", b_in, "Dataset manifest, directory, or tu:<dir>:<name>")->required();
        sub->add_option("--out", b_out, "CSV path ('-' for stdout)");
        sub->add_option("--folds", b_cv.folds, "Number of folds");
        sub->add_flag("--no-stratify", b_nostrat, "Plain random folds");
        b_walk.add_to(sub, memories);
    };
    auto* b_sets = bench->add_subcommand("feature-sets", "Accuracy per feature-set combination");
    add_bench_common(b_sets, true);
    auto* b_mem = bench->add_subcommand("memory-sweep", "Accuracy versus LMW memory");
    add_bench_common(b_mem, true);
    auto* b_noise = bench->add_subcommand("noise", "Accuracy versus Link Change noise rate");
    add_bench_common(b_noise, false);
    b_noise->add_option("--levels", b_levels, "Noise rates in percent");
    b_noise->add_option("--methods", b_methods, "Comma-separated methods");
    b_noise->add_option("--noise-seed", b_noise_seed, "Seed for the perturbations");
    auto* b_ref = bench->add_subcommand("reference", "Print literature reference accuracies");
    b_ref->add_option("--out", b_out, "CSV path ('-' for stdout)");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    const unsigned threads = resolve_threads(threads_flag);
    try {
        if (gen->parsed()) {
            SyntheticOptions o;
            o.models.clear();
            if (gen_models == "all") {
                o.models = all_models();
            } else {
                for (const auto& m : split(gen_models, ',')) o.models.push_back(parse_model(m));
            }
            o.sizes = parse_int_list(gen_sizes);
            o.degrees = parse_int_list(gen_degrees);
            o.per_cell = gen_per_cell;
            o.seed = gen_seed;
            o.generator.ws_rewire = ws_rewire;
            o.threads = threads;
            auto ds = build_synthetic_dataset(o);
            auto manifest = save_dataset(ds, gen_out, gen_force);
            err << "wrote " << ds.size() << " graphs to " << manifest << '\n';
        } else if (per->parsed()) {
            const auto levels = parse_levels(per_levels);
            auto base = load_dataset(per_in, threads);
            auto noisy = build_noisy_dataset(base, levels, per_seed, threads);
            for (const auto& [p, ds] : noisy) {
                char sub[16];
                std::snprintf(sub, sizeof sub, "p%03u", p);
                auto manifest = save_dataset(ds, (fs::path(per_out) / sub).string(), per_force);
                err << "wrote " << ds.size() << " graphs to " << manifest << '\n';
            }
        } else if (ext->parsed()) {
            ExtractOptions o;
            o.method = parse_method(ext_method);
            o.features = parse_feature_set(ext_features);
            o.features.normalize_lengths_by_n = ext_norm;
            o.walk = ext_walk.config();
            o.dtw = parse_dtw(dtw_mem, dtw_width);
            o.threads = threads;
            auto ds = load_dataset(ext_in, threads);
            auto fm = extract_feature_matrix(ds, o);
            std::ostringstream csv;
            write_feature_csv(csv, fm);
            emit(ext_out, csv.str(), out);
            if (!ext_dump.empty()) {
                fs::create_directories(ext_dump);
                parallel_for(ds.size(), threads, [&](unsigned, std::size_t i) {
                    WalkConfig cfg = o.walk;
                    cfg.master_seed = graph_walk_seed(o.walk.master_seed, i);
                    const auto& g = ds.entries[i].graph;
                    auto rw = run_rw(g, cfg);
                    auto saw = run_saw(g, cfg);
                    std::vector<VisitProfile> lmw;
                    for (auto m : o.features.lmw_memories) lmw.push_back(run_lmw(g, m, cfg));
                    char name[40];
                    std::snprintf(name, sizeof name, "graph_%05zu_profile.csv", i);
                    std::ostringstream os;
                    write_profile_csv(os, rw, saw.visits, lmw);
                    write_text_file((fs::path(ext_dump) / name).string(), os.str());
                });
            }
        } else if (cls->parsed()) {
            auto fm = read_feature_csv(cls_in);
            cls_cv.stratified = !cls_nostrat;
            cls_cv.threads = threads;
            auto rep = cross_validate(fm.values, fm.labels, cls_cv);
            std::ostringstream csv;
            write_report_header(csv, cls_cv.folds);
            write_report_row(csv, cls_fs.empty() ? fs::path(cls_in).stem().string() : cls_fs,
                             cls_ds.empty() ? fs::absolute(cls_in).parent_path().filename().string() : cls_ds, rep);
            emit(cls_out, csv.str(), out);
            if (!cls_confusion.empty()) {
                std::ostringstream cm;
                write_confusion_csv(cm, rep);
                write_text_file(cls_confusion, cm.str());
            }
        } else if (bench->parsed()) {
            if (b_ref->parsed()) {
                std::ostringstream csv;
                csv << "dataset,method,mean_acc,std_acc\n";
                for (const auto& r : reference_accuracies()) {
                    csv << r.dataset << ',' << r.method << ',' << format_fixed(r.mean, 1) << ','
                        << format_fixed(r.std, 1) << '\n';
                }
                emit(b_out, csv.str(), out);
                return kExitOk;
            }
            BenchmarkOptions o;
            o.cv = b_cv;
            o.cv.stratified = !b_nostrat;
            o.cv.seed = b_walk.seed;
            if (b_noise->parsed()) b_walk.memories = "1";  // unused by the noise benchmark
            o.walk = b_walk.config();
            o.threads = threads;
            auto ds = load_dataset(b_in, threads);
            std::string csv;
            if (b_sets->parsed()) {
                csv = benchmark_feature_sets(ds, o);
            } else if (b_mem->parsed()) {
                csv = benchmark_memory_sweep(ds, o);
            } else {
                std::vector<Method> methods;
                for (const auto& m : split(b_methods, ',')) methods.push_back(parse_method(m));
                csv = benchmark_noise(ds, parse_levels(b_levels), methods, b_noise_seed, o);
            }
            emit(b_out, csv, out);
        }
    } catch (const ArgumentError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DataError& e) {
        err << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitOk;
}

}  // namespace netwalk
