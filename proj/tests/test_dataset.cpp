#include "doctest.h"

#include "netwalk/csv.hpp"
#include "netwalk/dataset.hpp"
#include "netwalk/error.hpp"
#include "netwalk/generators.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;
using namespace netwalk;

namespace {

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& tag) {
        path = fs::temp_directory_path() / ("netwalk_test_" + tag + "_" + std::to_string(::getpid()));
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

void put(const fs::path& p, const std::string& text) {
    std::ofstream(p) << text;
}

std::string error_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const DataError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("edge-list manifest") {
    TempDir dir("manifest");
    put(dir.path / "a.edges", "0 1\n1 2\n");
    put(dir.path / "b.edges", "N 4 directed\n0 1\n");
    put(dir.path / "manifest.csv", "path,label,source\na.edges,x,\"lab, 1\"\nb.edges,y,lab2\n");

    auto ds = load_dataset(dir.path.string());
    REQUIRE(ds.size() == 2);
    CHECK(ds.entries[0].label == "x");
    CHECK(ds.entries[0].meta.at("source") == "lab, 1");
    CHECK(ds.entries[1].graph.directed());
    CHECK(ds.entries[1].graph.node_count() == 4);
    CHECK(ds.classes() == std::vector<std::string>{"x", "y"});

    put(dir.path / "manifest.csv", "path,label\nmissing.edges,x\n");
    CHECK(error_of([&] { load_dataset(dir.path.string()); }).find("missing.edges") != std::string::npos);

    put(dir.path / "manifest.csv", "path,label\n");
    CHECK(error_of([&] { load_dataset(dir.path.string()); }).find("no graphs") != std::string::npos);

    put(dir.path / "manifest.csv", "file,class\na.edges,x\n");
    CHECK_THROWS_AS(load_dataset(dir.path.string()), DataError);

    CHECK_THROWS_AS(load_dataset((dir.path / "nowhere").string()), DataError);
}

TEST_CASE("TUDataset bundle") {
    TempDir dir("tu");
    // Two triangles, the second with comma-space separators and a trailing blank line.
    put(dir.path / "T_A.txt", "1, 2\n2, 3\n3, 1\n2, 1\n4,5\n5,6\n6,4\n\n");
    put(dir.path / "T_graph_indicator.txt", "1\n1\n1\n2\n2\n2\n");
    put(dir.path / "T_graph_labels.txt", "1\n2\n");
    auto ds = load_dataset("tu:" + dir.path.string() + ":T");
    REQUIRE(ds.size() == 2);
    for (const auto& e : ds.entries) {
        CHECK(e.graph.node_count() == 3);
        CHECK(e.graph.edge_count() == 3);
        CHECK_FALSE(e.graph.directed());
    }
    CHECK(ds.entries[1].label == "2");
    CHECK(ds.name == "T");

    put(dir.path / "T_A.txt", "1,4\n");
    CHECK(error_of([&] { load_tudataset(dir.path.string(), "T"); }).find("T_A.txt:1") != std::string::npos);

    put(dir.path / "T_A.txt", "1,2\n");
    put(dir.path / "T_graph_indicator.txt", "1\n1\n3\n");
    CHECK_THROWS_AS(load_tudataset(dir.path.string(), "T"), DataError);

    CHECK_THROWS_AS(load_tudataset(dir.path.string(), "Missing"), DataError);
    CHECK_THROWS_AS(load_dataset("tu:nocolon"), ArgumentError);
}

TEST_CASE("save and reload a synthetic dataset") {
    TempDir dir("roundtrip");
    SyntheticOptions o;
    o.sizes = {50};
    o.degrees = {4};
    o.per_cell = 2;
    auto ds = build_synthetic_dataset(o);
    auto manifest = save_dataset(ds, dir.path.string());

    std::ifstream in(manifest);
    std::string header;
    std::getline(in, header);
    CHECK(header.rfind("path,label,model,n,k_avg,seed,p", 0) == 0);

    auto back = load_dataset(manifest);
    REQUIRE(back.size() == ds.size());
    for (std::size_t i = 0; i < ds.size(); ++i) {
        CHECK(back.entries[i].graph == ds.entries[i].graph);
        CHECK(back.entries[i].label == ds.entries[i].label);
        CHECK(back.entries[i].meta.at("seed") == ds.entries[i].meta.at("seed"));
    }
    CHECK(back.provenance.at("master_seed") == "0");

    CHECK(error_of([&] { save_dataset(ds, dir.path.string()); }).find("--force") != std::string::npos);
    CHECK_NOTHROW(save_dataset(ds, dir.path.string(), true));
}

TEST_CASE("feature CSV round trip and number formatting") {
    FeatureMatrix fm;
    fm.columns = {"a", "b"};
    fm.values.resize(2, 2);
    fm.values << 0.1, -2.5e-17, 1.0 / 3.0, 42;
    fm.labels = {"x", "y,z"};
    std::ostringstream out;
    write_feature_csv(out, fm);
    std::istringstream in(out.str());
    auto back = read_feature_csv(in);
    CHECK(back.columns == fm.columns);
    CHECK(back.labels == fm.labels);
    CHECK(back.values == fm.values);

    CHECK(format_fixed(12.34567, 4) == "12.3457");
    CHECK(format_double(0.1) == "0.1");
    CHECK(split_csv_line("a,\"b,\"\"c\",") == std::vector<std::string>{"a", "b,\"c", ""});

    std::istringstream bad("a,label\nnot-a-number,x\n");
    CHECK_THROWS_AS(read_feature_csv(bad, "f.csv"), DataError);
}
