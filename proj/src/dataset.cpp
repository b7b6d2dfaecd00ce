#include "netwalk/dataset.hpp"

#include "netwalk/csv.hpp"
#include "netwalk/error.hpp"
#include "netwalk/parallel.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace fs = std::filesystem;

namespace netwalk {

std::vector<std::string> LabeledDataset::classes() const {
    std::set<std::string> s;
    for (const auto& e : entries) s.insert(e.label);
    return {s.begin(), s.end()};
}

std::vector<std::string> LabeledDataset::labels() const {
    std::vector<std::string> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back(e.label);
    return out;
}

namespace {

void read_provenance(const fs::path& file, LabeledDataset& ds) {
    std::ifstream in(file);
    if (!in) return;
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto cells = split_csv_line(line);
        if (cells.size() == 2) ds.provenance[cells[0]] = cells[1];
    }
}

}  // namespace

LabeledDataset load_edge_list_dir(const std::string& manifest_path, unsigned threads) {
    std::ifstream in(manifest_path);
    if (!in) throw DataError("cannot open manifest '" + manifest_path + "'");
    const fs::path base = fs::path(manifest_path).parent_path();

    std::string line;
    std::size_t lineno = 0;
    std::vector<std::string> header;
    while (header.empty() && std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line != "\r") header = split_csv_line(line);
    }
    auto col = [&](const std::string& name) -> std::ptrdiff_t {
        auto it = std::find(header.begin(), header.end(), name);
        return it == header.end() ? -1 : it - header.begin();
    };
    const auto path_col = col("path");
    const auto label_col = col("label");
    if (path_col < 0 || label_col < 0) {
        throw DataError(manifest_path + ": manifest header must contain 'path' and 'label'");
    }

    LabeledDataset ds;
    ds.name = fs::path(manifest_path).parent_path().filename().string();
    std::vector<std::string> paths;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line == "\r") continue;
        auto cells = split_csv_line(line);
        if (cells.size() != header.size()) {
            throw DataError(manifest_path + ":" + std::to_string(lineno) + ": expected " +
                            std::to_string(header.size()) + " fields, got " + std::to_string(cells.size()));
        }
        DatasetEntry e;
        e.label = cells[static_cast<std::size_t>(label_col)];
        if (e.label.empty()) throw DataError(manifest_path + ":" + std::to_string(lineno) + ": empty label");
        for (std::size_t j = 0; j < header.size(); ++j) {
            if (static_cast<std::ptrdiff_t>(j) != label_col && !cells[j].empty()) e.meta[header[j]] = cells[j];
        }
        fs::path p = cells[static_cast<std::size_t>(path_col)];
        paths.push_back((p.is_absolute() ? p : base / p).string());
        ds.entries.push_back(std::move(e));
    }
    if (ds.entries.empty()) throw DataError(manifest_path + ": manifest lists no graphs");

    parallel_for(ds.entries.size(), threads, [&](unsigned, std::size_t i) {
        if (!fs::is_regular_file(paths[i])) throw DataError("cannot read graph file '" + paths[i] + "'");
        ds.entries[i].graph = read_edge_list(paths[i]);
    });
    ds.provenance["source"] = "manifest";
    read_provenance(base / "provenance.csv", ds);
    return ds;
}

namespace {

std::vector<std::string> read_lines(const fs::path& p) {
    std::ifstream in(p);
    if (!in) throw DataError("cannot open '" + p.string() + "'");
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        out.push_back(line);
    }
    while (!out.empty() && out.back().find_first_not_of(" \t") == std::string::npos) out.pop_back();
    return out;
}

long long parse_id(const std::string& s, const std::string& where) {
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        throw DataError(where + ": bad integer '" + s + "'");
    }
    if (s.find_first_not_of(" \t", pos) != std::string::npos) throw DataError(where + ": bad integer '" + s + "'");
    return v;
}

std::string trim(const std::string& s) {
    auto a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return {};
    auto b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

}  // namespace

LabeledDataset load_tudataset(const std::string& dir, const std::string& name) {
    const fs::path base(dir);
    const auto indicator = read_lines(base / (name + "_graph_indicator.txt"));
    const auto labels = read_lines(base / (name + "_graph_labels.txt"));
    const auto adjacency = read_lines(base / (name + "_A.txt"));

    const std::size_t total_nodes = indicator.size();
    const std::size_t graphs = labels.size();
    if (graphs == 0) throw DataError(name + ": no graph labels");

    std::vector<std::size_t> graph_of(total_nodes);
    std::vector<NodeId> local_id(total_nodes);
    std::vector<std::size_t> node_count(graphs, 0);
    for (std::size_t i = 0; i < total_nodes; ++i) {
        const auto where = name + "_graph_indicator.txt:" + std::to_string(i + 1);
        auto g = parse_id(trim(indicator[i]), where);
        if (g < 1 || static_cast<std::size_t>(g) > graphs) {
            throw DataError(where + ": graph id " + std::to_string(g) + " outside 1.." + std::to_string(graphs));
        }
        graph_of[i] = static_cast<std::size_t>(g - 1);
        local_id[i] = static_cast<NodeId>(node_count[graph_of[i]]++);
    }
    for (std::size_t g = 0; g < graphs; ++g) {
        if (node_count[g] == 0) throw DataError(name + ": graph " + std::to_string(g + 1) + " has no nodes");
    }

    std::vector<std::vector<Edge>> edges(graphs);
    for (std::size_t l = 0; l < adjacency.size(); ++l) {
        const auto where = name + "_A.txt:" + std::to_string(l + 1);
        std::string line = adjacency[l];
        if (trim(line).empty()) continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a >> b) || (ls >> extra)) throw DataError(where + ": expected a node pair");
        auto u = parse_id(a, where), v = parse_id(b, where);
        if (u < 1 || v < 1 || static_cast<std::size_t>(u) > total_nodes || static_cast<std::size_t>(v) > total_nodes) {
            throw DataError(where + ": node id missing from graph indicator");
        }
        const auto iu = static_cast<std::size_t>(u - 1), iv = static_cast<std::size_t>(v - 1);
        if (graph_of[iu] != graph_of[iv]) throw DataError(where + ": edge joins two different graphs");
        edges[graph_of[iu]].emplace_back(local_id[iu], local_id[iv]);
    }

    LabeledDataset ds;
    ds.name = name;
    ds.entries.resize(graphs);
    for (std::size_t g = 0; g < graphs; ++g) {
        auto& e = ds.entries[g];
        e.graph = build_graph(node_count[g], edges[g], false);
        e.label = trim(labels[g]);
        if (e.label.empty()) throw DataError(name + "_graph_labels.txt:" + std::to_string(g + 1) + ": empty label");
        e.meta["tu_graph_id"] = std::to_string(g + 1);
        e.meta["n"] = std::to_string(node_count[g]);
    }
    ds.provenance["source"] = "tudataset";
    ds.provenance["tu_name"] = name;
    ds.provenance["tu_dir"] = dir;
    return ds;
}

std::string save_dataset(const LabeledDataset& ds, const std::string& dir, bool force) {
    const fs::path base(dir);
    const fs::path manifest = base / "manifest.csv";
    std::error_code ec;
    fs::create_directories(base, ec);
    if (ec) throw DataError("cannot create directory '" + dir + "': " + ec.message());
    if (fs::exists(manifest) && !force) {
        throw DataError("'" + manifest.string() + "' already exists (pass --force to overwrite)");
    }

    std::vector<std::string> columns = manifest_base_columns();
    std::set<std::string> extra;
    for (const auto& e : ds.entries) {
        for (const auto& [k, v] : e.meta) {
            if (std::find(columns.begin(), columns.end(), k) == columns.end()) extra.insert(k);
        }
    }
    columns.insert(columns.end(), extra.begin(), extra.end());

    std::ostringstream out;
    for (std::size_t j = 0; j < columns.size(); ++j) out << (j ? "," : "") << columns[j];
    out << '\n';
    for (std::size_t i = 0; i < ds.entries.size(); ++i) {
        const auto& e = ds.entries[i];
        char file[32];
        std::snprintf(file, sizeof file, "graph_%05zu.edges", i);
        write_edge_list((base / file).string(), e.graph);
        out << file << ',' << csv_quote(e.label);
        for (std::size_t j = 2; j < columns.size(); ++j) {
            auto it = e.meta.find(columns[j]);
            out << ',' << (it == e.meta.end() ? "" : csv_quote(it->second));
        }
        out << '\n';
    }
    write_text_file(manifest.string(), out.str());

    std::ostringstream prov;
    prov << "key,value\n";
    for (const auto& [k, v] : ds.provenance) prov << csv_quote(k) << ',' << csv_quote(v) << '\n';
    write_text_file((base / "provenance.csv").string(), prov.str());
    return manifest.string();
}

LabeledDataset load_dataset(const std::string& spec, unsigned threads) {
    if (spec.rfind("tu:", 0) == 0) {
        auto rest = spec.substr(3);
        auto colon = rest.rfind(':');
        if (colon == std::string::npos) throw ArgumentError("TUDataset spec must be tu:<dir>:<name>");
        return load_tudataset(rest.substr(0, colon), rest.substr(colon + 1));
    }
    fs::path p(spec);
    if (fs::is_directory(p)) p /= "manifest.csv";
    return load_edge_list_dir(p.string(), threads);
}

}  // namespace netwalk
