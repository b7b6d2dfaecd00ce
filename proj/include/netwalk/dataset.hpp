#pragma once

#include "netwalk/graph.hpp"

#include <map>
#include <string>
#include <vector>

namespace netwalk {

struct DatasetEntry {
    Graph graph;
    std::string label;
    // Free-form per-graph metadata (model, n, k_avg, seed, p, source ids...).
    std::map<std::string, std::string> meta;
};

struct LabeledDataset {
    std::string name;
    std::vector<DatasetEntry> entries;
    std::map<std::string, std::string> provenance;

    std::size_t size() const { return entries.size(); }
    // Distinct labels in sorted order.
    std::vector<std::string> classes() const;
    std::vector<std::string> labels() const;
};

// Manifest columns written first; any other metadata keys follow sorted.
inline const std::vector<std::string>& manifest_base_columns() {
    static const std::vector<std::string> cols{"path", "label", "model", "n", "k_avg", "seed", "p"};
    return cols;
}

// Reads `path,label,...` manifest; paths resolve relative to the manifest.
LabeledDataset load_edge_list_dir(const std::string& manifest_path, unsigned threads = 1);

// TUDataset text bundle: <dir>/<name>_A.txt, _graph_indicator.txt,
// _graph_labels.txt. Node/edge attribute files are ignored.
LabeledDataset load_tudataset(const std::string& dir, const std::string& name);

// Writes graph_NNNNN.edges files plus manifest.csv and provenance.csv into
// dir. Refuses to overwrite an existing manifest unless force is set.
// Returns the manifest path.
std::string save_dataset(const LabeledDataset& ds, const std::string& dir, bool force = false);

// Accepts either a manifest path, a directory containing manifest.csv, or
// `tu:<dir>:<name>` for a TUDataset bundle.
LabeledDataset load_dataset(const std::string& spec, unsigned threads = 1);

}  // namespace netwalk
