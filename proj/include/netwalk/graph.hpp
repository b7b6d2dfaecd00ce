#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace netwalk {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

struct BuildReport;

// Immutable simple graph in compressed adjacency form. Neighbor lists are
// sorted ascending; undirected edges appear in both endpoint lists.
class Graph {
public:
    Graph() = default;

    std::size_t node_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    bool directed() const { return directed_; }

    // Number of distinct edges (each undirected edge counted once).
    std::size_t edge_count() const { return directed_ ? targets_.size() : targets_.size() / 2; }

    std::span<const NodeId> neighbors(NodeId i) const {
        return {targets_.data() + offsets_[i], targets_.data() + offsets_[i + 1]};
    }
    std::size_t out_degree(NodeId i) const { return offsets_[i + 1] - offsets_[i]; }
    bool has_edge(NodeId u, NodeId v) const;

    // Deduplicated edge set; u < v for undirected graphs, sorted.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    friend Graph build_graph(std::size_t, std::span<const Edge>, bool, BuildReport*);

    bool directed_ = false;
    std::vector<std::size_t> offsets_;
    std::vector<NodeId> targets_;
};

struct BuildReport {
    std::size_t self_loops = 0;
    std::size_t duplicates = 0;
};

// Sanitizing constructor: self-loops dropped, duplicates collapsed. For
// undirected graphs (u,v) and (v,u) are the same edge. Throws DataError on
// out-of-range ids.
Graph build_graph(std::size_t n, std::span<const Edge> edges, bool directed,
                  BuildReport* report = nullptr);

inline std::size_t out_degree(const Graph& g, NodeId i) { return g.out_degree(i); }

// Induced subgraph on the largest weakly connected component, re-indexed
// densely in original id order. Ties go to the component holding the
// smallest node id.
Graph largest_connected_component(const Graph& g);

// Weak component id per node, components numbered by their smallest member.
std::vector<std::size_t> weak_components(const Graph& g);

bool is_connected(const Graph& g);

// Undirected view of a directed graph (identity for undirected input).
Graph undirected_projection(const Graph& g);

// Edge-list text format. Header line `N <n> <directed|undirected>` is
// optional on input and always written on output.
Graph parse_edge_list(std::istream& in, const std::string& source_name = "<stream>",
                      BuildReport* report = nullptr);
Graph read_edge_list(const std::string& path, BuildReport* report = nullptr);
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list(const std::string& path, const Graph& g);

}  // namespace netwalk
