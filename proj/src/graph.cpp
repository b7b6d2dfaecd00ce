#include "netwalk/graph.hpp"

#include "netwalk/error.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace netwalk {

Graph build_graph(std::size_t n, std::span<const Edge> edges, bool directed, BuildReport* report) {
    std::vector<Edge> arcs;
    arcs.reserve(directed ? edges.size() : 2 * edges.size());
    BuildReport local;
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n) {
            throw DataError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                            ") references a node outside [0, " + std::to_string(n) + ")");
        }
        if (u == v) {
            ++local.self_loops;
            continue;
        }
        arcs.emplace_back(u, v);
        if (!directed) arcs.emplace_back(v, u);
    }
    std::sort(arcs.begin(), arcs.end());
    const auto before = arcs.size();
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    local.duplicates = directed ? before - arcs.size() : (before - arcs.size()) / 2;

    Graph g;
    g.directed_ = directed;
    g.offsets_.assign(n + 1, 0);
    for (const auto& a : arcs) ++g.offsets_[a.first + 1];
    std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
    g.targets_.reserve(arcs.size());
    for (const auto& a : arcs) g.targets_.push_back(a.second);
    if (report) *report = local;
    return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (NodeId u = 0; u < node_count(); ++u) {
        for (NodeId v : neighbors(u)) {
            if (directed_ || u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

std::vector<std::size_t> weak_components(const Graph& g) {
    const std::size_t n = g.node_count();
    // Union-find over arcs gives weak connectivity for directed graphs too.
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v : g.neighbors(u)) {
            auto a = find(u), b = find(v);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    }
    std::vector<std::size_t> comp(n);
    for (std::size_t i = 0; i < n; ++i) comp[i] = find(i);
    return comp;
}

bool is_connected(const Graph& g) {
    auto comp = weak_components(g);
    return std::all_of(comp.begin(), comp.end(), [](std::size_t c) { return c == 0; });
}

Graph largest_connected_component(const Graph& g) {
    const std::size_t n = g.node_count();
    if (n == 0) return g;
    auto comp = weak_components(g);
    std::vector<std::size_t> size(n, 0);
    for (auto c : comp) ++size[c];
    // Roots are the smallest member ids, so scanning ascending resolves ties.
    std::size_t best = 0;
    for (std::size_t c = 1; c < n; ++c) {
        if (size[c] > size[best]) best = c;
    }
    if (size[best] == n) return g;

    std::vector<NodeId> remap(n, static_cast<NodeId>(-1));
    NodeId next = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (comp[i] == best) remap[i] = next++;
    }
    std::vector<Edge> kept;
    for (const auto& [u, v] : g.edges()) {
        if (comp[u] == best) kept.emplace_back(remap[u], remap[v]);
    }
    return build_graph(next, kept, g.directed());
}

Graph undirected_projection(const Graph& g) {
    if (!g.directed()) return g;
    auto e = g.edges();
    return build_graph(g.node_count(), e, false);
}

Graph parse_edge_list(std::istream& in, const std::string& source_name, BuildReport* report) {
    std::vector<Edge> edges;
    std::size_t declared_n = 0;
    bool has_header = false;
    bool directed = false;
    bool seen_content = false;
    std::size_t max_id_plus_one = 0;

    std::string line;
    std::size_t lineno = 0;
    auto fail = [&](const std::string& what) {
        throw DataError(source_name + ":" + std::to_string(lineno) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        if (!seen_content && line[first] == 'N') {
            std::string tag, kind;
            long long n = -1;
            if (!(ls >> tag >> n >> kind) || tag != "N" || n < 1) fail("malformed header");
            if (kind == "directed") {
                directed = true;
            } else if (kind != "undirected") {
                fail("header must say directed or undirected, got '" + kind + "'");
            }
            declared_n = static_cast<std::size_t>(n);
            has_header = true;
            seen_content = true;
            continue;
        }
        seen_content = true;
        long long u = -1, v = -1;
        std::string rest;
        if (!(ls >> u >> v) || (ls >> rest) || u < 0 || v < 0) fail("expected 'u v' pair");
        if (u > 0xFFFFFFFELL || v > 0xFFFFFFFELL) fail("node id too large");
        edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
        max_id_plus_one = std::max<std::size_t>(max_id_plus_one, std::max(u, v) + 1);
    }
    std::size_t n = has_header ? declared_n : std::max<std::size_t>(max_id_plus_one, 1);
    if (has_header && max_id_plus_one > declared_n) {
        throw DataError(source_name + ": node id " + std::to_string(max_id_plus_one - 1) +
                        " exceeds declared N=" + std::to_string(declared_n));
    }
    return build_graph(n, edges, directed, report);
}

Graph read_edge_list(const std::string& path, BuildReport* report) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open edge list '" + path + "'");
    return parse_edge_list(in, path, report);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "N " << g.node_count() << ' ' << (g.directed() ? "directed" : "undirected") << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_edge_list(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write edge list '" + path + "'");
    write_edge_list(out, g);
    if (!out) throw DataError("write failed for '" + path + "'");
}

}  // namespace netwalk
