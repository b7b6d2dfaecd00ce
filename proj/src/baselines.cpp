#include "netwalk/baselines.hpp"

#include "netwalk/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>

namespace netwalk {

StructuralFeatures structural_features(const Graph& input) {
    const Graph g = undirected_projection(input);
    const std::size_t n = g.node_count();
    StructuralFeatures f;
    if (n == 0) return f;

    f.avg_degree = 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(n);

    // Rings at distance 1 and 2 from every node, plus path lengths within the
    // largest component, from one BFS per source.
    const auto comp = weak_components(g);
    std::vector<std::size_t> comp_size(n, 0);
    for (auto c : comp) ++comp_size[c];
    std::size_t largest = 0;
    for (std::size_t c = 1; c < n; ++c) {
        if (comp_size[c] > comp_size[largest]) largest = c;
    }

    std::vector<std::uint32_t> dist(n);
    std::vector<NodeId> queue;
    queue.reserve(n);
    const auto unseen = static_cast<std::uint32_t>(-1);
    double ring1 = 0, ring2 = 0, path_sum = 0;
    for (NodeId s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), unseen);
        queue.clear();
        dist[s] = 0;
        queue.push_back(s);
        const bool track_paths = comp[s] == largest;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            NodeId u = queue[head];
            if (!track_paths && dist[u] >= 2) break;
            for (NodeId v : g.neighbors(u)) {
                if (dist[v] != unseen) continue;
                dist[v] = dist[u] + 1;
                queue.push_back(v);
                if (dist[v] == 1) ring1 += 1;
                else if (dist[v] == 2) ring2 += 1;
                if (track_paths) path_sum += dist[v];
            }
        }
    }
    f.hierarchical_degree_l1 = ring1 / static_cast<double>(n);
    f.hierarchical_degree_l2 = ring2 / static_cast<double>(n);
    const auto lcc = static_cast<double>(comp_size[largest]);
    f.avg_shortest_path = lcc > 1 ? path_sum / (lcc * (lcc - 1.0)) : 0.0;

    // Triangles u < v < w via sorted adjacency intersection.
    double triangles = 0, triples = 0;
    for (NodeId u = 0; u < n; ++u) {
        const double d = static_cast<double>(g.out_degree(u));
        triples += d * (d - 1.0) / 2.0;
        auto nu = g.neighbors(u);
        for (NodeId v : nu) {
            if (v <= u) continue;
            auto nv = g.neighbors(v);
            auto a = std::upper_bound(nu.begin(), nu.end(), v);
            auto b = std::upper_bound(nv.begin(), nv.end(), v);
            while (a != nu.end() && b != nv.end()) {
                if (*a < *b) ++a;
                else if (*b < *a) ++b;
                else {
                    triangles += 1;
                    ++a;
                    ++b;
                }
            }
        }
    }
    f.global_clustering = triples > 0 ? 3.0 * triangles / triples : 0.0;

    // Newman degree assortativity over both orientations of every edge.
    double count = 0, sum = 0;
    for (NodeId u = 0; u < n; ++u) {
        count += static_cast<double>(g.out_degree(u));
        sum += static_cast<double>(g.out_degree(u)) * static_cast<double>(g.out_degree(u));
    }
    if (count > 0) {
        const double mean = sum / count;
        double cov = 0, var = 0;
        for (NodeId u = 0; u < n; ++u) {
            const double du = static_cast<double>(g.out_degree(u)) - mean;
            for (NodeId v : g.neighbors(u)) {
                const double dv = static_cast<double>(g.out_degree(v)) - mean;
                cov += du * dv;
                var += du * du;
            }
        }
        if (var > 1e-12 * count * std::max(1.0, mean * mean)) {
            f.degree_assortativity = std::clamp(cov / var, -1.0, 1.0);
        }
    }
    return f;
}

DtwOutcome dtw_walk(const Graph& g, NodeId start, std::size_t memory, DtwRule rule) {
    if (start >= g.node_count()) throw ArgumentError("dtw_walk: start node out of range");
    if (memory < 1) throw ArgumentError("dtw_walk: memory must be >= 1");

    std::vector<NodeId> traj{start};
    auto window = [&](std::size_t end) {
        const std::size_t begin = end + 1 > memory ? end + 1 - memory : 0;
        return std::vector<NodeId>(traj.begin() + static_cast<std::ptrdiff_t>(begin),
                                   traj.begin() + static_cast<std::ptrdiff_t>(end + 1));
    };
    std::map<std::vector<NodeId>, std::size_t> seen;
    seen.emplace(window(0), 0);

    for (;;) {
        const NodeId cur = traj.back();
        const std::size_t begin = traj.size() > memory ? traj.size() - memory : 0;
        const auto cur_deg = static_cast<long long>(g.out_degree(cur));
        bool found = false;
        NodeId best = 0;
        long long best_diff = 0;
        for (NodeId v : g.neighbors(cur)) {
            if (std::find(traj.begin() + static_cast<std::ptrdiff_t>(begin), traj.end(), v) != traj.end()) {
                continue;
            }
            const long long diff = std::llabs(cur_deg - static_cast<long long>(g.out_degree(v)));
            // Neighbours arrive in ascending id order, so strict comparison keeps the smallest id.
            if (!found || (rule == DtwRule::Min ? diff < best_diff : diff > best_diff)) {
                found = true;
                best = v;
                best_diff = diff;
            }
        }
        if (!found) return DtwOutcome{true, 0, 0};
        traj.push_back(best);
        const std::size_t k = traj.size() - 1;
        auto [it, inserted] = seen.emplace(window(k), k);
        if (!inserted) return DtwOutcome{false, it->second, k - it->second};
    }
}

void DtwSpec::validate() const {
    if (memories.empty() || rules.empty()) throw ArgumentError("DTW spec needs memories and rules");
    for (auto m : memories) {
        if (m < 1) throw ArgumentError("DTW memory must be >= 1");
    }
    if (histogram_width < 1) throw ArgumentError("DTW histogram width must be >= 1");
}

std::vector<std::string> DtwSpec::column_names() const {
    std::vector<std::string> cols;
    for (auto rule : rules) {
        for (auto mu : memories) {
            for (std::size_t j = 1; j <= histogram_width; ++j) {
                cols.push_back(std::string("dtw_") + (rule == DtwRule::Min ? "min" : "max") + "_mu" +
                               std::to_string(mu) + "_len" + std::to_string(mu + j));
            }
        }
    }
    return cols;
}

DtwSignature dtw_signature(const Graph& g, const DtwSpec& spec) {
    spec.validate();
    const std::size_t n = g.node_count();
    DtwSignature sig;
    sig.values.reserve(spec.rules.size() * spec.memories.size() * spec.histogram_width);
    for (auto rule : spec.rules) {
        for (auto mu : spec.memories) {
            std::vector<std::size_t> hist(spec.histogram_width, 0);
            for (NodeId s = 0; s < n; ++s) {
                auto out = dtw_walk(g, s, mu, rule);
                if (out.blocked) {
                    ++sig.blocked_walks;
                    continue;
                }
                const std::size_t len = out.length();
                if (len < mu + 1 || len > mu + spec.histogram_width) {
                    ++sig.out_of_range_walks;
                    continue;
                }
                ++hist[len - mu - 1];
            }
            for (auto c : hist) sig.values.push_back(static_cast<double>(c) / static_cast<double>(n));
        }
    }
    return sig;
}

}  // namespace netwalk
