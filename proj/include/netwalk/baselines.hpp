#pragma once

#include "netwalk/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace netwalk {

// Classical topology summary. Directed inputs are measured on their
// undirected projection.
struct StructuralFeatures {
    double avg_degree = 0;
    double hierarchical_degree_l1 = 0;  // mean ring size at distance 1
    double hierarchical_degree_l2 = 0;  // mean ring size at distance 2
    double global_clustering = 0;       // 3 * triangles / connected triples
    double avg_shortest_path = 0;       // over ordered pairs of the largest component
    double degree_assortativity = 0;    // Pearson over edge ends; 0 if degenerate

    std::vector<double> values() const {
        return {avg_degree,        hierarchical_degree_l1, hierarchical_degree_l2,
                global_clustering, avg_shortest_path,      degree_assortativity};
    }
    static std::vector<std::string> column_names() {
        return {"avg_degree", "hier_degree_1", "hier_degree_2", "clustering", "avg_path", "assortativity"};
    }
};

StructuralFeatures structural_features(const Graph& g);

// --- Deterministic tourist walk ---

enum class DtwRule { Min, Max };

struct DtwOutcome {
    bool blocked = false;
    std::size_t transient = 0;  // t
    std::size_t period = 0;     // p
    std::size_t length() const { return transient + period; }
};

// The tourist avoids the last `memory` trajectory entries (current node
// included) and moves to the neighbour minimising / maximising
// |deg(current) - deg(next)|, ties to the smallest id. The attractor is the
// first repeated (window) state; blocked when no neighbour is allowed.
DtwOutcome dtw_walk(const Graph& g, NodeId start, std::size_t memory, DtwRule rule);

struct DtwSpec {
    std::vector<std::size_t> memories{1, 2};
    std::vector<DtwRule> rules{DtwRule::Min, DtwRule::Max};
    std::size_t histogram_width = 5;

    void validate() const;
    std::vector<std::string> column_names() const;
};

struct DtwSignature {
    // Rule-major, then memory: [min mu1, min mu2, ..., max mu1, max mu2, ...],
    // each histogram_width entries of counts(length = mu + j) / N, j = 1..width.
    std::vector<double> values;
    std::size_t blocked_walks = 0;
    std::size_t out_of_range_walks = 0;
};

DtwSignature dtw_signature(const Graph& g, const DtwSpec& spec = {});

}  // namespace netwalk
