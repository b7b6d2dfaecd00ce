#pragma once

#include "netwalk/graph.hpp"

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

namespace netwalk {

enum class WalkType { RW, SAW, LMW };

// Which trajectory entries a limited-memory walker avoids. IncludesCurrent:
// the last m entries, the current node being the newest (m=1 behaves like a
// plain random walk). ExcludesCurrent: the m entries before the current node.
enum class MemoryWindow { IncludesCurrent, ExcludesCurrent };

struct WalkConfig {
    std::size_t walkers_per_node = 10;
    std::size_t max_steps = 0;  // 0 means N, resolved per graph
    std::vector<std::size_t> memory_sizes{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    std::uint64_t master_seed = 0;
    MemoryWindow window = MemoryWindow::IncludesCurrent;
    unsigned threads = 1;

    std::size_t steps_for(const Graph& g) const { return max_steps ? max_steps : g.node_count(); }
    void validate() const;
};

struct VisitProfile {
    WalkType type = WalkType::RW;
    std::size_t memory = 0;  // LMW only
    // arrivals[i] / (N * W)
    std::vector<double> visits;
    std::vector<std::uint64_t> arrivals;
    std::uint64_t total_steps = 0;
};

struct SawResult {
    VisitProfile visits;
    // One entry per (start node, walker), start-major.
    std::vector<std::uint32_t> lengths;
};

VisitProfile run_rw(const Graph& g, const WalkConfig& cfg);
SawResult run_saw(const Graph& g, const WalkConfig& cfg);
VisitProfile run_lmw(const Graph& g, std::size_t memory, const WalkConfig& cfg);

// Label that keys the per-walker RNG streams of a walk kind; streams are
// seeded from (master seed, label, start node, walker index).
std::uint64_t stream_label(WalkType type, std::size_t memory = 0);

// General engine behind the three walks above. `memory` is the number of
// avoided trajectory entries (0: none, kUnlimitedMemory: whole trajectory);
// `max_steps` caps each walk; `label` selects the RNG streams.
inline constexpr std::size_t kUnlimitedMemory = std::numeric_limits<std::size_t>::max();
inline constexpr std::size_t kNoStepCap = std::numeric_limits<std::size_t>::max();

struct WalkRun {
    std::vector<std::uint64_t> arrivals;
    std::vector<std::uint32_t> lengths;
    std::uint64_t total_steps = 0;
};
WalkRun simulate_walks(const Graph& g, std::size_t walkers_per_node, std::size_t memory,
                       std::size_t max_steps, std::uint64_t master_seed, std::uint64_t label,
                       unsigned threads);

// Exact expected t_i for walkers started uniformly, W per node, taking
// `steps` steps on a connected undirected graph: sum over k=1..steps of the
// k-step occupation probabilities.
std::vector<double> expected_rw_frequencies(const Graph& g, std::size_t steps);

// Debug dump: node,t,s,r_<m>...
void write_profile_csv(std::ostream& out, const VisitProfile& rw, const VisitProfile& saw,
                       const std::vector<VisitProfile>& lmw);

}  // namespace netwalk
