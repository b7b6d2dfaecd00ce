#include "netwalk/walks.hpp"

#include "netwalk/error.hpp"
#include "netwalk/parallel.hpp"
#include "netwalk/rng.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>

namespace netwalk {

void WalkConfig::validate() const {
    if (walkers_per_node < 1) throw ArgumentError("walkers per node must be >= 1");
    for (auto m : memory_sizes) {
        if (m < 1) throw ArgumentError("memory sizes must be >= 1");
    }
}

std::uint64_t stream_label(WalkType type, std::size_t memory) {
    switch (type) {
    case WalkType::RW: return hash_label("rw");
    case WalkType::SAW: return hash_label("saw");
    case WalkType::LMW: return mix_seed(hash_label("lmw"), memory);
    }
    return 0;
}

namespace {

// Per-worker scratch: private arrival counters plus the avoidance window.
struct Walker {
    std::vector<std::uint64_t> arrivals;
    std::vector<char> in_window;
    std::vector<NodeId> ring;
    std::vector<NodeId> allowed;
    std::uint64_t steps = 0;
};

}  // namespace

WalkRun simulate_walks(const Graph& g, std::size_t walkers_per_node, std::size_t memory,
                       std::size_t max_steps, std::uint64_t master_seed, std::uint64_t label,
                       unsigned threads) {
    const std::size_t n = g.node_count();
    const std::size_t cap = std::min(memory, n);
    WalkRun run;
    run.arrivals.assign(n, 0);
    run.lengths.assign(n * walkers_per_node, 0);

    threads = std::max(1u, threads);
    std::vector<Walker> workers(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
    for (auto& w : workers) {
        w.arrivals.assign(n, 0);
        w.in_window.assign(n, 0);
        w.ring.resize(cap);
    }

    parallel_for(n, threads, [&](unsigned worker, std::size_t start) {
        Walker& st = workers[worker];
        for (std::size_t k = 0; k < walkers_per_node; ++k) {
            auto rng = make_rng(derive_seed(master_seed, {label, start, k}));
            auto current = static_cast<NodeId>(start);
            // Ring buffer over the last `cap` trajectory entries.
            std::size_t head = 0, filled = 0;
            auto remember = [&](NodeId v) {
                if (cap == 0) return;
                if (filled == cap) {
                    st.in_window[st.ring[head]] = 0;
                } else {
                    ++filled;
                }
                st.ring[head] = v;
                st.in_window[v] = 1;
                head = (head + 1) % cap;
            };
            remember(current);
            std::size_t steps = 0;
            while (steps < max_steps) {
                auto nb = g.neighbors(current);
                NodeId next;
                if (cap == 0) {
                    if (nb.empty()) break;
                    next = nb[uniform_index(rng, nb.size())];
                } else {
                    st.allowed.clear();
                    for (NodeId v : nb) {
                        if (!st.in_window[v]) st.allowed.push_back(v);
                    }
                    if (st.allowed.empty()) break;
                    next = st.allowed[uniform_index(rng, st.allowed.size())];
                }
                ++st.arrivals[next];
                ++steps;
                current = next;
                remember(current);
            }
            for (std::size_t i = 0; i < filled; ++i) st.in_window[st.ring[i]] = 0;
            st.steps += steps;
            run.lengths[start * walkers_per_node + k] = static_cast<std::uint32_t>(steps);
        }
    });

    for (const auto& w : workers) {
        for (std::size_t i = 0; i < n; ++i) run.arrivals[i] += w.arrivals[i];
        run.total_steps += w.steps;
    }
    return run;
}

namespace {

VisitProfile to_profile(const Graph& g, const WalkConfig& cfg, WalkType type, std::size_t memory,
                        WalkRun& run) {
    VisitProfile p;
    p.type = type;
    p.memory = memory;
    const double denom = static_cast<double>(g.node_count()) * static_cast<double>(cfg.walkers_per_node);
    p.visits.resize(run.arrivals.size());
    for (std::size_t i = 0; i < run.arrivals.size(); ++i) {
        p.visits[i] = static_cast<double>(run.arrivals[i]) / denom;
    }
    p.arrivals = std::move(run.arrivals);
    p.total_steps = run.total_steps;
    return p;
}

}  // namespace

VisitProfile run_rw(const Graph& g, const WalkConfig& cfg) {
    cfg.validate();
    auto run = simulate_walks(g, cfg.walkers_per_node, 0, cfg.steps_for(g), cfg.master_seed,
                              stream_label(WalkType::RW), cfg.threads);
    return to_profile(g, cfg, WalkType::RW, 0, run);
}

SawResult run_saw(const Graph& g, const WalkConfig& cfg) {
    cfg.validate();
    auto run = simulate_walks(g, cfg.walkers_per_node, kUnlimitedMemory, kNoStepCap, cfg.master_seed,
                              stream_label(WalkType::SAW), cfg.threads);
    SawResult out;
    out.lengths = std::move(run.lengths);
    out.visits = to_profile(g, cfg, WalkType::SAW, 0, run);
    return out;
}

VisitProfile run_lmw(const Graph& g, std::size_t memory, const WalkConfig& cfg) {
    cfg.validate();
    if (memory < 1) throw ArgumentError("LMW memory must be >= 1");
    std::size_t window = memory;
    if (cfg.window == MemoryWindow::ExcludesCurrent && memory != kUnlimitedMemory) ++window;
    auto run = simulate_walks(g, cfg.walkers_per_node, window, cfg.steps_for(g), cfg.master_seed,
                              stream_label(WalkType::LMW, memory), cfg.threads);
    return to_profile(g, cfg, WalkType::LMW, memory, run);
}

std::vector<double> expected_rw_frequencies(const Graph& g, std::size_t steps) {
    const std::size_t n = g.node_count();
    if (g.directed()) throw ArgumentError("expected_rw_frequencies needs an undirected graph");
    if (n == 0 || !is_connected(g)) throw ArgumentError("expected_rw_frequencies needs a connected graph");
    std::vector<double> occ(n, 1.0 / static_cast<double>(n)), next(n), total(n, 0.0);
    if (n == 1) return total;  // the lone node has no edges to walk
    for (std::size_t k = 0; k < steps; ++k) {
        std::fill(next.begin(), next.end(), 0.0);
        for (NodeId u = 0; u < n; ++u) {
            const double share = occ[u] / static_cast<double>(g.out_degree(u));
            for (NodeId v : g.neighbors(u)) next[v] += share;
        }
        occ.swap(next);
        for (std::size_t i = 0; i < n; ++i) total[i] += occ[i];
    }
    return total;
}

void write_profile_csv(std::ostream& out, const VisitProfile& rw, const VisitProfile& saw,
                       const std::vector<VisitProfile>& lmw) {
    auto put = [&](double x) {
        char buf[32];
        auto r = std::to_chars(buf, buf + sizeof buf, x);
        out.write(buf, r.ptr - buf);
    };
    out << "node,t,s";
    for (const auto& p : lmw) out << ",r_" << p.memory;
    out << '\n';
    for (std::size_t i = 0; i < rw.visits.size(); ++i) {
        out << i << ',';
        put(rw.visits[i]);
        out << ',';
        put(saw.visits[i]);
        for (const auto& p : lmw) {
            out << ',';
            put(p.visits[i]);
        }
        out << '\n';
    }
}

}  // namespace netwalk
