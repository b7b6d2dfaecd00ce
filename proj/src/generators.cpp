#include "netwalk/generators.hpp"

#include "netwalk/error.hpp"
#include "netwalk/parallel.hpp"
#include "netwalk/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace netwalk {

namespace {

std::string to_str(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

}  // namespace

std::string model_name(Model m) {
    switch (m) {
    case Model::BA: return "BA";
    case Model::ER: return "ER";
    case Model::WS: return "WS";
    case Model::Waxman: return "Waxman";
    }
    return "?";
}

Model parse_model(const std::string& name) {
    std::string s;
    for (char c : name) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (s == "ba" || s == "barabasi-albert") return Model::BA;
    if (s == "er" || s == "erdos-renyi") return Model::ER;
    if (s == "ws" || s == "watts-strogatz") return Model::WS;
    if (s == "waxman") return Model::Waxman;
    throw ArgumentError("unknown model '" + name + "' (expected BA, ER, WS or Waxman)");
}

void validate_spec(const ModelSpec& spec) {
    const std::string who = model_name(spec.model);
    if (spec.n < 1) throw ArgumentError(who + ": node count must be >= 1");
    if (spec.k_avg >= spec.n && spec.k_avg > 0) {
        throw ArgumentError(who + ": average degree " + std::to_string(spec.k_avg) +
                            " must be smaller than n = " + std::to_string(spec.n));
    }
    if ((spec.model == Model::WS || spec.model == Model::BA) && spec.k_avg % 2 != 0) {
        throw ArgumentError(who + ": average degree must be even, got " + std::to_string(spec.k_avg));
    }
    if (spec.model == Model::BA && spec.k_avg / 2 >= spec.n) {
        throw ArgumentError("BA: edges per node m = k_avg/2 must be smaller than n");
    }
}

Graph gen_er(const ModelSpec& spec) {
    validate_spec(spec);
    const std::size_t n = spec.n;
    std::vector<Edge> edges;
    if (spec.k_avg == 0 || n < 2) return build_graph(n, edges, false);
    const double p = static_cast<double>(spec.k_avg) / static_cast<double>(n - 1);
    auto rng = make_rng(spec.seed);
    edges.reserve(n * spec.k_avg / 2 + 16);
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v) {
            if (uniform_unit(rng) < p) edges.emplace_back(u, v);
        }
    }
    return build_graph(n, edges, false);
}

Graph gen_ba(const ModelSpec& spec) {
    validate_spec(spec);
    const std::size_t n = spec.n;
    const std::size_t m = spec.k_avg / 2;
    std::vector<Edge> edges;
    if (m == 0) return build_graph(n, edges, false);
    auto rng = make_rng(spec.seed);

    // Every edge endpoint is pushed here, so a uniform pick is degree-proportional.
    std::vector<NodeId> endpoints;
    endpoints.reserve(2 * m * n);
    for (NodeId u = 0; u < m; ++u) {
        for (NodeId v = u + 1; v < m; ++v) {
            edges.emplace_back(u, v);
            endpoints.push_back(u);
            endpoints.push_back(v);
        }
    }
    std::vector<NodeId> chosen;
    chosen.reserve(m);
    for (NodeId v = static_cast<NodeId>(m); v < n; ++v) {
        chosen.clear();
        while (chosen.size() < m) {
            NodeId t = endpoints.empty() ? static_cast<NodeId>(uniform_index(rng, v))
                                         : endpoints[uniform_index(rng, endpoints.size())];
            if (std::find(chosen.begin(), chosen.end(), t) == chosen.end()) chosen.push_back(t);
        }
        for (NodeId t : chosen) {
            edges.emplace_back(v, t);
            endpoints.push_back(v);
            endpoints.push_back(t);
        }
    }
    return build_graph(n, edges, false);
}

Graph gen_ws(const ModelSpec& spec, double rewire_prob) {
    validate_spec(spec);
    if (!(rewire_prob >= 0.0 && rewire_prob <= 1.0)) {
        throw ArgumentError("WS: rewiring probability must lie in [0, 1]");
    }
    const std::size_t n = spec.n;
    const std::size_t half = spec.k_avg / 2;
    std::vector<std::vector<NodeId>> adj(n);
    auto has = [&](NodeId a, NodeId b) {
        return std::find(adj[a].begin(), adj[a].end(), b) != adj[a].end();
    };
    auto erase = [&](NodeId a, NodeId b) {
        adj[a].erase(std::find(adj[a].begin(), adj[a].end(), b));
        adj[b].erase(std::find(adj[b].begin(), adj[b].end(), a));
    };
    auto add = [&](NodeId a, NodeId b) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    };
    for (NodeId u = 0; u < n; ++u) {
        for (std::size_t j = 1; j <= half; ++j) add(u, static_cast<NodeId>((u + j) % n));
    }
    if (rewire_prob > 0.0) {
        auto rng = make_rng(spec.seed);
        for (std::size_t j = 1; j <= half; ++j) {
            for (NodeId u = 0; u < n; ++u) {
                if (uniform_unit(rng) >= rewire_prob) continue;
                if (adj[u].size() >= n - 1) continue;
                const auto v = static_cast<NodeId>((u + j) % n);
                NodeId w;
                do {
                    w = static_cast<NodeId>(uniform_index(rng, n));
                } while (w == u || has(u, w));
                erase(u, v);
                add(u, w);
            }
        }
    }
    std::vector<Edge> edges;
    edges.reserve(n * half);
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v : adj[u]) {
            if (u < v) edges.emplace_back(u, v);
        }
    }
    return build_graph(n, edges, false);
}

Graph gen_waxman(const ModelSpec& spec, WaxmanInfo* info) {
    validate_spec(spec);
    const std::size_t n = spec.n;
    const double alpha = kWaxmanAlpha;
    const double scale = alpha * std::sqrt(2.0);
    auto rng = make_rng(spec.seed);
    std::vector<double> x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = uniform_unit(rng);
        y[i] = uniform_unit(rng);
    }
    const double pairs = 0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
    const double target = 0.5 * static_cast<double>(n) * static_cast<double>(spec.k_avg);
    if (target > pairs) {
        throw ArgumentError("Waxman: target edge count exceeds the number of node pairs");
    }

    std::vector<double> weight;
    weight.reserve(static_cast<std::size_t>(pairs));
    double min_weight = 1.0;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            double d = std::hypot(x[u] - x[v], y[u] - y[v]);
            weight.push_back(std::exp(-d / scale));
            min_weight = std::min(min_weight, weight.back());
        }
    }
    auto expected = [&](double beta) {
        double s = 0.0;
        for (double w : weight) s += std::min(1.0, beta * w);
        return s;
    };

    double beta = 0.0;
    if (target > 0.0) {
        double lo = 0.0;
        double hi = 1.0 / min_weight;  // every probability clamps to 1 here
        if (expected(hi) < target * (1.0 - 1e-12)) {
            throw DataError("Waxman: beta calibration cannot reach average degree " +
                            std::to_string(spec.k_avg));
        }
        for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
            double mid = 0.5 * (lo + hi);
            (expected(mid) < target ? lo : hi) = mid;
        }
        beta = hi;
    }
    if (info) *info = WaxmanInfo{alpha, beta};

    std::vector<Edge> edges;
    std::size_t idx = 0;
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v, ++idx) {
            double p = std::min(1.0, beta * weight[idx]);
            if (uniform_unit(rng) < p) edges.emplace_back(u, v);
        }
    }
    return build_graph(n, edges, false);
}

Graph generate(const ModelSpec& spec, const GeneratorOptions& opts) {
    switch (spec.model) {
    case Model::BA: return gen_ba(spec);
    case Model::ER: return gen_er(spec);
    case Model::WS: return gen_ws(spec, opts.ws_rewire);
    case Model::Waxman: return gen_waxman(spec);
    }
    throw ArgumentError("unknown model");
}

Graph apply_link_change(const Graph& g, unsigned p, std::uint64_t seed) {
    if (p > 100) throw ArgumentError("noise rate must be in [0, 100], got " + std::to_string(p));
    if (g.directed()) throw ArgumentError("link change noise applies to undirected graphs only");
    auto edges = g.edges();
    const std::size_t m = edges.size();
    const std::size_t r = static_cast<std::size_t>(p) * m / 200;
    if (r == 0) return g;
    const std::size_t n = g.node_count();
    const std::size_t pairs = n * (n - 1) / 2;
    if (pairs - (m - r) < r) throw DataError("graph too dense to add replacement edges");

    auto rng = make_rng(seed);
    // Partial Fisher-Yates: the first r slots become the removed sample.
    for (std::size_t i = 0; i < r; ++i) {
        std::size_t j = i + uniform_index(rng, m - i);
        std::swap(edges[i], edges[j]);
    }
    std::vector<Edge> kept(edges.begin() + static_cast<std::ptrdiff_t>(r), edges.end());
    auto key = [n](NodeId u, NodeId v) {
        if (u > v) std::swap(u, v);
        return static_cast<std::uint64_t>(u) * n + v;
    };
    std::unordered_set<std::uint64_t> present;
    present.reserve(2 * m);
    for (const auto& [u, v] : kept) present.insert(key(u, v));

    const std::size_t free_pairs = pairs - kept.size();
    if (free_pairs >= 4 * r) {
        std::size_t added = 0;
        while (added < r) {
            auto u = static_cast<NodeId>(uniform_index(rng, n));
            auto v = static_cast<NodeId>(uniform_index(rng, n));
            if (u == v || !present.insert(key(u, v)).second) continue;
            kept.emplace_back(std::min(u, v), std::max(u, v));
            ++added;
        }
    } else {
        // Dense graph: sample directly from the enumerated non-edges.
        std::vector<Edge> candidates;
        candidates.reserve(free_pairs);
        for (NodeId u = 0; u < n; ++u) {
            for (NodeId v = u + 1; v < n; ++v) {
                if (!present.count(key(u, v))) candidates.emplace_back(u, v);
            }
        }
        for (std::size_t i = 0; i < r; ++i) {
            std::size_t j = i + uniform_index(rng, candidates.size() - i);
            std::swap(candidates[i], candidates[j]);
            kept.push_back(candidates[i]);
        }
    }
    return build_graph(n, kept, false);
}

std::uint64_t graph_seed(std::uint64_t master, Model model, std::size_t n, std::size_t k_avg,
                         std::size_t replicate) {
    return derive_seed(master, {hash_label("graph"), static_cast<std::uint64_t>(model), n, k_avg,
                                replicate});
}

LabeledDataset build_synthetic_dataset(const SyntheticOptions& opts) {
    std::vector<ModelSpec> specs;
    std::vector<std::size_t> replicate;
    for (Model model : opts.models) {
        for (std::size_t n : opts.sizes) {
            for (std::size_t k : opts.degrees) {
                ModelSpec probe{model, n, k, 0};
                validate_spec(probe);
                for (std::size_t r = 0; r < opts.per_cell; ++r) {
                    specs.push_back({model, n, k, graph_seed(opts.seed, model, n, k, r)});
                    replicate.push_back(r);
                }
            }
        }
    }
    LabeledDataset ds;
    ds.name = "synthetic";
    ds.entries.resize(specs.size());
    parallel_for(specs.size(), opts.threads, [&](unsigned, std::size_t i) {
        const auto& s = specs[i];
        auto& e = ds.entries[i];
        WaxmanInfo wax;
        if (s.model == Model::Waxman) {
            e.graph = gen_waxman(s, &wax);
            e.meta["waxman_beta"] = to_str(wax.beta);
        } else {
            e.graph = generate(s, opts.generator);
        }
        e.label = model_name(s.model);
        e.meta["model"] = model_name(s.model);
        e.meta["n"] = std::to_string(s.n);
        e.meta["k_avg"] = std::to_string(s.k_avg);
        e.meta["seed"] = std::to_string(s.seed);
        e.meta["replicate"] = std::to_string(replicate[i]);
        e.meta["p"] = "0";
    });
    ds.provenance["source"] = "synthetic";
    ds.provenance["master_seed"] = std::to_string(opts.seed);
    ds.provenance["ws_rewire"] = to_str(opts.generator.ws_rewire);
    ds.provenance["waxman_alpha"] = to_str(kWaxmanAlpha);
    ds.provenance["waxman_beta"] = "calibrated per graph";
    ds.provenance["ba_seed_graph"] = "m-clique";
    ds.provenance["per_cell"] = std::to_string(opts.per_cell);
    return ds;
}

std::map<unsigned, LabeledDataset> build_noisy_dataset(const LabeledDataset& base,
                                                       const std::vector<unsigned>& levels,
                                                       std::uint64_t seed, unsigned threads) {
    std::map<unsigned, LabeledDataset> out;
    for (unsigned p : levels) {
        if (p > 100) throw ArgumentError("noise level " + std::to_string(p) + " outside [0, 100]");
    }
    for (unsigned p : levels) {
        LabeledDataset ds;
        ds.name = base.name + "_p" + std::to_string(p);
        ds.provenance = base.provenance;
        ds.provenance["noise"] = "link-change";
        ds.provenance["noise_p"] = std::to_string(p);
        ds.provenance["noise_seed"] = std::to_string(seed);
        ds.entries.resize(base.entries.size());
        parallel_for(base.entries.size(), threads, [&](unsigned, std::size_t i) {
            const auto& src = base.entries[i];
            auto s = derive_seed(seed, {hash_label("link-change"), p, i});
            auto& e = ds.entries[i];
            e.graph = apply_link_change(src.graph, p, s);
            e.label = src.label;
            e.meta = src.meta;
            e.meta["p"] = std::to_string(p);
            e.meta["noise_seed"] = std::to_string(s);
        });
        out.emplace(p, std::move(ds));
    }
    return out;
}

}  // namespace netwalk
