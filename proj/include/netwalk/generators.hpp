#pragma once

#include "netwalk/dataset.hpp"
#include "netwalk/graph.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace netwalk {

enum class Model { BA, ER, WS, Waxman };

std::string model_name(Model m);
Model parse_model(const std::string& name);
inline const std::vector<Model>& all_models() {
    static const std::vector<Model> models{Model::BA, Model::ER, Model::WS, Model::Waxman};
    return models;
}

struct ModelSpec {
    Model model = Model::ER;
    std::size_t n = 0;
    std::size_t k_avg = 0;
    std::uint64_t seed = 0;
};

inline constexpr double kDefaultWsRewire = 0.1;
inline constexpr double kWaxmanAlpha = 0.1;

// G(n, p) with p = k_avg / (n - 1).
Graph gen_er(const ModelSpec& spec);
// Preferential attachment, m = k_avg/2 edges per new node, seeded by an m-clique.
Graph gen_ba(const ModelSpec& spec);
// Ring lattice of k_avg nearest neighbours, each edge rewired with rewire_prob.
Graph gen_ws(const ModelSpec& spec, double rewire_prob = kDefaultWsRewire);

struct WaxmanInfo {
    double alpha = kWaxmanAlpha;
    double beta = 0.0;
};
// Unit-square Waxman graph, P(u,v) = min(1, beta * exp(-d / (alpha * sqrt 2))),
// beta solved so the expected edge count equals n * k_avg / 2.
Graph gen_waxman(const ModelSpec& spec, WaxmanInfo* info = nullptr);

struct GeneratorOptions {
    double ws_rewire = kDefaultWsRewire;
};
Graph generate(const ModelSpec& spec, const GeneratorOptions& opts = {});

// Throws ArgumentError describing the violated constraint, if any.
void validate_spec(const ModelSpec& spec);

// Link Change noise: floor(p/200 * M) edges removed, the same number added
// among non-edges. Node and edge counts are preserved.
Graph apply_link_change(const Graph& g, unsigned p, std::uint64_t seed);

struct SyntheticOptions {
    std::vector<Model> models = all_models();
    std::vector<std::size_t> sizes{500, 1000, 1500, 2000};
    std::vector<std::size_t> degrees{4, 6, 8, 10, 12, 14, 16};
    std::size_t per_cell = 10;
    std::uint64_t seed = 0;
    GeneratorOptions generator;
    unsigned threads = 1;
};

std::uint64_t graph_seed(std::uint64_t master, Model model, std::size_t n, std::size_t k_avg,
                         std::size_t replicate);

// Graphs ordered model-major, then size, degree, replicate.
LabeledDataset build_synthetic_dataset(const SyntheticOptions& opts);

// One perturbed copy of base per level; labels and metadata preserved, with
// `p` and the noise seed recorded per entry.
std::map<unsigned, LabeledDataset> build_noisy_dataset(const LabeledDataset& base,
                                                       const std::vector<unsigned>& levels,
                                                       std::uint64_t seed, unsigned threads = 1);

}  // namespace netwalk
