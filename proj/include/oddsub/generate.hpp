#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "oddsub/graph.hpp"

namespace oddsub {

// The 4-regular graph on 7 vertices with all pairs adjacent except
// consecutive ones around the cycle 0-1-...-6-0; its largest odd induced
// subgraph is a single edge.
Graph k7_minus_hamilton();

// k vertex-disjoint copies of base.
Graph disjoint_copies(const Graph& base, uint32_t k);

// Random simple graph with max degree <= max_degree and no isolated
// vertices: edges sampled from the shuffled pair list (kept only when both
// endpoints have spare degree and a coin with edge_prob succeeds), then each
// isolated vertex is attached to the lowest-index vertex with spare degree;
// resamples with a derived sub-seed when that fails, up to 100 attempts.
Graph random_max_degree(uint32_t n, uint32_t max_degree, double edge_prob, uint64_t seed);

// Configuration model with rejection of loops and multi-edges.
Graph random_regular(uint32_t n, uint32_t d, uint64_t seed);

// Uniform labeled tree from a random Pruefer sequence.
Graph random_tree(uint32_t n, uint64_t seed);

Graph path_graph(uint32_t n);
Graph cycle_graph(uint32_t n);
Graph complete_graph(uint32_t n);
Graph star_graph(uint32_t n);  // K_{1,n-1}

enum class GenFamily {
    K7MinusHamilton,
    DisjointCopies,
    RandomMaxDegree,
    RandomRegular,
    RandomTree,
    Path,
    Cycle,
    Complete,
    Star,
};

std::string to_string(GenFamily f);
GenFamily gen_family_from_string(const std::string& s);

// Declarative instance description; same spec + seed give the same graph.
struct GenSpec {
    GenFamily family = GenFamily::K7MinusHamilton;
    uint32_t n = 0;
    uint32_t max_degree = 4;   // random_max_degree
    double edge_prob = 0.5;    // random_max_degree
    uint32_t d = 3;            // random_regular
    uint32_t copies = 1;       // disjoint_copies
    std::shared_ptr<GenSpec> base;  // disjoint_copies
    uint64_t seed = 0;

    nlohmann::json to_json() const;
    static GenSpec from_json(const nlohmann::json& j);
};

// Instantiates the spec with an explicit seed (ignoring spec.seed).
Graph generate(const GenSpec& spec, uint64_t seed);
// Instantiates the spec with its own seed.
Graph generate(const GenSpec& spec);

}  // namespace oddsub
