#pragma once

#include <cstdint>
#include <optional>

#include "oddsub/graph.hpp"
#include "oddsub/vertex_set.hpp"

namespace oddsub {

// True iff every vertex of s has an odd number of neighbors inside s.
// The empty set is vacuously odd.
bool is_odd_set(const Graph& g, const VertexSet& s);

// True iff every vertex of s has an even number of neighbors inside s.
bool is_even_set(const Graph& g, const VertexSet& s);

struct SolveResult {
    uint32_t optimum = 0;
    VertexSet witness;
    uint64_t nodes_explored = 0;
    double wall_time_ms = 0.0;
    // False when the node budget ran out; optimum is then only a lower bound.
    bool optimal = true;
};

inline constexpr uint64_t kDefaultNodeBudget = 1'000'000'000;

// Exact maximum odd induced subgraph via depth-first branch and bound.
// Solved per connected component and summed; deterministic witness.
SolveResult max_odd_induced_exact(const Graph& g, uint64_t node_budget = kDefaultNodeBudget);

inline constexpr uint32_t kEnumerateCap = 24;

// Streams every odd vertex set of g in increasing numeric order of the
// indicator bit pattern (vertex i has weight 2^i). Requires n <= 24.
class OddSetEnumerator {
public:
    explicit OddSetEnumerator(const Graph& g);
    std::optional<VertexSet> next();

private:
    uint32_t n_;
    uint32_t mask_ = 0;
    bool done_ = false;
    std::vector<uint32_t> rows_;
};

// Exact rational check denominator * f_o(g) >= numerator * n.
// Rejects graphs with isolated vertices.
bool verify_bound(const Graph& g, uint32_t numerator, uint32_t denominator,
                  uint64_t node_budget = kDefaultNodeBudget);

}  // namespace oddsub
