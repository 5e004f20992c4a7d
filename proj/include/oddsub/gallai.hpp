#pragma once

#include "oddsub/graph.hpp"
#include "oddsub/vertex_set.hpp"

namespace oddsub {

// A bipartition of V(g) in which each part induces an even subgraph.
struct EvenPartition {
    VertexSet part_one;
    VertexSet part_two;
};

// Constructs an even-even partition by solving the GF(2) system
//   (A x)_v + d(v) x_v = d(v)  (mod 2)   for every vertex v,
// where A is the adjacency matrix and d the degree vector. A solution always
// exists; free variables are fixed to zero, so the output is deterministic.
EvenPartition even_even_partition(const Graph& g);

inline constexpr uint32_t kPartitionBruteForceCap = 20;

// First valid bipartition in increasing numeric order of indicator patterns.
// Requires n <= 20.
EvenPartition even_even_partition_bruteforce(const Graph& g);

bool is_valid_even_partition(const Graph& g, const EvenPartition& p);

}  // namespace oddsub
