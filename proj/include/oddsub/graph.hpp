#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oddsub/vertex_set.hpp"

namespace oddsub {

inline constexpr uint32_t kMaxVertices = 1u << 16;

// Simple undirected graph on vertices 0..n-1 with bit-vector adjacency rows.
// Immutable after construction; adjacency is kept symmetric and loop-free.
class Graph {
public:
    Graph() = default;
    explicit Graph(uint32_t n);

    static Graph from_edge_list(uint32_t n,
                                const std::vector<std::pair<uint32_t, uint32_t>>& edges,
                                std::string label = {});

    uint32_t vertex_count() const { return n_; }
    size_t edge_count() const;

    const VertexSet& neighbors(uint32_t v) const;
    uint32_t degree(uint32_t v) const;
    bool has_edge(uint32_t u, uint32_t v) const;

    const std::string& label() const { return label_; }
    void set_label(std::string label) { label_ = std::move(label); }

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    friend Graph graph_from_rows(uint32_t n, std::vector<VertexSet> rows, std::string label);

    void add_edge_internal(uint32_t u, uint32_t v);
    void check_invariants() const;

    uint32_t n_ = 0;
    std::vector<VertexSet> adj_;
    std::string label_;
};

// Construction escape hatch for codecs and generators; validates invariants.
Graph graph_from_rows(uint32_t n, std::vector<VertexSet> rows, std::string label = {});

struct DegreeProfile {
    std::vector<uint32_t> degrees;
    uint32_t min_degree = 0;
    uint32_t max_degree = 0;
    bool is_regular = true;
};

// Induced subgraph together with the index map back to the host graph:
// vertex i of `graph` is `original[i]` in the host (ascending order).
struct Subgraph {
    Graph graph;
    std::vector<uint32_t> original;

    // old index -> new index, -1 for vertices outside the subgraph
    std::vector<int32_t> old_to_new(uint32_t host_n) const {
        std::vector<int32_t> m(host_n, -1);
        for (uint32_t i = 0; i < original.size(); ++i) m[original[i]] = int32_t(i);
        return m;
    }
};

VertexSet closed_neighborhood(const Graph& g, uint32_t v);
DegreeProfile degree_profile(const Graph& g);
VertexSet isolated_vertices(const Graph& g);

Subgraph induced_subgraph(const Graph& g, const VertexSet& s);
Subgraph delete_vertices(const Graph& g, const VertexSet& d);

std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

// Witnesses are lexicographically first under ascending vertex scans.
std::optional<std::array<uint32_t, 3>> has_triangle(const Graph& g);

// A 4-cycle a-b-c-d-a (edges ab, bc, cd, da).
std::optional<std::array<uint32_t, 4>> has_four_cycle(const Graph& g);

// Two distinct 4-cycles sharing an edge. The witness is reported through the
// vertex `pivot` adjacent to three vertices x1,x2,x3 of the two cycles:
// the cycles are pivot-x1-ya-x2-pivot and pivot-x2-yb-x3-pivot, and they
// share the edge pivot-x2.
struct SharedFourCycles {
    uint32_t pivot, x1, x2, x3, ya, yb;
};
std::optional<SharedFourCycles> four_cycles_sharing_edge(const Graph& g);

// graph6 interchange (printable ASCII 63..126, optional >>graph6<< header).
std::string to_graph6(const Graph& g);
Graph parse_graph6(const std::string& text);

// Edge-list text format: one "u v" pair per line, 0-based indices,
// '#' starts a comment, an optional single-integer line declares the
// vertex count (otherwise it is inferred as max index + 1).
Graph parse_edge_list(const std::string& text);
std::string write_edge_list(const Graph& g);

// Disjoint union with vertices of `b` shifted past those of `a`.
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace oddsub
