#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "oddsub/graph.hpp"

namespace oddsub {

inline constexpr uint32_t kEnumMaxN = 8;

// Streams every labeled graph on n vertices with max degree <= max_degree
// and no isolated vertices, exactly once, as edge-subset bit masks over the
// lexicographic pair list (0,1),(0,2),..,(n-2,n-1). Degree caps prune during
// construction; a vertex passing its last incident pair at degree zero cuts
// the branch. Order is the depth-first order of those decisions, stable
// across runs.
class BoundedGraphStream {
public:
    BoundedGraphStream(uint32_t n, uint32_t max_degree);

    std::optional<uint64_t> next();

    uint32_t vertex_count() const { return n_; }

    static Graph graph_from_mask(uint32_t n, uint64_t mask);
    static uint64_t count(uint32_t n, uint32_t max_degree);

private:
    struct Frame {
        uint32_t t;
        uint8_t stage;
        bool took_include;
    };

    uint32_t n_, cap_, npairs_;
    std::vector<std::pair<uint32_t, uint32_t>> pairs_;
    std::vector<uint32_t> last_pair_;
    std::vector<uint32_t> deg_;
    std::vector<Frame> stack_;
    uint64_t mask_ = 0;
};

}  // namespace oddsub
