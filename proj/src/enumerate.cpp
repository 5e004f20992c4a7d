#include "oddsub/enumerate.hpp"

#include "oddsub/errors.hpp"

namespace oddsub {

BoundedGraphStream::BoundedGraphStream(uint32_t n, uint32_t max_degree) : n_(n), cap_(max_degree) {
    if (n > kEnumMaxN)
        throw TooLargeError("exhaustive enumeration capped at n = " + std::to_string(kEnumMaxN));
    for (uint32_t u = 0; u < n; ++u)
        for (uint32_t v = u + 1; v < n; ++v) pairs_.emplace_back(u, v);
    npairs_ = uint32_t(pairs_.size());
    last_pair_.assign(n, 0);
    for (uint32_t t = 0; t < npairs_; ++t) {
        last_pair_[pairs_[t].first] = t;
        last_pair_[pairs_[t].second] = t;
    }
    deg_.assign(n, 0);
    if (n >= 2) stack_.push_back({0, 0, false});
    // n < 2 admits no graph without isolated vertices (n = 0 has none either,
    // but the empty graph carries no instance to check)
}

std::optional<uint64_t> BoundedGraphStream::next() {
    while (!stack_.empty()) {
        Frame& f = stack_.back();
        if (f.t == npairs_) {
            uint64_t r = mask_;
            stack_.pop_back();
            return r;
        }
        auto [u, v] = pairs_[f.t];
        if (f.stage == 0) {
            f.stage = 1;
            bool u_ok = deg_[u] > 0 || last_pair_[u] > f.t;
            bool v_ok = deg_[v] > 0 || last_pair_[v] > f.t;
            if (u_ok && v_ok) stack_.push_back({f.t + 1, 0, false});
            continue;
        }
        if (f.stage == 1) {
            f.stage = 2;
            if (deg_[u] < cap_ && deg_[v] < cap_) {
                mask_ |= uint64_t{1} << f.t;
                ++deg_[u];
                ++deg_[v];
                f.took_include = true;
                stack_.push_back({f.t + 1, 0, false});
            }
            continue;
        }
        if (f.took_include) {
            mask_ &= ~(uint64_t{1} << f.t);
            --deg_[u];
            --deg_[v];
        }
        stack_.pop_back();
    }
    return std::nullopt;
}

Graph BoundedGraphStream::graph_from_mask(uint32_t n, uint64_t mask) {
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    uint32_t t = 0;
    for (uint32_t u = 0; u < n; ++u)
        for (uint32_t v = u + 1; v < n; ++v, ++t)
            if (mask >> t & 1) edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

uint64_t BoundedGraphStream::count(uint32_t n, uint32_t max_degree) {
    BoundedGraphStream s(n, max_degree);
    uint64_t c = 0;
    while (s.next()) ++c;
    return c;
}

}  // namespace oddsub
