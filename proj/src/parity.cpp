#include "oddsub/parity.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "oddsub/errors.hpp"

namespace oddsub {

bool is_odd_set(const Graph& g, const VertexSet& s) {
    int v = s.first();
    while (v >= 0) {
        if (g.neighbors(uint32_t(v)).parity_and(s) == 0) return false;
        v = s.next(uint32_t(v));
    }
    return true;
}

bool is_even_set(const Graph& g, const VertexSet& s) {
    int v = s.first();
    while (v >= 0) {
        if (g.neighbors(uint32_t(v)).parity_and(s) != 0) return false;
        v = s.next(uint32_t(v));
    }
    return true;
}

namespace {

// Branch and bound over one connected component. Vertices are branched in
// descending-degree order (ties by index); the in-branch is explored first
// and only strict improvements replace the incumbent, so the witness is the
// first optimum found under that fixed order.
//
// in_parity_[x] tracks the parity of x's IN neighbors for every vertex at
// all times; undecided_nbrs_[x] the number of undecided neighbors. An IN
// vertex whose parity is even with no undecided neighbors left can never
// reach odd degree, so such branches are cut immediately.
class ComponentSolver {
public:
    ComponentSolver(const Graph& g, uint64_t budget, uint64_t& nodes)
        : g_(g), n_(g.vertex_count()), budget_(budget), nodes_(nodes) {
        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), 0u);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](uint32_t a, uint32_t b) { return g.degree(a) > g.degree(b); });
        nbrs_.resize(n_);
        for (uint32_t v = 0; v < n_; ++v) nbrs_[v] = g.neighbors(v).to_vector();
        status_.assign(n_, UNDECIDED);
        in_parity_.assign(n_, 0);
        undecided_nbrs_.resize(n_);
        for (uint32_t v = 0; v < n_; ++v) undecided_nbrs_[v] = uint32_t(nbrs_[v].size());
        best_set_ = VertexSet(n_);
        cur_set_ = VertexSet(n_);
    }

    // Returns false if the node budget was exhausted.
    bool run() {
        dfs(0, 0);
        return !budget_hit_;
    }

    uint32_t best() const { return best_; }
    const VertexSet& witness() const { return best_set_; }

private:
    enum Status : uint8_t { UNDECIDED, IN, OUT };

    bool stuck(uint32_t v) const {
        return status_[v] == IN && in_parity_[v] == 0 && undecided_nbrs_[v] == 0;
    }

    // Returns the number of vertices made stuck by the move; the caller only
    // descends when it is zero, so stuck vertices never accumulate.
    uint32_t assign(uint32_t v, Status st) {
        status_[v] = st;
        uint32_t made_stuck = 0;
        for (uint32_t u : nbrs_[v]) {
            --undecided_nbrs_[u];
            if (st == IN) in_parity_[u] ^= 1;
            if (stuck(u)) ++made_stuck;
        }
        if (st == IN) {
            cur_set_.set(v);
            if (stuck(v)) ++made_stuck;
        }
        return made_stuck;
    }

    void unassign(uint32_t v, Status st) {
        if (st == IN) cur_set_.reset(v);
        status_[v] = UNDECIDED;
        for (uint32_t u : nbrs_[v]) {
            ++undecided_nbrs_[u];
            if (st == IN) in_parity_[u] ^= 1;
        }
    }

    void dfs(uint32_t depth, uint32_t in_count) {
        if (++nodes_ > budget_) {
            budget_hit_ = true;
            return;
        }
        if (in_count + (n_ - depth) <= best_) return;
        if (depth == n_) {
            best_ = in_count;
            best_set_ = cur_set_;
            return;
        }
        uint32_t v = order_[depth];
        for (Status st : {IN, OUT}) {
            if (assign(v, st) == 0) dfs(depth + 1, in_count + (st == IN ? 1 : 0));
            unassign(v, st);
            if (budget_hit_) return;
        }
    }

    const Graph& g_;
    uint32_t n_;
    uint64_t budget_;
    uint64_t& nodes_;  // cumulative across components; budget_ is absolute
    bool budget_hit_ = false;

    std::vector<uint32_t> order_;
    std::vector<std::vector<uint32_t>> nbrs_;
    std::vector<Status> status_;
    std::vector<uint8_t> in_parity_;
    std::vector<uint32_t> undecided_nbrs_;
    uint32_t best_ = 0;
    VertexSet best_set_, cur_set_;
};

}  // namespace

SolveResult max_odd_induced_exact(const Graph& g, uint64_t node_budget) {
    auto t0 = std::chrono::steady_clock::now();
    SolveResult r;
    r.witness = VertexSet(g.vertex_count());
    for (const VertexSet& comp : connected_components(g)) {
        if (comp.count() == 1) continue;  // isolated vertex contributes nothing
        Subgraph sub = induced_subgraph(g, comp);
        ComponentSolver solver(sub.graph, node_budget, r.nodes_explored);
        if (!solver.run()) r.optimal = false;
        r.optimum += solver.best();
        solver.witness().for_each([&](uint32_t i) { r.witness.set(sub.original[i]); });
        if (!r.optimal) break;
    }
    r.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

OddSetEnumerator::OddSetEnumerator(const Graph& g) : n_(g.vertex_count()) {
    if (n_ > kEnumerateCap)
        throw TooLargeError("enumeration over " + std::to_string(n_) + " vertices exceeds cap " +
                            std::to_string(kEnumerateCap));
    rows_.resize(n_);
    for (uint32_t v = 0; v < n_; ++v) {
        uint32_t row = 0;
        g.neighbors(v).for_each([&](uint32_t u) { row |= 1u << u; });
        rows_[v] = row;
    }
}

std::optional<VertexSet> OddSetEnumerator::next() {
    while (!done_) {
        uint32_t m = mask_;
        if (mask_ == (1u << n_) - 1)
            done_ = true;
        else
            ++mask_;
        bool odd = true;
        uint32_t rest = m;
        while (rest) {
            uint32_t v = uint32_t(std::countr_zero(rest));
            rest &= rest - 1;
            if ((std::popcount(rows_[v] & m) & 1) == 0) {
                odd = false;
                break;
            }
        }
        if (odd) {
            VertexSet s(n_);
            uint32_t bits = m;
            while (bits) {
                s.set(uint32_t(std::countr_zero(bits)));
                bits &= bits - 1;
            }
            return s;
        }
    }
    return std::nullopt;
}

bool verify_bound(const Graph& g, uint32_t numerator, uint32_t denominator,
                  uint64_t node_budget) {
    if (denominator == 0) throw PreconditionError("zero denominator");
    VertexSet iso = isolated_vertices(g);
    if (iso.any())
        throw PreconditionError("graph has isolated vertex " + std::to_string(iso.first()));
    SolveResult r = max_odd_induced_exact(g, node_budget);
    if (!r.optimal) throw InfeasibleError("node budget exhausted while verifying bound");
    return uint64_t(denominator) * r.optimum >= uint64_t(numerator) * g.vertex_count();
}

}  // namespace oddsub
