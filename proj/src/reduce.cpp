#include "oddsub/reduce.hpp"

#include <algorithm>
#include <numeric>

#include <nlohmann/json.hpp>

#include "oddsub/errors.hpp"
#include "oddsub/parity.hpp"

namespace oddsub {

std::string to_string(RuleId r) {
    switch (r) {
        case RuleId::R0_BASE: return "R0_BASE";
        case RuleId::R1_DEG1: return "R1_DEG1";
        case RuleId::R2_DEG2: return "R2_DEG2";
        case RuleId::R3_TRIANGLE: return "R3_TRIANGLE";
        case RuleId::R4_DEG3: return "R4_DEG3";
        case RuleId::R5_C4_SHARED: return "R5_C4_SHARED";
        case RuleId::R6_C4: return "R6_C4";
        case RuleId::R7_4REG_C4FREE: return "R7_4REG_C4FREE";
    }
    throw InternalError("unknown rule id");
}

RuleId rule_from_string(const std::string& s) {
    if (s == "R0_BASE") return RuleId::R0_BASE;
    if (s == "R1_DEG1") return RuleId::R1_DEG1;
    if (s == "R2_DEG2") return RuleId::R2_DEG2;
    if (s == "R3_TRIANGLE") return RuleId::R3_TRIANGLE;
    if (s == "R4_DEG3") return RuleId::R4_DEG3;
    if (s == "R5_C4_SHARED") return RuleId::R5_C4_SHARED;
    if (s == "R6_C4") return RuleId::R6_C4;
    if (s == "R7_4REG_C4FREE") return RuleId::R7_4REG_C4FREE;
    throw ParseError("unknown rule id '" + s + "'", 0);
}

// ---------------------------------------------------------------------------
// case detection

CaseDetection detect_case(const Graph& g) {
    uint32_t n = g.vertex_count();
    if (n <= 7) throw PreconditionError("case detection needs more than 7 vertices");
    DegreeProfile prof = degree_profile(g);
    if (prof.max_degree > 4) throw PreconditionError("max degree exceeds 4");
    if (prof.min_degree == 0) throw PreconditionError("graph has an isolated vertex");

    for (uint32_t d : {1u, 2u}) {
        for (uint32_t v = 0; v < n; ++v) {
            if (prof.degrees[v] != d) continue;
            std::vector<uint32_t> anchor{v};
            auto nb = g.neighbors(v).to_vector();
            anchor.insert(anchor.end(), nb.begin(), nb.end());
            return {d == 1 ? RuleId::R1_DEG1 : RuleId::R2_DEG2, anchor};
        }
    }
    if (auto tri = has_triangle(g))
        return {RuleId::R3_TRIANGLE, {(*tri)[0], (*tri)[1], (*tri)[2]}};
    for (uint32_t v = 0; v < n; ++v) {
        if (prof.degrees[v] != 3) continue;
        std::vector<uint32_t> anchor{v};
        auto nb = g.neighbors(v).to_vector();
        anchor.insert(anchor.end(), nb.begin(), nb.end());
        return {RuleId::R4_DEG3, anchor};
    }
    // now 4-regular and triangle-free
    if (auto sh = four_cycles_sharing_edge(g)) {
        VertexSet rest = g.neighbors(sh->pivot);
        rest.reset(sh->x1);
        rest.reset(sh->x2);
        rest.reset(sh->x3);
        return {RuleId::R5_C4_SHARED,
                {sh->pivot, sh->x1, sh->x2, sh->x3, uint32_t(rest.first())}};
    }
    if (auto c4 = has_four_cycle(g)) {
        auto [a, b, c, d] = *c4;
        VertexSet rest = g.neighbors(a);
        rest.reset(b);
        rest.reset(d);
        auto others = rest.to_vector();
        return {RuleId::R6_C4, {a, b, d, others[0], others[1]}};
    }
    return {RuleId::R7_4REG_C4FREE, [&] {
                std::vector<uint32_t> anchor{0};
                auto nb = g.neighbors(0).to_vector();
                anchor.insert(anchor.end(), nb.begin(), nb.end());
                return anchor;
            }()};
}

// ---------------------------------------------------------------------------
// candidate families

namespace {

VertexSet isolation_closure(const Graph& g, const VertexSet& deleted) {
    VertexSet iso(g.vertex_count());
    VertexSet alive = deleted.complement();
    alive.for_each([&](uint32_t v) {
        if (!g.neighbors(v).intersects(alive)) iso.set(v);
    });
    return iso;
}

class CandidateList {
public:
    explicit CandidateList(const Graph& g) : g_(g) {}

    void add(VertexSet deleted) {
        if (out_.size() >= kMaxCandidatesPerStep) return;
        if (deleted.empty()) return;
        for (const auto& c : out_)
            if (c.deleted == deleted) return;
        VertexSet iso = isolation_closure(g_, deleted);
        out_.push_back({std::move(deleted), std::move(iso)});
    }

    std::vector<DeletionCandidate> take() { return std::move(out_); }

private:
    const Graph& g_;
    std::vector<DeletionCandidate> out_;
};

// Candidates shared by the three 4-regular cases: the union of N(p) with
// three of the x-neighborhoods, then variants that push the deletion one
// neighborhood further out.
void quad_candidates(const Graph& g, const std::vector<uint32_t>& anchor, CandidateList& out) {
    uint32_t n = g.vertex_count();
    uint32_t p = anchor[0];
    std::array<uint32_t, 4> x{anchor[1], anchor[2], anchor[3], anchor[4]};

    auto w_of_triple = [&](int a, int b, int c) {
        VertexSet w = g.neighbors(p);
        w |= g.neighbors(x[size_t(a)]);
        w |= g.neighbors(x[size_t(b)]);
        w |= g.neighbors(x[size_t(c)]);
        w.set(p);
        return w;
    };

    VertexSet w = w_of_triple(0, 1, 2);
    VertexSet i0 = isolation_closure(g, w);
    uint32_t x4 = x[3];

    out.add(w);
    // leave the fourth neighbor in place, taking the isolated set with it
    {
        VertexSet v = w | i0;
        v.reset(x4);
        out.add(v);
    }
    // follow the fourth neighbor's outside edges
    {
        VertexSet outside = g.neighbors(x4) - w;
        outside -= i0;
        outside.for_each([&](uint32_t k) {
            VertexSet v = w;
            v.set(k);
            out.add(v);
            VertexSet v2 = w | g.neighbors(k);
            v2.set(k);
            out.add(v2);
        });
    }
    // spill sets of second-neighborhood pairs
    std::vector<std::pair<VertexSet, VertexSet>> k_exts;  // (deleted, K)
    for (int i = 0; i < 3; ++i) {
        VertexSet ys = g.neighbors(x[size_t(i)]);
        ys.reset(p);
        auto yv = ys.to_vector();
        for (size_t a = 0; a < yv.size(); ++a)
            for (size_t b = a + 1; b < yv.size(); ++b) {
                VertexSet k = g.neighbors(yv[a]) | g.neighbors(yv[b]);
                k -= w;
                k -= i0;
                if (k.any()) {
                    VertexSet v = w | k;
                    out.add(v);
                    k_exts.emplace_back(std::move(v), k);
                }
            }
    }
    for (auto& [del, k] : k_exts)
        k.for_each([&](uint32_t kk) { out.add(del | g.neighbors(kk)); });
    for (int i = 0; i < 3; ++i) {
        VertexSet ys = g.neighbors(x[size_t(i)]);
        ys.reset(p);
        auto yv = ys.to_vector();
        for (size_t a = 0; a < yv.size(); ++a)
            for (size_t b = a + 1; b < yv.size(); ++b)
                out.add(w | g.neighbors(yv[a]) | g.neighbors(yv[b]));
    }
    // remaining triples
    out.add(w_of_triple(0, 1, 3));
    out.add(w_of_triple(0, 2, 3));
    out.add(w_of_triple(1, 2, 3));
    (void)n;
}

// Leave-one-out variants (W u I0) \ {w}, vertices with outside edges first.
void leave_one_out(const Graph& g, const VertexSet& w, const VertexSet& i0, CandidateList& out) {
    VertexSet wi = w | i0;
    auto wv = w.to_vector();
    std::vector<uint32_t> order;
    for (uint32_t v : wv)
        if ((g.neighbors(v) - wi).any()) order.push_back(v);
    for (uint32_t v : wv)
        if (!(g.neighbors(v) - wi).any()) order.push_back(v);
    for (uint32_t v : order) {
        VertexSet d = wi;
        d.reset(v);
        out.add(d);
    }
}

// For every w-vertex with two or more neighbors isolated by the deletion,
// extend the deletion by that vertex's outside neighbors, one at a time.
void spill_extensions(const Graph& g, const VertexSet& w, const VertexSet& i0,
                      CandidateList& out) {
    VertexSet wi = w | i0;
    w.for_each([&](uint32_t u) {
        if (g.neighbors(u).count_and(i0) < 2) return;
        (g.neighbors(u) - wi).for_each([&](uint32_t k) {
            VertexSet d = w;
            d.set(k);
            out.add(d);
        });
    });
}

}  // namespace

std::vector<DeletionCandidate> deletion_candidates(const Graph& g, const CaseDetection& det) {
    CandidateList out(g);
    uint32_t n = g.vertex_count();

    switch (det.rule) {
        case RuleId::R0_BASE:
            out.add(VertexSet::full(n));
            break;

        case RuleId::R1_DEG1: {
            uint32_t p = det.anchor[0], x = det.anchor[1];
            out.add(closed_neighborhood(g, x));
            VertexSet i0 = isolation_closure(g, closed_neighborhood(g, x));
            VertexSet ys = g.neighbors(x);
            ys.reset(p);
            auto yv = ys.to_vector();
            // drop one y (degree 3) or keep one y (degree 4) next to the pivot edge
            for (size_t skip = yv.size(); skip-- > 0;) {
                VertexSet d = i0;
                d.set(p);
                d.set(x);
                for (size_t i = 0; i < yv.size(); ++i)
                    if (i != skip) d.set(yv[i]);
                out.add(d);
            }
            for (uint32_t y : yv) {
                VertexSet d = g.neighbors(x) | g.neighbors(y);
                d.set(x);
                out.add(d);
            }
            for (size_t a = 0; a < yv.size(); ++a)
                for (size_t b = a + 1; b < yv.size(); ++b) {
                    VertexSet d = g.neighbors(x) | g.neighbors(yv[a]) | g.neighbors(yv[b]);
                    d.set(x);
                    out.add(d);
                }
            break;
        }

        case RuleId::R2_DEG2: {
            uint32_t p = det.anchor[0];
            for (size_t i : {size_t(1), size_t(2)}) {
                uint32_t xi = det.anchor[i];
                VertexSet w = g.neighbors(p) | g.neighbors(xi);
                w.set(p);
                out.add(w);
            }
            for (size_t i : {size_t(1), size_t(2)}) {
                uint32_t xi = det.anchor[i];
                VertexSet w = g.neighbors(p) | g.neighbors(xi);
                w.set(p);
                VertexSet i0 = isolation_closure(g, w);
                spill_extensions(g, w, i0, out);
                leave_one_out(g, w, i0, out);
            }
            break;
        }

        case RuleId::R3_TRIANGLE: {
            uint32_t a = det.anchor[0], b = det.anchor[1], c = det.anchor[2];
            std::array<std::pair<uint32_t, uint32_t>, 3> sides{
                std::pair{a, b}, std::pair{a, c}, std::pair{b, c}};
            for (auto [u, v] : sides) out.add(g.neighbors(u) | g.neighbors(v));
            for (auto [u, v] : sides) {
                VertexSet w = g.neighbors(u) | g.neighbors(v);
                VertexSet i0 = isolation_closure(g, w);
                spill_extensions(g, w, i0, out);
                leave_one_out(g, w, i0, out);
            }
            break;
        }

        case RuleId::R4_DEG3: {
            uint32_t p = det.anchor[0];
            for (size_t i : {size_t(1), size_t(2), size_t(3)}) {
                uint32_t xi = det.anchor[i];
                VertexSet w = g.neighbors(p) | g.neighbors(xi);
                w.set(p);
                out.add(w);
            }
            for (size_t i : {size_t(1), size_t(2), size_t(3)}) {
                uint32_t xi = det.anchor[i];
                VertexSet w = g.neighbors(p) | g.neighbors(xi);
                w.set(p);
                VertexSet i0 = isolation_closure(g, w);
                // push past second-neighborhood vertices feeding the isolated set
                w.for_each([&](uint32_t u) {
                    if (g.neighbors(u).count_and(i0) >= 2) out.add(w | g.neighbors(u));
                });
                spill_extensions(g, w, i0, out);
                leave_one_out(g, w, i0, out);
            }
            break;
        }

        case RuleId::R5_C4_SHARED:
        case RuleId::R6_C4:
        case RuleId::R7_4REG_C4FREE:
            quad_candidates(g, det.anchor, out);
            break;
    }
    return out.take();
}

// ---------------------------------------------------------------------------
// patch search

std::optional<VertexSet> patch_search(const Graph& g, const VertexSet& region,
                                      const VertexSet& h_prime, uint32_t required) {
    if (required > kPatchSizeCap)
        throw PreconditionError("required patch size exceeds cap " +
                                std::to_string(kPatchSizeCap));
    if (region.intersects(h_prime))
        throw PreconditionError("patch region overlaps the partial solution");

    std::vector<uint32_t> verts = region.to_vector();
    uint32_t m = uint32_t(verts.size());
    if (m > 32) throw TooLargeError("patch region exceeds 32 vertices");

    std::vector<int32_t> rank(g.vertex_count(), -1);
    for (uint32_t i = 0; i < m; ++i) rank[verts[i]] = int32_t(i);

    // region-local adjacency and parity of each region vertex against h_prime
    std::vector<uint32_t> local(m, 0);
    std::vector<uint32_t> base_parity(m, 0);
    for (uint32_t i = 0; i < m; ++i) {
        const VertexSet& nb = g.neighbors(verts[i]);
        base_parity[i] = nb.parity_and(h_prime);
        (nb & region).for_each([&](uint32_t u) { local[i] |= 1u << rank[u]; });
    }
    // solution vertices with edges into the region must keep odd degree,
    // so each must gain an even number of patch neighbors
    std::vector<uint32_t> boundary;
    h_prime.for_each([&](uint32_t h) {
        uint32_t mask = 0;
        (g.neighbors(h) & region).for_each([&](uint32_t u) { mask |= 1u << rank[u]; });
        if (mask) boundary.push_back(mask);
    });

    uint32_t need_parity = uint32_t(h_prime.count() & 1);  // |P| must match it mod 2
    auto feasible = [&](uint32_t pmask) {
        for (uint32_t rest = pmask; rest;) {
            uint32_t i = uint32_t(std::countr_zero(rest));
            rest &= rest - 1;
            if (((base_parity[i] + std::popcount(local[i] & pmask)) & 1) == 0) return false;
        }
        for (uint32_t b : boundary)
            if (std::popcount(b & pmask) & 1) return false;
        return true;
    };

    for (uint32_t k = required; k <= std::min(kPatchSizeCap, m); ++k) {
        if ((k & 1) != need_parity) continue;  // handshake: total order must be even
        if (k == 0) {
            if (feasible(0)) return VertexSet(g.vertex_count());
            continue;
        }
        std::vector<uint32_t> idx(k);
        std::iota(idx.begin(), idx.end(), 0u);
        while (true) {
            uint32_t pmask = 0;
            for (uint32_t i : idx) pmask |= 1u << i;
            if (feasible(pmask)) {
                VertexSet p(g.vertex_count());
                for (uint32_t i : idx) p.set(verts[i]);
                return p;
            }
            // next combination
            int32_t j = int32_t(k) - 1;
            while (j >= 0 && idx[size_t(j)] == m - k + uint32_t(j)) --j;
            if (j < 0) break;
            ++idx[size_t(j)];
            for (uint32_t t = uint32_t(j) + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// the engine

namespace {

VertexSet lift(const VertexSet& local, const std::vector<uint32_t>& original, uint32_t width) {
    VertexSet s(width);
    local.for_each([&](uint32_t i) { s.set(original[i]); });
    return s;
}

struct Engine {
    uint32_t n0;
    std::vector<ReductionStep> steps;

    VertexSet to_orig_set(const VertexSet& local, const std::vector<uint32_t>& to_orig) {
        VertexSet s(n0);
        local.for_each([&](uint32_t i) { s.set(to_orig[i]); });
        return s;
    }

    // g may be disconnected; no isolated vertices, max degree <= 4
    VertexSet solve_graph(const Graph& g, const std::vector<uint32_t>& to_orig) {
        auto comps = connected_components(g);
        if (comps.size() == 1) return solve_component(g, to_orig);
        VertexSet result(g.vertex_count());
        for (const VertexSet& comp : comps) {
            Subgraph sub = induced_subgraph(g, comp);
            std::vector<uint32_t> sub_orig(sub.original.size());
            for (size_t i = 0; i < sub.original.size(); ++i)
                sub_orig[i] = to_orig[sub.original[i]];
            VertexSet local = solve_component(sub.graph, sub_orig);
            result |= lift(local, sub.original, g.vertex_count());
        }
        return result;
    }

    // g connected with >= 2 vertices
    VertexSet solve_component(const Graph& g, const std::vector<uint32_t>& to_orig) {
        uint32_t n = g.vertex_count();
        if (n <= 7) {
            uint32_t u = 0;
            uint32_t v = uint32_t(g.neighbors(0).first());
            VertexSet s(n);
            s.set(u);
            s.set(v);
            steps.push_back({RuleId::R0_BASE,
                             {to_orig[u], to_orig[v]},
                             to_orig_set(VertexSet::full(n), to_orig),
                             VertexSet(n0),
                             to_orig_set(s, to_orig)});
            return s;
        }

        CaseDetection det = detect_case(g);
        for (const DeletionCandidate& cand : deletion_candidates(g, det)) {
            VertexSet removed = cand.deleted | cand.isolated;
            size_t r = removed.count();
            uint32_t required = uint32_t((2 * r + 6) / 7);
            if (required > kPatchSizeCap) continue;

            Subgraph rest = delete_vertices(g, removed);
            if (isolated_vertices(rest.graph).any())
                throw InternalError("isolation closure missed a vertex");
            std::vector<uint32_t> rest_orig(rest.original.size());
            for (size_t i = 0; i < rest.original.size(); ++i)
                rest_orig[i] = to_orig[rest.original[i]];

            size_t mark = steps.size();
            ReductionStep step{det.rule, {}, VertexSet(n0), VertexSet(n0), VertexSet(n0)};
            step.anchor.reserve(det.anchor.size());
            for (uint32_t a : det.anchor) step.anchor.push_back(to_orig[a]);
            step.deleted = to_orig_set(cand.deleted, to_orig);
            step.isolated_removed = to_orig_set(cand.isolated, to_orig);
            steps.push_back(std::move(step));

            VertexSet h_rest = solve_graph(rest.graph, rest_orig);
            VertexSet h_local = lift(h_rest, rest.original, n);
            if (auto p = patch_search(g, removed, h_local, required)) {
                steps[mark].patch = to_orig_set(*p, to_orig);
                return h_local | *p;
            }
            steps.erase(steps.begin() + long(mark), steps.end());  // roll back
        }

        // Fallback: solve small leftovers exactly; anything else is a gap.
        if (n <= 24) {
            SolveResult r = max_odd_induced_exact(g);
            if (r.optimal && 7 * uint64_t(r.optimum) >= 2 * uint64_t(n)) {
                steps.push_back({RuleId::R0_BASE,
                                 {to_orig[uint32_t(r.witness.first())]},
                                 to_orig_set(VertexSet::full(n), to_orig),
                                 VertexSet(n0),
                                 to_orig_set(r.witness, to_orig)});
                return r.witness;
            }
        }
        throw ProofGapError(to_graph6(g));
    }
};

}  // namespace

ReductionTrace construct_odd_subgraph(const Graph& g) {
    uint32_t n = g.vertex_count();
    if (n == 0) throw PreconditionError("empty graph");
    VertexSet iso = isolated_vertices(g);
    if (iso.any())
        throw PreconditionError("graph has isolated vertex " + std::to_string(iso.first()));
    DegreeProfile prof = degree_profile(g);
    if (prof.max_degree > 4)
        throw PreconditionError("max degree " + std::to_string(prof.max_degree) + " exceeds 4");

    Engine eng;
    eng.n0 = n;
    std::vector<uint32_t> identity(n);
    std::iota(identity.begin(), identity.end(), 0u);
    VertexSet final_set = eng.solve_graph(g, identity);

    ReductionTrace t;
    t.input_n = n;
    t.steps = std::move(eng.steps);
    t.final_set = std::move(final_set);
    if (!is_odd_set(g, t.final_set) || 7 * t.final_set.count() < 2 * uint64_t(n))
        throw InternalError("constructed set fails its own contract");
    return t;
}

// ---------------------------------------------------------------------------
// replay

namespace {

VertexSet component_within(const Graph& g, const VertexSet& active, uint32_t start) {
    VertexSet comp(g.vertex_count());
    VertexSet frontier(g.vertex_count());
    frontier.set(start);
    while (frontier.any()) {
        comp |= frontier;
        VertexSet next(g.vertex_count());
        frontier.for_each([&](uint32_t u) { next |= g.neighbors(u); });
        next &= active;
        next -= comp;
        frontier = std::move(next);
    }
    return comp;
}

ReplayResult fail(size_t step, std::string reason) { return {false, step, std::move(reason)}; }

}  // namespace

ReplayResult replay_trace(const Graph& g, const ReductionTrace& t) {
    uint32_t n = g.vertex_count();
    if (t.input_n != n) return fail(size_t(-1), "input size mismatch");
    if (t.final_set.width() != n) return fail(size_t(-1), "final set width mismatch");

    VertexSet active = VertexSet::full(n);
    VertexSet patches(n);
    for (size_t i = 0; i < t.steps.size(); ++i) {
        const ReductionStep& s = t.steps[i];
        if (s.deleted.width() != n || s.isolated_removed.width() != n || s.patch.width() != n)
            return fail(i, "set width mismatch");
        if (!s.deleted.is_subset_of(active)) return fail(i, "deleted set not active");
        VertexSet removed = s.deleted | s.isolated_removed;
        if (removed.empty()) return fail(i, "step removes nothing");

        VertexSet after = active - s.deleted;
        VertexSet expect_iso(n);
        after.for_each([&](uint32_t v) {
            if (!g.neighbors(v).intersects(after)) expect_iso.set(v);
        });
        if (s.isolated_removed != expect_iso) return fail(i, "isolation closure mismatch");

        if (!s.patch.is_subset_of(removed)) return fail(i, "patch outside removed region");
        if (7 * s.patch.count() < 2 * removed.count()) return fail(i, "step arithmetic violated");

        if (s.anchor.empty() || s.anchor[0] >= n || !active.test(s.anchor[0]))
            return fail(i, "anchor not active");
        VertexSet comp = component_within(g, active, s.anchor[0]);
        if (!removed.is_subset_of(comp)) return fail(i, "removal crosses components");
        if (!is_odd_set(g, t.final_set & comp)) return fail(i, "component certificate not odd");

        active -= removed;
        patches |= s.patch;
    }
    if (active.any()) return fail(size_t(-1), "vertices left unprocessed");
    if (patches != t.final_set) return fail(size_t(-1), "final set is not the patch union");
    if (!is_odd_set(g, t.final_set)) return fail(size_t(-1), "final set not odd");
    if (7 * t.final_set.count() < 2 * uint64_t(n)) return fail(size_t(-1), "final bound violated");
    return {};
}

// ---------------------------------------------------------------------------
// trace JSON

static nlohmann::json set_to_json(const VertexSet& s) {
    nlohmann::json arr = nlohmann::json::array();
    s.for_each([&](uint32_t v) { arr.push_back(v); });
    return arr;
}

static VertexSet set_from_json(const nlohmann::json& arr, uint32_t width) {
    VertexSet s(width);
    for (const auto& v : arr) s.set(v.get<uint32_t>());
    return s;
}

nlohmann::json ReductionTrace::to_json() const {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["input_n"] = input_n;
    j["final_set"] = set_to_json(final_set);
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& s : steps) {
        nlohmann::json js;
        js["rule"] = to_string(s.rule);
        js["anchor"] = s.anchor;
        js["deleted"] = set_to_json(s.deleted);
        js["isolated_removed"] = set_to_json(s.isolated_removed);
        js["patch"] = set_to_json(s.patch);
        arr.push_back(std::move(js));
    }
    j["steps"] = std::move(arr);
    return j;
}

ReductionTrace ReductionTrace::from_json(const nlohmann::json& j) {
    ReductionTrace t;
    t.input_n = j.at("input_n").get<uint32_t>();
    t.final_set = set_from_json(j.at("final_set"), t.input_n);
    for (const auto& js : j.at("steps")) {
        ReductionStep s{rule_from_string(js.at("rule").get<std::string>()),
                        js.at("anchor").get<std::vector<uint32_t>>(),
                        set_from_json(js.at("deleted"), t.input_n),
                        set_from_json(js.at("isolated_removed"), t.input_n),
                        set_from_json(js.at("patch"), t.input_n)};
        t.steps.push_back(std::move(s));
    }
    return t;
}

}  // namespace oddsub
