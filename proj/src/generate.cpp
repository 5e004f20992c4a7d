#include "oddsub/generate.hpp"

#include <algorithm>
#include <set>

#include <nlohmann/json.hpp>

#include "oddsub/errors.hpp"
#include "oddsub/rng.hpp"

namespace oddsub {

Graph k7_minus_hamilton() {
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    for (uint32_t i = 0; i < 7; ++i)
        for (uint32_t j = i + 1; j < 7; ++j)
            if (j - i != 1 && !(i == 0 && j == 6)) edges.emplace_back(i, j);
    return Graph::from_edge_list(7, edges, "k7_minus_hamilton");
}

Graph disjoint_copies(const Graph& base, uint32_t k) {
    if (k < 1) throw InfeasibleError("need at least one copy");
    Graph g = base;
    for (uint32_t i = 1; i < k; ++i) g = disjoint_union(g, base);
    return g;
}

static std::vector<std::pair<uint32_t, uint32_t>> all_pairs(uint32_t n) {
    std::vector<std::pair<uint32_t, uint32_t>> pairs;
    pairs.reserve(size_t(n) * (n - 1) / 2);
    for (uint32_t u = 0; u < n; ++u)
        for (uint32_t v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    return pairs;
}

Graph random_max_degree(uint32_t n, uint32_t max_degree, double edge_prob, uint64_t seed) {
    if (n < 2) throw InfeasibleError("need at least two vertices");
    for (uint32_t attempt = 0; attempt < 100; ++attempt) {
        SplitMix64 rng(derive_seed(seed, attempt));
        auto pairs = all_pairs(n);
        rng.shuffle(pairs);
        std::vector<uint32_t> deg(n, 0);
        std::vector<std::pair<uint32_t, uint32_t>> edges;
        for (auto [u, v] : pairs) {
            if (deg[u] < max_degree && deg[v] < max_degree && rng.coin(edge_prob)) {
                edges.emplace_back(u, v);
                ++deg[u];
                ++deg[v];
            }
        }
        bool ok = true;
        for (uint32_t v = 0; v < n && ok; ++v) {
            if (deg[v] > 0) continue;
            uint32_t partner = n;
            for (uint32_t u = 0; u < n; ++u)
                if (u != v && deg[u] < max_degree) {
                    partner = u;
                    break;
                }
            if (partner == n) {
                ok = false;
            } else {
                edges.emplace_back(std::min(v, partner), std::max(v, partner));
                ++deg[v];
                ++deg[partner];
            }
        }
        if (ok) return Graph::from_edge_list(n, edges);
    }
    throw InfeasibleError("could not satisfy degree constraints after 100 attempts");
}

Graph random_regular(uint32_t n, uint32_t d, uint64_t seed) {
    if (d >= n) throw InfeasibleError("degree must be below vertex count");
    if (uint64_t(n) * d % 2 != 0) throw InfeasibleError("n*d must be even");
    if (d == 0) throw InfeasibleError("0-regular graphs are all-isolated");
    for (uint32_t attempt = 0; attempt < 1000; ++attempt) {
        SplitMix64 rng(derive_seed(seed, attempt));
        std::vector<uint32_t> stubs;
        stubs.reserve(size_t(n) * d);
        for (uint32_t v = 0; v < n; ++v)
            for (uint32_t i = 0; i < d; ++i) stubs.push_back(v);
        rng.shuffle(stubs);
        std::set<std::pair<uint32_t, uint32_t>> seen;
        bool ok = true;
        for (size_t i = 0; i + 1 < stubs.size() && ok; i += 2) {
            uint32_t u = stubs[i], v = stubs[i + 1];
            if (u == v) ok = false;
            else if (!seen.emplace(std::min(u, v), std::max(u, v)).second) ok = false;
        }
        if (ok)
            return Graph::from_edge_list(
                n, std::vector<std::pair<uint32_t, uint32_t>>(seen.begin(), seen.end()));
    }
    throw InfeasibleError("configuration model failed after 1000 attempts");
}

Graph random_tree(uint32_t n, uint64_t seed) {
    if (n < 1) throw InfeasibleError("tree needs at least one vertex");
    if (n == 1) return Graph(1);
    if (n == 2) return Graph::from_edge_list(2, {{0, 1}});
    SplitMix64 rng(seed);
    std::vector<uint32_t> pruefer(n - 2);
    for (auto& x : pruefer) x = uint32_t(rng.next_below(n));

    std::vector<uint32_t> deg(n, 1);
    for (uint32_t x : pruefer) ++deg[x];
    std::set<uint32_t> leaves;
    for (uint32_t v = 0; v < n; ++v)
        if (deg[v] == 1) leaves.insert(v);

    std::vector<std::pair<uint32_t, uint32_t>> edges;
    for (uint32_t x : pruefer) {
        uint32_t leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
        if (--deg[x] == 1) leaves.insert(x);
    }
    uint32_t a = *leaves.begin(), b = *std::next(leaves.begin());
    edges.emplace_back(std::min(a, b), std::max(a, b));
    return Graph::from_edge_list(n, edges);
}

Graph path_graph(uint32_t n) {
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    for (uint32_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edge_list(n, edges);
}

Graph cycle_graph(uint32_t n) {
    if (n < 3) throw InfeasibleError("cycle needs at least three vertices");
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    for (uint32_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(0, n - 1);
    return Graph::from_edge_list(n, edges);
}

Graph complete_graph(uint32_t n) { return Graph::from_edge_list(n, all_pairs(n)); }

Graph star_graph(uint32_t n) {
    if (n < 1) throw InfeasibleError("star needs at least one vertex");
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    for (uint32_t i = 1; i < n; ++i) edges.emplace_back(0, i);
    return Graph::from_edge_list(n, edges);
}

std::string to_string(GenFamily f) {
    switch (f) {
        case GenFamily::K7MinusHamilton: return "k7_minus_hamilton";
        case GenFamily::DisjointCopies: return "disjoint_copies";
        case GenFamily::RandomMaxDegree: return "random_max_degree";
        case GenFamily::RandomRegular: return "random_regular";
        case GenFamily::RandomTree: return "random_tree";
        case GenFamily::Path: return "path";
        case GenFamily::Cycle: return "cycle";
        case GenFamily::Complete: return "complete";
        case GenFamily::Star: return "star";
    }
    throw InternalError("unknown family");
}

GenFamily gen_family_from_string(const std::string& s) {
    if (s == "k7_minus_hamilton") return GenFamily::K7MinusHamilton;
    if (s == "disjoint_copies") return GenFamily::DisjointCopies;
    if (s == "random_max_degree") return GenFamily::RandomMaxDegree;
    if (s == "random_regular") return GenFamily::RandomRegular;
    if (s == "random_tree") return GenFamily::RandomTree;
    if (s == "path") return GenFamily::Path;
    if (s == "cycle") return GenFamily::Cycle;
    if (s == "complete") return GenFamily::Complete;
    if (s == "star") return GenFamily::Star;
    throw ParseError("unknown generator family '" + s + "'", 0);
}

nlohmann::json GenSpec::to_json() const {
    nlohmann::json j;
    j["family"] = to_string(family);
    j["seed"] = seed;
    switch (family) {
        case GenFamily::K7MinusHamilton: break;
        case GenFamily::DisjointCopies:
            j["k"] = copies;
            j["base"] = base ? base->to_json() : nlohmann::json(nullptr);
            break;
        case GenFamily::RandomMaxDegree:
            j["n"] = n;
            j["max_degree"] = max_degree;
            j["edge_prob"] = edge_prob;
            break;
        case GenFamily::RandomRegular:
            j["n"] = n;
            j["d"] = d;
            break;
        case GenFamily::RandomTree:
        case GenFamily::Path:
        case GenFamily::Cycle:
        case GenFamily::Complete:
        case GenFamily::Star:
            j["n"] = n;
            break;
    }
    return j;
}

GenSpec GenSpec::from_json(const nlohmann::json& j) {
    GenSpec s;
    s.family = gen_family_from_string(j.at("family").get<std::string>());
    s.seed = j.value("seed", uint64_t{0});
    s.n = j.value("n", uint32_t{0});
    s.max_degree = j.value("max_degree", uint32_t{4});
    s.edge_prob = j.value("edge_prob", 0.5);
    s.d = j.value("d", uint32_t{3});
    s.copies = j.value("k", uint32_t{1});
    if (j.contains("base") && !j.at("base").is_null())
        s.base = std::make_shared<GenSpec>(from_json(j.at("base")));
    return s;
}

Graph generate(const GenSpec& spec, uint64_t seed) {
    switch (spec.family) {
        case GenFamily::K7MinusHamilton: return k7_minus_hamilton();
        case GenFamily::DisjointCopies: {
            Graph base = spec.base ? generate(*spec.base, seed) : k7_minus_hamilton();
            return disjoint_copies(base, spec.copies);
        }
        case GenFamily::RandomMaxDegree:
            return random_max_degree(spec.n, spec.max_degree, spec.edge_prob, seed);
        case GenFamily::RandomRegular: return random_regular(spec.n, spec.d, seed);
        case GenFamily::RandomTree: return random_tree(spec.n, seed);
        case GenFamily::Path: return path_graph(spec.n);
        case GenFamily::Cycle: return cycle_graph(spec.n);
        case GenFamily::Complete: return complete_graph(spec.n);
        case GenFamily::Star: return star_graph(spec.n);
    }
    throw InternalError("unknown family");
}

Graph generate(const GenSpec& spec) { return generate(spec, spec.seed); }

}  // namespace oddsub
