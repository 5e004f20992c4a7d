#include "oddsub/graph.hpp"

#include <algorithm>
#include <sstream>

#include "oddsub/errors.hpp"

namespace oddsub {

Graph::Graph(uint32_t n) : n_(n) {
    if (n > kMaxVertices)
        throw TooLargeError("vertex count " + std::to_string(n) + " exceeds cap " +
                            std::to_string(kMaxVertices));
    adj_.assign(n, VertexSet(n));
}

void Graph::add_edge_internal(uint32_t u, uint32_t v) {
    adj_[u].set(v);
    adj_[v].set(u);
}

const VertexSet& Graph::neighbors(uint32_t v) const {
    if (v >= n_) throw IndexOutOfRangeError("vertex " + std::to_string(v) + " out of range");
    return adj_[v];
}

uint32_t Graph::degree(uint32_t v) const { return uint32_t(neighbors(v).count()); }

bool Graph::has_edge(uint32_t u, uint32_t v) const {
    if (u >= n_ || v >= n_) throw IndexOutOfRangeError("vertex index out of range");
    return adj_[u].test(v);
}

size_t Graph::edge_count() const {
    size_t s = 0;
    for (uint32_t v = 0; v < n_; ++v) s += adj_[v].count();
    return s / 2;
}

void Graph::check_invariants() const {
    size_t degree_sum = 0;
    for (uint32_t v = 0; v < n_; ++v) {
        if (adj_[v].test(v)) throw InternalError("loop at vertex " + std::to_string(v));
        degree_sum += adj_[v].count();
        int u = adj_[v].first();
        while (u >= 0) {
            if (!adj_[uint32_t(u)].test(v))
                throw InternalError("asymmetric adjacency " + std::to_string(v) + "," +
                                    std::to_string(u));
            u = adj_[v].next(uint32_t(u));
        }
    }
    if (degree_sum % 2 != 0) throw InternalError("odd degree sum");
}

Graph Graph::from_edge_list(uint32_t n, const std::vector<std::pair<uint32_t, uint32_t>>& edges,
                            std::string label) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u == v) throw InvalidEdgeError("loop edge " + std::to_string(u));
        if (u >= n || v >= n)
            throw IndexOutOfRangeError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                       ") exceeds vertex count " + std::to_string(n));
        g.add_edge_internal(u, v);  // duplicates collapse in the bit rows
    }
    g.label_ = std::move(label);
    g.check_invariants();
    return g;
}

Graph graph_from_rows(uint32_t n, std::vector<VertexSet> rows, std::string label) {
    Graph g(n);
    g.adj_ = std::move(rows);
    g.label_ = std::move(label);
    g.check_invariants();
    return g;
}

VertexSet closed_neighborhood(const Graph& g, uint32_t v) {
    VertexSet s = g.neighbors(v);
    s.set(v);
    return s;
}

DegreeProfile degree_profile(const Graph& g) {
    DegreeProfile p;
    uint32_t n = g.vertex_count();
    p.degrees.resize(n);
    for (uint32_t v = 0; v < n; ++v) p.degrees[v] = g.degree(v);
    if (n == 0) {
        p.min_degree = p.max_degree = 0;
        p.is_regular = true;
    } else {
        auto [mn, mx] = std::minmax_element(p.degrees.begin(), p.degrees.end());
        p.min_degree = *mn;
        p.max_degree = *mx;
        p.is_regular = (*mn == *mx);
    }
    return p;
}

VertexSet isolated_vertices(const Graph& g) {
    VertexSet s(g.vertex_count());
    for (uint32_t v = 0; v < g.vertex_count(); ++v)
        if (g.neighbors(v).empty()) s.set(v);
    return s;
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    uint32_t n = g.vertex_count();
    std::vector<uint32_t> keep = s.to_vector();
    std::vector<int32_t> rank(n, -1);
    for (uint32_t i = 0; i < keep.size(); ++i) rank[keep[i]] = int32_t(i);

    uint32_t m = uint32_t(keep.size());
    std::vector<VertexSet> rows(m, VertexSet(m));
    for (uint32_t i = 0; i < m; ++i) {
        VertexSet row = g.neighbors(keep[i]);
        row &= s;
        row.for_each([&](uint32_t old) { rows[i].set(uint32_t(rank[old])); });
    }
    return Subgraph{graph_from_rows(m, std::move(rows), g.label()), std::move(keep)};
}

Subgraph delete_vertices(const Graph& g, const VertexSet& d) {
    return induced_subgraph(g, d.complement());
}

std::vector<VertexSet> connected_components(const Graph& g) {
    uint32_t n = g.vertex_count();
    std::vector<VertexSet> comps;
    VertexSet unseen = VertexSet::full(n);
    int v;
    while ((v = unseen.first()) >= 0) {
        VertexSet comp(n);
        VertexSet frontier(n);
        frontier.set(uint32_t(v));
        while (frontier.any()) {
            comp |= frontier;
            VertexSet next(n);
            frontier.for_each([&](uint32_t u) { next |= g.neighbors(u); });
            next -= comp;
            frontier = std::move(next);
        }
        unseen -= comp;
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

std::optional<std::array<uint32_t, 3>> has_triangle(const Graph& g) {
    uint32_t n = g.vertex_count();
    for (uint32_t a = 0; a < n; ++a) {
        int b = g.neighbors(a).next(a);
        while (b >= 0) {
            VertexSet common = g.neighbors(a) & g.neighbors(uint32_t(b));
            int c = common.next(uint32_t(b));
            if (c >= 0) return std::array<uint32_t, 3>{a, uint32_t(b), uint32_t(c)};
            b = g.neighbors(a).next(uint32_t(b));
        }
    }
    return std::nullopt;
}

std::optional<std::array<uint32_t, 4>> has_four_cycle(const Graph& g) {
    // cycle a-b-c-d-a found as two common neighbors b,d of a nonordered pair (a,c)
    uint32_t n = g.vertex_count();
    for (uint32_t a = 0; a < n; ++a) {
        const VertexSet& na = g.neighbors(a);
        int b = na.first();
        while (b >= 0) {
            int d = na.next(uint32_t(b));
            while (d >= 0) {
                VertexSet common = g.neighbors(uint32_t(b)) & g.neighbors(uint32_t(d));
                common.reset(a);
                int c = common.first();
                if (c >= 0)
                    return std::array<uint32_t, 4>{a, uint32_t(b), uint32_t(c), uint32_t(d)};
                d = na.next(uint32_t(d));
            }
            b = na.next(uint32_t(b));
        }
    }
    return std::nullopt;
}

std::optional<SharedFourCycles> four_cycles_sharing_edge(const Graph& g) {
    // Any two distinct 4-cycles with a common edge contain a vertex p adjacent
    // to three vertices x1,x2,x3 of their union such that the cycles
    // p-x1-ya-x2-p and p-x2-yb-x3-p share the edge p-x2.
    uint32_t n = g.vertex_count();
    for (uint32_t p = 0; p < n; ++p) {
        const VertexSet& np = g.neighbors(p);
        int x2 = np.first();
        while (x2 >= 0) {
            int x1 = np.first();
            while (x1 >= 0) {
                if (x1 == x2) {
                    x1 = np.next(uint32_t(x1));
                    continue;
                }
                VertexSet ca = g.neighbors(uint32_t(x1)) & g.neighbors(uint32_t(x2));
                ca.reset(p);
                int ya = ca.first();
                if (ya >= 0) {
                    int x3 = np.next(uint32_t(x1));
                    while (x3 >= 0) {
                        if (x3 != x2) {
                            VertexSet cb = g.neighbors(uint32_t(x3)) & g.neighbors(uint32_t(x2));
                            cb.reset(p);
                            int yb = cb.first();
                            if (yb >= 0)
                                return SharedFourCycles{p,            uint32_t(x1), uint32_t(x2),
                                                        uint32_t(x3), uint32_t(ya), uint32_t(yb)};
                        }
                        x3 = np.next(uint32_t(x3));
                    }
                }
                x1 = np.next(uint32_t(x1));
            }
            x2 = np.next(uint32_t(x2));
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// graph6

static constexpr uint32_t kG6MaxThreeByte = 258047;  // largest n in the 4-byte header

std::string to_graph6(const Graph& g) {
    uint32_t n = g.vertex_count();
    std::string s;
    if (n <= 62) {
        s.push_back(char(n + 63));
    } else {
        s.push_back(char(126));
        s.push_back(char(63 + ((n >> 12) & 63)));
        s.push_back(char(63 + ((n >> 6) & 63)));
        s.push_back(char(63 + (n & 63)));
    }
    uint32_t buf = 0, bits = 0;
    for (uint32_t j = 1; j < n; ++j) {
        for (uint32_t i = 0; i < j; ++i) {
            buf = (buf << 1) | (g.has_edge(i, j) ? 1u : 0u);
            if (++bits == 6) {
                s.push_back(char(63 + buf));
                buf = 0;
                bits = 0;
            }
        }
    }
    if (bits > 0) s.push_back(char(63 + (buf << (6 - bits))));
    return s;
}

Graph parse_graph6(const std::string& text) {
    std::string_view sv(text);
    size_t base = 0;
    const std::string_view header = ">>graph6<<";
    if (sv.substr(0, header.size()) == header) {
        sv.remove_prefix(header.size());
        base = header.size();
    }
    while (!sv.empty() && (sv.back() == '\n' || sv.back() == '\r')) sv.remove_suffix(1);
    if (sv.empty()) throw ParseError("empty graph6 input", base);

    auto byte_at = [&](size_t i) -> uint32_t {
        if (i >= sv.size()) throw ParseError("truncated graph6 data", base + sv.size());
        unsigned char c = static_cast<unsigned char>(sv[i]);
        if (c < 63 || c > 126) throw ParseError("byte out of printable range", base + i);
        return uint32_t(c) - 63;
    };

    size_t pos = 0;
    uint64_t n;
    if (byte_at(0) == 63) {  // '~'
        if (sv.size() >= 2 && static_cast<unsigned char>(sv[1]) == 126)
            throw ParseError("vertex count exceeds cap " + std::to_string(kMaxVertices), base + 1);
        n = (uint64_t(byte_at(1)) << 12) | (uint64_t(byte_at(2)) << 6) | byte_at(3);
        if (n > kG6MaxThreeByte) throw ParseError("malformed vertex count header", base + 1);
        pos = 4;
    } else {
        n = byte_at(0);
        pos = 1;
    }
    if (n > kMaxVertices)
        throw ParseError("vertex count exceeds cap " + std::to_string(kMaxVertices), base);

    uint64_t nbits = n * (n - 1) / 2;
    size_t nbytes = size_t((nbits + 5) / 6);
    if (sv.size() != pos + nbytes) {
        if (sv.size() < pos + nbytes)
            throw ParseError("truncated graph6 data", base + sv.size());
        throw ParseError("unexpected trailing bytes", base + pos + nbytes);
    }

    std::vector<VertexSet> rows(n, VertexSet(uint32_t(n)));
    uint64_t k = 0;
    uint32_t cur = 0, have = 0;
    for (uint32_t j = 1; j < n; ++j) {
        for (uint32_t i = 0; i < j; ++i, ++k) {
            if (have == 0) {
                cur = byte_at(pos++);
                have = 6;
            }
            if ((cur >> (have - 1)) & 1) {
                rows[i].set(j);
                rows[j].set(i);
            }
            --have;
        }
    }
    // padding bits must be zero
    if (have > 0 && (cur & ((1u << have) - 1)))
        throw ParseError("nonzero padding bits", base + pos - 1);
    return graph_from_rows(uint32_t(n), std::move(rows));
}

// ---------------------------------------------------------------------------
// edge-list text

Graph parse_edge_list(const std::string& text) {
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    std::optional<uint32_t> declared;
    uint32_t max_index = 0;
    bool saw_vertex = false;

    std::istringstream in(text);
    std::string line;
    size_t lineno = 0;
    size_t consumed = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t line_start = consumed;
        consumed += line.size() + 1;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        long long a, b;
        if (!(ls >> a)) continue;  // blank
        if (a < 0) throw ParseError("negative vertex index on line " + std::to_string(lineno),
                                    line_start);
        if (ls >> b) {
            if (b < 0)
                throw ParseError("negative vertex index on line " + std::to_string(lineno),
                                 line_start);
            long long extra;
            if (ls >> extra)
                throw ParseError("expected 'u v' on line " + std::to_string(lineno), line_start);
            edges.emplace_back(uint32_t(a), uint32_t(b));
            max_index = std::max({max_index, uint32_t(a), uint32_t(b)});
            saw_vertex = true;
        } else {
            if (declared || !edges.empty())
                throw ParseError("vertex count must be a single leading line (line " +
                                     std::to_string(lineno) + ")",
                                 line_start);
            if (a > kMaxVertices)
                throw ParseError("vertex count exceeds cap", line_start);
            declared = uint32_t(a);
        }
    }
    uint32_t n = declared ? *declared : (saw_vertex ? max_index + 1 : 0);
    return Graph::from_edge_list(n, edges);
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << "\n";
    for (uint32_t u = 0; u < g.vertex_count(); ++u) {
        int v = g.neighbors(u).next(u);
        while (v >= 0) {
            out << u << " " << v << "\n";
            v = g.neighbors(u).next(uint32_t(v));
        }
    }
    return out.str();
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    uint64_t n = uint64_t(a.vertex_count()) + b.vertex_count();
    if (n > kMaxVertices) throw TooLargeError("disjoint union exceeds vertex cap");
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    for (uint32_t u = 0; u < a.vertex_count(); ++u) {
        int v = a.neighbors(u).next(u);
        while (v >= 0) {
            edges.emplace_back(u, uint32_t(v));
            v = a.neighbors(u).next(uint32_t(v));
        }
    }
    uint32_t off = a.vertex_count();
    for (uint32_t u = 0; u < b.vertex_count(); ++u) {
        int v = b.neighbors(u).next(u);
        while (v >= 0) {
            edges.emplace_back(u + off, uint32_t(v) + off);
            v = b.neighbors(u).next(uint32_t(v));
        }
    }
    return Graph::from_edge_list(uint32_t(n), edges, a.label());
}

}  // namespace oddsub
